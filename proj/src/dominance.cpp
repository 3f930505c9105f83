#include "povmorder/dominance.hpp"

#include <algorithm>
#include <cmath>

#include "barrier.hpp"

namespace povmorder {

namespace {

void require_common_dim(const std::vector<ComplexMatrix>& xs) {
  if (xs.empty()) throw BadParameterError("height: need at least one matrix");
  const auto d = xs[0].rows();
  for (const auto& x : xs) {
    require_hermitian(x);
    if (x.rows() != d || x.cols() != d) {
      throw DimensionError("height: matrices must share one dimension");
    }
  }
}

HeightResult height_one(const ComplexMatrix& x) {
  // H = X is feasible and tr H = tr X is a lower bound (H - X >= 0 has
  // nonnegative trace), so it is optimal; dual Y = {I}.
  HeightResult r;
  r.h_opt = x;
  r.primal = x.trace().real();
  r.dual_y = {ComplexMatrix::Identity(x.rows(), x.cols())};
  r.dual = r.primal;
  r.value = r.primal;
  r.gap = 0.0;
  return r;
}

HeightResult height_two_result(const ComplexMatrix& x1, const ComplexMatrix& x2) {
  // H = X2 + (X1 - X2)_+ attains the closed form; the dual optimum is the
  // projective measurement {P_+, I - P_+} of X1 - X2.
  HeightResult r;
  const auto d = x1.rows();
  const EigDecomposition eig = eig_hermitian(x1 - x2);
  ComplexMatrix pos_part = ComplexMatrix::Zero(d, d);
  ComplexMatrix p_plus = ComplexMatrix::Zero(d, d);
  for (Eigen::Index i = 0; i < eig.values.size(); ++i) {
    if (eig.values[i] > 0) {
      const ComplexVector v = eig.vectors.col(i);
      pos_part += eig.values[i] * (v * v.adjoint());
      p_plus += v * v.adjoint();
    }
  }
  r.h_opt = x2 + pos_part;
  r.primal = r.h_opt.trace().real();
  r.dual_y = {p_plus, ComplexMatrix::Identity(d, d) - p_plus};
  r.dual = (x1 * r.dual_y[0]).trace().real() + (x2 * r.dual_y[1]).trace().real();
  r.value = r.primal;
  r.gap = r.primal - r.dual;
  return r;
}

}  // namespace

double height_two(const ComplexMatrix& x1, const ComplexMatrix& x2) {
  if (x1.rows() != x2.rows() || x1.cols() != x2.cols()) {
    throw DimensionError("height_two: dimension mismatch");
  }
  require_hermitian(x1);
  require_hermitian(x2);
  return 0.5 * (x1.trace().real() + x2.trace().real() + trace_norm(x1 - x2));
}

namespace {

// Orthonormal basis of the joint support of the inputs. Restricting the SDP
// there is exact: for feasible H, the compressed matrix is feasible for the
// compressed inputs, and the discarded diagonal block of H is PSD, so its
// removal never increases the trace.
ComplexMatrix joint_support_basis(const std::vector<ComplexMatrix>& xs) {
  const auto d = xs[0].rows();
  ComplexMatrix projector_sum = ComplexMatrix::Zero(d, d);
  for (const auto& x : xs) {
    const EigDecomposition eig = eig_hermitian(x);
    const double cutoff = 1e-10 * std::max(1.0, eig.values.cwiseAbs().maxCoeff());
    for (Eigen::Index i = 0; i < eig.values.size(); ++i) {
      if (std::abs(eig.values[i]) > cutoff) {
        const ComplexVector v = eig.vectors.col(i);
        projector_sum += v * v.adjoint();
      }
    }
  }
  const EigDecomposition eig = eig_hermitian(projector_sum);
  int rank = 0;
  for (Eigen::Index i = 0; i < eig.values.size(); ++i) {
    if (eig.values[i] > 1e-8) ++rank;
  }
  return eig.vectors.rightCols(rank);
}

}  // namespace

HeightResult height_sdp(const std::vector<ComplexMatrix>& xs_full,
                        const HeightOptions& options) {
  require_common_dim(xs_full);
  const int d_full = static_cast<int>(xs_full[0].rows());
  const ComplexMatrix support = joint_support_basis(xs_full);
  const bool reduced = support.cols() < d_full;
  std::vector<ComplexMatrix> xs;
  xs.reserve(xs_full.size());
  for (const auto& x : xs_full) {
    xs.push_back(reduced ? ComplexMatrix(support.adjoint() * x * support) : x);
  }
  const int d = static_cast<int>(xs[0].rows());
  const int m = d * d;
  const std::size_t nb = xs.size();

  detail::BlockLmiProblem problem;
  problem.constant.reserve(nb);
  for (const auto& x : xs) problem.constant.push_back(-x);
  const std::vector<ComplexMatrix> basis = detail::hermitian_basis(d);
  problem.coeff.resize(static_cast<std::size_t>(m));
  for (int k = 0; k < m; ++k) {
    problem.coeff[static_cast<std::size_t>(k)].assign(nb, basis[static_cast<std::size_t>(k)]);
  }
  // maximize -tr H
  problem.objective = RealVector::Zero(m);
  for (int k = 0; k < m; ++k) {
    problem.objective[k] = -basis[static_cast<std::size_t>(k)].trace().real();
  }
  double trace_sum = 0.0, lambda_max = 0.0;
  for (const auto& x : xs) {
    trace_sum += x.trace().real();
    const EigDecomposition eig = eig_hermitian(x);
    lambda_max = std::max(lambda_max, eig.values.maxCoeff());
  }
  const double h0 = trace_sum / d + std::max(lambda_max, 0.0) + 1.0;
  problem.start = detail::hermitian_to_params(h0 * ComplexMatrix::Identity(d, d));

  detail::BarrierOptions barrier_options;
  barrier_options.max_newton = options.max_newton;
  // best bound attainable for the value scale at hand; the reported gap is
  // the exact primal-dual difference, not this path-following bound
  barrier_options.gap_target =
      0.5 * std::max(options.gap_abs, options.gap_rel * (1.0 + std::abs(trace_sum)));

  const detail::BarrierResult solve = detail::solve_block_lmi(problem, barrier_options);

  HeightResult r;
  r.newton_iters = solve.newton_iters;
  r.status = solve.converged ? SolveStatus::Optimal : SolveStatus::MaxIter;
  r.h_opt = detail::params_to_hermitian(solve.u, d);
  r.primal = r.h_opt.trace().real();

  // renormalize the barrier dual to an exact measurement
  ComplexMatrix total = ComplexMatrix::Zero(d, d);
  for (const auto& w : solve.dual) total += w;
  const ComplexMatrix correction = pinv_sqrt(total);
  r.dual_y.reserve(nb);
  double dual_value = 0.0;
  for (std::size_t b = 0; b < nb; ++b) {
    ComplexMatrix y = correction * solve.dual[b] * correction;
    y = 0.5 * (y + y.adjoint().eval());
    dual_value += (xs[b] * y).trace().real();
    r.dual_y.push_back(std::move(y));
  }
  r.dual = dual_value;
  r.value = r.primal;
  r.gap = r.primal - r.dual;

  if (reduced) {
    // embed back into the ambient space; the complement completes the dual
    const int n = static_cast<int>(nb);
    const ComplexMatrix complement =
        (ComplexMatrix::Identity(d_full, d_full) - support * support.adjoint()) /
        double(n);
    r.h_opt = support * r.h_opt * support.adjoint();
    for (auto& y : r.dual_y) {
      y = support * y * support.adjoint() + complement;
    }
  }
  return r;
}

HeightResult height(const std::vector<ComplexMatrix>& xs, const HeightOptions& options) {
  require_common_dim(xs);
  if (xs.size() == 1) return height_one(xs[0]);
  if (xs.size() == 2) return height_two_result(xs[0], xs[1]);
  return height_sdp(xs, options);
}

std::vector<ComplexMatrix> pgm_measurement(const std::vector<ComplexMatrix>& xs) {
  require_common_dim(xs);
  const auto d = xs[0].rows();
  ComplexMatrix s = ComplexMatrix::Zero(d, d);
  for (const auto& x : xs) {
    require_psd(x);
    s += x;
  }
  const ComplexMatrix r = pinv_sqrt(s);
  std::vector<ComplexMatrix> ys;
  ys.reserve(xs.size() + 1);
  ComplexMatrix sum = ComplexMatrix::Zero(d, d);
  for (const auto& x : xs) {
    ComplexMatrix y = r * x * r;
    y = 0.5 * (y + y.adjoint().eval());
    sum += y;
    ys.push_back(std::move(y));
  }
  const ComplexMatrix rest = ComplexMatrix::Identity(d, d) - sum;
  if (max_abs(rest) > 1e-12) ys.push_back(rest);  // co-support completion
  return ys;
}

double pgm_lower_bound(const std::vector<ComplexMatrix>& xs) {
  require_common_dim(xs);
  const auto d = xs[0].rows();
  ComplexMatrix s = ComplexMatrix::Zero(d, d);
  for (const auto& x : xs) {
    require_psd(x);
    s += x;
  }
  const ComplexMatrix r = pinv_sqrt(s);
  double value = 0.0;
  for (const auto& x : xs) {
    value += (x * r * x * r).trace().real();
  }
  return value;
}

}  // namespace povmorder

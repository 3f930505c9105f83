#include "barrier.hpp"

#include <Eigen/Cholesky>
#include <cmath>

namespace povmorder::detail {

namespace {

bool all_positive_definite(const std::vector<ComplexMatrix>& blocks) {
  for (const auto& s : blocks) {
    Eigen::LLT<ComplexMatrix> llt(s);
    if (llt.info() != Eigen::Success) return false;
  }
  return true;
}

std::vector<ComplexMatrix> assemble(const BlockLmiProblem& p, const RealVector& u) {
  const std::size_t nb = p.constant.size();
  std::vector<ComplexMatrix> blocks(nb);
  for (std::size_t b = 0; b < nb; ++b) {
    ComplexMatrix s = p.constant[b];
    for (Eigen::Index k = 0; k < u.size(); ++k) {
      if (u[k] != 0.0) s += u[k] * p.coeff[static_cast<std::size_t>(k)][b];
    }
    blocks[b] = 0.5 * (s + s.adjoint().eval());
  }
  return blocks;
}

}  // namespace

BarrierResult solve_block_lmi(const BlockLmiProblem& problem,
                              const BarrierOptions& options) {
  const int m = static_cast<int>(problem.objective.size());
  const std::size_t nb = problem.constant.size();
  double total_dim = 0;
  for (const auto& c : problem.constant) total_dim += double(c.rows());

  RealVector u = problem.start;
  if (!all_positive_definite(assemble(problem, u))) {
    throw SolverError("barrier solver: start point is not strictly feasible");
  }

  double t = options.t0;
  int iters = 0;
  bool converged = false;

  while (true) {
    // center at the current t
    for (;;) {
      const std::vector<ComplexMatrix> blocks = assemble(problem, u);
      std::vector<ComplexMatrix> inv(nb);
      for (std::size_t b = 0; b < nb; ++b) inv[b] = blocks[b].inverse();

      RealVector grad = -t * problem.objective;
      RealMatrix hess = RealMatrix::Zero(m, m);
      for (std::size_t b = 0; b < nb; ++b) {
        std::vector<ComplexMatrix> w(static_cast<std::size_t>(m));
        for (int k = 0; k < m; ++k) {
          const ComplexMatrix& q = problem.coeff[static_cast<std::size_t>(k)][b];
          grad[k] -= (inv[b] * q).trace().real();
          w[static_cast<std::size_t>(k)] = inv[b] * q * inv[b];
        }
        for (int k = 0; k < m; ++k) {
          const ComplexMatrix& qk = problem.coeff[static_cast<std::size_t>(k)][b];
          for (int l = k; l < m; ++l) {
            const double v =
                (w[static_cast<std::size_t>(l)].cwiseProduct(qk.transpose())).sum().real();
            hess(k, l) += v;
            if (l != k) hess(l, k) += v;
          }
        }
      }

      const double ridge = 1e-13 * (hess.trace() / m + 1.0);
      Eigen::LDLT<RealMatrix> ldlt(hess + ridge * RealMatrix::Identity(m, m));
      const RealVector step = ldlt.solve(-grad);
      const double decrement2 = -grad.dot(step);

      if (!(decrement2 > 0) || !step.allFinite()) break;  // at the center

      double alpha = 1.0;
      while (alpha > 1e-14 &&
             !all_positive_definite(assemble(problem, u + alpha * step))) {
        alpha *= 0.5;
      }
      if (alpha <= 1e-14) break;
      u += alpha * step;
      ++iters;

      if (decrement2 * 0.5 < 1e-11) break;
      if (iters >= options.max_newton) break;
    }

    const double gap = total_dim / t;
    if (gap <= options.gap_target) {
      converged = true;
      break;
    }
    if (iters >= options.max_newton) break;
    t *= options.t_growth;
  }

  BarrierResult result;
  result.u = u;
  result.objective_value = problem.objective.dot(u);
  result.gap_bound = total_dim / t;
  result.newton_iters = iters;
  result.converged = converged;
  result.slacks = assemble(problem, u);
  result.dual.resize(nb);
  for (std::size_t b = 0; b < nb; ++b) {
    ComplexMatrix w = result.slacks[b].inverse() / t;
    result.dual[b] = 0.5 * (w + w.adjoint().eval());
  }
  return result;
}

std::vector<ComplexMatrix> hermitian_basis(int d) {
  std::vector<ComplexMatrix> basis;
  basis.reserve(static_cast<std::size_t>(d) * d);
  for (int i = 0; i < d; ++i) {
    ComplexMatrix e = ComplexMatrix::Zero(d, d);
    e(i, i) = 1.0;
    basis.push_back(e);
  }
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      ComplexMatrix e = ComplexMatrix::Zero(d, d);
      e(i, j) = inv_sqrt2;
      e(j, i) = inv_sqrt2;
      basis.push_back(e);
      ComplexMatrix f = ComplexMatrix::Zero(d, d);
      f(i, j) = Complex(0, inv_sqrt2);
      f(j, i) = Complex(0, -inv_sqrt2);
      basis.push_back(f);
    }
  }
  return basis;
}

RealVector hermitian_to_params(const ComplexMatrix& m) {
  const int d = static_cast<int>(m.rows());
  RealVector u(d * d);
  int k = 0;
  for (int i = 0; i < d; ++i) u[k++] = m(i, i).real();
  const double sqrt2 = std::sqrt(2.0);
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      u[k++] = sqrt2 * m(i, j).real();
      u[k++] = sqrt2 * m(i, j).imag();
    }
  }
  return u;
}

ComplexMatrix params_to_hermitian(const RealVector& u, int d) {
  ComplexMatrix m = ComplexMatrix::Zero(d, d);
  int k = 0;
  for (int i = 0; i < d; ++i) m(i, i) = u[k++];
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      const double re = u[k++] * inv_sqrt2;
      const double im = u[k++] * inv_sqrt2;
      m(i, j) = Complex(re, im);
      m(j, i) = Complex(re, -im);
    }
  }
  return m;
}

}  // namespace povmorder::detail

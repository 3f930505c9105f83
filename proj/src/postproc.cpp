#include "povmorder/postproc.hpp"

#include <cmath>

#include "simplex.hpp"

namespace povmorder {

const char* order_name(Order o) {
  switch (o) {
    case Order::LessEq: return "less_equal";
    case Order::GreaterEq: return "greater_equal";
    case Order::Equivalent: return "equivalent";
    case Order::Incomparable: return "incomparable";
  }
  return "unknown";
}

bool is_column_stochastic(const RealMatrix& mu, double tolerance) {
  if (mu.minCoeff() < -1e-10) return false;
  for (Eigen::Index j = 0; j < mu.cols(); ++j) {
    if (std::abs(mu.col(j).sum() - 1.0) > tolerance) return false;
  }
  return true;
}

namespace {

// Real components parameterizing a Hermitian d x d matrix: the diagonal, then
// real and imaginary parts of the strict upper triangle (d^2 numbers).
void hermitian_components(const ComplexMatrix& m, double* out) {
  const auto d = m.rows();
  int k = 0;
  for (Eigen::Index i = 0; i < d; ++i) out[k++] = m(i, i).real();
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = i + 1; j < d; ++j) {
      out[k++] = m(i, j).real();
      out[k++] = m(i, j).imag();
    }
  }
}

}  // namespace

std::optional<RealMatrix> check_postprocessing(const Povm& a, const Povm& b,
                                               double feas_tol, double resid_tol) {
  if (a.dim != b.dim) {
    throw DimensionError("check_postprocessing: dimension mismatch");
  }
  const int na = a.size();
  const int nb = b.size();
  const int d = a.dim;
  const int comps = d * d;

  // variables mu(x,y) at index x + na*y; constraints: column sums, then the
  // d^2 real components of sum_y mu(x,y) B_y = A_x per outcome x.
  const int rows = nb + na * comps;
  RealMatrix lhs = RealMatrix::Zero(rows, na * nb);
  RealVector rhs = RealVector::Zero(rows);

  for (int y = 0; y < nb; ++y) {
    for (int x = 0; x < na; ++x) lhs(y, x + na * y) = 1.0;
    rhs[y] = 1.0;
  }
  std::vector<double> scratch(static_cast<std::size_t>(comps));
  std::vector<std::vector<double>> b_comps(static_cast<std::size_t>(nb));
  for (int y = 0; y < nb; ++y) {
    b_comps[y].resize(static_cast<std::size_t>(comps));
    hermitian_components(b.effects[y], b_comps[y].data());
  }
  for (int x = 0; x < na; ++x) {
    hermitian_components(a.effects[x], scratch.data());
    for (int c = 0; c < comps; ++c) {
      const int row = nb + x * comps + c;
      for (int y = 0; y < nb; ++y) lhs(row, x + na * y) = b_comps[y][c];
      rhs[row] = scratch[c];
    }
  }

  const detail::PhaseOneResult lp = detail::phase_one_simplex(lhs, rhs, feas_tol);
  if (!lp.feasible) return std::nullopt;

  RealMatrix mu(na, nb);
  for (int y = 0; y < nb; ++y) {
    for (int x = 0; x < na; ++x) mu(x, y) = lp.x[x + na * y];
  }
  mu = mu.cwiseMax(0.0);
  for (int y = 0; y < nb; ++y) {
    const double sum = mu.col(y).sum();
    if (std::abs(sum - 1.0) > 1e-8) return std::nullopt;
    if (sum > 0) mu.col(y) /= sum;
  }

  // second tier: the witness must actually reproduce A
  for (int x = 0; x < na; ++x) {
    ComplexMatrix rec = ComplexMatrix::Zero(d, d);
    for (int y = 0; y < nb; ++y) rec += mu(x, y) * b.effects[y];
    if (max_abs(rec - a.effects[x]) > resid_tol) return std::nullopt;
  }
  return mu;
}

OrderVerdict classify_order(const Povm& a, const Povm& b, double feas_tol,
                            double resid_tol) {
  OrderVerdict v;
  v.feasibility_tol = feas_tol;
  v.residual_tol = resid_tol;
  v.forward = check_postprocessing(a, b, feas_tol, resid_tol);
  v.backward = check_postprocessing(b, a, feas_tol, resid_tol);
  if (v.forward && v.backward) {
    v.relation = Order::Equivalent;
  } else if (v.forward) {
    v.relation = Order::LessEq;
  } else if (v.backward) {
    v.relation = Order::GreaterEq;
  } else {
    v.relation = Order::Incomparable;
  }
  return v;
}

Povm concat_mix(const Povm& a, const Povm& b, double lambda) {
  if (a.dim != b.dim) throw DimensionError("concat_mix: dimension mismatch");
  if (lambda < 0 || lambda > 1) throw BadParameterError("lambda must lie in [0,1]");
  if (lambda == 1.0) return a;
  if (lambda == 0.0) return b;
  std::vector<ComplexMatrix> effects;
  std::vector<int> labels;
  for (int x = 0; x < a.size(); ++x) {
    effects.push_back(lambda * a.effects[x]);
    labels.push_back(x);
  }
  for (int y = 0; y < b.size(); ++y) {
    effects.push_back((1.0 - lambda) * b.effects[y]);
    labels.push_back(a.size() + y);
  }
  return validate_povm(std::move(effects), std::move(labels));
}

}  // namespace povmorder

#include "simplex.hpp"

#include <vector>

namespace povmorder::detail {

PhaseOneResult phase_one_simplex(const RealMatrix& a_in, const RealVector& b_in,
                                 double feas_tol, int max_pivots) {
  const int m = static_cast<int>(a_in.rows());
  const int n = static_cast<int>(a_in.cols());

  // tableau [A | I | b] with rows flipped so b >= 0
  RealMatrix t = RealMatrix::Zero(m, n + m + 1);
  for (int i = 0; i < m; ++i) {
    const double sign = b_in[i] < 0 ? -1.0 : 1.0;
    t.block(i, 0, 1, n) = sign * a_in.row(i);
    t(i, n + i) = 1.0;
    t(i, n + m) = sign * b_in[i];
  }
  std::vector<int> basis(m);
  for (int i = 0; i < m; ++i) basis[i] = n + i;

  // reduced-cost row for min sum(artificials): z_j = sum_i t(i,j) over rows
  // with artificial basic variables; maintained incrementally below.
  RealVector cost = RealVector::Zero(n + m + 1);
  for (int i = 0; i < m; ++i) cost += t.row(i);
  for (int i = 0; i < m; ++i) cost[n + i] -= 1.0;  // c_j = 1 on artificials

  constexpr double kPivotEps = 1e-11;
  constexpr double kCostEps = 1e-9;

  int pivots = 0;
  while (true) {
    // Bland: smallest index with positive reduced cost (maximizing -obj)
    int enter = -1;
    for (int j = 0; j < n + m; ++j) {
      if (cost[j] > kCostEps) {
        enter = j;
        break;
      }
    }
    if (enter < 0) break;

    int leave = -1;
    double best_ratio = 0.0;
    for (int i = 0; i < m; ++i) {
      if (t(i, enter) > kPivotEps) {
        const double ratio = t(i, n + m) / t(i, enter);
        if (leave < 0 || ratio < best_ratio - 1e-15 ||
            (ratio <= best_ratio + 1e-15 && basis[i] < basis[leave])) {
          leave = i;
          best_ratio = ratio;
        }
      }
    }
    if (leave < 0) {
      // unbounded direction cannot happen in phase 1; numerical trouble
      throw SolverError("phase-1 simplex: no pivot row (numerical stall)");
    }

    const double pivot = t(leave, enter);
    t.row(leave) /= pivot;
    for (int i = 0; i < m; ++i) {
      if (i != leave && std::abs(t(i, enter)) > 0) {
        t.row(i) -= t(i, enter) * t.row(leave);
      }
    }
    cost -= cost[enter] * t.row(leave);
    basis[leave] = enter;

    if (++pivots > max_pivots) {
      throw SolverError("phase-1 simplex exceeded pivot cap (SolverStall)");
    }
  }

  PhaseOneResult result;
  result.pivots = pivots;
  result.x = RealVector::Zero(n);
  double artificial_sum = 0.0;
  for (int i = 0; i < m; ++i) {
    const double value = t(i, n + m);
    if (basis[i] < n) {
      result.x[basis[i]] = value;
    } else {
      artificial_sum += std::abs(value);
    }
  }
  result.objective = artificial_sum;
  result.feasible = artificial_sum <= feas_tol;
  return result;
}

}  // namespace povmorder::detail

#ifndef POVMORDER_SRC_BARRIER_HPP
#define POVMORDER_SRC_BARRIER_HPP

#include <vector>

#include "povmorder/types.hpp"

namespace povmorder::detail {

// Block LMI in real parameters u: maximize objective . u subject to
//   S_b(u) = constant[b] + sum_k u[k] * coeff[k][b]  >=  0   for all blocks b.
// Solved by log-barrier path following with damped Newton steps; the
// certified optimality gap of the returned point is sum_b dim(S_b) / t.
struct BlockLmiProblem {
  std::vector<ComplexMatrix> constant;            // per block, Hermitian
  std::vector<std::vector<ComplexMatrix>> coeff;  // coeff[param][block]
  RealVector objective;
  RealVector start;  // strictly feasible
};

struct BarrierOptions {
  double gap_target = 1e-9;
  double t0 = 1.0;
  double t_growth = 5.0;  // gap shrinks by 0.2 per outer stage
  int max_newton = 200;
};

struct BarrierResult {
  RealVector u;
  double objective_value = 0.0;
  double gap_bound = 0.0;  // objective_value is within gap_bound of optimum
  int newton_iters = 0;
  bool converged = false;
  std::vector<ComplexMatrix> slacks;
  std::vector<ComplexMatrix> dual;  // W_b = S_b^{-1} / t at the final center
};

BarrierResult solve_block_lmi(const BlockLmiProblem& problem,
                              const BarrierOptions& options = {});

// Orthonormal Hermitian basis of d x d matrices under <A,B> = tr(A* B):
// e_ii, (e_ij + e_ji)/sqrt(2), i(e_ij - e_ji)/sqrt(2).
std::vector<ComplexMatrix> hermitian_basis(int d);

RealVector hermitian_to_params(const ComplexMatrix& m);
ComplexMatrix params_to_hermitian(const RealVector& u, int d);

}  // namespace povmorder::detail

#endif  // POVMORDER_SRC_BARRIER_HPP

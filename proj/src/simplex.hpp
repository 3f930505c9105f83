#ifndef POVMORDER_SRC_SIMPLEX_HPP
#define POVMORDER_SRC_SIMPLEX_HPP

#include "povmorder/types.hpp"

namespace povmorder::detail {

struct PhaseOneResult {
  bool feasible = false;   // phase-1 objective <= feas_tol
  double objective = 0.0;  // residual sum of artificial variables
  RealVector x;            // primal point for the original variables
  int pivots = 0;
};

// Phase-1 simplex for {A x = b, x >= 0} feasibility: artificial variables
// seed the basis and their sum is minimized with Bland's rule (finite,
// cycle-free). Throws SolverError past max_pivots.
PhaseOneResult phase_one_simplex(const RealMatrix& a, const RealVector& b,
                                 double feas_tol, int max_pivots = 20000);

}  // namespace povmorder::detail

#endif  // POVMORDER_SRC_SIMPLEX_HPP

#ifndef POVMORDER_DOMINANCE_HPP
#define POVMORDER_DOMINANCE_HPP

#include <vector>

#include "povmorder/hermitian.hpp"
#include "povmorder/types.hpp"

// Height function h(X) = min{ tr H : H >= X_i for all i }: two-matrix closed
// form, interior-point SDP with primal/dual certificates, and the
// pretty-good-measurement lower bound.

namespace povmorder {

enum class SolveStatus { Optimal, MaxIter };

struct HeightResult {
  double value = 0.0;                 // primal tr(H_opt)
  ComplexMatrix h_opt;                // feasible dominating matrix
  std::vector<ComplexMatrix> dual_y;  // feasible dual measurement on dim D
  double primal = 0.0;
  double dual = 0.0;                  // sum tr(X_i Y_i), a true lower bound
  double gap = 0.0;                   // primal - dual >= 0
  SolveStatus status = SolveStatus::Optimal;
  int newton_iters = 0;
};

struct HeightOptions {
  // Stop when gap <= max(gap_abs, gap_rel * (1 + |value|)).
  double gap_abs = 1e-7;
  double gap_rel = 1e-8;
  int max_newton = 200;
};

// Exact closed form (tr X1 + tr X2 + ||X1 - X2||_1) / 2.
double height_two(const ComplexMatrix& x1, const ComplexMatrix& x2);

// Log-barrier interior-point solver on the primal with slack blocks
// S_i = H - X_i; dual measurement recovered from the scaled barrier
// gradients and renormalized, so `dual` is a certified lower bound. Always
// runs the SDP (no closed-form shortcut), so it can be checked against
// height_two as an independent route.
HeightResult height_sdp(const std::vector<ComplexMatrix>& xs,
                        const HeightOptions& options = {});

// Dispatcher used by the incompatibility criteria and scans: exact results
// for n <= 2 (n=1: H = X; n=2: closed form with analytic optimizers), the
// SDP for n >= 3.
HeightResult height(const std::vector<ComplexMatrix>& xs,
                    const HeightOptions& options = {});

// sum_i tr(X_i Y_i) for the pretty good measurement Y_i = S^-1/2 X_i S^-1/2,
// S = sum X_i; requires PSD inputs. Always a lower bound on the height.
double pgm_lower_bound(const std::vector<ComplexMatrix>& xs);

// The PGM completed to an exact measurement by the co-support projector
// (appended as a final zero-objective outcome when S is rank deficient).
std::vector<ComplexMatrix> pgm_measurement(const std::vector<ComplexMatrix>& xs);

}  // namespace povmorder

#endif  // POVMORDER_DOMINANCE_HPP

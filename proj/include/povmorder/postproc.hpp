#ifndef POVMORDER_POSTPROC_HPP
#define POVMORDER_POSTPROC_HPP

#include <optional>

#include "povmorder/povm.hpp"

// Post-processing order A <= B: LP feasibility for a column-stochastic mu
// with A_x = sum_y mu(x,y) B_y, witness extraction and pair classification.

namespace povmorder {

enum class Order { LessEq, GreaterEq, Equivalent, Incomparable };

struct OrderVerdict {
  Order relation = Order::Incomparable;
  // mu with A = mu o B when A <= B, and the reverse witness when B <= A.
  std::optional<RealMatrix> forward;
  std::optional<RealMatrix> backward;
  double feasibility_tol = tol::lp_feasibility;
  double residual_tol = tol::lp_residual;
};

const char* order_name(Order o);

bool is_column_stochastic(const RealMatrix& mu, double tolerance = 1e-8);

// Some(mu) iff the phase-1 simplex closes the equality LP within feas_tol AND
// the reconstructed effects match within resid_tol (two-tier acceptance).
// Witness entries are clamped at -1e-10 and columns renormalized.
std::optional<RealMatrix> check_postprocessing(const Povm& a, const Povm& b,
                                               double feas_tol = tol::lp_feasibility,
                                               double resid_tol = tol::lp_residual);

OrderVerdict classify_order(const Povm& a, const Povm& b,
                            double feas_tol = tol::lp_feasibility,
                            double resid_tol = tol::lp_residual);

// Concatenation mixture lambda [A] + (1-lambda) [B]: effect list
// {lambda A_x} u {(1-lambda) B_y} with fresh disjoint labels; the endpoints
// lambda in {0,1} return the surviving measurement alone.
Povm concat_mix(const Povm& a, const Povm& b, double lambda);

}  // namespace povmorder

#endif  // POVMORDER_POSTPROC_HPP

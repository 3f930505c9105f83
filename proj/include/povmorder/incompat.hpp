#ifndef POVMORDER_INCOMPAT_HPP
#define POVMORDER_INCOMPAT_HPP

#include <array>
#include <optional>

#include "povmorder/dominance.hpp"
#include "povmorder/morphisms.hpp"
#include "povmorder/povm.hpp"

// Incompatibility detection: the height-of-Fisher-images criterion with the
// outcome-count threshold min(d, prod ell_i), its pretty-good-measurement
// corollary, joint-outcome lower bounds, a joint-measurement feasibility SDP
// oracle, and the Fermat-Torricelli benchmark for qubit triples.

namespace povmorder {

struct IncompatVerdict {
  bool incompatible = false;  // height > threshold beyond the dead band
  double height = 0.0;
  double threshold = 0.0;  // min(d, prod_i ell_i)
  double margin = 0.0;     // height - threshold
  bool boundary = false;   // |margin| within the +-1e-6 dead band
  std::vector<int> ells;   // simple-representative outcome counts
  HeightResult certificate;
  ComplexMatrix rho;
};

// Incompatible when h(F_rho(A^(1)), ..., F_rho(A^(g))) exceeds
// min(d, prod ell_i); Inconclusive otherwise (never asserts compatibility).
// Margins within +-1e-6 are reported Inconclusive with the boundary flag.
IncompatVerdict zhu_criterion(const std::vector<Povm>& measurements,
                              const ComplexMatrix& rho,
                              const HeightOptions& options = {});

// Same threshold, but with the PGM dual value (a height lower bound) in
// place of the SDP; never stronger than zhu_criterion.
IncompatVerdict pgm_criterion(const std::vector<Povm>& measurements,
                              const ComplexMatrix& rho);

// h(F_rho(A)): a lower bound on ell(B) for any joint measurement B.
double joint_outcome_bound(const std::vector<Povm>& measurements,
                           const ComplexMatrix& rho,
                           const HeightOptions& options = {});

struct JointResult {
  std::optional<Povm> joint;  // outcome tuples flattened row-major
  double margin = 0.0;        // optimal min-eigenvalue slack epsilon*
  double gap = 0.0;           // certified solver gap on the margin
};

// Feasibility of blocks C_x >= 0 with all marginals prescribed, decided by
// maximizing the common minimum eigenvalue over the affine marginal space.
// Feasible within 1e-7 returns the joint POVM; an infeasibility margin below
// -1e-7 (certified by the dual) returns nothing.
JointResult joint_feasibility_detailed(const std::vector<Povm>& measurements,
                                       double feas_tol = 1e-7);

std::optional<Povm> joint_feasibility(const Povm& a, const Povm& b,
                                      double feas_tol = 1e-7);

struct QubitDichotomic {
  double eta = 0.0;
  Eigen::Vector3d axis = Eigen::Vector3d::UnitZ();
};

struct FTAnalysis {
  std::array<Eigen::Vector3d, 4> points;  // v0..v3
  Eigen::Vector3d ft_point = Eigen::Vector3d::Zero();
  double total_distance = 0.0;  // sum_i ||v_FT - v_i||
  bool compatible = false;      // total_distance <= 4 + 1e-9
  int iterations = 0;
  bool vertex_optimum = false;
};

// Exact joint-measurability test for three unbiased qubit dichotomics via the
// Fermat-Torricelli point of v0 = -sum eta_k n_k, v_k = -2 eta_k n_k - v0,
// computed by Weiszfeld iteration with vertex-optimality handling.
FTAnalysis ft_condition(const std::array<QubitDichotomic, 3>& measurements);

struct AnticommutingVerdict {
  int g = 0;
  int dim = 0;                         // 2^ceil((g-1)/2)
  double noise_norm2 = 0.0;            // sum_i s_i^2
  bool analytic_incompatible = false;  // sum s_i^2 > d - 1
  bool trivial = false;                // g <= d - 1: the bound can never fire
  IncompatVerdict sdp;
};

// Builds the anticommuting dichotomic family with noise vector s, evaluates
// the analytic bound sum s_i^2 <= d-1 and the SDP criterion, and checks that
// they agree (SolverError on disagreement outside the boundary band).
AnticommutingVerdict anticommuting_criterion(int g, const std::vector<double>& s);

}  // namespace povmorder

#endif  // POVMORDER_INCOMPAT_HPP

#ifndef POVMORDER_SCENARIOS_HPP
#define POVMORDER_SCENARIOS_HPP

#include <map>
#include <string>

#include "povmorder/incompat.hpp"

// Reproducible parameter-region scans emitting tabular data: Fourier pairs,
// unbiased qubit pairs and triples, planar families. Records are produced in
// grid order; reruns with identical metadata are bit-identical. Grid points
// are evaluated in parallel when POVM_ORDER_THREADS allows.

namespace povmorder {

struct ScanRecord {
  std::vector<double> params;
  double height = 0.0;
  std::string zhu_verdict;    // "incompatible" | "inconclusive"
  std::string analytic_flag;  // "compatible" | "incompatible"
  std::string oracle_verdict; // "feasible" | "infeasible" | "" (not run)
};

struct ScanResult {
  std::vector<std::string> param_names;
  std::vector<ScanRecord> records;
  std::map<std::string, std::string> metadata;
};

// CSV per the fixed contract: header = param names + height,zhu_verdict,
// analytic_flag,oracle_verdict; UTF-8, LF line ends, '.' decimal separator,
// 12 significant digits.
std::string to_csv(const ScanResult& result);

// Bloch vectors at (or numerically beyond) the pure-state boundary are pulled
// back to norm 1 - 1e-6 so rho stays invertible; norms > 1 throw
// BadParameterError ("BadBloch").
Eigen::Vector3d clamp_bloch(const Eigen::Vector3d& v);

// (s,t) on a uniform grid_n x grid_n grid over [0,1]^2; Zhu verdict at
// rho = I/d, analytic compatibility flag per the known Fourier-pair region,
// joint-measurement oracle optionally for d = 2.
ScanResult scan_fourier(int d, int grid_n, bool with_oracle = false);

// (eta1,eta2) grid for two unbiased dichotomics along n1, n2 with state
// (I + v.sigma)/2; analytic flag is the exact pair criterion
// ||a+b|| + ||a-b|| <= 2 for a = eta1 n1, b = eta2 n2.
ScanResult scan_qubit_pair(const Eigen::Vector3d& n1, const Eigen::Vector3d& n2,
                           const Eigen::Vector3d& bloch, int grid_n,
                           bool with_oracle = false);

// eta1 grid for a triple of dichotomics with eta2, eta3 held fixed; the
// analytic flag is the exact Fermat-Torricelli condition.
ScanResult scan_qubit_triple(const std::array<Eigen::Vector3d, 3>& axes,
                             const Eigen::Vector3d& bloch, double eta2, double eta3,
                             int grid_n, bool with_oracle = false);

// lambda grid for M planar dichotomics; analytic flag is the optimal bound
// lambda <= 1/(M sin(pi/(2M))).
ScanResult scan_planar(int m, int grid_n);

}  // namespace povmorder

#endif  // POVMORDER_SCENARIOS_HPP

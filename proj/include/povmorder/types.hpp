#ifndef POVMORDER_TYPES_HPP
#define POVMORDER_TYPES_HPP

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <string>

namespace povmorder {

using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;
using Complex = std::complex<double>;

// Default numerical tolerances. Inputs are O(1)-normalized effects, so these
// are absolute unless stated otherwise.
namespace tol {
inline constexpr double hermitian = 1e-10;    // max |M - M*| entry
inline constexpr double psd = 1e-9;           // min eigenvalue >= -psd
inline constexpr double state_pd = 1e-10;     // strict positivity of rho
inline constexpr double povm_sum = 1e-9;      // scaled by dim
inline constexpr double lp_feasibility = 1e-8;
inline constexpr double lp_residual = 1e-7;
inline constexpr double sign_dead_band = 1e-8;
inline constexpr double verdict_dead_band = 1e-6;
inline constexpr double zero_denominator = 1e-12;
}  // namespace tol

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Predicate failures on single matrices.
class NotHermitianError : public Error {
 public:
  using Error::Error;
};

class NotPsdError : public Error {
 public:
  using Error::Error;
};

// Shape mismatches, including dimensions that are not perfect squares.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// POVM / state / constructor-argument validation failures. Messages name the
// offending effect index where one exists.
class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& what, int effect_index = -1)
      : Error(what), effect_index_(effect_index) {}
  int effect_index() const { return effect_index_; }

 private:
  int effect_index_;
};

class BadParameterError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// LP/SDP iteration caps and non-convergence.
class SolverError : public Error {
 public:
  using Error::Error;
};

}  // namespace povmorder

#endif  // POVMORDER_TYPES_HPP

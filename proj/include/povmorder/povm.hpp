#ifndef POVMORDER_POVM_HPP
#define POVMORDER_POVM_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "povmorder/hermitian.hpp"
#include "povmorder/types.hpp"

// POVM data model, validation, simple representatives, the measurement
// families of the worked examples, and seeded generators for property tests.

namespace povmorder {

struct Povm {
  int dim = 0;
  std::vector<ComplexMatrix> effects;
  std::vector<int> labels;  // distinct integer outcome labels

  int size() const { return static_cast<int>(effects.size()); }
};

// Checks every POVM invariant (effects Hermitian and PSD within psd_tol,
// sum = identity within dim * tol::povm_sum, labels distinct) and returns the
// certified value. Labels default to 0..n-1 when empty.
Povm validate_povm(std::vector<ComplexMatrix> effects, std::vector<int> labels = {},
                   double psd_tol = tol::psd);

struct SimplePovm {
  Povm povm;
  int ell = 0;  // outcome count of the simple representative
};

// Iterated merging of collinear effects (A_x = c A_y, c >= 0) after dropping
// zero effects; the smaller label survives a merge. Idempotent.
SimplePovm simplify(const Povm& p);

// ell([A]): number of outcomes of the simple representative.
int simple_outcome_count(const Povm& p);

// --- measurement families ---------------------------------------------------

ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();
ComplexMatrix bloch_operator(const Eigen::Vector3d& n);  // n . sigma

// Qubit state (I + v . sigma)/2; requires ||v|| <= 1.
ComplexMatrix bloch_state(const Eigen::Vector3d& v);

// Fourier matrix F(a,b) = zeta^{ab} / sqrt(d), zeta = exp(2 pi i / d).
ComplexMatrix fourier_matrix(int d);

// Rank-1 projectors onto the columns of a unitary basis.
Povm make_von_neumann(const ComplexMatrix& basis);

// A_i = s |e_i><e_i| + (1-s) I/d and its Fourier conjugate with noise t.
std::pair<Povm, Povm> make_fourier_pair(int d, double s, double t);

// Unbiased dichotomic qubit measurement (I +- eta n.sigma)/2, labels {+1,-1}.
Povm make_qubit_dichotomic(double eta, const Eigen::Vector3d& axis);

// Equatorial directions n_k = (cos((k-1) pi/3), sin((k-1) pi/3), 0), k=1,2,3.
std::array<Eigen::Vector3d, 3> trine_axes();
std::vector<Povm> make_trine(double eta);

// M dichotomics along a_k = (cos(k pi/M), sin(k pi/M), 0), k = 0..M-1,
// with sharpness lambda.
std::vector<Povm> make_planar(int m, double lambda);

// Qubit SIC POVM: four effects (I + n_k . sigma)/4 on tetrahedron directions.
Povm make_sic_qubit();

// Complete-MUB qubit POVM: six effects |b><b|/3 over the x, y, z eigenbases.
Povm make_mub_complete_qubit();

// Hermitian unitary pairwise-anticommuting operators T_1..T_g built by the
// Clifford ladder ({sx,sy,sz} on d=2; doubling appends {sx (x) T_i} plus
// {sy (x) I, sz (x) I}), truncated to the minimal d = 2^ceil((g-1)/2).
std::vector<ComplexMatrix> anticommuting_operators(int g);

// Dichotomic measurements ((I +- T_i)/2) for the operators above.
std::vector<Povm> make_anticommuting_family(int g);

// A_i -> lambda A_i + (1-lambda) tr(rho A_i) I; rho must be a state.
Povm noisy_mixture(const Povm& p, double lambda, const ComplexMatrix& rho);

// Effects A_x (x) B_y; labels are paired by index, x_index * |B| + y_index.
Povm tensor_povm(const Povm& a, const Povm& b);

// --- seeded generators (deterministic across platforms) ---------------------

// A_i = S^{-1/2} M_i S^{-1/2} with M_i = G_i G_i* from seeded Gaussian G_i.
Povm random_povm(int d, int n, std::uint64_t seed);

// Full-rank random density matrix G G* / tr(G G*).
ComplexMatrix random_state(int d, std::uint64_t seed);

// Wishart matrix G G* / d.
ComplexMatrix random_psd(int d, std::uint64_t seed);

// Random Hermitian (H + H*)/2 with Gaussian H.
ComplexMatrix random_hermitian(int d, std::uint64_t seed);

// Column-stochastic matrix with uniform entries, columns normalized.
RealMatrix random_stochastic(int rows, int cols, std::uint64_t seed);

}  // namespace povmorder

#endif  // POVMORDER_POVM_HPP

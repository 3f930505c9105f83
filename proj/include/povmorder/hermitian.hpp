#ifndef POVMORDER_HERMITIAN_HPP
#define POVMORDER_HERMITIAN_HPP

#include <utility>

#include "povmorder/types.hpp"

// Dense complex Hermitian kernel: spectral decompositions, matrix functions,
// norms, vectorization and tensor-leg operations used by every other module.
//
// Conventions fixed here and used throughout the library:
//  * vectorize() stacks columns, vec(E)[i + d*j] = E(i,j).
//  * tensor() is the standard Kronecker product with row-major blocks,
//    (A (x) B)(i1*rB+i2, j1*cB+j2) = A(i1,j1) B(i2,j2).
//  * Under these two conventions, left multiplication X -> M X acts on
//    vectorized matrices as I (x) M, and vec(X (x) Y) equals the fixed
//    permutation vec_kron_permutation applied to vec(X) (x) vec(Y).
//  * partial_transpose() transposes the second tensor leg (the one holding
//    the row index of the vectorized matrix).

namespace povmorder {

struct EigDecomposition {
  RealVector values;      // ascending
  ComplexMatrix vectors;  // unitary, columns are eigenvectors
};

double max_abs(const ComplexMatrix& m);

bool is_hermitian(const ComplexMatrix& m, double tolerance = tol::hermitian);
void require_hermitian(const ComplexMatrix& m, double tolerance = tol::hermitian);

EigDecomposition eig_hermitian(const ComplexMatrix& m);

bool is_psd(const ComplexMatrix& m, double tolerance = tol::psd);
void require_psd(const ComplexMatrix& m, double tolerance = tol::psd);

// Principal square root of a PSD matrix; eigenvalues in [-tol, 0) are
// clamped to zero, anything below throws NotPsdError.
ComplexMatrix sqrt_psd(const ComplexMatrix& m, double psd_tolerance = tol::psd);

// Pseudo-inverse square root: eigenvalues below 1e-9 * ||M|| are treated as
// zero, so the result satisfies R M R = support projector of M.
ComplexMatrix pinv_sqrt(const ComplexMatrix& m, double psd_tolerance = tol::psd);

// Schatten 1-norm of a Hermitian matrix, sum |lambda_i|.
double trace_norm(const ComplexMatrix& m);

ComplexVector vectorize(const ComplexMatrix& e);
ComplexMatrix devectorize(const ComplexVector& v);

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);

// Permutation matrix P with P (vec(X) (x) vec(Y)) = vec(X (x) Y) for
// da x da matrices X and db x db matrices Y.
RealMatrix vec_kron_permutation(int da, int db);

// Partial transpose on the second tensor leg of a d^2 x d^2 matrix.
ComplexMatrix partial_transpose(const ComplexMatrix& m);

// Unnormalized maximally entangled matrix omega = |Omega><Omega| with
// |Omega> = sum_i e_i (x) e_i = vec(I_d); tr omega = d.
ComplexMatrix max_entangled(int d);

// Flip operator on C^d (x) C^d.
ComplexMatrix swap_operator(int d);

// Orthogonal projection onto the symmetric subspace, (I + SWAP)/2.
ComplexMatrix sym_projector(int d);

}  // namespace povmorder

#endif  // POVMORDER_HERMITIAN_HPP

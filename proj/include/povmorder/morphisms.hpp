#ifndef POVMORDER_MORPHISMS_HPP
#define POVMORDER_MORPHISMS_HPP

#include <string>

#include "povmorder/povm.hpp"

// Quadratic order morphisms g(E) = Phi(E) Phi(E)* / tau(E) and the induced
// maps G(A) = sum_x g(A_x) on POVMs: the generalized Fisher information map
// F_rho, its truncated variant, the psi/diag/square/trace maps, conjugation
// relations and eigenvalue-sign non-ordering witnesses.
//
// Fisher images live on C^(d^2) in the column-stacking convention of
// hermitian.hpp; with it, the worked 4x4 examples are reproduced entrywise
// (row-stacking would swap the two middle basis vectors).

namespace povmorder {

enum class MorphismKind { Fisher, FisherTruncated, PsiMap, DiagMap, SquareMap, TraceMap };

const char* morphism_name(MorphismKind k);

// A term whose denominator tau(E) vanishes (effect orthogonal to the support
// of rho or psi). Callers skip such terms; apply() counts them.
class ZeroDenominatorError : public Error {
 public:
  using Error::Error;
};

class MorphismSpec {
 public:
  // rho must be a strictly positive definite state (min eigenvalue >= 1e-10).
  static MorphismSpec fisher(const ComplexMatrix& rho);
  static MorphismSpec fisher_truncated(const ComplexMatrix& rho);
  // psi must be a unit vector (within 1e-12).
  static MorphismSpec psi_map(const ComplexVector& psi);
  static MorphismSpec diag_map(int dim);
  static MorphismSpec square_map(int dim);
  static MorphismSpec trace_map(int dim);

  MorphismKind kind() const { return kind_; }
  int dim() const { return dim_; }
  // dimension of the image matrices: d^2 for Fisher kinds, d for
  // psi/diag/square, 1 for the trace map
  int image_dim() const;
  const ComplexMatrix& rho() const { return rho_; }
  const ComplexMatrix& rho_sqrt() const { return rho_sqrt_; }
  const ComplexVector& psi() const { return psi_; }

 private:
  MorphismSpec(MorphismKind kind, int dim) : kind_(kind), dim_(dim) {}
  MorphismKind kind_;
  int dim_;
  ComplexMatrix rho_;
  ComplexMatrix rho_sqrt_;
  ComplexVector psi_;
};

struct FisherMatrix {
  ComplexMatrix matrix;      // PSD, image_dim x image_dim
  MorphismKind kind;
  int source_dim = 0;        // d of the POVM
  int skipped_terms = 0;     // zero-denominator terms omitted from the sum
  std::string source;        // provenance tag, free-form
};

// g applied to a single nonzero PSD effect. Throws ZeroDenominatorError when
// tau(E) <= 1e-12.
ComplexMatrix apply_effect(const MorphismSpec& spec, const ComplexMatrix& effect);

// G(A) = sum_x g(A_x) with zero-denominator terms skipped and counted.
FisherMatrix apply(const MorphismSpec& spec, const Povm& a, std::string source = {});

// Truncated Fisher map on effects A_x - tr(rho A_x) I.
FisherMatrix apply_truncated(const ComplexMatrix& rho, const Povm& a,
                             std::string source = {});

// |vec rho^(1/2)><vec rho^(1/2)|: the image of any trivial measurement under
// F_rho, and the gap F_rho(A) - Fbar_rho(A). Equals omega/d at rho = I/d.
ComplexMatrix trivial_fisher_part(const ComplexMatrix& rho);

// J F_rho(A) J* for a k x d^2 matrix J. Conjugation by suitable J (optionally
// summed over a Kraus family) recovers every quadratic map from the Fisher
// map; see the diag/square identities in the tests.
ComplexMatrix conjugate_relation(const ComplexMatrix& j, const Povm& a,
                                 const ComplexMatrix& rho);

enum class SignClass { BothSigns, OnlyNonneg, OnlyNonpos, Zero };

const char* sign_class_name(SignClass s);

SignClass eigenvalue_sign_class(const ComplexMatrix& m,
                                double dead_band = tol::sign_dead_band);

// Sign classification of G(A) - G(B); BothSigns certifies that [A] and [B]
// are not post-processing ordered.
SignClass nonorder_witness(const MorphismSpec& spec, const Povm& a, const Povm& b,
                           double dead_band = tol::sign_dead_band);

// F(P) for a weighted rank-1 POVM (throws BadParameterError otherwise); a
// 2-design satisfies two_design_image(P) == two_design_reference(d).
ComplexMatrix two_design_image(const Povm& p);

// (2/(d+1)) * P_sym^Gamma = (I + omega)/(d+1).
ComplexMatrix two_design_reference(int d);

}  // namespace povmorder

#endif  // POVMORDER_MORPHISMS_HPP

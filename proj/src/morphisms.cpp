#include "povmorder/morphisms.hpp"

#include <cmath>

namespace povmorder {

const char* morphism_name(MorphismKind k) {
  switch (k) {
    case MorphismKind::Fisher: return "fisher";
    case MorphismKind::FisherTruncated: return "fisher_truncated";
    case MorphismKind::PsiMap: return "psi_map";
    case MorphismKind::DiagMap: return "diag_map";
    case MorphismKind::SquareMap: return "square_map";
    case MorphismKind::TraceMap: return "trace_map";
  }
  return "unknown";
}

const char* sign_class_name(SignClass s) {
  switch (s) {
    case SignClass::BothSigns: return "both_signs";
    case SignClass::OnlyNonneg: return "only_nonneg";
    case SignClass::OnlyNonpos: return "only_nonpos";
    case SignClass::Zero: return "zero";
  }
  return "unknown";
}

namespace {

void require_state_pd(const ComplexMatrix& rho) {
  require_hermitian(rho);
  if (std::abs(rho.trace().real() - 1.0) > 1e-9) {
    throw ValidationError("rho must have unit trace");
  }
  const EigDecomposition eig = eig_hermitian(rho);
  if (eig.values.minCoeff() < tol::state_pd) {
    throw ValidationError("rho must be strictly positive definite (min eig = " +
                          std::to_string(eig.values.minCoeff()) + ")");
  }
}

}  // namespace

MorphismSpec MorphismSpec::fisher(const ComplexMatrix& rho) {
  require_state_pd(rho);
  MorphismSpec spec(MorphismKind::Fisher, static_cast<int>(rho.rows()));
  spec.rho_ = rho;
  spec.rho_sqrt_ = sqrt_psd(rho);
  return spec;
}

MorphismSpec MorphismSpec::fisher_truncated(const ComplexMatrix& rho) {
  MorphismSpec spec = fisher(rho);
  spec.kind_ = MorphismKind::FisherTruncated;
  return spec;
}

MorphismSpec MorphismSpec::psi_map(const ComplexVector& psi) {
  if (std::abs(psi.norm() - 1.0) > 1e-12) {
    throw ValidationError("psi must be a unit vector");
  }
  MorphismSpec spec(MorphismKind::PsiMap, static_cast<int>(psi.size()));
  spec.psi_ = psi;
  return spec;
}

MorphismSpec MorphismSpec::diag_map(int dim) {
  if (dim < 1) throw BadParameterError("diag_map: dim must be >= 1");
  return MorphismSpec(MorphismKind::DiagMap, dim);
}

MorphismSpec MorphismSpec::square_map(int dim) {
  if (dim < 1) throw BadParameterError("square_map: dim must be >= 1");
  return MorphismSpec(MorphismKind::SquareMap, dim);
}

MorphismSpec MorphismSpec::trace_map(int dim) {
  if (dim < 1) throw BadParameterError("trace_map: dim must be >= 1");
  return MorphismSpec(MorphismKind::TraceMap, dim);
}

int MorphismSpec::image_dim() const {
  switch (kind_) {
    case MorphismKind::Fisher:
    case MorphismKind::FisherTruncated:
      return dim_ * dim_;
    case MorphismKind::TraceMap:
      return 1;
    default:
      return dim_;
  }
}

ComplexMatrix apply_effect(const MorphismSpec& spec, const ComplexMatrix& effect) {
  if (effect.rows() != spec.dim() || effect.cols() != spec.dim()) {
    throw DimensionError("apply_effect: effect dimension mismatch");
  }
  const int d = spec.dim();
  switch (spec.kind()) {
    case MorphismKind::Fisher: {
      const double t = (spec.rho() * effect).trace().real();
      if (t <= tol::zero_denominator) {
        throw ZeroDenominatorError("tr(rho E) vanishes");
      }
      const ComplexVector u = vectorize(spec.rho_sqrt() * effect);
      return (u * u.adjoint()) / t;
    }
    case MorphismKind::FisherTruncated: {
      const double t = (spec.rho() * effect).trace().real();
      if (t <= tol::zero_denominator) {
        throw ZeroDenominatorError("tr(rho E) vanishes");
      }
      const ComplexMatrix centered =
          effect - t * ComplexMatrix::Identity(d, d);
      const ComplexVector u = vectorize(spec.rho_sqrt() * centered);
      return (u * u.adjoint()) / t;
    }
    case MorphismKind::PsiMap: {
      const double t = (spec.psi().adjoint() * effect * spec.psi())(0).real();
      if (t <= tol::zero_denominator) {
        throw ZeroDenominatorError("<psi|E|psi> vanishes");
      }
      const ComplexVector v = effect * spec.psi();
      return (v * v.adjoint()) / t;
    }
    case MorphismKind::DiagMap: {
      const double t = effect.trace().real();
      if (t <= tol::zero_denominator) throw ZeroDenominatorError("tr E vanishes");
      ComplexMatrix out = ComplexMatrix::Zero(d, d);
      for (int i = 0; i < d; ++i) out(i, i) = std::norm(effect(i, i));
      return out / t;
    }
    case MorphismKind::SquareMap: {
      const double t = effect.trace().real();
      if (t <= tol::zero_denominator) throw ZeroDenominatorError("tr E vanishes");
      return (effect * effect) / t;
    }
    case MorphismKind::TraceMap: {
      const double t = effect.trace().real();
      if (t <= tol::zero_denominator) throw ZeroDenominatorError("tr E vanishes");
      ComplexMatrix out(1, 1);
      out(0, 0) = t;
      return out;
    }
  }
  throw Error("unreachable");
}

FisherMatrix apply(const MorphismSpec& spec, const Povm& a, std::string source) {
  if (a.dim != spec.dim()) {
    throw DimensionError("apply: POVM dimension does not match morphism");
  }
  const int dd = spec.image_dim();
  FisherMatrix out;
  out.matrix = ComplexMatrix::Zero(dd, dd);
  out.kind = spec.kind();
  out.source_dim = a.dim;
  out.source = std::move(source);
  for (const auto& effect : a.effects) {
    try {
      out.matrix += apply_effect(spec, effect);
    } catch (const ZeroDenominatorError&) {
      ++out.skipped_terms;
    }
  }
  out.matrix = 0.5 * (out.matrix + out.matrix.adjoint().eval());
  return out;
}

FisherMatrix apply_truncated(const ComplexMatrix& rho, const Povm& a,
                             std::string source) {
  return apply(MorphismSpec::fisher_truncated(rho), a, std::move(source));
}

ComplexMatrix trivial_fisher_part(const ComplexMatrix& rho) {
  const ComplexVector w = vectorize(sqrt_psd(rho));
  return w * w.adjoint();
}

ComplexMatrix conjugate_relation(const ComplexMatrix& j, const Povm& a,
                                 const ComplexMatrix& rho) {
  if (j.cols() != static_cast<Eigen::Index>(a.dim) * a.dim) {
    throw DimensionError("conjugate_relation: J must have d^2 columns");
  }
  const FisherMatrix f = apply(MorphismSpec::fisher(rho), a);
  return j * f.matrix * j.adjoint();
}

SignClass eigenvalue_sign_class(const ComplexMatrix& m, double dead_band) {
  const EigDecomposition eig = eig_hermitian(m);
  bool pos = false, neg = false;
  for (Eigen::Index i = 0; i < eig.values.size(); ++i) {
    if (eig.values[i] > dead_band) pos = true;
    if (eig.values[i] < -dead_band) neg = true;
  }
  if (pos && neg) return SignClass::BothSigns;
  if (pos) return SignClass::OnlyNonneg;
  if (neg) return SignClass::OnlyNonpos;
  return SignClass::Zero;
}

SignClass nonorder_witness(const MorphismSpec& spec, const Povm& a, const Povm& b,
                           double dead_band) {
  const FisherMatrix ga = apply(spec, a);
  const FisherMatrix gb = apply(spec, b);
  return eigenvalue_sign_class(ga.matrix - gb.matrix, dead_band);
}

ComplexMatrix two_design_image(const Povm& p) {
  for (int x = 0; x < p.size(); ++x) {
    const EigDecomposition eig = eig_hermitian(p.effects[x]);
    const double top = eig.values[eig.values.size() - 1];
    if (eig.values.size() > 1 && eig.values[eig.values.size() - 2] > 1e-9 * std::max(top, 1.0)) {
      throw BadParameterError("two_design_image: effect " + std::to_string(x) +
                                  " is not rank-1",
                              x);
    }
  }
  const ComplexMatrix rho = ComplexMatrix::Identity(p.dim, p.dim) / double(p.dim);
  return apply(MorphismSpec::fisher(rho), p).matrix;
}

ComplexMatrix two_design_reference(int d) {
  return 2.0 / (d + 1.0) * partial_transpose(sym_projector(d));
}

}  // namespace povmorder

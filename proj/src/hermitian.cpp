#include "povmorder/hermitian.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

namespace povmorder {

double max_abs(const ComplexMatrix& m) {
  if (m.size() == 0) return 0.0;
  return m.cwiseAbs().maxCoeff();
}

bool is_hermitian(const ComplexMatrix& m, double tolerance) {
  if (m.rows() != m.cols()) return false;
  return max_abs(m - m.adjoint()) <= tolerance;
}

void require_hermitian(const ComplexMatrix& m, double tolerance) {
  if (m.rows() != m.cols()) {
    throw NotHermitianError("matrix is not square (" + std::to_string(m.rows()) +
                            "x" + std::to_string(m.cols()) + ")");
  }
  const double dev = max_abs(m - m.adjoint());
  if (dev > tolerance) {
    throw NotHermitianError("matrix is not Hermitian: max |M - M*| = " +
                            std::to_string(dev));
  }
}

EigDecomposition eig_hermitian(const ComplexMatrix& m) {
  require_hermitian(m);
  // Tridiagonalization + implicit QL, deterministic; Eigen sorts ascending.
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(m);
  if (solver.info() != Eigen::Success) {
    throw SolverError("eigensolver did not converge");
  }
  return EigDecomposition{solver.eigenvalues(), solver.eigenvectors()};
}

bool is_psd(const ComplexMatrix& m, double tolerance) {
  const EigDecomposition eig = eig_hermitian(m);
  if (eig.values.size() == 0) return true;
  return eig.values.minCoeff() >= -tolerance;
}

void require_psd(const ComplexMatrix& m, double tolerance) {
  const EigDecomposition eig = eig_hermitian(m);
  if (eig.values.size() > 0 && eig.values.minCoeff() < -tolerance) {
    throw NotPsdError("matrix is not PSD: min eigenvalue = " +
                      std::to_string(eig.values.minCoeff()));
  }
}

ComplexMatrix sqrt_psd(const ComplexMatrix& m, double psd_tolerance) {
  const EigDecomposition eig = eig_hermitian(m);
  RealVector roots(eig.values.size());
  for (Eigen::Index i = 0; i < eig.values.size(); ++i) {
    const double lambda = eig.values[i];
    if (lambda < -psd_tolerance) {
      throw NotPsdError("sqrt_psd: min eigenvalue = " + std::to_string(lambda));
    }
    roots[i] = std::sqrt(std::max(lambda, 0.0));
  }
  return eig.vectors * roots.asDiagonal() * eig.vectors.adjoint();
}

ComplexMatrix pinv_sqrt(const ComplexMatrix& m, double psd_tolerance) {
  const EigDecomposition eig = eig_hermitian(m);
  const double norm = eig.values.size() ? eig.values.cwiseAbs().maxCoeff() : 0.0;
  const double rank_tol = 1e-9 * std::max(norm, 1e-300);
  RealVector inv_roots(eig.values.size());
  for (Eigen::Index i = 0; i < eig.values.size(); ++i) {
    const double lambda = eig.values[i];
    if (lambda < -psd_tolerance) {
      throw NotPsdError("pinv_sqrt: min eigenvalue = " + std::to_string(lambda));
    }
    inv_roots[i] = lambda > rank_tol ? 1.0 / std::sqrt(lambda) : 0.0;
  }
  return eig.vectors * inv_roots.asDiagonal() * eig.vectors.adjoint();
}

double trace_norm(const ComplexMatrix& m) {
  const EigDecomposition eig = eig_hermitian(m);
  return eig.values.cwiseAbs().sum();
}

ComplexVector vectorize(const ComplexMatrix& e) {
  if (e.rows() != e.cols()) {
    throw DimensionError("vectorize expects a square matrix");
  }
  // Eigen stores column-major, so this is exactly column stacking.
  return Eigen::Map<const ComplexVector>(e.data(), e.size());
}

ComplexMatrix devectorize(const ComplexVector& v) {
  const auto d = static_cast<Eigen::Index>(std::llround(std::sqrt(double(v.size()))));
  if (d * d != v.size()) {
    throw DimensionError("devectorize: length is not a perfect square");
  }
  return Eigen::Map<const ComplexMatrix>(v.data(), d, d);
}

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

RealMatrix vec_kron_permutation(int da, int db) {
  const int n = da * da * db * db;
  RealMatrix p = RealMatrix::Zero(n, n);
  for (int ia = 0; ia < da; ++ia) {
    for (int ja = 0; ja < da; ++ja) {
      for (int ib = 0; ib < db; ++ib) {
        for (int jb = 0; jb < db; ++jb) {
          // vec(X)(x)vec(Y) index vs vec(X (x) Y) index
          const int src = (ia + da * ja) * db * db + (ib + db * jb);
          const int row = ia * db + ib;
          const int col = ja * db + jb;
          const int dst = row + da * db * col;
          p(dst, src) = 1.0;
        }
      }
    }
  }
  return p;
}

ComplexMatrix partial_transpose(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) {
    throw DimensionError("partial_transpose expects a square matrix");
  }
  const auto dd = m.rows();
  const auto d = static_cast<Eigen::Index>(std::llround(std::sqrt(double(dd))));
  if (d * d != dd) {
    throw DimensionError("partial_transpose: dimension is not a perfect square");
  }
  ComplexMatrix out(dd, dd);
  for (Eigen::Index a = 0; a < d; ++a) {
    for (Eigen::Index b = 0; b < d; ++b) {
      for (Eigen::Index c = 0; c < d; ++c) {
        for (Eigen::Index e = 0; e < d; ++e) {
          out(a * d + b, c * d + e) = m(a * d + e, c * d + b);
        }
      }
    }
  }
  return out;
}

ComplexMatrix max_entangled(int d) {
  ComplexVector omega_ket = ComplexVector::Zero(d * d);
  for (int i = 0; i < d; ++i) omega_ket[i * d + i] = 1.0;
  return omega_ket * omega_ket.adjoint();
}

ComplexMatrix swap_operator(int d) {
  ComplexMatrix s = ComplexMatrix::Zero(d * d, d * d);
  for (int a = 0; a < d; ++a) {
    for (int b = 0; b < d; ++b) s(a * d + b, b * d + a) = 1.0;
  }
  return s;
}

ComplexMatrix sym_projector(int d) {
  return 0.5 * (ComplexMatrix::Identity(d * d, d * d) + swap_operator(d));
}

}  // namespace povmorder

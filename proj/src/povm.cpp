#include "povmorder/povm.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "rng.hpp"

namespace povmorder {

namespace {

constexpr double kZeroEffectTol = 1e-12;
constexpr double kCollinearTol = 1e-9;
constexpr double kUnitAxisTol = 1e-12;

ComplexMatrix identity(int d) { return ComplexMatrix::Identity(d, d); }

}  // namespace

Povm validate_povm(std::vector<ComplexMatrix> effects, std::vector<int> labels,
                   double psd_tol) {
  if (effects.empty()) {
    throw ValidationError("POVM needs at least one effect");
  }
  const auto d = effects[0].rows();
  if (d < 1) throw ValidationError("effects must be non-empty matrices");
  for (std::size_t x = 0; x < effects.size(); ++x) {
    const ComplexMatrix& e = effects[x];
    if (e.rows() != d || e.cols() != d) {
      throw ValidationError("effect " + std::to_string(x) +
                                " has inconsistent dimensions",
                            static_cast<int>(x));
    }
    if (!e.allFinite()) {
      throw ValidationError("effect " + std::to_string(x) + " has non-finite entries",
                            static_cast<int>(x));
    }
    if (!is_hermitian(e)) {
      throw ValidationError("effect " + std::to_string(x) + " is not Hermitian",
                            static_cast<int>(x));
    }
    if (!is_psd(e, psd_tol)) {
      throw ValidationError("effect " + std::to_string(x) + " is not PSD",
                            static_cast<int>(x));
    }
  }
  ComplexMatrix sum = ComplexMatrix::Zero(d, d);
  for (const auto& e : effects) sum += e;
  const double residual = max_abs(sum - identity(static_cast<int>(d)));
  if (residual > tol::povm_sum * static_cast<double>(d)) {
    throw ValidationError("effects do not sum to identity, residual = " +
                          std::to_string(residual));
  }
  if (labels.empty()) {
    labels.resize(effects.size());
    for (std::size_t i = 0; i < labels.size(); ++i) labels[i] = static_cast<int>(i);
  }
  if (labels.size() != effects.size()) {
    throw ValidationError("label count does not match effect count");
  }
  std::set<int> seen(labels.begin(), labels.end());
  if (seen.size() != labels.size()) {
    throw ValidationError("duplicate outcome label");
  }
  Povm p;
  p.dim = static_cast<int>(d);
  p.effects = std::move(effects);
  p.labels = std::move(labels);
  return p;
}

SimplePovm simplify(const Povm& p) {
  std::vector<ComplexMatrix> effects;
  std::vector<int> labels;
  for (int x = 0; x < p.size(); ++x) {
    if (max_abs(p.effects[x]) > kZeroEffectTol) {
      effects.push_back(p.effects[x]);
      labels.push_back(p.labels[x]);
    }
  }
  bool merged = true;
  while (merged) {
    merged = false;
    for (std::size_t x = 0; x < effects.size() && !merged; ++x) {
      for (std::size_t y = 0; y < effects.size() && !merged; ++y) {
        if (x == y) continue;
        // least-squares scalar fit of A_x = c A_y
        const double denom = (effects[y].adjoint() * effects[y]).trace().real();
        if (denom <= 0) continue;
        double c = (effects[y].adjoint() * effects[x]).trace().real() / denom;
        if (c < -1e-12) continue;
        c = std::max(c, 0.0);
        if (max_abs(effects[x] - c * effects[y]) <= kCollinearTol) {
          effects[y] += effects[x];
          labels[y] = std::min(labels[y], labels[x]);
          effects.erase(effects.begin() + static_cast<std::ptrdiff_t>(x));
          labels.erase(labels.begin() + static_cast<std::ptrdiff_t>(x));
          merged = true;
        }
      }
    }
  }
  SimplePovm out;
  out.povm = validate_povm(std::move(effects), std::move(labels));
  out.ell = out.povm.size();
  return out;
}

int simple_outcome_count(const Povm& p) { return simplify(p).ell; }

ComplexMatrix pauli_x() {
  ComplexMatrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

ComplexMatrix pauli_y() {
  ComplexMatrix m(2, 2);
  m << 0, Complex(0, -1), Complex(0, 1), 0;
  return m;
}

ComplexMatrix pauli_z() {
  ComplexMatrix m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

ComplexMatrix bloch_operator(const Eigen::Vector3d& n) {
  return n.x() * pauli_x() + n.y() * pauli_y() + n.z() * pauli_z();
}

ComplexMatrix bloch_state(const Eigen::Vector3d& v) {
  if (v.norm() > 1.0 + 1e-12) {
    throw BadParameterError("Bloch vector has norm > 1");
  }
  return 0.5 * (identity(2) + bloch_operator(v));
}

ComplexMatrix fourier_matrix(int d) {
  if (d < 1) throw BadParameterError("fourier_matrix: d must be >= 1");
  ComplexMatrix f(d, d);
  const double scale = 1.0 / std::sqrt(static_cast<double>(d));
  for (int a = 0; a < d; ++a) {
    for (int b = 0; b < d; ++b) {
      const double phase = 2.0 * M_PI * double(a) * double(b) / double(d);
      f(a, b) = scale * Complex(std::cos(phase), std::sin(phase));
    }
  }
  return f;
}

Povm make_von_neumann(const ComplexMatrix& basis) {
  const auto d = basis.rows();
  if (basis.cols() != d) throw BadParameterError("basis must be square");
  if (max_abs(basis.adjoint() * basis - identity(static_cast<int>(d))) > 1e-10) {
    throw BadParameterError("basis is not unitary");
  }
  std::vector<ComplexMatrix> effects;
  effects.reserve(static_cast<std::size_t>(d));
  for (Eigen::Index i = 0; i < d; ++i) {
    const ComplexVector col = basis.col(i);
    effects.push_back(col * col.adjoint());
  }
  return validate_povm(std::move(effects));
}

std::pair<Povm, Povm> make_fourier_pair(int d, double s, double t) {
  if (d < 2) throw BadParameterError("make_fourier_pair: d must be >= 2");
  if (s < 0 || s > 1 || t < 0 || t > 1) {
    throw BadParameterError("make_fourier_pair: s, t must lie in [0,1]");
  }
  const ComplexMatrix f = fourier_matrix(d);
  std::vector<ComplexMatrix> ea, eb;
  for (int i = 0; i < d; ++i) {
    ComplexMatrix p = ComplexMatrix::Zero(d, d);
    p(i, i) = 1.0;
    ea.push_back(s * p + (1.0 - s) / d * identity(d));
    eb.push_back(t * (f * p * f.adjoint()) + (1.0 - t) / d * identity(d));
  }
  return {validate_povm(std::move(ea)), validate_povm(std::move(eb))};
}

Povm make_qubit_dichotomic(double eta, const Eigen::Vector3d& axis) {
  if (eta < 0 || eta > 1) throw BadParameterError("sharpness must lie in [0,1]");
  if (std::abs(axis.norm() - 1.0) > kUnitAxisTol) {
    throw BadParameterError("axis must be a unit vector");
  }
  const ComplexMatrix t = bloch_operator(axis);
  std::vector<ComplexMatrix> effects = {0.5 * (identity(2) + eta * t),
                                        0.5 * (identity(2) - eta * t)};
  return validate_povm(std::move(effects), {+1, -1});
}

std::array<Eigen::Vector3d, 3> trine_axes() {
  std::array<Eigen::Vector3d, 3> axes;
  for (int k = 1; k <= 3; ++k) {
    const double angle = (k - 1) * M_PI / 3.0;
    axes[k - 1] = Eigen::Vector3d(std::cos(angle), std::sin(angle), 0.0);
  }
  return axes;
}

std::vector<Povm> make_trine(double eta) {
  std::vector<Povm> out;
  for (const auto& n : trine_axes()) out.push_back(make_qubit_dichotomic(eta, n));
  return out;
}

std::vector<Povm> make_planar(int m, double lambda) {
  if (m < 2) throw BadParameterError("make_planar: M must be >= 2");
  std::vector<Povm> out;
  for (int k = 0; k < m; ++k) {
    const double angle = k * M_PI / m;
    out.push_back(make_qubit_dichotomic(
        lambda, Eigen::Vector3d(std::cos(angle), std::sin(angle), 0.0)));
  }
  return out;
}

Povm make_sic_qubit() {
  const double r = 1.0 / std::sqrt(3.0);
  const std::array<Eigen::Vector3d, 4> dirs = {
      Eigen::Vector3d(r, r, r), Eigen::Vector3d(r, -r, -r),
      Eigen::Vector3d(-r, r, -r), Eigen::Vector3d(-r, -r, r)};
  std::vector<ComplexMatrix> effects;
  for (const auto& n : dirs) effects.push_back(0.25 * (identity(2) + bloch_operator(n)));
  return validate_povm(std::move(effects));
}

Povm make_mub_complete_qubit() {
  std::vector<ComplexMatrix> effects;
  for (const ComplexMatrix& sigma : {pauli_x(), pauli_y(), pauli_z()}) {
    effects.push_back((identity(2) + sigma) / 6.0);
    effects.push_back((identity(2) - sigma) / 6.0);
  }
  return validate_povm(std::move(effects));
}

std::vector<ComplexMatrix> anticommuting_operators(int g) {
  if (g < 2) throw BadParameterError("anticommuting_operators: g must be >= 2");
  std::vector<ComplexMatrix> ops = {pauli_x(), pauli_y(), pauli_z()};
  while (static_cast<int>(ops.size()) < g) {
    const auto dim_old = ops[0].rows();
    std::vector<ComplexMatrix> next;
    next.reserve(ops.size() + 2);
    for (const auto& t : ops) next.push_back(tensor(pauli_x(), t));
    next.push_back(tensor(pauli_y(), ComplexMatrix::Identity(dim_old, dim_old)));
    next.push_back(tensor(pauli_z(), ComplexMatrix::Identity(dim_old, dim_old)));
    ops = std::move(next);
  }
  ops.resize(static_cast<std::size_t>(g));
  return ops;
}

std::vector<Povm> make_anticommuting_family(int g) {
  std::vector<Povm> out;
  for (const auto& t : anticommuting_operators(g)) {
    const auto d = t.rows();
    std::vector<ComplexMatrix> effects = {
        0.5 * (ComplexMatrix::Identity(d, d) + t),
        0.5 * (ComplexMatrix::Identity(d, d) - t)};
    out.push_back(validate_povm(std::move(effects), {+1, -1}));
  }
  return out;
}

Povm noisy_mixture(const Povm& p, double lambda, const ComplexMatrix& rho) {
  if (lambda < 0 || lambda > 1) throw BadParameterError("lambda must lie in [0,1]");
  if (rho.rows() != p.dim || rho.cols() != p.dim) {
    throw DimensionError("noisy_mixture: state dimension mismatch");
  }
  if (!is_hermitian(rho) || !is_psd(rho) ||
      std::abs(rho.trace().real() - 1.0) > 1e-9) {
    throw ValidationError("noisy_mixture: rho is not a state");
  }
  std::vector<ComplexMatrix> effects;
  effects.reserve(p.effects.size());
  for (const auto& e : p.effects) {
    const double weight = (rho * e).trace().real();
    effects.push_back(lambda * e + (1.0 - lambda) * weight * identity(p.dim));
  }
  return validate_povm(std::move(effects), p.labels);
}

Povm tensor_povm(const Povm& a, const Povm& b) {
  std::vector<ComplexMatrix> effects;
  std::vector<int> labels;
  for (int x = 0; x < a.size(); ++x) {
    for (int y = 0; y < b.size(); ++y) {
      effects.push_back(tensor(a.effects[x], b.effects[y]));
      labels.push_back(x * b.size() + y);
    }
  }
  return validate_povm(std::move(effects), std::move(labels));
}

namespace {

ComplexMatrix gaussian_matrix(int d, detail::Rng& rng) {
  ComplexMatrix g(d, d);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  // fill row-major so the stream order is storage-independent
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      g(i, j) = inv_sqrt2 * Complex(rng.normal(), rng.normal());
    }
  }
  return g;
}

}  // namespace

Povm random_povm(int d, int n, std::uint64_t seed) {
  if (d < 1 || n < 1) throw BadParameterError("random_povm: d, n must be >= 1");
  detail::Rng rng(seed);
  std::vector<ComplexMatrix> wishart;
  ComplexMatrix s = ComplexMatrix::Zero(d, d);
  for (int i = 0; i < n; ++i) {
    const ComplexMatrix g = gaussian_matrix(d, rng);
    wishart.push_back(g * g.adjoint());
    s += wishart.back();
  }
  const ComplexMatrix r = pinv_sqrt(s);
  std::vector<ComplexMatrix> effects;
  effects.reserve(wishart.size());
  for (const auto& m : wishart) {
    ComplexMatrix e = r * m * r;
    e = 0.5 * (e + e.adjoint().eval());
    effects.push_back(std::move(e));
  }
  return validate_povm(std::move(effects));
}

ComplexMatrix random_state(int d, std::uint64_t seed) {
  detail::Rng rng(seed);
  const ComplexMatrix g = gaussian_matrix(d, rng);
  ComplexMatrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  return 0.5 * (rho + rho.adjoint().eval());
}

ComplexMatrix random_psd(int d, std::uint64_t seed) {
  detail::Rng rng(seed);
  const ComplexMatrix g = gaussian_matrix(d, rng);
  ComplexMatrix m = g * g.adjoint() / double(d);
  return 0.5 * (m + m.adjoint().eval());
}

ComplexMatrix random_hermitian(int d, std::uint64_t seed) {
  detail::Rng rng(seed);
  const ComplexMatrix g = gaussian_matrix(d, rng);
  return 0.5 * (g + g.adjoint().eval());
}

RealMatrix random_stochastic(int rows, int cols, std::uint64_t seed) {
  if (rows < 1 || cols < 1) throw BadParameterError("random_stochastic: empty shape");
  detail::Rng rng(seed);
  RealMatrix mu(rows, cols);
  for (int j = 0; j < cols; ++j) {
    double sum = 0;
    for (int i = 0; i < rows; ++i) {
      mu(i, j) = rng.uniform() + 1e-6;
      sum += mu(i, j);
    }
    mu.col(j) /= sum;
  }
  return mu;
}

}  // namespace povmorder

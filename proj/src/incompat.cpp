#include "povmorder/incompat.hpp"

#include <cmath>
#include <numeric>

#include "barrier.hpp"

namespace povmorder {

namespace {

void require_common_dim(const std::vector<Povm>& measurements) {
  if (measurements.empty()) {
    throw BadParameterError("need at least one measurement");
  }
  for (const auto& p : measurements) {
    if (p.dim != measurements[0].dim) {
      throw DimensionError("measurements act on different dimensions");
    }
  }
}

double outcome_threshold(int d, const std::vector<int>& ells) {
  double product = 1.0;
  for (int ell : ells) {
    product *= ell;
    if (product >= d) return d;  // saturates; avoids overflow for many POVMs
  }
  return std::min(double(d), product);
}

IncompatVerdict make_verdict(double h, int d, std::vector<int> ells,
                             HeightResult certificate, const ComplexMatrix& rho) {
  IncompatVerdict v;
  v.height = h;
  v.threshold = outcome_threshold(d, ells);
  v.margin = v.height - v.threshold;
  v.boundary = std::abs(v.margin) <= tol::verdict_dead_band;
  v.incompatible = v.margin > tol::verdict_dead_band;
  v.ells = std::move(ells);
  v.certificate = std::move(certificate);
  v.rho = rho;
  return v;
}

}  // namespace

IncompatVerdict zhu_criterion(const std::vector<Povm>& measurements,
                              const ComplexMatrix& rho, const HeightOptions& options) {
  require_common_dim(measurements);
  const int d = measurements[0].dim;
  const MorphismSpec spec = MorphismSpec::fisher(rho);
  std::vector<int> ells;
  std::vector<ComplexMatrix> images;
  for (const auto& p : measurements) {
    ells.push_back(simple_outcome_count(p));
    images.push_back(apply(spec, p).matrix);
  }
  HeightResult hr = height(images, options);
  const double h = hr.value;
  return make_verdict(h, d, std::move(ells), std::move(hr), rho);
}

IncompatVerdict pgm_criterion(const std::vector<Povm>& measurements,
                              const ComplexMatrix& rho) {
  require_common_dim(measurements);
  const int d = measurements[0].dim;
  const MorphismSpec spec = MorphismSpec::fisher(rho);
  std::vector<int> ells;
  std::vector<ComplexMatrix> images;
  for (const auto& p : measurements) {
    ells.push_back(simple_outcome_count(p));
    images.push_back(apply(spec, p).matrix);
  }
  const double bound = pgm_lower_bound(images);

  HeightResult certificate;
  certificate.value = bound;
  certificate.dual = bound;
  certificate.dual_y = pgm_measurement(images);
  certificate.h_opt = ComplexMatrix::Zero(d * d, d * d);
  for (const auto& x : images) certificate.h_opt += x;  // feasible upper bound
  certificate.primal = certificate.h_opt.trace().real();
  certificate.gap = certificate.primal - certificate.dual;
  return make_verdict(bound, d, std::move(ells), std::move(certificate), rho);
}

double joint_outcome_bound(const std::vector<Povm>& measurements,
                           const ComplexMatrix& rho, const HeightOptions& options) {
  require_common_dim(measurements);
  const MorphismSpec spec = MorphismSpec::fisher(rho);
  std::vector<ComplexMatrix> images;
  for (const auto& p : measurements) images.push_back(apply(spec, p).matrix);
  return height(images, options).value;
}

namespace {

// Row-major enumeration of outcome tuples.
int tuple_count(const std::vector<Povm>& ms) {
  int n = 1;
  for (const auto& p : ms) n *= p.size();
  return n;
}

std::vector<int> unflatten(int index, const std::vector<Povm>& ms) {
  std::vector<int> tuple(ms.size());
  for (int i = static_cast<int>(ms.size()) - 1; i >= 0; --i) {
    tuple[static_cast<std::size_t>(i)] = index % ms[static_cast<std::size_t>(i)].size();
    index /= ms[static_cast<std::size_t>(i)].size();
  }
  return tuple;
}

// Hermitian particular solution of the marginal constraints: the independent
// coupling C_x = sum_i A^(i)_{x_i} prod_{j != i} p_j(x_j) - (g-1) prod_j p_j I
// with p_j(y) = tr(A^(j)_y)/d.
std::vector<ComplexMatrix> marginal_particular_solution(const std::vector<Povm>& ms) {
  const int d = ms[0].dim;
  const int n = tuple_count(ms);
  const std::size_t g = ms.size();
  std::vector<std::vector<double>> weight(g);
  for (std::size_t i = 0; i < g; ++i) {
    for (const auto& e : ms[i].effects) {
      weight[i].push_back(e.trace().real() / d);
    }
  }
  std::vector<ComplexMatrix> blocks;
  blocks.reserve(static_cast<std::size_t>(n));
  for (int idx = 0; idx < n; ++idx) {
    const std::vector<int> tuple = unflatten(idx, ms);
    double all_weights = 1.0;
    for (std::size_t j = 0; j < g; ++j) {
      all_weights *= weight[j][static_cast<std::size_t>(tuple[j])];
    }
    ComplexMatrix c = ComplexMatrix::Zero(d, d);
    for (std::size_t i = 0; i < g; ++i) {
      double others = 1.0;
      for (std::size_t j = 0; j < g; ++j) {
        if (j != i) others *= weight[j][static_cast<std::size_t>(tuple[j])];
      }
      c += others * ms[i].effects[static_cast<std::size_t>(tuple[i])];
    }
    c -= (double(g) - 1.0) * all_weights * ComplexMatrix::Identity(d, d);
    blocks.push_back(std::move(c));
  }
  return blocks;
}

}  // namespace

JointResult joint_feasibility_detailed(const std::vector<Povm>& measurements,
                                       double feas_tol) {
  require_common_dim(measurements);
  const int d = measurements[0].dim;
  const int comps = d * d;
  const int n_blocks = tuple_count(measurements);
  const std::size_t g = measurements.size();

  const std::vector<ComplexMatrix> basis = detail::hermitian_basis(d);
  const std::vector<ComplexMatrix> particular = marginal_particular_solution(measurements);

  // Constraint matrix of the homogeneous marginal equations, acting on the
  // real block parameters (n_blocks * d^2 of them).
  int rows = 0;
  for (const auto& p : measurements) rows += p.size() * comps;
  RealMatrix constraints = RealMatrix::Zero(rows, n_blocks * comps);
  int row0 = 0;
  for (std::size_t i = 0; i < g; ++i) {
    for (int idx = 0; idx < n_blocks; ++idx) {
      const std::vector<int> tuple = unflatten(idx, measurements);
      const int x_i = tuple[i];
      for (int c = 0; c < comps; ++c) {
        constraints(row0 + x_i * comps + c, idx * comps + c) = 1.0;
      }
    }
    row0 += measurements[i].size() * comps;
  }

  // Orthonormal null-space basis from the spectral decomposition of L^T L.
  const RealMatrix gram = constraints.transpose() * constraints;
  Eigen::SelfAdjointEigenSolver<RealMatrix> es(gram);
  if (es.info() != Eigen::Success) throw SolverError("null-space eigensolver failed");
  const double cutoff = 1e-10 * std::max(es.eigenvalues().maxCoeff(), 1.0);
  std::vector<RealVector> null_basis;
  for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k) {
    if (es.eigenvalues()[k] <= cutoff) null_basis.push_back(es.eigenvectors().col(k));
  }
  const int m = static_cast<int>(null_basis.size()) + 1;  // z params + epsilon

  detail::BlockLmiProblem problem;
  problem.constant = particular;
  problem.coeff.resize(static_cast<std::size_t>(m));
  for (std::size_t k = 0; k + 1 < static_cast<std::size_t>(m); ++k) {
    problem.coeff[k].resize(static_cast<std::size_t>(n_blocks));
    for (int idx = 0; idx < n_blocks; ++idx) {
      ComplexMatrix v = ComplexMatrix::Zero(d, d);
      for (int c = 0; c < comps; ++c) {
        v += null_basis[k][idx * comps + c] * basis[static_cast<std::size_t>(c)];
      }
      problem.coeff[k][static_cast<std::size_t>(idx)] = std::move(v);
    }
  }
  problem.coeff[static_cast<std::size_t>(m - 1)].assign(
      static_cast<std::size_t>(n_blocks), -ComplexMatrix::Identity(d, d));
  problem.objective = RealVector::Zero(m);
  problem.objective[m - 1] = 1.0;  // maximize epsilon

  double min_eig = 0.0;
  for (const auto& c : particular) {
    min_eig = std::min(min_eig, eig_hermitian(c).values.minCoeff());
  }
  problem.start = RealVector::Zero(m);
  problem.start[m - 1] = min_eig - 1.0;

  detail::BarrierOptions barrier_options;
  barrier_options.gap_target = 1e-9;
  barrier_options.max_newton = 400;
  const detail::BarrierResult solve = detail::solve_block_lmi(problem, barrier_options);

  JointResult result;
  result.margin = solve.u[m - 1];
  result.gap = solve.gap_bound;
  if (result.margin < -feas_tol) return result;  // dual-certified infeasible

  // assemble the joint blocks at the final iterate (epsilon dropped)
  std::vector<ComplexMatrix> blocks = particular;
  for (int k = 0; k + 1 < m; ++k) {
    for (int idx = 0; idx < n_blocks; ++idx) {
      blocks[static_cast<std::size_t>(idx)] += solve.u[k] * problem.coeff[static_cast<std::size_t>(k)][static_cast<std::size_t>(idx)];
    }
  }
  std::vector<int> labels(static_cast<std::size_t>(n_blocks));
  std::iota(labels.begin(), labels.end(), 0);
  result.joint = validate_povm(std::move(blocks), std::move(labels),
                               std::max(feas_tol * 10, 1e-6));
  return result;
}

std::optional<Povm> joint_feasibility(const Povm& a, const Povm& b, double feas_tol) {
  return joint_feasibility_detailed({a, b}, feas_tol).joint;
}

namespace {

double ft_objective(const Eigen::Vector3d& y, const std::array<Eigen::Vector3d, 4>& pts) {
  double total = 0.0;
  for (const auto& p : pts) total += (y - p).norm();
  return total;
}

// Subgradient test: a data point v_i is the FT point iff the resultant of the
// unit pull directions has norm <= multiplicity of v_i among the data points.
bool vertex_optimal(std::size_t i, const std::array<Eigen::Vector3d, 4>& pts) {
  Eigen::Vector3d resultant = Eigen::Vector3d::Zero();
  double multiplicity = 1.0;
  for (std::size_t j = 0; j < pts.size(); ++j) {
    if (j == i) continue;
    const Eigen::Vector3d diff = pts[i] - pts[j];
    const double dist = diff.norm();
    if (dist <= 1e-15) {
      multiplicity += 1.0;
    } else {
      resultant += diff / dist;
    }
  }
  return resultant.norm() <= multiplicity + 1e-12;
}

}  // namespace

FTAnalysis ft_condition(const std::array<QubitDichotomic, 3>& measurements) {
  FTAnalysis analysis;
  Eigen::Vector3d v0 = Eigen::Vector3d::Zero();
  for (const auto& m : measurements) {
    if (m.eta < 0 || m.eta > 1) throw BadParameterError("sharpness must lie in [0,1]");
    if (std::abs(m.axis.norm() - 1.0) > 1e-12) {
      throw BadParameterError("axis must be a unit vector");
    }
    v0 -= m.eta * m.axis;
  }
  analysis.points[0] = v0;
  for (std::size_t k = 0; k < 3; ++k) {
    analysis.points[k + 1] = -2.0 * measurements[k].eta * measurements[k].axis - v0;
  }
  const auto& pts = analysis.points;

  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (vertex_optimal(i, pts)) {
      analysis.ft_point = pts[i];
      analysis.vertex_optimum = true;
      analysis.total_distance = ft_objective(pts[i], pts);
      analysis.compatible = analysis.total_distance <= 4.0 + 1e-9;
      return analysis;
    }
  }

  Eigen::Vector3d y = 0.25 * (pts[0] + pts[1] + pts[2] + pts[3]);
  for (int iter = 0; iter < 10000; ++iter) {
    analysis.iterations = iter + 1;
    // restart off any data point the iterate has collapsed onto (none of the
    // vertices is optimal here, so the minimum lies elsewhere)
    for (const auto& p : pts) {
      if ((y - p).norm() <= 1e-12) {
        Eigen::Vector3d pull = Eigen::Vector3d::Zero();
        double weight = 0.0;
        for (const auto& q : pts) {
          const double dist = (y - q).norm();
          if (dist > 1e-12) {
            pull += (q - y) / dist;
            weight += 1.0 / dist;
          }
        }
        y += ((pull.norm() - 1.0) / weight) * pull.normalized();
        break;
      }
    }
    Eigen::Vector3d numerator = Eigen::Vector3d::Zero();
    double denominator = 0.0;
    for (const auto& p : pts) {
      const double dist = std::max((y - p).norm(), 1e-15);
      numerator += p / dist;
      denominator += 1.0 / dist;
    }
    const Eigen::Vector3d next = numerator / denominator;
    const double step = (next - y).norm();
    y = next;
    if (step <= 1e-12) break;
  }

  analysis.ft_point = y;
  analysis.total_distance = ft_objective(y, pts);
  analysis.compatible = analysis.total_distance <= 4.0 + 1e-9;
  return analysis;
}

AnticommutingVerdict anticommuting_criterion(int g, const std::vector<double>& s) {
  if (g < 2) throw BadParameterError("anticommuting_criterion: g must be >= 2");
  if (static_cast<int>(s.size()) != g) {
    throw BadParameterError("noise vector must have g entries");
  }
  for (double si : s) {
    if (si < 0 || si > 1) throw BadParameterError("noise entries must lie in [0,1]");
  }

  const std::vector<ComplexMatrix> ops = anticommuting_operators(g);
  const int d = static_cast<int>(ops[0].rows());
  std::vector<Povm> noisy;
  for (int i = 0; i < g; ++i) {
    const ComplexMatrix id = ComplexMatrix::Identity(d, d);
    noisy.push_back(validate_povm(
        {0.5 * (id + s[static_cast<std::size_t>(i)] * ops[static_cast<std::size_t>(i)]),
         0.5 * (id - s[static_cast<std::size_t>(i)] * ops[static_cast<std::size_t>(i)])},
        {+1, -1}));
  }

  AnticommutingVerdict verdict;
  verdict.g = g;
  verdict.dim = d;
  verdict.noise_norm2 = 0.0;
  for (double si : s) verdict.noise_norm2 += si * si;
  verdict.analytic_incompatible = verdict.noise_norm2 > double(d - 1) + tol::verdict_dead_band;
  verdict.trivial = g <= d - 1;

  const ComplexMatrix rho = ComplexMatrix::Identity(d, d) / double(d);
  verdict.sdp = zhu_criterion(noisy, rho);

  const bool near_boundary =
      std::abs(verdict.noise_norm2 - double(d - 1)) <= 1e-4 || verdict.sdp.boundary;
  if (!near_boundary && verdict.analytic_incompatible != verdict.sdp.incompatible) {
    throw SolverError("anticommuting_criterion: analytic bound and SDP disagree");
  }
  return verdict;
}

}  // namespace povmorder

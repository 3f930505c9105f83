#include "povmorder/scenarios.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <thread>

namespace povmorder {

namespace {

std::string format_number(double v) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.12g", v);
  return buffer;
}

int scan_thread_count(std::size_t work_items) {
  unsigned n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("POVM_ORDER_THREADS")) {
    const long cap = std::strtol(env, nullptr, 10);
    if (cap >= 1) n = std::min<unsigned>(n, static_cast<unsigned>(cap));
  }
  return static_cast<int>(std::min<std::size_t>(n, work_items));
}

// Evaluates record i = 0..count-1 with a point function; records land in
// grid order no matter how execution interleaves.
std::vector<ScanRecord> run_grid(std::size_t count,
                                 const std::function<ScanRecord(std::size_t)>& point) {
  std::vector<ScanRecord> records(count);
  const int threads = scan_thread_count(count);
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) records[i] = point(i);
    return records;
  }
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(threads));
  for (int w = 0; w < threads; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = static_cast<std::size_t>(w); i < count;
           i += static_cast<std::size_t>(threads)) {
        records[i] = point(i);
      }
    });
  }
  for (auto& t : pool) t.join();
  return records;
}

std::string verdict_string(const IncompatVerdict& v) {
  return v.incompatible ? "incompatible" : "inconclusive";
}

std::string oracle_string(const std::vector<Povm>& measurements) {
  const JointResult joint = joint_feasibility_detailed(measurements);
  return joint.joint ? "feasible" : "infeasible";
}

double grid_value(int index, int grid_n) {
  return grid_n <= 1 ? 0.0 : double(index) / double(grid_n - 1);
}

}  // namespace

std::string to_csv(const ScanResult& result) {
  std::string out;
  for (const auto& name : result.param_names) {
    out += name;
    out += ',';
  }
  out += "height,zhu_verdict,analytic_flag,oracle_verdict\n";
  for (const auto& record : result.records) {
    for (double p : record.params) {
      out += format_number(p);
      out += ',';
    }
    out += format_number(record.height);
    out += ',';
    out += record.zhu_verdict;
    out += ',';
    out += record.analytic_flag;
    out += ',';
    out += record.oracle_verdict;
    out += '\n';
  }
  return out;
}

Eigen::Vector3d clamp_bloch(const Eigen::Vector3d& v) {
  const double norm = v.norm();
  if (norm > 1.0 + 1e-12) throw BadParameterError("BadBloch: ||v|| > 1");
  const double cap = 1.0 - 1e-6;
  if (norm > cap) return v * (cap / norm);
  return v;
}

ScanResult scan_fourier(int d, int grid_n, bool with_oracle) {
  if (d < 2) throw BadParameterError("scan_fourier: d must be >= 2");
  if (grid_n < 2) throw BadParameterError("scan_fourier: grid_n must be >= 2");
  ScanResult result;
  result.param_names = {"s", "t"};
  result.metadata = {{"scan", "fourier"},
                     {"d", std::to_string(d)},
                     {"grid", std::to_string(grid_n)},
                     {"rho", "maximally-mixed"},
                     {"oracle", with_oracle ? "joint-feasibility" : "none"}};
  const ComplexMatrix rho = ComplexMatrix::Identity(d, d) / double(d);
  const std::size_t count = std::size_t(grid_n) * std::size_t(grid_n);
  result.records = run_grid(count, [&](std::size_t index) {
    const int i = static_cast<int>(index) / grid_n;
    const int j = static_cast<int>(index) % grid_n;
    const double s = grid_value(i, grid_n);
    const double t = grid_value(j, grid_n);
    const auto [a, b] = make_fourier_pair(d, s, t);
    const IncompatVerdict zhu = zhu_criterion({a, b}, rho);
    const double cross = s * s + t * t + 2.0 * (d - 2) / double(d) * (1 - s) * (1 - t);
    const bool compatible = s + t <= 1.0 + 1e-12 || cross <= 1.0 + 1e-12;
    ScanRecord record;
    record.params = {s, t};
    record.height = zhu.height;
    record.zhu_verdict = verdict_string(zhu);
    record.analytic_flag = compatible ? "compatible" : "incompatible";
    if (with_oracle && d == 2) record.oracle_verdict = oracle_string({a, b});
    return record;
  });
  return result;
}

ScanResult scan_qubit_pair(const Eigen::Vector3d& n1, const Eigen::Vector3d& n2,
                           const Eigen::Vector3d& bloch, int grid_n, bool with_oracle) {
  if (grid_n < 2) throw BadParameterError("scan_qubit_pair: grid_n must be >= 2");
  const Eigen::Vector3d v = clamp_bloch(bloch);
  const ComplexMatrix rho = bloch_state(v);
  ScanResult result;
  result.param_names = {"eta1", "eta2"};
  result.metadata = {{"scan", "qubit-pair"},
                     {"grid", std::to_string(grid_n)},
                     {"bloch", format_number(v.x()) + ";" + format_number(v.y()) +
                                   ";" + format_number(v.z())},
                     {"oracle", with_oracle ? "joint-feasibility" : "none"}};
  const std::size_t count = std::size_t(grid_n) * std::size_t(grid_n);
  result.records = run_grid(count, [&](std::size_t index) {
    const int i = static_cast<int>(index) / grid_n;
    const int j = static_cast<int>(index) % grid_n;
    const double eta1 = grid_value(i, grid_n);
    const double eta2 = grid_value(j, grid_n);
    const Povm a = make_qubit_dichotomic(eta1, n1);
    const Povm b = make_qubit_dichotomic(eta2, n2);
    const IncompatVerdict zhu = zhu_criterion({a, b}, rho);
    const Eigen::Vector3d pa = eta1 * n1;
    const Eigen::Vector3d pb = eta2 * n2;
    const bool compatible = (pa + pb).norm() + (pa - pb).norm() <= 2.0 + 1e-12;
    ScanRecord record;
    record.params = {eta1, eta2};
    record.height = zhu.height;
    record.zhu_verdict = verdict_string(zhu);
    record.analytic_flag = compatible ? "compatible" : "incompatible";
    if (with_oracle) record.oracle_verdict = oracle_string({a, b});
    return record;
  });
  return result;
}

ScanResult scan_qubit_triple(const std::array<Eigen::Vector3d, 3>& axes,
                             const Eigen::Vector3d& bloch, double eta2, double eta3,
                             int grid_n, bool with_oracle) {
  if (grid_n < 2) throw BadParameterError("scan_qubit_triple: grid_n must be >= 2");
  if (eta2 < 0 || eta2 > 1 || eta3 < 0 || eta3 > 1) {
    throw BadParameterError("scan_qubit_triple: sharpness must lie in [0,1]");
  }
  const Eigen::Vector3d v = clamp_bloch(bloch);
  const ComplexMatrix rho = bloch_state(v);
  ScanResult result;
  result.param_names = {"eta1"};
  result.metadata = {{"scan", "qubit-triple"},
                     {"grid", std::to_string(grid_n)},
                     {"eta2", format_number(eta2)},
                     {"eta3", format_number(eta3)},
                     {"bloch", format_number(v.x()) + ";" + format_number(v.y()) +
                                   ";" + format_number(v.z())},
                     {"oracle", with_oracle ? "joint-feasibility" : "none"}};
  result.records = run_grid(static_cast<std::size_t>(grid_n), [&](std::size_t index) {
    const double eta1 = grid_value(static_cast<int>(index), grid_n);
    const std::array<double, 3> etas = {eta1, eta2, eta3};
    std::vector<Povm> povms;
    for (int k = 0; k < 3; ++k) {
      povms.push_back(make_qubit_dichotomic(etas[static_cast<std::size_t>(k)],
                                            axes[static_cast<std::size_t>(k)]));
    }
    const IncompatVerdict zhu = zhu_criterion(povms, rho);
    const FTAnalysis ft = ft_condition({QubitDichotomic{etas[0], axes[0]},
                                        QubitDichotomic{etas[1], axes[1]},
                                        QubitDichotomic{etas[2], axes[2]}});
    ScanRecord record;
    record.params = {eta1};
    record.height = zhu.height;
    record.zhu_verdict = verdict_string(zhu);
    record.analytic_flag = ft.compatible ? "compatible" : "incompatible";
    if (with_oracle) record.oracle_verdict = oracle_string(povms);
    return record;
  });
  return result;
}

ScanResult scan_planar(int m, int grid_n) {
  if (m < 2) throw BadParameterError("scan_planar: M must be >= 2");
  if (grid_n < 2) throw BadParameterError("scan_planar: grid_n must be >= 2");
  ScanResult result;
  result.param_names = {"lambda"};
  result.metadata = {{"scan", "planar"},
                     {"M", std::to_string(m)},
                     {"grid", std::to_string(grid_n)},
                     {"rho", "maximally-mixed"}};
  const ComplexMatrix rho = ComplexMatrix::Identity(2, 2) / 2.0;
  const double optimal = 1.0 / (m * std::sin(M_PI / (2.0 * m)));
  result.records = run_grid(static_cast<std::size_t>(grid_n), [&](std::size_t index) {
    const double lambda = grid_value(static_cast<int>(index), grid_n);
    const std::vector<Povm> povms = make_planar(m, lambda);
    const IncompatVerdict zhu = zhu_criterion(povms, rho);
    ScanRecord record;
    record.params = {lambda};
    record.height = zhu.height;
    record.zhu_verdict = verdict_string(zhu);
    record.analytic_flag = lambda <= optimal + 1e-12 ? "compatible" : "incompatible";
    return record;
  });
  return result;
}

}  // namespace povmorder

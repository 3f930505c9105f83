// povm-order: command-line front end for the POVM post-processing-order and
// incompatibility toolkit. One subcommand per analysis; JSON (default), CSV
// (scans) or human-readable output. Exit codes: 0 computed, 2 validation
// failure or malformed input, 3 solver failure.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "povmorder/dominance.hpp"
#include "povmorder/incompat.hpp"
#include "povmorder/io.hpp"
#include "povmorder/morphisms.hpp"
#include "povmorder/postproc.hpp"
#include "povmorder/scenarios.hpp"

using nlohmann::json;
using namespace povmorder;

namespace {

struct CliConfig {
  std::string format = "json";
  double lp_tol = tol::lp_feasibility;
  double sdp_gap = 1e-7;
  double psd_tol = tol::psd;
};

std::string format_number(double v) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.12g", v);
  return buffer;
}

void emit(const CliConfig& config, const json& result) {
  if (config.format == "human") {
    std::function<void(const json&, int)> dump = [&](const json& j, int indent) {
      const std::string pad(static_cast<std::size_t>(indent), ' ');
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (it->is_object() || (it->is_array() && !it->empty() && it->front().is_array())) {
          std::cout << pad << it.key() << ":\n";
          if (it->is_object()) {
            dump(*it, indent + 2);
          } else {
            std::cout << pad << "  " << it->dump() << "\n";
          }
        } else if (it->is_number_float()) {
          std::cout << pad << it.key() << ": " << format_number(it->get<double>()) << "\n";
        } else {
          std::cout << pad << it.key() << ": "
                    << (it->is_string() ? it->get<std::string>() : it->dump()) << "\n";
        }
      }
    };
    dump(result, 0);
  } else {
    std::cout << result.dump(2) << "\n";
  }
}

json height_result_to_json(const HeightResult& hr, bool certificate) {
  json j;
  j["value"] = hr.value;
  j["primal"] = hr.primal;
  j["dual"] = hr.dual;
  j["gap"] = hr.gap;
  j["status"] = hr.status == SolveStatus::Optimal ? "optimal" : "max_iter";
  j["newton_iters"] = hr.newton_iters;
  if (certificate) {
    j["h_opt"] = matrix_to_json(hr.h_opt);
    json duals = json::array();
    for (const auto& y : hr.dual_y) duals.push_back(matrix_to_json(y));
    j["dual_y"] = std::move(duals);
  }
  return j;
}

json verdict_to_json(const IncompatVerdict& v, bool certificate) {
  json j;
  j["verdict"] = v.incompatible ? "incompatible" : "inconclusive";
  j["height"] = v.height;
  j["threshold"] = v.threshold;
  j["margin"] = v.margin;
  j["boundary"] = v.boundary;
  j["ells"] = v.ells;
  j["certificate"] = height_result_to_json(v.certificate, certificate);
  return j;
}

std::vector<Povm> load_povms(const std::vector<std::string>& paths, double psd_tol) {
  std::vector<Povm> out;
  for (const auto& path : paths) out.push_back(load_povm(path, psd_tol));
  return out;
}

ComplexMatrix common_rho(const std::vector<Povm>& povms, const std::string& source) {
  if (povms.empty()) throw BadParameterError("no POVM files given");
  return parse_rho_source(source, povms[0].dim);
}

Eigen::Vector3d parse_axis_token(const std::string& token) {
  if (token == "x") return Eigen::Vector3d::UnitX();
  if (token == "y") return Eigen::Vector3d::UnitY();
  if (token == "z") return Eigen::Vector3d::UnitZ();
  std::stringstream ss(token);
  Eigen::Vector3d v;
  char comma = 0;
  if (!(ss >> v.x() >> comma >> v.y() >> comma >> v.z())) {
    throw BadParameterError("cannot parse axis '" + token + "'");
  }
  const double norm = v.norm();
  if (norm < 1e-12) throw BadParameterError("axis must be nonzero");
  return v / norm;
}

std::vector<Eigen::Vector3d> parse_axes_spec(const std::string& spec, std::size_t count) {
  std::vector<Eigen::Vector3d> axes;
  if (spec == "trine") {
    for (const auto& n : trine_axes()) axes.push_back(n);
  } else if (spec == "orthogonal") {
    const auto trine = trine_axes();
    axes = {Eigen::Vector3d::UnitZ(), trine[1], trine[2]};
  } else {
    std::stringstream ss(spec);
    std::string token;
    while (std::getline(ss, token, ';')) {
      if (!token.empty()) axes.push_back(parse_axis_token(token));
    }
  }
  if (count != 0 && axes.size() != count) {
    throw BadParameterError("expected " + std::to_string(count) + " axes in '" + spec + "'");
  }
  return axes;
}

std::vector<double> parse_double_list(const std::string& spec) {
  std::vector<double> out;
  std::stringstream ss(spec);
  std::string token;
  while (std::getline(ss, token, ',')) {
    if (!token.empty()) out.push_back(std::stod(token));
  }
  return out;
}

void write_scan(const CliConfig& config, const ScanResult& scan, const std::string& out_path) {
  const std::string csv = to_csv(scan);
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) throw Error("cannot write file: " + out_path);
    out << csv;
    return;
  }
  if (config.format == "json") {
    json j;
    j["metadata"] = scan.metadata;
    j["csv"] = csv;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << csv;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"POVM post-processing order and incompatibility toolkit"};
  app.require_subcommand(1);

  CliConfig config;
  app.add_option("--format", config.format, "Output format: json, csv or human")
      ->check(CLI::IsMember({"json", "csv", "human"}));
  app.add_option("--lp-tol", config.lp_tol, "LP feasibility tolerance");
  app.add_option("--sdp-gap", config.sdp_gap, "SDP absolute duality-gap target");
  app.add_option("--psd-tol", config.psd_tol, "Effect PSD tolerance");

  std::string rho_source = "maximally-mixed";
  bool with_certificate = false;
  bool truncated = false;
  bool use_pgm = false;
  bool with_oracle = false;
  std::vector<std::string> files;
  std::string file_a, file_b, out_path;
  std::string axes_spec, etas_spec, bloch_spec = "0,0,0";
  int scan_dim = 2, scan_grid = 101, planar_m = 2;
  double eta2 = 0.5, eta3 = 0.5;

  auto* validate_cmd = app.add_subcommand("validate", "Check a POVM file");
  validate_cmd->add_option("file", file_a)->required();

  auto* simplify_cmd = app.add_subcommand("simplify", "Merge collinear effects");
  simplify_cmd->add_option("file", file_a)->required();
  simplify_cmd->add_option("--out", out_path, "Write the simple representative here");

  auto* order_cmd = app.add_subcommand("order", "Classify the post-processing relation");
  order_cmd->add_option("file_a", file_a)->required();
  order_cmd->add_option("file_b", file_b)->required();

  auto* fisher_cmd = app.add_subcommand("fisher", "Fisher information matrix of a POVM");
  fisher_cmd->add_option("file", file_a)->required();
  fisher_cmd->add_option("--rho", rho_source);
  fisher_cmd->add_flag("--truncated", truncated);

  auto* height_cmd = app.add_subcommand("height", "Height of the Fisher images");
  height_cmd->add_option("files", files)->required()->expected(-1);
  height_cmd->add_option("--rho", rho_source);
  height_cmd->add_flag("--certificate", with_certificate);

  auto* incompat_cmd = app.add_subcommand("incompat", "Incompatibility criterion");
  incompat_cmd->add_option("files", files)->required()->expected(-1);
  incompat_cmd->add_option("--rho", rho_source);
  incompat_cmd->add_flag("--pgm", use_pgm, "Use the PGM lower bound instead of the SDP");
  incompat_cmd->add_flag("--certificate", with_certificate);

  auto* joint_cmd = app.add_subcommand("joint", "Joint-measurement feasibility");
  joint_cmd->add_option("files", files)->required()->expected(-1);
  joint_cmd->add_option("--out", out_path, "Write the joint POVM here when feasible");

  auto* ft_cmd = app.add_subcommand("ft", "Fermat-Torricelli triple condition");
  ft_cmd->add_option("--etas", etas_spec, "Three sharpness values a,b,c")->required();
  ft_cmd->add_option("--axes", axes_spec, "trine | orthogonal | 'x;y;z' | triples")
      ->required();

  auto* bound_cmd = app.add_subcommand("outcome-bound", "Joint-outcome lower bound");
  bound_cmd->add_option("files", files)->required()->expected(-1);
  bound_cmd->add_option("--rho", rho_source);

  auto* scan_cmd = app.add_subcommand("scan", "Parameter-region scans (CSV)");
  scan_cmd->require_subcommand(1);
  auto* scan_fourier_cmd = scan_cmd->add_subcommand("fourier");
  scan_fourier_cmd->add_option("--dim", scan_dim);
  scan_fourier_cmd->add_option("--grid", scan_grid);
  scan_fourier_cmd->add_flag("--oracle", with_oracle);
  scan_fourier_cmd->add_option("--out", out_path);
  auto* scan_pair_cmd = scan_cmd->add_subcommand("qubit-pair");
  scan_pair_cmd->add_option("--axes", axes_spec)->required();
  scan_pair_cmd->add_option("--bloch", bloch_spec);
  scan_pair_cmd->add_option("--grid", scan_grid);
  scan_pair_cmd->add_flag("--oracle", with_oracle);
  scan_pair_cmd->add_option("--out", out_path);
  auto* scan_triple_cmd = scan_cmd->add_subcommand("qubit-triple");
  scan_triple_cmd->add_option("--axes", axes_spec)->required();
  scan_triple_cmd->add_option("--bloch", bloch_spec);
  scan_triple_cmd->add_option("--eta2", eta2);
  scan_triple_cmd->add_option("--eta3", eta3);
  scan_triple_cmd->add_option("--grid", scan_grid);
  scan_triple_cmd->add_flag("--oracle", with_oracle);
  scan_triple_cmd->add_option("--out", out_path);
  auto* scan_planar_cmd = scan_cmd->add_subcommand("planar");
  scan_planar_cmd->add_option("--m", planar_m, "Number of planar measurements");
  scan_planar_cmd->add_option("--grid", scan_grid);
  scan_planar_cmd->add_option("--out", out_path);

  for (CLI::App* sub : {validate_cmd, simplify_cmd, order_cmd, fisher_cmd, height_cmd,
                        incompat_cmd, joint_cmd, ft_cmd, bound_cmd, scan_cmd,
                        scan_fourier_cmd, scan_pair_cmd, scan_triple_cmd,
                        scan_planar_cmd}) {
    sub->fallthrough();
  }

  CLI11_PARSE(app, argc, argv);

  try {
    HeightOptions height_options;
    height_options.gap_abs = config.sdp_gap;

    if (validate_cmd->parsed()) {
      const Povm p = load_povm(file_a, config.psd_tol);
      json j;
      j["valid"] = true;
      j["dim"] = p.dim;
      j["outcomes"] = p.size();
      j["labels"] = p.labels;
      emit(config, j);
    } else if (simplify_cmd->parsed()) {
      const Povm p = load_povm(file_a, config.psd_tol);
      const SimplePovm simple = simplify(p);
      if (!out_path.empty()) save_povm(simple.povm, out_path);
      json j = povm_to_json(simple.povm);
      j["ell"] = simple.ell;
      emit(config, j);
    } else if (order_cmd->parsed()) {
      const Povm a = load_povm(file_a, config.psd_tol);
      const Povm b = load_povm(file_b, config.psd_tol);
      const OrderVerdict v = classify_order(a, b, config.lp_tol);
      json j;
      j["relation"] = order_name(v.relation);
      j["feasibility_tol"] = v.feasibility_tol;
      j["residual_tol"] = v.residual_tol;
      if (v.forward) {
        json mu = json::array();
        for (Eigen::Index i = 0; i < v.forward->rows(); ++i) {
          json row = json::array();
          for (Eigen::Index c = 0; c < v.forward->cols(); ++c) row.push_back((*v.forward)(i, c));
          mu.push_back(std::move(row));
        }
        j["witness_forward"] = std::move(mu);
      }
      if (v.backward) j["witness_backward_found"] = true;
      emit(config, j);
    } else if (fisher_cmd->parsed()) {
      const Povm p = load_povm(file_a, config.psd_tol);
      const ComplexMatrix rho = parse_rho_source(rho_source, p.dim);
      const FisherMatrix f = truncated ? apply_truncated(rho, p)
                                       : apply(MorphismSpec::fisher(rho), p);
      json j;
      j["kind"] = morphism_name(f.kind);
      j["dim"] = f.matrix.rows();
      j["trace"] = f.matrix.trace().real();
      j["skipped_terms"] = f.skipped_terms;
      j["matrix"] = matrix_to_json(f.matrix);
      emit(config, j);
    } else if (height_cmd->parsed()) {
      const std::vector<Povm> povms = load_povms(files, config.psd_tol);
      const ComplexMatrix rho = common_rho(povms, rho_source);
      const MorphismSpec spec = MorphismSpec::fisher(rho);
      std::vector<ComplexMatrix> images;
      for (const auto& p : povms) images.push_back(apply(spec, p).matrix);
      const HeightResult hr = height(images, height_options);
      json j = height_result_to_json(hr, with_certificate);
      j["n"] = images.size();
      emit(config, j);
    } else if (incompat_cmd->parsed()) {
      const std::vector<Povm> povms = load_povms(files, config.psd_tol);
      const ComplexMatrix rho = common_rho(povms, rho_source);
      const IncompatVerdict v = use_pgm ? pgm_criterion(povms, rho)
                                        : zhu_criterion(povms, rho, height_options);
      emit(config, verdict_to_json(v, with_certificate));
    } else if (joint_cmd->parsed()) {
      const std::vector<Povm> povms = load_povms(files, config.psd_tol);
      const JointResult r = joint_feasibility_detailed(povms);
      json j;
      j["feasible"] = bool(r.joint);
      j["margin"] = r.margin;
      j["gap"] = r.gap;
      if (r.joint) {
        j["outcomes"] = r.joint->size();
        if (!out_path.empty()) save_povm(*r.joint, out_path);
      }
      emit(config, j);
    } else if (ft_cmd->parsed()) {
      const std::vector<double> etas = parse_double_list(etas_spec);
      if (etas.size() != 3) throw BadParameterError("--etas needs three values");
      const std::vector<Eigen::Vector3d> axes = parse_axes_spec(axes_spec, 3);
      const FTAnalysis ft = ft_condition({QubitDichotomic{etas[0], axes[0]},
                                          QubitDichotomic{etas[1], axes[1]},
                                          QubitDichotomic{etas[2], axes[2]}});
      json j;
      j["compatible"] = ft.compatible;
      j["total_distance"] = ft.total_distance;
      j["ft_point"] = {ft.ft_point.x(), ft.ft_point.y(), ft.ft_point.z()};
      json pts = json::array();
      for (const auto& p : ft.points) pts.push_back({p.x(), p.y(), p.z()});
      j["points"] = std::move(pts);
      j["vertex_optimum"] = ft.vertex_optimum;
      j["iterations"] = ft.iterations;
      emit(config, j);
    } else if (bound_cmd->parsed()) {
      const std::vector<Povm> povms = load_povms(files, config.psd_tol);
      const ComplexMatrix rho = common_rho(povms, rho_source);
      json j;
      j["outcome_lower_bound"] = joint_outcome_bound(povms, rho, height_options);
      emit(config, j);
    } else if (scan_cmd->parsed()) {
      ScanResult scan;
      if (scan_fourier_cmd->parsed()) {
        scan = scan_fourier(scan_dim, scan_grid, with_oracle);
      } else if (scan_pair_cmd->parsed()) {
        const std::vector<Eigen::Vector3d> axes = parse_axes_spec(axes_spec, 2);
        const std::vector<double> v = parse_double_list(bloch_spec);
        if (v.size() != 3) throw BadParameterError("--bloch needs vx,vy,vz");
        scan = scan_qubit_pair(axes[0], axes[1], Eigen::Vector3d(v[0], v[1], v[2]),
                               scan_grid, with_oracle);
      } else if (scan_triple_cmd->parsed()) {
        const std::vector<Eigen::Vector3d> axes = parse_axes_spec(axes_spec, 3);
        const std::vector<double> v = parse_double_list(bloch_spec);
        if (v.size() != 3) throw BadParameterError("--bloch needs vx,vy,vz");
        scan = scan_qubit_triple({axes[0], axes[1], axes[2]},
                                 Eigen::Vector3d(v[0], v[1], v[2]), eta2, eta3,
                                 scan_grid, with_oracle);
      } else {
        scan = scan_planar(planar_m, scan_grid);
      }
      write_scan(config, scan, out_path);
    }
  } catch (const SolverError& e) {
    std::cerr << "solver failure: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

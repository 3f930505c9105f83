#include "povmorder/io.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "povmorder/scenarios.hpp"

namespace povmorder {

using nlohmann::json;

json matrix_to_json(const ComplexMatrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      row.push_back({m(i, j).real(), m(i, j).imag()});
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

ComplexMatrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) {
    throw ValidationError("matrix JSON must be a non-empty array of rows");
  }
  const auto rows = static_cast<Eigen::Index>(j.size());
  const auto cols = static_cast<Eigen::Index>(j.at(0).size());
  ComplexMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const json& row = j.at(static_cast<std::size_t>(i));
    if (static_cast<Eigen::Index>(row.size()) != cols) {
      throw ValidationError("matrix JSON rows have inconsistent lengths");
    }
    for (Eigen::Index c = 0; c < cols; ++c) {
      const json& entry = row.at(static_cast<std::size_t>(c));
      if (entry.is_number()) {
        m(i, c) = Complex(entry.get<double>(), 0.0);
      } else if (entry.is_array() && entry.size() == 2) {
        m(i, c) = Complex(entry.at(0).get<double>(), entry.at(1).get<double>());
      } else {
        throw ValidationError("matrix entries must be numbers or [re, im] pairs");
      }
    }
  }
  return m;
}

json povm_to_json(const Povm& p) {
  json j;
  j["dim"] = p.dim;
  json effects = json::array();
  for (const auto& e : p.effects) effects.push_back(matrix_to_json(e));
  j["effects"] = std::move(effects);
  j["labels"] = p.labels;
  return j;
}

Povm povm_from_json(const json& j, double psd_tol) {
  if (!j.contains("effects")) throw ValidationError("POVM JSON lacks \"effects\"");
  std::vector<ComplexMatrix> effects;
  for (const auto& ej : j.at("effects")) effects.push_back(matrix_from_json(ej));
  std::vector<int> labels;
  if (j.contains("labels")) labels = j.at("labels").get<std::vector<int>>();
  if (j.contains("dim")) {
    const int dim = j.at("dim").get<int>();
    for (std::size_t x = 0; x < effects.size(); ++x) {
      if (effects[x].rows() != dim || effects[x].cols() != dim) {
        throw ValidationError(
            "effect " + std::to_string(x) + " does not match declared dim",
            static_cast<int>(x));
      }
    }
  }
  return validate_povm(std::move(effects), std::move(labels), psd_tol);
}

Povm load_povm(const std::string& path, double psd_tol) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ValidationError("malformed JSON in " + path + ": " + e.what());
  }
  return povm_from_json(j, psd_tol);
}

void save_povm(const Povm& p, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write file: " + path);
  out << povm_to_json(p).dump(2) << "\n";
}

ComplexMatrix parse_rho_source(const std::string& source, int dim) {
  if (source.empty() || source == "maximally-mixed") {
    return ComplexMatrix::Identity(dim, dim) / double(dim);
  }
  if (source.rfind("bloch:", 0) == 0) {
    if (dim != 2) {
      throw BadParameterError("Bloch rho source requires dimension 2");
    }
    std::stringstream ss(source.substr(6));
    Eigen::Vector3d v;
    char comma = 0;
    if (!(ss >> v.x() >> comma >> v.y() >> comma >> v.z())) {
      throw BadParameterError("expected bloch:vx,vy,vz");
    }
    return bloch_state(clamp_bloch(v));
  }
  std::ifstream in(source);
  if (!in) throw ValidationError("cannot open rho file: " + source);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ValidationError("malformed JSON in " + source + ": " + e.what());
  }
  const ComplexMatrix rho = matrix_from_json(j.is_object() ? j.at("matrix") : j);
  if (rho.rows() != dim) {
    throw DimensionError("rho dimension does not match the measurements");
  }
  return rho;
}

}  // namespace povmorder

#ifndef POVMORDER_IO_HPP
#define POVMORDER_IO_HPP

#include <string>

#include <nlohmann/json_fwd.hpp>

#include "povmorder/povm.hpp"

// POVM file format shared with the CLI:
//   {"dim": d, "effects": [ [[ [re,im], ... ]], ... ], "labels": [...]}
// with matrices row-major; "labels" is optional and defaults to 0..n-1.

namespace povmorder {

nlohmann::json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const nlohmann::json& j);

nlohmann::json povm_to_json(const Povm& p);
Povm povm_from_json(const nlohmann::json& j, double psd_tol = tol::psd);

Povm load_povm(const std::string& path, double psd_tol = tol::psd);
void save_povm(const Povm& p, const std::string& path);

// rho sources accepted by the CLI: "maximally-mixed", "bloch:vx,vy,vz"
// (d = 2, clamped inside the Bloch ball), or a path to a JSON matrix file.
ComplexMatrix parse_rho_source(const std::string& source, int dim);

}  // namespace povmorder

#endif  // POVMORDER_IO_HPP

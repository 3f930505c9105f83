// pybind11 bindings exposing the main operations: POVM construction and
// validation, post-processing order, Fisher-type morphisms, the height SDP,
// incompatibility criteria, joint feasibility, FT analysis and the scans.

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "povmorder/incompat.hpp"
#include "povmorder/io.hpp"
#include "povmorder/postproc.hpp"
#include "povmorder/scenarios.hpp"

namespace py = pybind11;
using namespace povmorder;

namespace {

ComplexMatrix default_rho(int dim, const std::optional<ComplexMatrix>& rho) {
  if (rho) return *rho;
  return ComplexMatrix::Identity(dim, dim) / double(dim);
}

MorphismSpec make_spec(const std::string& kind, int dim,
                       const std::optional<ComplexMatrix>& rho,
                       const std::optional<ComplexVector>& psi) {
  if (kind == "fisher") return MorphismSpec::fisher(default_rho(dim, rho));
  if (kind == "fisher_truncated") {
    return MorphismSpec::fisher_truncated(default_rho(dim, rho));
  }
  if (kind == "psi_map") {
    if (!psi) throw BadParameterError("psi_map needs a psi vector");
    return MorphismSpec::psi_map(*psi);
  }
  if (kind == "diag_map") return MorphismSpec::diag_map(dim);
  if (kind == "square_map") return MorphismSpec::square_map(dim);
  if (kind == "trace_map") return MorphismSpec::trace_map(dim);
  throw BadParameterError("unknown morphism kind: " + kind);
}

std::array<QubitDichotomic, 3> triple_from(const std::vector<double>& etas,
                                           const std::vector<Eigen::Vector3d>& axes) {
  if (etas.size() != 3 || axes.size() != 3) {
    throw BadParameterError("ft_condition needs three sharpness values and axes");
  }
  return {QubitDichotomic{etas[0], axes[0].normalized()},
          QubitDichotomic{etas[1], axes[1].normalized()},
          QubitDichotomic{etas[2], axes[2].normalized()}};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "POVM post-processing order, Fisher information maps and "
            "incompatibility detection";

  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<SolverError>(m, "SolverFailure", PyExc_RuntimeError);

  py::class_<Povm>(m, "Povm")
      .def(py::init([](const std::vector<ComplexMatrix>& effects,
                       std::optional<std::vector<int>> labels) {
             return validate_povm(effects, labels.value_or(std::vector<int>{}));
           }),
           py::arg("effects"), py::arg("labels") = py::none())
      .def_readonly("dim", &Povm::dim)
      .def_readonly("effects", &Povm::effects)
      .def_readonly("labels", &Povm::labels)
      .def("__len__", &Povm::size)
      .def("__repr__", [](const Povm& p) {
        return "<Povm dim=" + std::to_string(p.dim) + " outcomes=" +
               std::to_string(p.size()) + ">";
      });

  py::class_<HeightResult>(m, "HeightResult")
      .def_readonly("value", &HeightResult::value)
      .def_readonly("h_opt", &HeightResult::h_opt)
      .def_readonly("dual_y", &HeightResult::dual_y)
      .def_readonly("primal", &HeightResult::primal)
      .def_readonly("dual", &HeightResult::dual)
      .def_readonly("gap", &HeightResult::gap)
      .def_property_readonly("status", [](const HeightResult& r) {
        return r.status == SolveStatus::Optimal ? "optimal" : "max_iter";
      });

  py::class_<IncompatVerdict>(m, "IncompatVerdict")
      .def_readonly("incompatible", &IncompatVerdict::incompatible)
      .def_readonly("height", &IncompatVerdict::height)
      .def_readonly("threshold", &IncompatVerdict::threshold)
      .def_readonly("margin", &IncompatVerdict::margin)
      .def_readonly("boundary", &IncompatVerdict::boundary)
      .def_readonly("ells", &IncompatVerdict::ells)
      .def_readonly("certificate", &IncompatVerdict::certificate)
      .def("__repr__", [](const IncompatVerdict& v) {
        return std::string("<IncompatVerdict ") +
               (v.incompatible ? "incompatible" : "inconclusive") +
               " height=" + std::to_string(v.height) + ">";
      });

  py::class_<FTAnalysis>(m, "FTAnalysis")
      .def_readonly("ft_point", &FTAnalysis::ft_point)
      .def_readonly("total_distance", &FTAnalysis::total_distance)
      .def_readonly("compatible", &FTAnalysis::compatible)
      .def_readonly("vertex_optimum", &FTAnalysis::vertex_optimum)
      .def_property_readonly("points", [](const FTAnalysis& a) {
        return std::vector<Eigen::Vector3d>(a.points.begin(), a.points.end());
      });

  // --- povm ------------------------------------------------------------
  m.def("simplify", [](const Povm& p) {
    const SimplePovm s = simplify(p);
    return py::make_tuple(s.povm, s.ell);
  });
  m.def("simple_outcome_count", &simple_outcome_count);
  m.def("make_von_neumann", &make_von_neumann);
  m.def("make_fourier_pair", &make_fourier_pair);
  m.def("make_qubit_dichotomic", [](double eta, const Eigen::Vector3d& axis) {
    return make_qubit_dichotomic(eta, axis.normalized());
  });
  m.def("make_trine", &make_trine);
  m.def("make_planar", &make_planar);
  m.def("make_sic_qubit", &make_sic_qubit);
  m.def("make_mub_complete_qubit", &make_mub_complete_qubit);
  m.def("make_anticommuting_family", &make_anticommuting_family);
  m.def("anticommuting_operators", &anticommuting_operators);
  m.def("noisy_mixture", &noisy_mixture);
  m.def("tensor_povm", &tensor_povm);
  m.def("random_povm", &random_povm);
  m.def("random_state", &random_state);
  m.def("fourier_matrix", &fourier_matrix);
  m.def("bloch_state", &bloch_state);
  m.def("trine_axes", [] {
    const auto axes = trine_axes();
    return std::vector<Eigen::Vector3d>(axes.begin(), axes.end());
  });

  // --- postproc ----------------------------------------------------------
  m.def(
      "check_postprocessing",
      [](const Povm& a, const Povm& b) -> std::optional<RealMatrix> {
        return check_postprocessing(a, b);
      },
      py::arg("a"), py::arg("b"));
  m.def("classify_order", [](const Povm& a, const Povm& b) {
    return std::string(order_name(classify_order(a, b).relation));
  });
  m.def("concat_mix", &concat_mix);

  // --- morphisms -----------------------------------------------------------
  m.def(
      "apply_morphism",
      [](const std::string& kind, const Povm& p,
         const std::optional<ComplexMatrix>& rho,
         const std::optional<ComplexVector>& psi) {
        return apply(make_spec(kind, p.dim, rho, psi), p).matrix;
      },
      py::arg("kind"), py::arg("povm"), py::arg("rho") = py::none(),
      py::arg("psi") = py::none());
  m.def(
      "fisher",
      [](const Povm& p, const std::optional<ComplexMatrix>& rho, bool truncated) {
        const ComplexMatrix state = default_rho(p.dim, rho);
        return truncated ? apply_truncated(state, p).matrix
                         : apply(MorphismSpec::fisher(state), p).matrix;
      },
      py::arg("povm"), py::arg("rho") = py::none(), py::arg("truncated") = false);
  m.def(
      "nonorder_witness",
      [](const std::string& kind, const Povm& a, const Povm& b,
         const std::optional<ComplexMatrix>& rho,
         const std::optional<ComplexVector>& psi) {
        return std::string(
            sign_class_name(nonorder_witness(make_spec(kind, a.dim, rho, psi), a, b)));
      },
      py::arg("kind"), py::arg("a"), py::arg("b"), py::arg("rho") = py::none(),
      py::arg("psi") = py::none());
  m.def("two_design_image", &two_design_image);
  m.def("two_design_reference", &two_design_reference);

  // --- dominance -------------------------------------------------------
  m.def("height_two", &height_two);
  m.def("height_sdp",
        [](const std::vector<ComplexMatrix>& xs) { return height_sdp(xs); });
  m.def("height", [](const std::vector<ComplexMatrix>& xs) { return height(xs); });
  m.def("pgm_lower_bound", &pgm_lower_bound);
  m.def("pgm_measurement", &pgm_measurement);

  // --- incompat --------------------------------------------------------
  m.def(
      "zhu_criterion",
      [](const std::vector<Povm>& povms, const std::optional<ComplexMatrix>& rho) {
        if (povms.empty()) throw BadParameterError("need at least one measurement");
        return zhu_criterion(povms, default_rho(povms[0].dim, rho));
      },
      py::arg("measurements"), py::arg("rho") = py::none());
  m.def(
      "pgm_criterion",
      [](const std::vector<Povm>& povms, const std::optional<ComplexMatrix>& rho) {
        if (povms.empty()) throw BadParameterError("need at least one measurement");
        return pgm_criterion(povms, default_rho(povms[0].dim, rho));
      },
      py::arg("measurements"), py::arg("rho") = py::none());
  m.def(
      "joint_outcome_bound",
      [](const std::vector<Povm>& povms, const std::optional<ComplexMatrix>& rho) {
        if (povms.empty()) throw BadParameterError("need at least one measurement");
        return joint_outcome_bound(povms, default_rho(povms[0].dim, rho));
      },
      py::arg("measurements"), py::arg("rho") = py::none());
  m.def("joint_feasibility",
        [](const std::vector<Povm>& povms) -> std::optional<Povm> {
          return joint_feasibility_detailed(povms).joint;
        });
  m.def(
      "ft_condition",
      [](const std::vector<double>& etas, const std::vector<Eigen::Vector3d>& axes) {
        return ft_condition(triple_from(etas, axes));
      },
      py::arg("etas"), py::arg("axes"));
  m.def("anticommuting_criterion", [](int g, const std::vector<double>& s) {
    const AnticommutingVerdict v = anticommuting_criterion(g, s);
    py::dict out;
    out["g"] = v.g;
    out["dim"] = v.dim;
    out["noise_norm2"] = v.noise_norm2;
    out["analytic_incompatible"] = v.analytic_incompatible;
    out["trivial"] = v.trivial;
    out["sdp"] = v.sdp;
    return out;
  });

  // --- scenarios (CSV output per the file contract) -------------------------
  m.def(
      "scan_fourier",
      [](int d, int grid, bool oracle) { return to_csv(scan_fourier(d, grid, oracle)); },
      py::arg("d"), py::arg("grid") = 101, py::arg("oracle") = false);
  m.def(
      "scan_qubit_pair",
      [](const Eigen::Vector3d& n1, const Eigen::Vector3d& n2,
         const Eigen::Vector3d& bloch, int grid, bool oracle) {
        return to_csv(
            scan_qubit_pair(n1.normalized(), n2.normalized(), bloch, grid, oracle));
      },
      py::arg("n1"), py::arg("n2"), py::arg("bloch") = Eigen::Vector3d(0, 0, 0),
      py::arg("grid") = 101, py::arg("oracle") = false);
  m.def(
      "scan_qubit_triple",
      [](const std::vector<Eigen::Vector3d>& axes, const Eigen::Vector3d& bloch,
         double eta2, double eta3, int grid, bool oracle) {
        if (axes.size() != 3) throw BadParameterError("need three axes");
        return to_csv(scan_qubit_triple(
            {axes[0].normalized(), axes[1].normalized(), axes[2].normalized()}, bloch,
            eta2, eta3, grid, oracle));
      },
      py::arg("axes"), py::arg("bloch") = Eigen::Vector3d(0, 0, 0),
      py::arg("eta2") = 0.5, py::arg("eta3") = 0.5, py::arg("grid") = 101,
      py::arg("oracle") = false);
  m.def(
      "scan_planar",
      [](int planar_m, int grid) { return to_csv(scan_planar(planar_m, grid)); },
      py::arg("m"), py::arg("grid") = 101);

  // --- io ----------------------------------------------------------------
  m.def("load_povm", [](const std::string& path) { return load_povm(path); });
  m.def("save_povm", &save_povm);
}

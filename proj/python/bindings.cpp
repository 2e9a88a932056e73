#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "triwell/fock.hpp"
#include "triwell/haar.hpp"
#include "triwell/measures.hpp"
#include "triwell/protocol.hpp"
#include "triwell/qubitmap.hpp"
#include "triwell/su3.hpp"

namespace py = pybind11;
using namespace triwell;

namespace {

py::dict expansion_to_dict(const SlaterExpansion& expansion) {
    py::dict out;
    for (const auto& [key, value] : expansion.coefficients())
        if (value != Complex(0.0)) out[py::make_tuple(key[0], key[1], key[2])] = value;
    return out;
}

SlaterExpansion expansion_from_dict(const py::dict& d) {
    SlaterExpansion expansion;
    for (const auto& item : d) {
        auto key = item.first.cast<std::array<int, 3>>();
        expansion.set(key[0], key[1], key[2], item.second.cast<Complex>());
    }
    return expansion;
}

EulerAngles angles_from_list(const std::array<double, 8>& theta) {
    EulerAngles a;
    a.theta = theta;
    return a;
}

}  // namespace

PYBIND11_MODULE(_triwell, m) {
    m.doc() = "Entanglement generation for indistinguishable fermions in tunnel-coupled wells";

    py::class_<PureState>(m, "PureState")
        .def(py::init<int, int>(), py::arg("n_particles"), py::arg("dim_single"))
        .def_property_readonly("n_particles", &PureState::n_particles)
        .def_property_readonly("dim_single", &PureState::dim_single)
        .def_property_readonly("amplitudes",
                               [](const PureState& s) { return Vector(s.amplitudes()); })
        .def("amplitude",
             [](const PureState& s, const std::vector<int>& idx) {
                 return s.amplitude(std::span<const int>(idx));
             })
        .def("norm", &PureState::norm)
        .def("normalized", &PureState::normalized)
        .def("is_antisymmetric", &PureState::is_antisymmetric, py::arg("tol") = kAlgebraTol)
        .def("apply_single_particle", &PureState::apply_single_particle);

    py::class_<QubitState>(m, "QubitState")
        .def_readonly("n_qubits", &QubitState::n_qubits)
        .def_readonly("amplitudes", &QubitState::amplitudes);

    m.def("product_state", &product_state, py::arg("indices"), py::arg("d"));
    m.def("slater_determinant", &slater_determinant, py::arg("indices"), py::arg("d"));
    m.def("antisymmetrize", &antisymmetrize);
    m.def("to_slater_expansion",
          [](const PureState& s) { return expansion_to_dict(to_slater_expansion(s)); });
    m.def("from_slater_expansion",
          [](const py::dict& d) { return from_slater_expansion(expansion_from_dict(d)); });
    m.def(
        "reduced_density",
        [](const PureState& s, const std::vector<int>& keep) {
            return reduced_density(s, keep).entries();
        },
        py::arg("state"), py::arg("keep"));
    m.def("project_one_per_well", [](const PureState& s) {
        return OnePerWellProjector(s.dim_single(), s.n_particles()).apply(s);
    });

    m.def("concurrence2", py::overload_cast<const QubitState&>(&concurrence2));
    m.def("concurrence2", py::overload_cast<const PureState&>(&concurrence2));
    m.def("concurrence2", py::overload_cast<const Vector&, int, int>(&concurrence2),
          py::arg("amplitudes"), py::arg("dim_a"), py::arg("dim_b"));
    m.def("concurrenceN", &concurrenceN);
    m.def("tangle3", &tangle3);
    m.def("tangle3_hyperdeterminant", &tangle3_hyperdeterminant);
    m.def("mixed_concurrence2", &mixed_concurrence2);
    m.def("fermionic_alpha", &fermionic_alpha, py::arg("n_particles"), py::arg("d"));
    m.def("fermionic_concurrence", &fermionic_concurrence);
    m.def("fermionic_tangle",
          [](const py::dict& d) { return fermionic_tangle(expansion_from_dict(d)); });
    m.def("fermionic_tangle", [](const PureState& s) {
        return fermionic_tangle(to_slater_expansion(s));
    });

    py::class_<EtaParams>(m, "EtaParams")
        .def(py::init([](Complex e1, Complex e2, Complex e3) {
                 return EtaParams{e1, e2, e3};
             }),
             py::arg("eta1"), py::arg("eta2"), py::arg("eta3"))
        .def_readonly("eta1", &EtaParams::eta1)
        .def_readonly("eta2", &EtaParams::eta2)
        .def_readonly("eta3", &EtaParams::eta3)
        .def("d1", &EtaParams::d1)
        .def("d2", &EtaParams::d2)
        .def("d3", &EtaParams::d3)
        .def("detection_probability", &EtaParams::detection_probability);

    py::class_<ZParams>(m, "ZParams")
        .def_readonly("z1", &ZParams::z1)
        .def_readonly("z2", &ZParams::z2)
        .def_readonly("z3", &ZParams::z3)
        .def_readonly("z4", &ZParams::z4)
        .def_readonly("z5", &ZParams::z5)
        .def_readonly("z6", &ZParams::z6)
        .def("w_up", &ZParams::w_up)
        .def("w_dn", &ZParams::w_dn);

    m.def("eta_params",
          [](const Eigen::Matrix3cd& t) { return EtaParams::of(TunnelingMatrix(t)); });
    m.def("z_params", [](const Eigen::Matrix2cd& s) { return ZParams::of(SpinFlip(s)); });

    py::class_<ProtocolOutcome>(m, "ProtocolOutcome")
        .def_readonly("probability", &ProtocolOutcome::probability)
        .def_readonly("final_state", &ProtocolOutcome::final_state)
        .def_readonly("eta", &ProtocolOutcome::eta)
        .def_property_readonly("classification",
                               [](const ProtocolOutcome& o) {
                                   return std::string(to_string(o.classification));
                               })
        .def_property_readonly("slater",
                               [](const ProtocolOutcome& o) {
                                   return expansion_to_dict(o.final_expansion);
                               })
        .def_property_readonly("c3f",
                               [](const ProtocolOutcome& o) { return o.measures.c_nf; })
        .def_property_readonly("tau_f",
                               [](const ProtocolOutcome& o) { return o.measures.tau_f; });

    py::class_<TwoWellOutcome>(m, "TwoWellOutcome")
        .def_readonly("probability", &TwoWellOutcome::probability)
        .def_readonly("final_state", &TwoWellOutcome::final_state)
        .def_property_readonly("c2f",
                               [](const TwoWellOutcome& o) { return o.measures.c_nf; })
        .def_property_readonly("c2_frozen",
                               [](const TwoWellOutcome& o) { return o.measures.c2; });

    py::class_<ScanReport>(m, "ScanReport")
        .def_readonly("samples", &ScanReport::samples)
        .def_readonly("seed", &ScanReport::seed)
        .def_readonly("max_tau_f_other", &ScanReport::max_tau_f_other)
        .def("ok", &ScanReport::ok)
        .def_property_readonly("counts", [](const ScanReport& r) {
            py::dict d;
            d["zero"] = r.count_zero;
            d["slater"] = r.count_slater;
            d["w_type"] = r.count_w;
            d["ghz_type"] = r.count_ghz;
            d["other"] = r.count_other;
            return d;
        });

    m.def("initial_state_three_well", &initial_state_three_well);
    m.def(
        "evolve",
        [](const Eigen::Matrix3cd& t, const Eigen::Matrix2cd& s) {
            return evolve(TunnelingMatrix(t), SpinFlip(s));
        },
        py::arg("t"), py::arg("sigma") = Eigen::Matrix2cd::Identity());
    m.def(
        "analytic_projected_state",
        [](const Eigen::Matrix3cd& t, const Eigen::Matrix2cd& s) {
            ProjectedState p = analytic_projected_state(TunnelingMatrix(t), SpinFlip(s));
            return py::make_tuple(p.state, p.z, p.eta);
        },
        py::arg("t"), py::arg("sigma") = Eigen::Matrix2cd::Identity());
    m.def(
        "run_protocol",
        [](const Eigen::Matrix3cd& t, const Eigen::Matrix2cd& s) {
            return run_protocol(TunnelingMatrix(t), SpinFlip(s));
        },
        py::arg("t"), py::arg("sigma") = Eigen::Matrix2cd::Identity());
    m.def("classify_state", [](const py::dict& d) {
        return std::string(to_string(classify_state(expansion_from_dict(d))));
    });
    m.def("w_condition_check",
          [](const Eigen::Matrix2cd& s) { return w_condition_check(SpinFlip(s)); });
    m.def("w_concurrence_closed_form", &w_concurrence_closed_form);
    m.def("two_well_protocol", &two_well_protocol, py::arg("p"));
    m.def("ghz_no_go_scan", &ghz_no_go_scan, py::arg("n_samples"), py::arg("seed") = 0);

    m.def("gell_mann", &gell_mann, py::arg("l"));
    m.def("euler_to_matrix", [](const std::array<double, 8>& theta) {
        return euler_to_matrix(angles_from_list(theta)).entries();
    });
    m.def("eta_differences_closed_form", [](const std::array<double, 8>& theta) {
        return eta_differences_closed_form(angles_from_list(theta));
    });
    m.def("solve_equal_coefficients",
          [](double theta2, double theta6) {
              std::vector<std::pair<double, double>> out;
              for (const EqualCoefSolution& s : solve_equal_coefficients(theta2, theta6))
                  out.emplace_back(s.theta4, s.theta);
              return out;
          },
          py::arg("theta2"), py::arg("theta6"));

    py::class_<SymmetricWSolution>(m, "SymmetricWSolution")
        .def_readonly("theta2", &SymmetricWSolution::theta2)
        .def_readonly("theta3", &SymmetricWSolution::theta3)
        .def_readonly("theta4", &SymmetricWSolution::theta4)
        .def_property_readonly("branch",
                               [](const SymmetricWSolution& s) {
                                   return s.branch == Cos2Theta3Branch::kPlus ? "plus"
                                                                              : "minus";
                               })
        .def("angles", [](const SymmetricWSolution& s) { return s.angles().theta; });
    m.def("symmetric_solution", &symmetric_solution, py::arg("theta2"));
    m.def("symmetric_matrix_entries", [](const SymmetricWSolution& sol) {
        return symmetric_matrix_entries(sol).entries();
    });

    py::class_<CurvePoint>(m, "CurvePoint")
        .def_readonly("theta2", &CurvePoint::theta2)
        .def_readonly("cos_theta4", &CurvePoint::cos_theta4)
        .def_readonly("p_ab", &CurvePoint::p_ab)
        .def_readonly("p_bc", &CurvePoint::p_bc)
        .def_readonly("p_aa", &CurvePoint::p_aa)
        .def_readonly("p_bb", &CurvePoint::p_bb)
        .def_readonly("P", &CurvePoint::prob);
    m.def("probability_curves", &probability_curves, py::arg("theta2_grid"));
    m.def("default_theta2_grid", &default_theta2_grid, py::arg("n_points") = 2001);

    py::class_<IdentityReport>(m, "IdentityReport")
        .def_readonly("c3f", &IdentityReport::c3f)
        .def_readonly("c3", &IdentityReport::c3)
        .def_readonly("ratio", &IdentityReport::ratio)
        .def_readonly("tau", &IdentityReport::tau)
        .def_readonly("tau_f", &IdentityReport::tau_f)
        .def_readonly("identity_ok", &IdentityReport::identity_ok);
    m.def("freeze", &freeze);
    m.def("freeze_pair", &freeze_pair);
    m.def("verify_measure_identity", &verify_measure_identity);
    m.attr("C3_MAX") = kC3Max;

    m.def("haar_unitary",
          [](int n, std::uint64_t seed) { return haar_unitary(n, seed); },
          py::arg("n"), py::arg("seed"));
}

// Copyright 2026 The superact Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "superact/analysis.hpp"
#include "superact/locc.hpp"
#include "superact/serialize.hpp"
#include "superact/states.hpp"
#include "superact/verify.hpp"

namespace py = pybind11;
using namespace superact;

namespace {

// Raw-matrix helpers address qubits by position: qubit k is ("q", k).
Register positional_register(const Matrix &m) {
    const auto d = static_cast<std::size_t>(m.rows());
    std::size_t n = 0;
    while ((std::size_t{1} << n) < d) ++n;
    if ((std::size_t{1} << n) != d || m.cols() != m.rows()) {
        throw std::invalid_argument("matrix must be square with a power-of-two dimension");
    }
    std::vector<QubitId> qs;
    for (std::size_t k = 0; k < n; ++k) qs.push_back({"q", static_cast<int>(k)});
    return Register(std::move(qs));
}

std::vector<QubitId> positions(const std::vector<int> &idx) {
    std::vector<QubitId> out;
    for (int k : idx) out.push_back({"q", k});
    return out;
}

py::dict run_summary(const LoccScript &script) {
    const RunResult r = run(script);
    py::dict d;
    d["branch_count"] = r.branches.size();
    d["retained_probability"] = r.retained_probability();
    if (script.keep.size() == 2) {
        const PureState target = singlet(script.keep[0], script.keep[1]);
        double worst = 1.0;
        for (const auto &b : r.branches) worst = std::min(worst, fidelity_pure(b.final_state, target));
        d["min_singlet_fidelity"] = worst;
    }
    d["average_state"] = r.average_state().matrix();
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "LOCC simulator for superactivation of bound entanglement";

    py::register_exception<ScriptError>(m, "ScriptError", PyExc_ValueError);
    py::register_exception<CertificateError>(m, "CertificateError", PyExc_ValueError);

    m.attr("ABS_TOL") = kAbsTol;

    m.def(
        "bell_state", [](int i) { return bell_state(BellIndex(i), {"q", 0}, {"q", 1}).amplitudes(); }, py::arg("i"),
        "Amplitudes of Bell state i in the order Psi-, Psi+, Phi+, Phi-.");
    m.def(
        "pauli", [](int i) { return pauli_matrix(PauliIndex(i)); }, py::arg("i"));
    m.def(
        "smolin_density",
        [](const std::string &parties) {
            if (parties.size() != 4) throw std::invalid_argument("need four party letters");
            return smolin_state(parties.substr(0, 1), parties.substr(1, 1), parties.substr(2, 1), parties.substr(3, 1))
                .density()
                .matrix();
        },
        py::arg("parties") = "ABCD");
    m.def("m_density", [] { return m_state().density().matrix(); }, "Dense M on [A0, A1, B0, B1, C0, C1, D, E].");
    m.def("ms_descriptor", [] {
        std::vector<std::string> out;
        for (const auto &c : ms_descriptor().copies) out.push_back(c.label());
        return out;
    });

    m.def(
        "partial_trace",
        [](const Matrix &rho, const std::vector<int> &keep) {
            return partial_trace(DensityOperator(positional_register(rho), rho), positions(keep)).matrix();
        },
        py::arg("rho"), py::arg("keep"));
    m.def(
        "partial_transpose",
        [](const Matrix &rho, const std::vector<int> &part) {
            return partial_transpose(positional_register(rho), rho, positions(part));
        },
        py::arg("rho"), py::arg("part"));
    m.def("eig_hermitian", &eig_hermitian, py::arg("m"));
    m.def(
        "ppt_min_eigenvalue",
        [](const Matrix &rho, const std::vector<int> &part) {
            const Register reg = positional_register(rho);
            return ppt_check(DensityOperator(reg, rho), Bipartition(reg, positions(part))).min_eigenvalue;
        },
        py::arg("rho"), py::arg("part"));

    m.def(
        "teleport",
        [](const Vector &psi, int resource) {
            const PureState in(Register{{"A", 0}}, psi);
            std::vector<Vector> out;
            for (const auto &b : run(teleport_script(in.normalized(), BellIndex(resource), "A", "B")).branches) {
                if (!b.final_pure) throw std::runtime_error("teleported state is not pure");
                out.push_back(b.final_pure->amplitudes());
            }
            return out;
        },
        py::arg("psi"), py::arg("resource") = 0, "Final receiver state of every branch.");
    m.def(
        "superactivation",
        [](const std::pair<std::string, std::string> &target) { return run_summary(superactivation_for_pair(target)); },
        py::arg("target") = std::pair<std::string, std::string>{"D", "E"});
    m.def(
        "unlock",
        [](const std::string &helpers) {
            if (helpers.size() != 2) throw std::invalid_argument("need two helper letters");
            return run_summary(unlock_script({"A", "B", "C", "D"}, {helpers.substr(0, 1), helpers.substr(1, 1)}));
        },
        py::arg("helpers") = "AB");

    m.def(
        "run_script_json",
        [](const std::string &text) {
            const LoccScript script = script_from_json(json::parse(text));
            if (script.keep.size() != 2) return to_json(run(script)).dump();
            const PureState target = singlet(script.keep[0], script.keep[1]);
            return to_json(run(script), &target).dump();
        },
        py::arg("script"), "Run report; branch fidelities are against the singlet when two qubits are kept.");
    m.def(
        "export_json",
        [](const std::string &key, bool ensemble) {
            if (key == "ms") return to_json(ms_descriptor()).dump();
            const MixedEnsemble e = fixture_ensemble(key);
            return (ensemble ? to_json(e) : to_json(e.density())).dump();
        },
        py::arg("fixture"), py::arg("ensemble") = false);
    m.def(
        "verify_json",
        [](const std::string &target, double tol, std::uint64_t seed) {
            RunConfig cfg;
            cfg.tolerance = tol;
            cfg.seed = seed;
            return render_json(verify(target, cfg)).dump();
        },
        py::arg("target"), py::arg("tol") = 1e-9, py::arg("seed") = 0);
    m.def("verify_targets", &verify_targets);
}

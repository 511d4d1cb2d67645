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

#include "superact/serialize.hpp"

#include <set>

namespace superact {

namespace {

json complex_json(cplx z) { return json::array({z.real(), z.imag()}); }

cplx complex_from(const json &j) {
    if (!j.is_array() || j.size() != 2) throw std::invalid_argument("complex entry must be [re, im]");
    return {j[0].get<double>(), j[1].get<double>()};
}

json vector_json(const Vector &v) {
    json out = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(complex_json(v(i)));
    return out;
}

Vector vector_from(const json &j) {
    if (!j.is_array()) throw std::invalid_argument("amplitudes must be an array");
    Vector v(static_cast<Eigen::Index>(j.size()));
    for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<Eigen::Index>(i)) = complex_from(j[i]);
    return v;
}

void expect_kind(const json &j, const char *kind) {
    if (!j.is_object() || j.value("kind", "") != kind) {
        throw std::invalid_argument(std::string("expected a JSON object of kind '") + kind + "'");
    }
    if (j.contains("schema_version") && j["schema_version"].get<int>() != kSchemaVersion) {
        throw std::invalid_argument("unsupported schema_version " + j["schema_version"].dump());
    }
}

json header(const char *kind) { return json{{"kind", kind}, {"schema_version", kSchemaVersion}}; }

json coalition_json(const Coalition &c) {
    if (c.is_single()) return c.parties().front();
    return c.parties();
}

Coalition coalition_from(const json &j) {
    if (j.is_string()) return Coalition(j.get<std::string>());
    return Coalition(j.get<std::vector<std::string>>());
}

}  // namespace

json to_json(const QubitId &q) { return json::array({q.party, q.slot}); }

QubitId qubit_from_json(const json &j) {
    if (j.is_string()) return QubitId{j.get<std::string>(), 0};
    if (!j.is_array() || j.size() != 2) throw std::invalid_argument("qubit must be [party, slot]");
    return QubitId{j[0].get<std::string>(), j[1].get<int>()};
}

json to_json(const Register &reg) {
    json out = json::array();
    for (const auto &q : reg.qubits()) out.push_back(to_json(q));
    return out;
}

Register register_from_json(const json &j) {
    if (!j.is_array()) throw std::invalid_argument("register must be an array of [party, slot]");
    std::vector<QubitId> qs;
    for (const auto &q : j) qs.push_back(qubit_from_json(q));
    return Register(std::move(qs));
}

json to_json(const PureState &s) {
    json out = header("pure_state");
    out["register"] = to_json(s.reg());
    out["amplitudes"] = vector_json(s.amplitudes());
    return out;
}

PureState pure_state_from_json(const json &j) {
    expect_kind(j, "pure_state");
    return PureState(register_from_json(j.at("register")), vector_from(j.at("amplitudes")));
}

json to_json(const DensityOperator &rho) {
    json out = header("density_operator");
    out["register"] = to_json(rho.reg());
    out["dim"] = rho.dim();
    out["trace"] = rho.trace().real();
    json rows = json::array();
    for (Eigen::Index i = 0; i < rho.matrix().rows(); ++i) rows.push_back(vector_json(rho.matrix().row(i).transpose()));
    out["matrix"] = std::move(rows);
    return out;
}

DensityOperator density_from_json(const json &j) {
    expect_kind(j, "density_operator");
    Register reg = register_from_json(j.at("register"));
    const auto &rows = j.at("matrix");
    const auto d = static_cast<Eigen::Index>(reg.dim());
    if (!rows.is_array() || static_cast<Eigen::Index>(rows.size()) != d) {
        throw std::invalid_argument("matrix row count does not match register");
    }
    Matrix m(d, d);
    for (Eigen::Index i = 0; i < d; ++i) {
        Vector row = vector_from(rows[static_cast<std::size_t>(i)]);
        if (row.size() != d) throw std::invalid_argument("matrix row " + std::to_string(i) + " has the wrong length");
        m.row(i) = row.transpose();
    }
    return DensityOperator::checked(std::move(reg), std::move(m));
}

json to_json(const MixedEnsemble &e) {
    json out = header("ensemble");
    out["register"] = to_json(e.reg());
    json comps = json::array();
    for (const auto &c : e.components()) {
        comps.push_back({{"probability", c.probability}, {"amplitudes", vector_json(c.state.amplitudes())}});
    }
    out["components"] = std::move(comps);
    return out;
}

MixedEnsemble ensemble_from_json(const json &j) {
    expect_kind(j, "ensemble");
    const Register reg = register_from_json(j.at("register"));
    std::vector<EnsembleComponent> comps;
    for (const auto &c : j.at("components")) {
        comps.push_back({c.at("probability").get<double>(), PureState(reg, vector_from(c.at("amplitudes")))});
    }
    return MixedEnsemble(std::move(comps));
}

json to_json(const MsDescriptor &ms) {
    json out = header("ms_descriptor");
    json copies = json::array();
    for (const auto &c : ms.copies) {
        copies.push_back({{"parties", c.parties}, {"pairing", json::array({json::array({c.parties[0], c.parties[1]}),
                                                                             json::array({c.parties[2], c.parties[3]})})}});
    }
    out["copies"] = std::move(copies);
    return out;
}

json to_json(const LoccScript &script) {
    json out = header("locc_script");
    out["initial"] = to_json(script.initial);
    json steps = json::array();
    for (const auto &s : script.steps) {
        if (const auto *m = std::get_if<BellMeasure>(&s)) {
            steps.push_back({{"op", "bell_measure"},
                             {"owner", coalition_json(m->owner)},
                             {"qubits", json::array({to_json(m->q1), to_json(m->q2)})},
                             {"outcome", m->outcome_var}});
        } else {
            const auto &c = std::get<ConditionalPauli>(s);
            json index;
            if (const auto *v = std::get_if<std::string>(&c.index.term)) {
                index = *v;
            } else {
                index = std::get<PauliIndex>(c.index.term).value();
            }
            steps.push_back({{"op", "conditional_pauli"},
                             {"owner", coalition_json(c.owner)},
                             {"target", to_json(c.target)},
                             {"index", index}});
        }
    }
    out["steps"] = std::move(steps);
    json keep = json::array();
    for (const auto &q : script.keep) keep.push_back(to_json(q));
    out["keep"] = std::move(keep);
    json coalitions = json::array();
    for (const auto &c : script.coalitions) coalitions.push_back(c.parties());
    out["coalitions"] = std::move(coalitions);
    return out;
}

LoccScript script_from_json(const json &j) {
    expect_kind(j, "locc_script");
    const json &init = j.at("initial");
    MixedEnsemble initial = init.is_object() && init.contains("fixture")
                                ? fixture_ensemble(init["fixture"].get<std::string>())
                                : ensemble_from_json(init);
    std::vector<LoccStep> steps;
    for (const auto &s : j.at("steps")) {
        const std::string op = s.at("op").get<std::string>();
        if (op == "bell_measure") {
            const auto &qs = s.at("qubits");
            if (!qs.is_array() || qs.size() != 2) throw std::invalid_argument("bell_measure needs two qubits");
            steps.push_back(BellMeasure{coalition_from(s.at("owner")), qubit_from_json(qs[0]), qubit_from_json(qs[1]),
                                        s.at("outcome").get<std::string>()});
        } else if (op == "conditional_pauli") {
            const auto &idx = s.at("index");
            IndexExpr e = idx.is_string() ? IndexExpr::var(idx.get<std::string>()) : IndexExpr::fixed(idx.get<int>());
            steps.push_back(ConditionalPauli{coalition_from(s.at("owner")), qubit_from_json(s.at("target")), e});
        } else {
            throw std::invalid_argument("unknown step op '" + op + "'");
        }
    }
    std::vector<QubitId> keep;
    for (const auto &q : j.at("keep")) keep.push_back(qubit_from_json(q));
    std::vector<Coalition> coalitions;
    if (j.contains("coalitions")) {
        for (const auto &c : j["coalitions"]) coalitions.push_back(coalition_from(c));
    }
    return LoccScript{std::move(initial), std::move(steps), std::move(keep), std::move(coalitions)};
}

json to_json(const Branch &b, const PureState *target) {
    json outcomes = json::object();
    json order = json::array();
    for (const auto &[name, v] : b.outcomes) {
        outcomes[name] = v.value();
        order.push_back(name);
    }
    json out{{"probability", b.probability}, {"component", b.component}, {"outcomes", outcomes},
             {"outcome_order", order}, {"pure", b.final_pure.has_value()}};
    if (target) out["fidelity"] = fidelity_pure(b.final_state, *target);
    return out;
}

json to_json(const RunResult &r, const PureState *target) {
    json out = header("run_result");
    json branches = json::array();
    double min_f = 1.0;
    for (const auto &b : r.branches) {
        branches.push_back(to_json(b, target));
        if (target) min_f = std::min(min_f, fidelity_pure(b.final_state, *target));
    }
    out["branch_count"] = r.branches.size();
    out["retained_probability"] = r.retained_probability();
    out["pruned_probability"] = r.pruned_probability;
    if (target) out["min_fidelity"] = min_f;
    out["average_state"] = to_json(r.average_state());
    out["branches"] = std::move(branches);
    return out;
}

json to_json(const CutReport &r) {
    json side_a = json::array(), side_b = json::array();
    for (const auto &q : r.cut.side_a()) side_a.push_back(to_json(q));
    for (const auto &q : r.cut.side_b()) side_b.push_back(to_json(q));
    json out{{"cut", r.cut.label()},
             {"side_a", side_a},
             {"side_b", side_b},
             {"min_ppt_eigenvalue", r.min_ppt_eigenvalue},
             {"ppt_verdict", to_string(r.verdict)},
             {"separability", r.certified() ? "certified" : "ppt-only (necessary condition)"}};
    out["certificate_error"] = r.certificate_error ? json(*r.certificate_error) : json(nullptr);
    return out;
}

json to_json(const SymmetryReport &r) {
    json out = header("symmetry_report");
    json entries = json::array();
    for (const auto &e : r.entries) {
        entries.push_back({{"permutation", permutation_label(e.permutation)}, {"distance", e.distance}});
    }
    out["entries"] = std::move(entries);
    out["max_distance"] = r.max_distance();
    return out;
}

bool is_fixture_key(const std::string &key) {
    if (key == "m" || key == "control" || key == "ms") return true;
    if (key.rfind("smolin:", 0) != 0 || key.size() != 11) return false;
    const std::set<char> letters(key.begin() + 7, key.end());
    return letters.size() == 4 && std::all_of(letters.begin(), letters.end(), [](char c) { return std::isupper(c); });
}

MixedEnsemble fixture_ensemble(const std::string &key) {
    if (!is_fixture_key(key)) throw std::invalid_argument("unknown fixture '" + key + "'");
    if (key == "m") return m_state();
    if (key == "control") return kron(smolin_state("A", "B", "C", "D"), smolin_state("E", "F", "G", "H"));
    if (key == "ms") throw std::invalid_argument("fixture 'ms' is descriptor-only and has no dense or ensemble form");
    return smolin_state(std::string(1, key[7]), std::string(1, key[8]), std::string(1, key[9]), std::string(1, key[10]));
}

}  // namespace superact

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

#include "superact/locc.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

namespace superact {

Coalition::Coalition(std::string party) : parties_{std::move(party)} {}

Coalition::Coalition(std::vector<std::string> parties) : parties_(std::move(parties)) {
    std::sort(parties_.begin(), parties_.end());
    parties_.erase(std::unique(parties_.begin(), parties_.end()), parties_.end());
    if (parties_.empty()) throw std::invalid_argument("empty coalition");
}

bool Coalition::holds(const QubitId &q) const {
    return std::binary_search(parties_.begin(), parties_.end(), q.party);
}

std::string Coalition::str() const {
    std::string s;
    for (std::size_t k = 0; k < parties_.size(); ++k) s += (k ? "+" : "") + parties_[k];
    return s;
}

std::string IndexExpr::str() const {
    if (const auto *v = std::get_if<std::string>(&term)) return *v;
    return std::to_string(std::get<PauliIndex>(term).value());
}

ScriptError::ScriptError(std::size_t step, const std::string &what)
    : std::invalid_argument(step == npos ? what : "step " + std::to_string(step) + ": " + what), step_(step) {}

void validate(const LoccScript &script) {
    const Register &reg = script.initial.reg();
    for (const auto &c : script.coalitions) {
        if (c.parties().empty()) throw ScriptError(ScriptError::npos, "empty coalition declared");
    }
    auto check_owner = [&](std::size_t k, const Coalition &owner) {
        if (owner.parties().empty()) throw ScriptError(k, "step has no owner");
        if (!owner.is_single() &&
            std::find(script.coalitions.begin(), script.coalitions.end(), owner) == script.coalitions.end()) {
            throw ScriptError(k, "owner " + owner.str() + " is not a declared coalition");
        }
    };
    auto check_held = [&](std::size_t k, const Coalition &owner, const QubitId &q) {
        if (!reg.contains(q)) throw ScriptError(k, "qubit " + q.str() + " is not in the register");
        if (!owner.holds(q)) throw ScriptError(k, "qubit " + q.str() + " is not held by " + owner.str());
    };

    std::set<std::string> bound;
    for (std::size_t k = 0; k < script.steps.size(); ++k) {
        const auto &step = script.steps[k];
        if (const auto *m = std::get_if<BellMeasure>(&step)) {
            check_owner(k, m->owner);
            check_held(k, m->owner, m->q1);
            check_held(k, m->owner, m->q2);
            if (m->q1 == m->q2) throw ScriptError(k, "Bell measurement on a single qubit " + m->q1.str());
            if (m->outcome_var.empty()) throw ScriptError(k, "empty outcome variable name");
            if (!bound.insert(m->outcome_var).second) {
                throw ScriptError(k, "outcome variable '" + m->outcome_var + "' bound twice");
            }
        } else {
            const auto &c = std::get<ConditionalPauli>(step);
            check_owner(k, c.owner);
            check_held(k, c.owner, c.target);
            if (const auto *v = std::get_if<std::string>(&c.index.term); v && !bound.contains(*v)) {
                throw ScriptError(k, "correction refers to unbound outcome variable '" + *v + "'");
            }
        }
    }
    if (script.keep.empty()) throw ScriptError(ScriptError::npos, "keep set is empty");
    std::set<QubitId> seen;
    for (const auto &q : script.keep) {
        if (!reg.contains(q)) throw ScriptError(ScriptError::npos, "keep qubit " + q.str() + " is not in the register");
        if (!seen.insert(q).second) throw ScriptError(ScriptError::npos, "keep qubit " + q.str() + " listed twice");
    }
}

std::vector<BellOutcome> bell_measure(const PureState &s, const QubitId &q1, const QubitId &q2) {
    if (q1 == q2) throw std::invalid_argument("bell_measure needs two distinct qubits");
    s.reg().index_of(q1);
    s.reg().index_of(q2);
    std::vector<BellOutcome> out;
    for (BellIndex k : BellIndex::all()) {
        const Vector b = bell_state(k, q1, q2).amplitudes();
        const PureState projected = apply_local(s, LocalOperator({q1, q2}, b * b.adjoint()));
        const double p = projected.amplitudes().squaredNorm() / s.amplitudes().squaredNorm();
        if (p > kPruneTol) out.push_back({k, p, projected.normalized()});
    }
    return out;
}

double RunResult::retained_probability() const {
    double total = 0.0;
    for (const auto &b : branches) total += b.probability;
    return total;
}

DensityOperator RunResult::average_state() const {
    if (branches.empty()) throw std::invalid_argument("no branches to average");
    Matrix m = Matrix::Zero(branches.front().final_state.matrix().rows(), branches.front().final_state.matrix().cols());
    const Register &reg = branches.front().final_state.reg();
    for (const auto &b : branches) m += b.probability * align(b.final_state, reg).matrix();
    return DensityOperator(reg, m / retained_probability());
}

namespace {

using Outcomes = std::vector<std::pair<std::string, BellIndex>>;

PauliIndex resolve(const IndexExpr &e, const Outcomes &outcomes) {
    if (const auto *v = std::get_if<std::string>(&e.term)) {
        for (const auto &[name, value] : outcomes) {
            if (name == *v) return PauliIndex(value);
        }
        throw std::logic_error("unbound outcome variable '" + *v + "'");
    }
    return std::get<PauliIndex>(e.term);
}

Branch make_leaf(const LoccScript &script, std::size_t component, double p, Outcomes outcomes,
                 const PureState &state) {
    DensityOperator reduced = reduced_state(state, script.keep);
    std::optional<PureState> pure;
    if (std::abs(reduced.purity() - 1.0) <= kAbsTol) {
        pure = PureState(reduced.reg(), principal_eigenvector(reduced.matrix())).normalized();
    }
    return Branch{p, component, std::move(outcomes), std::move(reduced), std::move(pure)};
}

struct Enumerator {
    const LoccScript &script;
    RunResult &result;

    void descend(std::size_t component, std::size_t step, double p, Outcomes &outcomes, const PureState &state) {
        if (step == script.steps.size()) {
            result.branches.push_back(make_leaf(script, component, p, outcomes, state));
            return;
        }
        if (const auto *m = std::get_if<BellMeasure>(&script.steps[step])) {
            double kept = 0.0;
            for (auto &o : bell_measure(state, m->q1, m->q2)) {
                kept += o.probability;
                outcomes.emplace_back(m->outcome_var, o.outcome);
                descend(component, step + 1, p * o.probability, outcomes, o.post_state);
                outcomes.pop_back();
            }
            result.pruned_probability += p * std::max(0.0, 1.0 - kept);
        } else {
            const auto &c = std::get<ConditionalPauli>(script.steps[step]);
            descend(component, step + 1, p, outcomes, apply_local(state, pauli(resolve(c.index, outcomes), c.target)));
        }
    }
};

}  // namespace

RunResult run(const LoccScript &script) {
    validate(script);
    RunResult result;
    Enumerator e{script, result};
    const auto &comps = script.initial.components();
    for (std::size_t k = 0; k < comps.size(); ++k) {
        Outcomes outcomes;
        e.descend(k, 0, comps[k].probability, outcomes, comps[k].state);
    }
    std::stable_sort(result.branches.begin(), result.branches.end(), [](const Branch &a, const Branch &b) {
        if (a.outcomes != b.outcomes) return a.outcomes < b.outcomes;
        return a.component < b.component;
    });
    return result;
}

std::vector<Branch> sample(const LoccScript &script, std::size_t shots, std::uint64_t seed) {
    validate(script);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    auto pick = [&](const std::vector<double> &weights) {
        double u = unit(rng);
        for (std::size_t k = 0; k + 1 < weights.size(); ++k) {
            if (u < weights[k]) return k;
            u -= weights[k];
        }
        return weights.size() - 1;
    };

    const auto &comps = script.initial.components();
    std::vector<double> comp_weights;
    for (const auto &c : comps) comp_weights.push_back(c.probability);

    std::vector<Branch> out;
    out.reserve(shots);
    for (std::size_t shot = 0; shot < shots; ++shot) {
        const std::size_t k = pick(comp_weights);
        PureState state = comps[k].state;
        Outcomes outcomes;
        for (const auto &step : script.steps) {
            if (const auto *m = std::get_if<BellMeasure>(&step)) {
                auto options = bell_measure(state, m->q1, m->q2);
                std::vector<double> w;
                for (const auto &o : options) w.push_back(o.probability);
                auto &chosen = options[pick(w)];
                outcomes.emplace_back(m->outcome_var, chosen.outcome);
                state = std::move(chosen.post_state);
            } else {
                const auto &c = std::get<ConditionalPauli>(step);
                state = apply_local(state, pauli(resolve(c.index, outcomes), c.target));
            }
        }
        out.push_back(make_leaf(script, k, 1.0 / static_cast<double>(shots), std::move(outcomes), state));
    }
    return out;
}

LoccScript teleport_script(const PureState &psi, BellIndex resource, const std::string &sender,
                           const std::string &receiver) {
    if (psi.reg().size() != 1) throw std::invalid_argument("teleport_script expects a single-qubit input state");
    const QubitId q_in = psi.reg()[0];
    if (q_in.party != sender) {
        throw std::invalid_argument("input qubit " + q_in.str() + " is not held by sender " + sender);
    }
    if (sender == receiver) throw std::invalid_argument("sender and receiver must differ");
    const QubitId sender_half{sender, q_in.slot + 1};
    const QubitId receiver_half{receiver, 0};
    MixedEnsemble initial({{1.0, kron(psi, bell_state(resource, sender_half, receiver_half))}});
    return LoccScript{
        std::move(initial),
        {BellMeasure{sender, q_in, sender_half, "m"}, ConditionalPauli{receiver, receiver_half, IndexExpr::var("m")}},
        {receiver_half},
        {},
    };
}

LoccScript unlock_script(const std::array<std::string, 4> &parties, const std::vector<std::string> &helpers,
                         bool correct) {
    if (helpers.size() != 2 || helpers[0] == helpers[1]) {
        throw std::invalid_argument("unlock needs exactly two distinct helper parties");
    }
    for (const auto &h : helpers) {
        if (std::find(parties.begin(), parties.end(), h) == parties.end()) {
            throw std::invalid_argument("helper " + h + " does not hold a share of the state");
        }
    }
    std::vector<std::string> others;
    for (const auto &p : parties) {
        if (p != helpers[0] && p != helpers[1]) others.push_back(p);
    }
    const auto given = smolin_state(parties[0], parties[1], parties[2], parties[3]);
    auto initial = smolin_state(helpers[0], helpers[1], others[0], others[1]);
    if (frobenius_distance(initial.density(), given.density()) > kAbsTol) {
        throw std::logic_error("re-pairing the state around the helpers changed it");
    }

    const QubitId h0{helpers[0], 0}, h1{helpers[1], 0}, o0{others[0], 0}, o1{others[1], 0};
    const Coalition lab(std::vector<std::string>{helpers[0], helpers[1]});
    std::vector<LoccStep> steps{BellMeasure{lab, h0, h1, "m"}};
    if (correct) steps.push_back(ConditionalPauli{others[1], o1, IndexExpr::var("m")});
    return LoccScript{std::move(initial), std::move(steps), {o0, o1}, {lab}};
}

LoccScript superactivation_script(int through_step) {
    if (through_step < 1 || through_step > 3) throw std::invalid_argument("through_step must be 1, 2 or 3");
    const QubitId a0{"A", 0}, a1{"A", 1}, b0{"B", 0}, b1{"B", 1}, c0{"C", 0}, c1{"C", 1}, d{"D", 0}, e{"E", 0};
    std::vector<LoccStep> steps{
        // A teleports its half of the (A1,B1) pair to C over the (A0,C0) pair.
        BellMeasure{"A", a1, a0, "a"},
        ConditionalPauli{"C", c0, IndexExpr::var("a")},
        // B teleports its half, now paired with C0, to D over the (B0,D) pair.
        BellMeasure{"B", b1, b0, "b"},
        ConditionalPauli{"D", d, IndexExpr::var("b")},
        // C learns the shared Bell index; D rotates to the singlet.
        BellMeasure{"C", c0, c1, "c"},
        ConditionalPauli{"D", d, IndexExpr::var("c")},
    };
    steps.resize(static_cast<std::size_t>(2 * through_step));
    std::vector<QubitId> keep = through_step == 3 ? std::vector<QubitId>{d, e} : std::vector<QubitId>{c0, c1, d, e};
    return LoccScript{m_state(), std::move(steps), std::move(keep), {}};
}

LoccScript relabel(const LoccScript &script, const std::map<std::string, std::string> &party_map) {
    auto party = [&](const std::string &p) {
        auto it = party_map.find(p);
        return it == party_map.end() ? p : it->second;
    };
    auto qubit = [&](const QubitId &q) { return QubitId{party(q.party), q.slot}; };
    auto coalition = [&](const Coalition &c) {
        std::vector<std::string> ps;
        for (const auto &p : c.parties()) ps.push_back(party(p));
        return Coalition(std::move(ps));
    };

    std::vector<LoccStep> steps;
    for (const auto &s : script.steps) {
        if (const auto *m = std::get_if<BellMeasure>(&s)) {
            steps.push_back(BellMeasure{coalition(m->owner), qubit(m->q1), qubit(m->q2), m->outcome_var});
        } else {
            const auto &c = std::get<ConditionalPauli>(s);
            steps.push_back(ConditionalPauli{coalition(c.owner), qubit(c.target), c.index});
        }
    }
    std::vector<QubitId> keep;
    for (const auto &q : script.keep) keep.push_back(qubit(q));
    std::vector<Coalition> coalitions;
    for (const auto &c : script.coalitions) coalitions.push_back(coalition(c));
    return LoccScript{script.initial.relabeled(party_relabeling(script.initial.reg(), party_map)), std::move(steps),
                      std::move(keep), std::move(coalitions)};
}

LoccScript superactivation_for_pair(const std::pair<std::string, std::string> &target) {
    const PairReduction red = ms_reduction(ms_descriptor(), target);
    return relabel(superactivation_script(), red.party_map);
}

}  // namespace superact

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

#include "superact/states.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

namespace superact {

BellIndex::BellIndex(int i) : i_(i) {
    if (i < 0 || i > 3) throw std::invalid_argument("Bell index out of range: " + std::to_string(i));
}

std::string_view BellIndex::name() const {
    static constexpr std::array<std::string_view, 4> names{"Psi-", "Psi+", "Phi+", "Phi-"};
    return names[static_cast<std::size_t>(i_)];
}

std::array<BellIndex, 4> BellIndex::all() { return {BellIndex(0), BellIndex(1), BellIndex(2), BellIndex(3)}; }

PauliIndex::PauliIndex(int i) : i_(i) {
    if (i < 0 || i > 3) throw std::invalid_argument("Pauli index out of range: " + std::to_string(i));
}

std::array<PauliIndex, 4> PauliIndex::all() { return {PauliIndex(0), PauliIndex(1), PauliIndex(2), PauliIndex(3)}; }

PureState bell_state(BellIndex i, const QubitId &q1, const QubitId &q2) {
    if (q1 == q2) throw std::invalid_argument("bell_state needs two distinct qubits, got " + q1.str() + " twice");
    const double r = 1.0 / std::sqrt(2.0);
    Vector v = Vector::Zero(4);
    switch (i.value()) {
        case 0: v << 0, r, -r, 0; break;
        case 1: v << 0, r, r, 0; break;
        case 2: v << r, 0, 0, r; break;
        default: v << r, 0, 0, -r; break;
    }
    return PureState(Register{q1, q2}, std::move(v));
}

Matrix pauli_matrix(PauliIndex i) {
    Matrix m(2, 2);
    switch (i.value()) {
        case 0: m << 1, 0, 0, 1; break;
        case 1: m << 1, 0, 0, -1; break;
        case 2: m << 0, -1, 1, 0; break;
        default: m << 0, 1, 1, 0; break;
    }
    return m;
}

LocalOperator pauli(PauliIndex i, const QubitId &target) { return LocalOperator({target}, pauli_matrix(i)); }

MixedEnsemble::MixedEnsemble(std::vector<EnsembleComponent> components) : components_(std::move(components)) {
    if (components_.empty()) throw std::invalid_argument("ensemble needs at least one component");
    double total = 0.0;
    for (std::size_t k = 0; k < components_.size(); ++k) {
        auto &c = components_[k];
        if (!(c.probability > 0.0) || c.probability > 1.0 + kAbsTol) {
            throw std::invalid_argument("ensemble component " + std::to_string(k) + " has probability outside (0,1]");
        }
        if (!(c.state.reg() == components_.front().state.reg())) {
            throw std::invalid_argument("ensemble component " + std::to_string(k) + " is on a different register");
        }
        c.state = c.state.normalized();
        total += c.probability;
    }
    if (std::abs(total - 1.0) > kAbsTol) throw std::invalid_argument("ensemble probabilities do not sum to 1");
}

DensityOperator MixedEnsemble::density() const {
    const auto d = static_cast<Eigen::Index>(reg().dim());
    Matrix m = Matrix::Zero(d, d);
    for (const auto &c : components_) {
        m.noalias() += c.probability * (c.state.amplitudes() * c.state.amplitudes().adjoint());
    }
    return DensityOperator(reg(), std::move(m));
}

Matrix MixedEnsemble::gram() const {
    const auto n = static_cast<Eigen::Index>(components_.size());
    Matrix g(n, n);
    for (Eigen::Index a = 0; a < n; ++a) {
        for (Eigen::Index b = 0; b < n; ++b) {
            g(a, b) = components_[static_cast<std::size_t>(a)].state.inner(components_[static_cast<std::size_t>(b)].state);
        }
    }
    return g;
}

MixedEnsemble MixedEnsemble::relabeled(const QubitMap &map) const {
    std::vector<EnsembleComponent> out;
    out.reserve(components_.size());
    for (const auto &c : components_) out.push_back({c.probability, relabel(c.state, map)});
    return MixedEnsemble(std::move(out));
}

MixedEnsemble MixedEnsemble::aligned(const Register &order) const {
    std::vector<EnsembleComponent> out;
    out.reserve(components_.size());
    for (const auto &c : components_) out.push_back({c.probability, align(c.state, order)});
    return MixedEnsemble(std::move(out));
}

MixedEnsemble kron(const MixedEnsemble &a, const MixedEnsemble &b) {
    std::vector<EnsembleComponent> out;
    out.reserve(a.size() * b.size());
    for (const auto &ca : a.components()) {
        for (const auto &cb : b.components()) {
            out.push_back({ca.probability * cb.probability, kron(ca.state, cb.state)});
        }
    }
    return MixedEnsemble(std::move(out));
}

double fidelity_pure(const MixedEnsemble &rho, const PureState &target) {
    const PureState t = align(target, rho.reg()).normalized();
    double f = 0.0;
    for (const auto &c : rho.components()) f += c.probability * std::norm(t.inner(c.state));
    return f;
}

MixedEnsemble smolin_state(const QubitId &q1, const QubitId &q2, const QubitId &q3, const QubitId &q4) {
    std::vector<EnsembleComponent> comps;
    for (BellIndex i : BellIndex::all()) {
        comps.push_back({0.25, kron(bell_state(i, q1, q2), bell_state(i, q3, q4))});
    }
    return MixedEnsemble(std::move(comps));
}

MixedEnsemble smolin_state(const std::string &p1, const std::string &p2, const std::string &p3,
                           const std::string &p4) {
    const std::set<std::string> distinct{p1, p2, p3, p4};
    if (distinct.size() != 4) throw std::invalid_argument("smolin_state needs four distinct parties");
    return smolin_state(QubitId{p1, 0}, QubitId{p2, 0}, QubitId{p3, 0}, QubitId{p4, 0});
}

Register m_register() {
    return Register{{"A", 0}, {"A", 1}, {"B", 0}, {"B", 1}, {"C", 0}, {"C", 1}, {"D", 0}, {"E", 0}};
}

MixedEnsemble m_state() {
    const auto first = smolin_state(QubitId{"A", 0}, QubitId{"C", 0}, QubitId{"B", 0}, QubitId{"D", 0});
    const auto second = smolin_state(QubitId{"A", 1}, QubitId{"B", 1}, QubitId{"C", 1}, QubitId{"E", 0});
    return kron(first, second).aligned(m_register());
}

std::string SmolinPlacement::label() const { return parties[0] + parties[1] + parties[2] + parties[3]; }

bool SmolinPlacement::contains(const std::string &p) const {
    return std::find(parties.begin(), parties.end(), p) != parties.end();
}

MsDescriptor ms_descriptor() {
    return MsDescriptor{{{
        {{"A", "B", "C", "D"}},
        {{"A", "B", "C", "E"}},
        {{"A", "B", "D", "E"}},
        {{"A", "C", "D", "E"}},
        {{"B", "C", "D", "E"}},
    }}};
}

QubitMap party_relabeling(const Register &reg, const std::map<std::string, std::string> &parties) {
    QubitMap out;
    for (const auto &q : reg.qubits()) {
        auto it = parties.find(q.party);
        if (it != parties.end()) out[q] = QubitId{it->second, q.slot};
    }
    return out;
}

QubitMap PairReduction::qubit_map() const { return party_relabeling(m_register(), party_map); }

PairReduction ms_reduction(const MsDescriptor &ms, const std::pair<std::string, std::string> &target) {
    static const std::vector<std::string> kParties{"A", "B", "C", "D", "E"};
    const auto &[x, y] = target;
    auto known = [&](const std::string &p) { return std::find(kParties.begin(), kParties.end(), p) != kParties.end(); };
    if (!known(x) || !known(y) || x == y) {
        throw std::invalid_argument("invalid target pair (" + x + "," + y + "): need two distinct parties from A..E");
    }
    std::vector<std::string> helpers;
    for (const auto &p : kParties) {
        if (p != x && p != y) helpers.push_back(p);
    }

    PairReduction red;
    red.target = target;
    red.party_map = {{"A", helpers[0]}, {"B", helpers[1]}, {"C", helpers[2]}, {"D", x}, {"E", y}};

    // The first protocol copy spans {helpers, x} and the second {helpers, y}.
    auto find_copy = [&](const std::string &omitted) {
        for (std::size_t k = 0; k < ms.copies.size(); ++k) {
            const auto &c = ms.copies[k];
            if (c.contains(omitted)) continue;
            const bool covers = std::all_of(helpers.begin(), helpers.end(), [&](const auto &h) { return c.contains(h); });
            if (covers) return k;
        }
        throw std::invalid_argument("M_S descriptor has no copy omitting party " + omitted);
    };
    red.copies = {find_copy(y), find_copy(x)};

    // The protocol needs (h0,h2)(h1,x) and (h0,h1)(h2,y); the descriptor
    // copies carry their own pairing, so check the two agree as states.
    const auto &h = helpers;
    const std::array<std::array<std::string, 4>, 2> needed{{{h[0], h[2], h[1], x}, {h[0], h[1], h[2], y}}};
    for (std::size_t k = 0; k < 2; ++k) {
        const auto &have = ms.copies[red.copies[k]].parties;
        const auto rho_have = smolin_state(have[0], have[1], have[2], have[3]).density();
        const auto rho_need = smolin_state(needed[k][0], needed[k][1], needed[k][2], needed[k][3]).density();
        if (frobenius_distance(rho_have, rho_need) > kAbsTol) {
            throw std::logic_error("M_S copy " + ms.copies[red.copies[k]].label() +
                                   " does not match the pairing required by the protocol");
        }
    }
    return red;
}

}  // namespace superact

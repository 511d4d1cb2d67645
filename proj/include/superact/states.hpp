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

#pragma once

#include <array>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "superact/tensor.hpp"

namespace superact {

/// Index into the ordered Bell set {Psi-, Psi+, Phi+, Phi-}. Index 0 is the singlet.
class BellIndex {
   public:
    constexpr BellIndex() = default;
    explicit BellIndex(int i);

    constexpr int value() const { return i_; }
    std::string_view name() const;
    static std::array<BellIndex, 4> all();

    auto operator<=>(const BellIndex &) const = default;

   private:
    int i_ = 0;
};

/// Index into the ordered set {1, Z, [[0,-1],[1,0]], X}.
class PauliIndex {
   public:
    constexpr PauliIndex() = default;
    explicit PauliIndex(int i);
    explicit PauliIndex(BellIndex b) : i_(b.value()) {}

    constexpr int value() const { return i_; }
    static std::array<PauliIndex, 4> all();

    auto operator<=>(const PauliIndex &) const = default;

   private:
    int i_ = 0;
};

/// |Psi_i> on (q1, q2), with |0> = up and |1> = down:
///   Psi- = (|01> - |10>)/sqrt2, Psi+ = (|01> + |10>)/sqrt2,
///   Phi+ = (|00> + |11>)/sqrt2, Phi- = (|00> - |11>)/sqrt2.
PureState bell_state(BellIndex i, const QubitId &q1, const QubitId &q2);
inline PureState singlet(const QubitId &q1, const QubitId &q2) { return bell_state(BellIndex(0), q1, q2); }

/// The 2x2 matrix sigma_i exactly as tabulated; sigma_2 is real antisymmetric (= i * Pauli Y).
Matrix pauli_matrix(PauliIndex i);
LocalOperator pauli(PauliIndex i, const QubitId &target);

struct EnsembleComponent {
    double probability;
    PureState state;
};

/// Probability-weighted list of pure states on a common register.
class MixedEnsemble {
   public:
    explicit MixedEnsemble(std::vector<EnsembleComponent> components);

    const Register &reg() const { return components_.front().state.reg(); }
    const std::vector<EnsembleComponent> &components() const { return components_; }
    std::size_t size() const { return components_.size(); }

    DensityOperator density() const;
    /// Gram matrix of the (normalized) component states.
    Matrix gram() const;

    MixedEnsemble relabeled(const QubitMap &map) const;
    MixedEnsemble aligned(const Register &order) const;

   private:
    std::vector<EnsembleComponent> components_;
};

MixedEnsemble kron(const MixedEnsemble &a, const MixedEnsemble &b);
double fidelity_pure(const MixedEnsemble &rho, const PureState &target);

/// Four-party state with (q1,q2) and (q3,q4) sharing the same uniformly
/// random Bell state: (1/4) sum_i |Psi_i><Psi_i| (x) |Psi_i><Psi_i|.
/// Register order is [q1, q2, q3, q4].
MixedEnsemble smolin_state(const QubitId &q1, const QubitId &q2, const QubitId &q3, const QubitId &q4);
/// Same, one qubit (slot 0) per party.
MixedEnsemble smolin_state(const std::string &p1, const std::string &p2, const std::string &p3,
                           const std::string &p4);

/// Register of the five-party state M: [A0, A1, B0, B1, C0, C1, D, E].
///
/// Slot assignment:
///   A0 pairs with C0 and B0 pairs with D  (first copy, Bell index i)
///   A1 pairs with B1 and C1 pairs with E  (second copy, Bell index j)
Register m_register();

/// M = rho^{ACBD} (x) rho^{ABCE}: 16 components (i, j), component index
/// 4*i + j, each with probability 1/16.
MixedEnsemble m_state();

/// One copy in the symmetrized product; pairing is (parties[0],parties[1]),
/// (parties[2],parties[3]).
struct SmolinPlacement {
    std::array<std::string, 4> parties;

    std::string label() const;
    bool contains(const std::string &p) const;
};

/// M_S: five Smolin copies over {A..E}, each omitting one party. Never
/// materialized densely.
struct MsDescriptor {
    std::array<SmolinPlacement, 5> copies;
};

MsDescriptor ms_descriptor();

/// How the two-copy protocol is instantiated from M_S for one target pair.
struct PairReduction {
    std::pair<std::string, std::string> target;
    /// Indices into MsDescriptor::copies: the copy without target.second
    /// (plays rho^{ACBD}) and the copy without target.first (plays rho^{ABCE}).
    std::array<std::size_t, 2> copies;
    /// Party relabeling from the canonical M parties {A,B,C,D,E} to the actual ones.
    std::map<std::string, std::string> party_map;

    QubitMap qubit_map() const;
};

/// Picks the copies for `target`, builds the relabeling (helpers in
/// alphabetical order stand in for A, B, C) and validates that each selected
/// copy equals, as a density operator, the pairing the protocol needs.
PairReduction ms_reduction(const MsDescriptor &ms, const std::pair<std::string, std::string> &target);

/// Maps party labels (all slots move together).
QubitMap party_relabeling(const Register &reg, const std::map<std::string, std::string> &parties);

}  // namespace superact

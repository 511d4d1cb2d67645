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

// LOCC protocol engine.
//
// A script is a list of local quantum actions (Bell measurements and Pauli
// corrections), each owned by one party or by a declared coalition of
// co-located parties. Measurement outcomes are broadcast to everyone, so a
// correction may depend on any outcome bound earlier in the script. `run`
// enumerates every measurement branch of every ensemble component exactly.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "superact/states.hpp"
#include "superact/tensor.hpp"

namespace superact {

/// Outcome probabilities at or below this are dropped.
inline constexpr double kPruneTol = 1e-12;

/// A set of parties acting jointly; a single party in the common case.
/// Stored sorted and unique.
class Coalition {
   public:
    Coalition() = default;
    Coalition(std::string party);  // NOLINT: implicit from a single party is intended
    Coalition(const char *party) : Coalition(std::string(party)) {}  // NOLINT
    explicit Coalition(std::vector<std::string> parties);

    const std::vector<std::string> &parties() const { return parties_; }
    bool holds(const QubitId &q) const;
    bool is_single() const { return parties_.size() == 1; }
    std::string str() const;

    auto operator<=>(const Coalition &) const = default;

   private:
    std::vector<std::string> parties_;
};

/// Which sigma a conditional correction applies: a bound outcome variable
/// or a fixed index.
struct IndexExpr {
    std::variant<std::string, PauliIndex> term;

    static IndexExpr var(std::string name) { return IndexExpr{std::move(name)}; }
    static IndexExpr fixed(int i) { return IndexExpr{PauliIndex(i)}; }
    std::string str() const;
};

struct BellMeasure {
    Coalition owner;
    QubitId q1;
    QubitId q2;
    std::string outcome_var;
};

struct ConditionalPauli {
    Coalition owner;
    QubitId target;
    IndexExpr index;
};

using LoccStep = std::variant<BellMeasure, ConditionalPauli>;

struct LoccScript {
    MixedEnsemble initial;
    std::vector<LoccStep> steps;
    std::vector<QubitId> keep;
    /// Multi-party owners must be declared here ("parties come together").
    std::vector<Coalition> coalitions;
};

/// Validation failure; `step()` is the offending step index, or npos for
/// script-level problems (keep set, coalitions).
class ScriptError : public std::invalid_argument {
   public:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
    ScriptError(std::size_t step, const std::string &what);
    std::size_t step() const { return step_; }

   private:
    std::size_t step_;
};

void validate(const LoccScript &script);

struct BellOutcome {
    BellIndex outcome;
    double probability;
    PureState post_state;
};

/// Projects (q1,q2) onto each Bell state; returns outcomes with probability
/// above kPruneTol, post-states renormalized.
std::vector<BellOutcome> bell_measure(const PureState &s, const QubitId &q1, const QubitId &q2);

struct Branch {
    double probability = 0.0;
    std::size_t component = 0;
    /// Outcome variables in binding order.
    std::vector<std::pair<std::string, BellIndex>> outcomes;
    /// Reduced state on the script's keep set.
    DensityOperator final_state;
    /// Set when final_state is pure within kAbsTol.
    std::optional<PureState> final_pure;
};

struct RunResult {
    /// Sorted by (outcome tuple, component).
    std::vector<Branch> branches;
    /// Probability mass removed by pruning.
    double pruned_probability = 0.0;

    double retained_probability() const;
    /// Branch-weighted average of the final states, normalized by the retained mass.
    DensityOperator average_state() const;
};

RunResult run(const LoccScript &script);

/// Seeded Monte Carlo execution: samples `shots` (component, outcomes)
/// paths. For spot checks only; acceptance uses `run`.
std::vector<Branch> sample(const LoccScript &script, std::size_t shots, std::uint64_t seed);

/// Teleports the single-qubit `psi` (held by `sender`) to `receiver` using
/// Bell resource `resource` on (sender slot q_in.slot+1, receiver slot 0).
LoccScript teleport_script(const PureState &psi, BellIndex resource, const std::string &sender,
                           const std::string &receiver);

/// Unlocks a Smolin state over `parties` (pairing (p0,p1)(p2,p3)) with the
/// two `helpers` measuring jointly. If the helpers are not one of the pairs,
/// the equivalent pairing (helpers)(others) is used after checking it is the
/// same density operator. Keep = the other two parties, correction on the
/// later of them.
LoccScript unlock_script(const std::array<std::string, 4> &parties, const std::vector<std::string> &helpers,
                         bool correct = true);

/// Two-copy protocol on M distilling a singlet between D and E.
/// `through_step` limits it to the first 1, 2 or 3 measure/correct rounds;
/// for fewer than 3 rounds keep is {C0, C1, D, E}.
LoccScript superactivation_script(int through_step = 3);

/// The protocol relabeled onto the pair `target` using M_S.
LoccScript superactivation_for_pair(const std::pair<std::string, std::string> &target);

/// Renames every qubit in a script (initial state, steps, keep, coalitions).
LoccScript relabel(const LoccScript &script, const std::map<std::string, std::string> &party_map);

}  // namespace superact

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

// JSON wire format. See docs/FORMAT.md for the full description; the short
// version:
//   complex number   [re, im]
//   register         [[party, slot], ...]            (position 0 = MSB)
//   pure_state       {kind, schema_version, register, amplitudes: [c, ...]}
//   density_operator {kind, schema_version, register, dim, trace, matrix: [[c, ...], ...]} row-major
//   ensemble         {kind, schema_version, register, components: [{probability, amplitudes}]}
//   locc_script      {kind, schema_version, initial, steps, keep, coalitions}
// where `initial` is an ensemble object or {"fixture": key}.

#include <string>

#include "json.hpp"
#include "superact/analysis.hpp"
#include "superact/locc.hpp"
#include "superact/states.hpp"
#include "superact/tensor.hpp"

namespace superact {

using json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

json to_json(const QubitId &q);
QubitId qubit_from_json(const json &j);
json to_json(const Register &reg);
Register register_from_json(const json &j);

json to_json(const PureState &s);
PureState pure_state_from_json(const json &j);
json to_json(const DensityOperator &rho);
/// Fully validated, including positivity.
DensityOperator density_from_json(const json &j);
json to_json(const MixedEnsemble &e);
MixedEnsemble ensemble_from_json(const json &j);

json to_json(const MsDescriptor &ms);

json to_json(const LoccScript &script);
LoccScript script_from_json(const json &j);

/// `target`, when given, adds a per-branch "fidelity" field.
json to_json(const Branch &b, const PureState *target = nullptr);
json to_json(const RunResult &r, const PureState *target = nullptr);

json to_json(const CutReport &r);
json to_json(const SymmetryReport &r);

/// Named fixtures: "smolin:WXYZ" (four distinct single-letter parties),
/// "m", and "control" (rho^{ABCD} (x) rho^{EFGH}). "ms" is descriptor-only
/// and is rejected here.
MixedEnsemble fixture_ensemble(const std::string &key);
bool is_fixture_key(const std::string &key);

}  // namespace superact

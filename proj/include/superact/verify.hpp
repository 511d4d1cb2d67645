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

// Verification suites driven by `superact verify <target>`.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "superact/serialize.hpp"
#include "superact/tensor.hpp"

namespace superact {

enum class ReportFormat { kText, kJson };

struct RunConfig {
    double tolerance = 1e-9;
    std::uint64_t seed = 0;
    std::optional<std::string> output_path;
    ReportFormat format = ReportFormat::kText;

    /// Throws std::invalid_argument unless tolerance is in (0, 1e-3].
    void validate() const;
};

struct Check {
    std::string name;
    double measured;
    /// ">=", "<", "<=" or "==" against threshold.
    std::string comparison;
    double threshold;
    bool pass;
};

struct Report {
    std::string target;
    RunConfig config;
    std::vector<Check> checks;

    bool passed() const;
};

const std::vector<std::string> &verify_targets();

/// Throws std::invalid_argument for an unknown target.
Report verify(const std::string &target, const RunConfig &cfg);

std::string render_text(const Report &r);
json render_json(const Report &r);

/// `count` single-qubit states on `q`, each from two complex standard
/// normals (normalized), drawn from mt19937_64(seed).
std::vector<PureState> random_qubit_states(std::uint64_t seed, std::size_t count, const QubitId &q);

}  // namespace superact

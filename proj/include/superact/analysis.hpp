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

// Cut analysis: PPT spectra across bipartitions, explicit separability
// certificates, and party-permutation symmetry.
//
// Separability is never decided here. A cut is reported separable only when
// an explicit certificate reconstructs the state; otherwise the PPT verdict
// is a necessary-condition result and is labeled as such.

#include <optional>
#include <string>
#include <vector>

#include "superact/states.hpp"
#include "superact/tensor.hpp"

namespace superact {

inline constexpr double kCertTol = 1e-9;

class Bipartition {
   public:
    /// side_a plus its complement in `reg`; both sides must be non-empty.
    Bipartition(const Register &reg, std::vector<QubitId> side_a);
    /// Side A = every qubit of the listed parties.
    static Bipartition of_parties(const Register &reg, const std::vector<std::string> &parties_a);

    const std::vector<QubitId> &side_a() const { return a_; }
    const std::vector<QubitId> &side_b() const { return b_; }
    Bipartition swapped() const;
    /// e.g. "AB|CD", qubits listed by QubitId::str.
    std::string label() const;

   private:
    Bipartition(std::vector<QubitId> a, std::vector<QubitId> b) : a_(std::move(a)), b_(std::move(b)) {}
    std::vector<QubitId> a_;
    std::vector<QubitId> b_;
};

enum class PptVerdict { kPpt, kNpt };
std::string to_string(PptVerdict v);

struct PptResult {
    double min_eigenvalue;
    PptVerdict verdict;
};

/// Partial transpose on side A; NPT iff min eigenvalue < -tol.
PptResult ppt_check(const DensityOperator &rho, const Bipartition &cut, double tol = kAbsTol);

struct CertificateTerm {
    double probability;
    DensityOperator side_a;
    DensityOperator side_b;
};

/// sum_k p_k rho_k^a (x) rho_k^b across a bipartition.
struct SeparableDecomposition {
    std::vector<CertificateTerm> terms;

    SeparableDecomposition relabeled(const QubitMap &map) const;
};

/// Malformed certificate; `term()` is the offending term (or npos).
class CertificateError : public std::invalid_argument {
   public:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
    CertificateError(std::size_t term, const std::string &what);
    std::size_t term() const { return term_; }

   private:
    std::size_t term_;
};

/// Frobenius distance between rho and the reconstructed sum. Throws
/// CertificateError for bad probabilities, non-positive factors, or factors
/// that do not live on the cut's sides.
double verify_certificate(const DensityOperator &rho, const Bipartition &cut, const SeparableDecomposition &cert);

/// Certificate of the Smolin state across (q1 q2 | q3 q4), read off its definition.
SeparableDecomposition smolin_certificate(const QubitId &q1, const QubitId &q2, const QubitId &q3, const QubitId &q4);
/// Single-term certificate rho_a (x) rho_b.
SeparableDecomposition product_certificate(const DensityOperator &a, const DensityOperator &b);

struct SymmetryEntry {
    QubitMap permutation;
    double distance;
};

struct SymmetryReport {
    std::vector<SymmetryEntry> entries;
    double max_distance() const;
};

/// Every permutation of `parties` as a qubit map (slots move with their
/// party), identity first, lexicographic order.
std::vector<QubitMap> party_permutations(const Register &reg, const std::vector<std::string> &parties);
SymmetryReport symmetry_report(const DensityOperator &rho, const std::vector<QubitMap> &permutations);
std::string permutation_label(const QubitMap &perm);

struct CutReport {
    Bipartition cut;
    double min_ppt_eigenvalue;
    PptVerdict verdict;
    /// Set when a certificate was registered for this cut.
    std::optional<double> certificate_error;
    bool certified() const { return certificate_error && *certificate_error < kCertTol; }
};

struct RegisteredCertificate {
    Bipartition cut;
    SeparableDecomposition certificate;
};

/// One report per cut, sorted by cut label. Cuts are matched against the
/// registry as unordered pairs of sides. Throws std::logic_error if a
/// verified certificate coexists with an NPT verdict.
std::vector<CutReport> cut_survey(const DensityOperator &rho, const std::vector<Bipartition> &cuts,
                                  const std::vector<RegisteredCertificate> &registry = {}, double tol = kAbsTol);

/// The three 2:2 cuts of a Smolin state over `parties` with their
/// certificates, generated from the (p0 p1 | p2 p3) one by symmetry.
std::vector<RegisteredCertificate> smolin_certificates(const std::array<std::string, 4> &parties);

/// rho^{ABCD} (x) rho^{EFGH}: the disconnected negative control.
DensityOperator disconnected_fixture();

}  // namespace superact

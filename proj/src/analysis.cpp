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

#include "superact/analysis.hpp"

#include <algorithm>
#include <set>

namespace superact {

Bipartition::Bipartition(const Register &reg, std::vector<QubitId> side_a) {
    std::set<QubitId> in_a;
    for (const auto &q : side_a) {
        if (!reg.contains(q)) throw std::invalid_argument("cut qubit " + q.str() + " is not in register " + reg.str());
        if (!in_a.insert(q).second) throw std::invalid_argument("cut lists qubit " + q.str() + " twice");
    }
    for (const auto &q : reg.qubits()) (in_a.contains(q) ? a_ : b_).push_back(q);
    if (a_.empty() || b_.empty()) throw std::invalid_argument("both sides of a cut must be non-empty");
}

Bipartition Bipartition::of_parties(const Register &reg, const std::vector<std::string> &parties_a) {
    std::vector<QubitId> a;
    for (const auto &p : parties_a) {
        auto qs = reg.qubits_of(p);
        if (qs.empty()) throw std::invalid_argument("party " + p + " holds no qubit of " + reg.str());
        a.insert(a.end(), qs.begin(), qs.end());
    }
    return Bipartition(reg, std::move(a));
}

Bipartition Bipartition::swapped() const { return Bipartition(b_, a_); }

std::string Bipartition::label() const {
    std::string s;
    for (const auto &q : a_) s += q.str();
    s += "|";
    for (const auto &q : b_) s += q.str();
    return s;
}

std::string to_string(PptVerdict v) { return v == PptVerdict::kPpt ? "PPT" : "NPT"; }

namespace {

void check_cut(const Register &reg, const Bipartition &cut) {
    if (cut.side_a().size() + cut.side_b().size() != reg.size()) {
        throw std::invalid_argument("cut " + cut.label() + " does not partition register " + reg.str());
    }
    for (const auto &q : cut.side_a()) reg.index_of(q);
    for (const auto &q : cut.side_b()) reg.index_of(q);
}

bool same_set(const std::vector<QubitId> &a, const std::vector<QubitId> &b) {
    return std::set<QubitId>(a.begin(), a.end()) == std::set<QubitId>(b.begin(), b.end());
}

}  // namespace

PptResult ppt_check(const DensityOperator &rho, const Bipartition &cut, double tol) {
    check_cut(rho.reg(), cut);
    const double lo = eig_hermitian(partial_transpose(rho, cut.side_a()))(0);
    return {lo, lo < -tol ? PptVerdict::kNpt : PptVerdict::kPpt};
}

CertificateError::CertificateError(std::size_t term, const std::string &what)
    : std::invalid_argument(term == npos ? what : "certificate term " + std::to_string(term) + ": " + what),
      term_(term) {}

SeparableDecomposition SeparableDecomposition::relabeled(const QubitMap &map) const {
    SeparableDecomposition out;
    for (const auto &t : terms) out.terms.push_back({t.probability, relabel(t.side_a, map), relabel(t.side_b, map)});
    return out;
}

double verify_certificate(const DensityOperator &rho, const Bipartition &cut, const SeparableDecomposition &cert) {
    check_cut(rho.reg(), cut);
    if (cert.terms.empty()) throw CertificateError(CertificateError::npos, "certificate has no terms");
    const Register reg_a(cut.side_a());
    const Register reg_b(cut.side_b());
    const Register joint = reg_a.concat(reg_b);

    double total = 0.0;
    Matrix sum = Matrix::Zero(static_cast<Eigen::Index>(joint.dim()), static_cast<Eigen::Index>(joint.dim()));
    for (std::size_t k = 0; k < cert.terms.size(); ++k) {
        const auto &t = cert.terms[k];
        if (!(t.probability > 0.0) || t.probability > 1.0 + kAbsTol) {
            throw CertificateError(k, "probability outside (0,1]");
        }
        if (!t.side_a.reg().same_qubits(reg_a) || !t.side_b.reg().same_qubits(reg_b)) {
            throw CertificateError(k, "factors do not live on the sides of cut " + cut.label());
        }
        if (t.side_a.min_eigenvalue() < -kAbsTol || t.side_b.min_eigenvalue() < -kAbsTol) {
            throw CertificateError(k, "factor is not positive semidefinite");
        }
        total += t.probability;
        sum += t.probability * kron(align(t.side_a, reg_a), align(t.side_b, reg_b)).matrix();
    }
    if (std::abs(total - 1.0) > kAbsTol) throw CertificateError(CertificateError::npos, "probabilities do not sum to 1");
    return frobenius_distance(rho, DensityOperator(joint, sum));
}

SeparableDecomposition smolin_certificate(const QubitId &q1, const QubitId &q2, const QubitId &q3, const QubitId &q4) {
    SeparableDecomposition cert;
    for (BellIndex i : BellIndex::all()) {
        cert.terms.push_back({0.25, DensityOperator::from_pure(bell_state(i, q1, q2)),
                              DensityOperator::from_pure(bell_state(i, q3, q4))});
    }
    return cert;
}

SeparableDecomposition product_certificate(const DensityOperator &a, const DensityOperator &b) {
    return SeparableDecomposition{{{1.0, a, b}}};
}

double SymmetryReport::max_distance() const {
    double m = 0.0;
    for (const auto &e : entries) m = std::max(m, e.distance);
    return m;
}

std::vector<QubitMap> party_permutations(const Register &reg, const std::vector<std::string> &parties) {
    std::vector<std::string> sorted = parties;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw std::invalid_argument("party list has duplicates");
    }
    std::vector<std::string> image = sorted;
    std::vector<QubitMap> out;
    do {
        std::map<std::string, std::string> m;
        for (std::size_t k = 0; k < sorted.size(); ++k) m[sorted[k]] = image[k];
        out.push_back(party_relabeling(reg, m));
    } while (std::next_permutation(image.begin(), image.end()));
    return out;
}

SymmetryReport symmetry_report(const DensityOperator &rho, const std::vector<QubitMap> &permutations) {
    SymmetryReport report;
    for (const auto &p : permutations) {
        report.entries.push_back({p, frobenius_distance(rho, permute_qubits(rho, p))});
    }
    return report;
}

std::string permutation_label(const QubitMap &perm) {
    std::string s;
    for (const auto &[from, to] : perm) {
        if (from == to) continue;
        if (!s.empty()) s += ",";
        s += from.str() + "->" + to.str();
    }
    return s.empty() ? "id" : s;
}

std::vector<CutReport> cut_survey(const DensityOperator &rho, const std::vector<Bipartition> &cuts,
                                  const std::vector<RegisteredCertificate> &registry, double tol) {
    std::vector<CutReport> out;
    for (const auto &cut : cuts) {
        const PptResult ppt = ppt_check(rho, cut, tol);
        CutReport report{cut, ppt.min_eigenvalue, ppt.verdict, std::nullopt};
        for (const auto &reg_cert : registry) {
            const bool same = same_set(reg_cert.cut.side_a(), cut.side_a()) && same_set(reg_cert.cut.side_b(), cut.side_b());
            const bool flipped = same_set(reg_cert.cut.side_a(), cut.side_b()) && same_set(reg_cert.cut.side_b(), cut.side_a());
            if (!same && !flipped) continue;
            report.certificate_error = verify_certificate(rho, reg_cert.cut, reg_cert.certificate);
            break;
        }
        if (report.certified() && report.verdict == PptVerdict::kNpt) {
            throw std::logic_error("cut " + cut.label() + " has a verified separability certificate but is NPT");
        }
        out.push_back(std::move(report));
    }
    std::sort(out.begin(), out.end(), [](const CutReport &a, const CutReport &b) { return a.cut.label() < b.cut.label(); });
    return out;
}

std::vector<RegisteredCertificate> smolin_certificates(const std::array<std::string, 4> &parties) {
    const Register reg{{parties[0], 0}, {parties[1], 0}, {parties[2], 0}, {parties[3], 0}};
    const QubitId q0 = reg[0], q1 = reg[1], q2 = reg[2], q3 = reg[3];
    const auto base = smolin_certificate(q0, q1, q2, q3);
    const QubitMap swap12{{q1, q2}, {q2, q1}};
    const QubitMap swap13{{q1, q3}, {q3, q1}};
    return {
        {Bipartition(reg, {q0, q1}), base},
        {Bipartition(reg, {q0, q2}), base.relabeled(swap12)},
        {Bipartition(reg, {q0, q3}), base.relabeled(swap13)},
    };
}

DensityOperator disconnected_fixture() {
    return kron(smolin_state("A", "B", "C", "D").density(), smolin_state("E", "F", "G", "H").density());
}

}  // namespace superact

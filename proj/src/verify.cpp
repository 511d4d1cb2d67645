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

#include "superact/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "superact/analysis.hpp"
#include "superact/locc.hpp"
#include "superact/states.hpp"

namespace superact {

void RunConfig::validate() const {
    if (!(tolerance > 0.0) || tolerance > 1e-3) throw std::invalid_argument("tolerance must be in (0, 1e-3]");
}

bool Report::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check &c) { return c.pass; });
}

std::vector<PureState> random_qubit_states(std::uint64_t seed, std::size_t count, const QubitId &q) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    std::vector<PureState> out;
    out.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
        Vector v(2);
        for (Eigen::Index i = 0; i < 2; ++i) {
            const double re = normal(rng);
            const double im = normal(rng);
            v(i) = cplx(re, im);
        }
        out.push_back(PureState(Register{q}, v).normalized());
    }
    return out;
}

namespace {

class Suite {
   public:
    explicit Suite(const RunConfig &cfg) : cfg_(cfg) {}

    void at_least(std::string name, double measured, double threshold) {
        add(std::move(name), measured, ">=", threshold, measured >= threshold);
    }
    void below(std::string name, double measured, double threshold) {
        add(std::move(name), measured, "<", threshold, measured < threshold);
    }
    void at_most(std::string name, double measured, double threshold) {
        add(std::move(name), measured, "<=", threshold, measured <= threshold);
    }
    void equals(std::string name, double measured, double expected) {
        add(std::move(name), measured, "==", expected, measured == expected);
    }
    double tol() const { return cfg_.tolerance; }
    std::vector<Check> take() { return std::move(checks_); }

   private:
    void add(std::string name, double measured, const char *cmp, double threshold, bool pass) {
        checks_.push_back({std::move(name), measured, cmp, threshold, pass});
    }
    const RunConfig &cfg_;
    std::vector<Check> checks_;
};

double min_fidelity(const RunResult &r, const PureState &target) {
    double f = 1.0;
    for (const auto &b : r.branches) f = std::min(f, fidelity_pure(b.final_state, target));
    return r.branches.empty() ? 0.0 : f;
}

double max_probability_deviation(const RunResult &r, double expected) {
    double d = 0.0;
    for (const auto &b : r.branches) d = std::max(d, std::abs(b.probability - expected));
    return d;
}

std::string pair_name(const std::string &a, const std::string &b) { return a + b; }

void bell_identities(Suite &s) {
    const QubitId a{"A", 0}, b{"B", 0};
    const PureState psi_minus = singlet(a, b);
    for (BellIndex i : BellIndex::all()) {
        const PauliIndex p(i);
        const PureState bell = bell_state(i, a, b);
        const std::string tag = "bell." + std::to_string(i.value());
        s.at_least(tag + ".psi_i=(1 x sigma_i)psi-", overlap(bell, apply_local(psi_minus, pauli(p, b))), 1.0 - s.tol());
        s.at_least(tag + ".psi_i=(sigma_i x 1)psi-", overlap(bell, apply_local(psi_minus, pauli(p, a))), 1.0 - s.tol());
        s.at_least(tag + ".psi-=(1 x sigma_i)psi_i", overlap(psi_minus, apply_local(bell, pauli(p, b))), 1.0 - s.tol());
        s.at_least(tag + ".psi-=(sigma_i x 1)psi_i", overlap(psi_minus, apply_local(bell, pauli(p, a))), 1.0 - s.tol());
    }
    const Matrix id = Matrix::Identity(2, 2);
    for (PauliIndex i : PauliIndex::all()) {
        const Matrix sq = pauli_matrix(i) * pauli_matrix(i);
        const double err = std::min((sq - id).norm(), (sq + id).norm());
        s.below("pauli." + std::to_string(i.value()) + ".square=+-1", err, s.tol());
        for (PauliIndex j : PauliIndex::all()) {
            if (j.value() <= i.value()) continue;
            const Matrix ij = pauli_matrix(i) * pauli_matrix(j);
            const Matrix ji = pauli_matrix(j) * pauli_matrix(i);
            const double e = std::min((ij - ji).norm(), (ij + ji).norm());
            s.below("pauli." + std::to_string(i.value()) + std::to_string(j.value()) + ".commute_or_anticommute", e,
                    s.tol());
        }
    }
    for (BellIndex i : BellIndex::all()) {
        for (BellIndex j : BellIndex::all()) {
            const double ip = std::abs(bell_state(i, a, b).inner(bell_state(j, a, b)));
            s.below("bell.orthonormal." + std::to_string(i.value()) + std::to_string(j.value()),
                    std::abs(ip - (i == j ? 1.0 : 0.0)), s.tol());
        }
    }
}

void lemma(Suite &s, std::uint64_t seed) {
    const QubitId q_in{"A", 0};
    const auto states = random_qubit_states(seed, 20, q_in);
    const QubitId out{"B", 0};
    for (BellIndex i : BellIndex::all()) {
        std::size_t branches = 0;
        double max_dev = 0.0;
        for (std::size_t k = 0; k < states.size(); ++k) {
            const RunResult r = run(teleport_script(states[k], i, "A", "B"));
            const PureState expected = apply_local(relabel(states[k], {{q_in, out}}), pauli(PauliIndex(i), out));
            s.at_least("lemma.resource" + std::to_string(i.value()) + ".state" + std::to_string(k) + ".min_fidelity",
                       min_fidelity(r, expected), 1.0 - s.tol());
            branches += r.branches.size();
            max_dev = std::max(max_dev, max_probability_deviation(r, 0.25));
        }
        s.equals("lemma.resource" + std::to_string(i.value()) + ".branch_count", static_cast<double>(branches), 80.0);
        s.at_most("lemma.resource" + std::to_string(i.value()) + ".max_branch_probability_deviation", max_dev, s.tol());
    }
}

void smolin(Suite &s) {
    const std::array<std::string, 4> parties{"A", "B", "C", "D"};
    const DensityOperator rho = smolin_state("A", "B", "C", "D").density();
    const auto sym = symmetry_report(rho, party_permutations(rho.reg(), {"A", "B", "C", "D"}));
    for (const auto &e : sym.entries) s.below("symmetry." + permutation_label(e.permutation), e.distance, s.tol());

    const auto certs = smolin_certificates(parties);
    for (const auto &c : certs) {
        s.below("certificate." + c.cut.label() + ".reconstruction_error", verify_certificate(rho, c.cut, c.certificate),
                s.tol());
        s.at_least("ppt." + c.cut.label() + ".min_eigenvalue", ppt_check(rho, c.cut, s.tol()).min_eigenvalue, -s.tol());
    }
    for (const auto &p : parties) {
        const auto cut = Bipartition::of_parties(rho.reg(), {p});
        s.below("ppt." + cut.label() + ".min_eigenvalue(computed; NPT)", ppt_check(rho, cut, s.tol()).min_eigenvalue,
                -s.tol());
    }
    for (std::size_t x = 0; x < 4; ++x) {
        for (std::size_t y = x + 1; y < 4; ++y) {
            const LoccScript script = unlock_script(parties, {parties[x], parties[y]});
            const RunResult r = run(script);
            s.at_least("unlock.helpers" + pair_name(parties[x], parties[y]) + ".min_fidelity",
                       min_fidelity(r, singlet(script.keep[0], script.keep[1])), 1.0 - s.tol());
        }
    }
    const LoccScript bare = unlock_script(parties, {"A", "B"}, false);
    double worst = 1.0;
    for (const auto &b : run(bare).branches) {
        worst = std::min(worst, fidelity_pure(b.final_state, bell_state(b.outcomes.front().second, {"C", 0}, {"D", 0})));
    }
    s.at_least("unlock.uncorrected_branch_is_psi_m.min_fidelity", worst, 1.0 - s.tol());
}

void m_checks(Suite &s) {
    const MixedEnsemble m = m_state();
    const DensityOperator rho = m.density();
    s.below("m.trace_error", std::abs(rho.trace() - cplx(1.0)), s.tol());
    const Eigen::VectorXd ev = eig_hermitian(rho.matrix());
    s.at_least("m.min_eigenvalue", ev(0), -s.tol());
    s.equals("m.rank", static_cast<double>((ev.array() > s.tol()).count()), 16.0);
    const std::vector<QubitId> de{{"D", 0}, {"E", 0}};
    s.below("m.marginal_DE_maximally_mixed",
            frobenius_distance(partial_trace(rho, de), DensityOperator::maximally_mixed(Register(de))), s.tol());
    const DensityOperator product =
        kron(smolin_state(QubitId{"A", 0}, QubitId{"C", 0}, QubitId{"B", 0}, QubitId{"D", 0}).density(),
             smolin_state(QubitId{"A", 1}, QubitId{"B", 1}, QubitId{"C", 1}, QubitId{"E", 0}).density());
    s.below("m.equals_kron_of_copies", frobenius_distance(rho, product), s.tol());
    const auto n = static_cast<Eigen::Index>(m.size());
    s.below("m.components_orthonormal", (m.gram() - Matrix::Identity(n, n)).norm(), s.tol());

    // D<->E with the copies exchanged: slots 0 and 1 of A, B, C swap too.
    QubitMap swap_de{{{"D", 0}, {"E", 0}}, {{"E", 0}, {"D", 0}}};
    for (const char *p : {"A", "B", "C"}) {
        swap_de[{p, 0}] = {p, 1};
        swap_de[{p, 1}] = {p, 0};
    }
    s.below("m.symmetry_D<->E_with_copies_swapped", frobenius_distance(rho, permute_qubits(rho, swap_de)), s.tol());
}

void superactivation(Suite &s) {
    const QubitId d{"D", 0}, e{"E", 0};
    const RunResult full = run(superactivation_script());
    s.equals("superactivation.branch_count", static_cast<double>(full.branches.size()), 1024.0);
    s.at_most("superactivation.probability_sum_error", std::abs(full.retained_probability() - 1.0), s.tol());
    s.at_most("superactivation.max_branch_probability_deviation", max_probability_deviation(full, 1.0 / 1024.0),
              s.tol());
    s.at_least("superactivation.min_fidelity_singlet_DE", min_fidelity(full, singlet(d, e)), 1.0 - s.tol());
    s.below("superactivation.average_DE_vs_singlet_projector",
            frobenius_distance(full.average_state(), DensityOperator::from_pure(singlet(d, e))), s.tol());

    const RunResult two = run(superactivation_script(2));
    const DensityOperator cc_de = smolin_state(QubitId{"C", 0}, d, QubitId{"C", 1}, e).density();
    s.below("superactivation.after_step2_equals_rho_CCDE", frobenius_distance(two.average_state(), cc_de), s.tol());

    // After A's teleportation each component (i, j) leaves (C0, B1) in
    // (sigma_i x 1)|Psi_j>.
    const LoccScript base = superactivation_script(1);
    const QubitId c0{"C", 0}, b1{"B", 1};
    double worst = 1.0;
    for (std::size_t k = 0; k < base.initial.size(); ++k) {
        const BellIndex i(static_cast<int>(k / 4)), j(static_cast<int>(k % 4));
        LoccScript one{MixedEnsemble({{1.0, base.initial.components()[k].state}}), base.steps, {c0, b1}, {}};
        const PureState expected = apply_local(bell_state(j, c0, b1), pauli(PauliIndex(i), c0));
        worst = std::min(worst, min_fidelity(run(one), expected));
    }
    s.at_least("superactivation.step1_picks_up_sigma_i.min_fidelity", worst, 1.0 - s.tol());
}

void ms_all_pairs(Suite &s) {
    const std::vector<std::string> parties{"A", "B", "C", "D", "E"};
    for (std::size_t x = 0; x < parties.size(); ++x) {
        for (std::size_t y = x + 1; y < parties.size(); ++y) {
            const RunResult r = run(superactivation_for_pair({parties[x], parties[y]}));
            const std::string tag = "ms.pair" + pair_name(parties[x], parties[y]);
            s.equals(tag + ".branch_count", static_cast<double>(r.branches.size()), 1024.0);
            s.at_least(tag + ".min_fidelity", min_fidelity(r, singlet({parties[x], 0}, {parties[y], 0})), 1.0 - s.tol());
        }
    }
}

void cuts(Suite &s) {
    const std::array<std::string, 4> parties{"A", "B", "C", "D"};
    const DensityOperator rho = smolin_state("A", "B", "C", "D").density();
    std::vector<Bipartition> smolin_cuts;
    for (const auto &c : smolin_certificates(parties)) smolin_cuts.push_back(c.cut);
    for (const auto &p : parties) smolin_cuts.push_back(Bipartition::of_parties(rho.reg(), {p}));
    for (const auto &r : cut_survey(rho, smolin_cuts, smolin_certificates(parties), s.tol())) {
        const std::string tag = "smolin.cut." + r.cut.label();
        if (r.cut.side_a().size() == 2) {
            s.below(tag + ".certificate_error", r.certificate_error.value_or(INFINITY), s.tol());
            s.at_least(tag + ".min_ppt_eigenvalue", r.min_ppt_eigenvalue, -s.tol());
        } else {
            s.below(tag + ".min_ppt_eigenvalue(computed; NPT)", r.min_ppt_eigenvalue, -s.tol());
        }
    }

    // Each factor of M separates its single-qubit party (D, resp. E) from
    // every other party by a certified cut.
    const std::array<std::array<std::string, 4>, 2> factors{{{"A", "C", "B", "D"}, {"A", "B", "C", "E"}}};
    for (const auto &f : factors) {
        const DensityOperator fr = smolin_state(f[0], f[1], f[2], f[3]).density();
        const auto certs = smolin_certificates(f);
        const std::string lone = f[3];
        for (std::size_t k = 0; k < 3; ++k) {
            const std::string other = f[k];
            double best = INFINITY;
            for (const auto &c : certs) {
                const bool lone_in_a = std::any_of(c.cut.side_a().begin(), c.cut.side_a().end(),
                                                   [&](const QubitId &q) { return q.party == lone; });
                const bool other_in_a = std::any_of(c.cut.side_a().begin(), c.cut.side_a().end(),
                                                    [&](const QubitId &q) { return q.party == other; });
                if (lone_in_a != other_in_a) best = std::min(best, verify_certificate(fr, c.cut, c.certificate));
            }
            s.below("factor" + f[0] + f[1] + f[2] + f[3] + ".certified_cut_separating_" + lone + "_" + other, best,
                    s.tol());
        }
    }

    // In M every cut separating D from E is NPT.
    const DensityOperator m = m_state().density();
    const std::vector<std::string> helpers{"A", "B", "C"};
    for (int mask = 0; mask < 8; ++mask) {
        std::vector<std::string> side{"D"};
        for (int h = 0; h < 3; ++h) {
            if (mask & (1 << h)) side.push_back(helpers[static_cast<std::size_t>(h)]);
        }
        const auto cut = Bipartition::of_parties(m.reg(), side);
        s.below("m.cut." + cut.label() + ".min_ppt_eigenvalue(NPT)", ppt_check(m, cut, s.tol()).min_eigenvalue,
                -s.tol());
    }

    const DensityOperator control = disconnected_fixture();
    const auto cut = Bipartition::of_parties(control.reg(), {"A", "B", "C", "D"});
    const auto cert = product_certificate(smolin_state("A", "B", "C", "D").density(),
                                          smolin_state("E", "F", "G", "H").density());
    const auto report = cut_survey(control, {cut}, {{cut, cert}}, s.tol()).front();
    s.below("control.cut." + cut.label() + ".certificate_error", report.certificate_error.value_or(INFINITY), s.tol());
    s.at_least("control.cut." + cut.label() + ".min_ppt_eigenvalue", report.min_ppt_eigenvalue, -s.tol());
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

}  // namespace

const std::vector<std::string> &verify_targets() {
    static const std::vector<std::string> targets{"bell-identities", "lemma",        "smolin", "m",
                                                  "superactivation", "ms-all-pairs", "cuts"};
    return targets;
}

Report verify(const std::string &target, const RunConfig &cfg) {
    cfg.validate();
    Suite s(cfg);
    if (target == "bell-identities") {
        bell_identities(s);
    } else if (target == "lemma") {
        lemma(s, cfg.seed);
    } else if (target == "smolin") {
        smolin(s);
    } else if (target == "m") {
        m_checks(s);
    } else if (target == "superactivation") {
        superactivation(s);
    } else if (target == "ms-all-pairs") {
        ms_all_pairs(s);
    } else if (target == "cuts") {
        cuts(s);
    } else {
        throw std::invalid_argument("unknown verify target '" + target + "'");
    }
    return Report{target, cfg, s.take()};
}

std::string render_text(const Report &r) {
    std::ostringstream out;
    std::size_t failed = 0;
    for (const auto &c : r.checks) {
        out << (c.pass ? "PASS " : "FAIL ") << c.name << "  measured=" << format_double(c.measured) << " "
            << c.comparison << " " << format_double(c.threshold) << "\n";
        failed += c.pass ? 0 : 1;
    }
    out << r.target << ": " << (r.checks.size() - failed) << "/" << r.checks.size() << " checks passed (tol "
        << format_double(r.config.tolerance) << ", seed " << r.config.seed << ")\n";
    return out.str();
}

json render_json(const Report &r) {
    json checks = json::array();
    for (const auto &c : r.checks) {
        checks.push_back({{"name", c.name},
                          {"measured", c.measured},
                          {"comparison", c.comparison},
                          {"threshold", c.threshold},
                          {"pass", c.pass}});
    }
    return json{{"schema_version", kSchemaVersion},
                {"kind", "verify_report"},
                {"target", r.target},
                {"tolerance", r.config.tolerance},
                {"seed", r.config.seed},
                {"passed", r.passed()},
                {"checks", std::move(checks)}};
}

}  // namespace superact

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

#include <gtest/gtest.h>

#include "superact/locc.hpp"
#include "test_util.hpp"

using namespace superact;

namespace {

const QubitId A{"A", 0}, B{"B", 0}, C{"C", 0}, D{"D", 0};

DensityOperator smolin_abcd() { return smolin_state("A", "B", "C", "D").density(); }

}  // namespace

TEST(bipartition, construction_and_label) {
    const Register reg{A, B, C, D};
    const Bipartition cut(reg, {C, A});
    EXPECT_EQ(cut.label(), "AC|BD");
    EXPECT_EQ(cut.swapped().label(), "BD|AC");
    EXPECT_THROW(Bipartition(reg, {}), std::invalid_argument);
    EXPECT_THROW(Bipartition(reg, {A, B, C, D}), std::invalid_argument);
    EXPECT_THROW(Bipartition(reg, {A, A}), std::invalid_argument);
    EXPECT_THROW(Bipartition(reg, {QubitId{"E", 0}}), std::invalid_argument);
    EXPECT_THROW(Bipartition::of_parties(reg, {"E"}), std::invalid_argument);
    EXPECT_EQ(Bipartition::of_parties(m_register(), {"A"}).side_a().size(), 2u);
}

TEST(ppt_check, singlet_is_npt_with_minus_half) {
    const auto rho = DensityOperator::from_pure(singlet(A, B));
    const auto r = ppt_check(rho, Bipartition(rho.reg(), {A}));
    EXPECT_EQ(r.verdict, PptVerdict::kNpt);
    EXPECT_NEAR(r.min_eigenvalue, -0.5, kAbsTol);
}

TEST(ppt_check, product_and_mixed_are_ppt) {
    const auto rho = DensityOperator::maximally_mixed(Register{A, B});
    EXPECT_EQ(ppt_check(rho, Bipartition(rho.reg(), {A})).verdict, PptVerdict::kPpt);
    EXPECT_NEAR(ppt_check(rho, Bipartition(rho.reg(), {A})).min_eigenvalue, 0.25, kAbsTol);
}

TEST(ppt_check, werner_threshold) {
    // p |singlet><singlet| + (1-p) I/4 is NPT exactly when p > 1/3.
    const auto s = DensityOperator::from_pure(singlet(A, B)).matrix();
    for (double p : {0.2, 0.3, 0.34, 0.5}) {
        const DensityOperator rho(Register{A, B}, p * s + (1 - p) * Matrix::Identity(4, 4) / 4.0);
        const auto r = ppt_check(rho, Bipartition(rho.reg(), {A}));
        EXPECT_NEAR(r.min_eigenvalue, (1 - 3 * p) / 4.0, kAbsTol);
        EXPECT_EQ(r.verdict, p > 1.0 / 3.0 ? PptVerdict::kNpt : PptVerdict::kPpt);
    }
}

TEST(ppt_check, side_choice_does_not_matter) {
    std::mt19937_64 rng(5);
    const auto reg = superact::testing::qubits(4);
    for (int trial = 0; trial < 20; ++trial) {
        const auto rho = superact::testing::random_density(reg, rng);
        const Bipartition cut(reg, {reg[0], reg[2]});
        EXPECT_NEAR(ppt_check(rho, cut).min_eigenvalue, ppt_check(rho, cut.swapped()).min_eigenvalue, kAbsTol);
    }
}

TEST(ppt_check, matches_oracle_on_random_states) {
    std::mt19937_64 rng(9);
    const auto reg = superact::testing::qubits(3);
    for (int trial = 0; trial < 10; ++trial) {
        const auto rho = superact::testing::random_density(reg, rng);
        const auto pt = oracle::partial_transpose(superact::testing::to_oracle(rho.matrix()), 3, {1});
        EXPECT_NEAR(ppt_check(rho, Bipartition(reg, {reg[1]})).min_eigenvalue, oracle::jacobi_eigenvalues(pt).front(),
                    1e-10);
    }
}

TEST(smolin_cuts, pair_cuts_are_ppt_with_exact_spectrum) {
    const auto rho = smolin_abcd();
    for (const auto &side : std::vector<std::vector<QubitId>>{{A, B}, {A, C}, {A, D}}) {
        const auto pt = partial_transpose(rho, side);
        const auto ev = eig_hermitian(pt);
        for (Eigen::Index k = 0; k < 12; ++k) EXPECT_NEAR(ev(k), 0.0, kAbsTol);
        for (Eigen::Index k = 12; k < 16; ++k) EXPECT_NEAR(ev(k), 0.25, kAbsTol);
        EXPECT_LT((pt - rho.matrix()).norm(), kAbsTol);
    }
}

TEST(smolin_cuts, single_party_cuts_are_npt) {
    const auto rho = smolin_abcd();
    for (const auto &q : {A, B, C, D}) {
        const auto r = ppt_check(rho, Bipartition(rho.reg(), {q}));
        EXPECT_EQ(r.verdict, PptVerdict::kNpt);
        EXPECT_NEAR(r.min_eigenvalue, -0.125, kAbsTol);
    }
}

TEST(certificate, smolin_pair_cuts_verify) {
    const auto rho = smolin_abcd();
    for (const auto &rc : smolin_certificates({"A", "B", "C", "D"})) {
        EXPECT_LT(verify_certificate(rho, rc.cut, rc.certificate), kCertTol) << rc.cut.label();
        EXPECT_LT(verify_certificate(rho, rc.cut.swapped(), SeparableDecomposition{[&] {
                                         std::vector<CertificateTerm> ts;
                                         for (const auto &t : rc.certificate.terms) ts.push_back({t.probability, t.side_b, t.side_a});
                                         return ts;
                                     }()}),
                  kCertTol);
    }
}

TEST(certificate, error_is_frobenius_distance) {
    const auto rho = smolin_abcd();
    const auto relabeled = smolin_certificate(A, B, C, D).relabeled(QubitMap{{B, C}, {C, B}});
    EXPECT_GT(verify_certificate(rho, Bipartition(rho.reg(), {A, B}),
                                 SeparableDecomposition{{{1.0, DensityOperator::maximally_mixed(Register{A, B}),
                                                          DensityOperator::maximally_mixed(Register{C, D})}}}),
              0.1);
    EXPECT_LT(verify_certificate(rho, Bipartition(rho.reg(), {A, C}), relabeled), kCertTol);
}

TEST(certificate, malformed_terms_report_index) {
    const auto rho = smolin_abcd();
    const Bipartition cut(rho.reg(), {A, B});
    auto cert = smolin_certificate(A, B, C, D);

    auto bad = cert;
    bad.terms[2].probability = -0.25;
    try {
        verify_certificate(rho, cut, bad);
        FAIL() << "expected CertificateError";
    } catch (const CertificateError &e) {
        EXPECT_EQ(e.term(), 2u);
    }

    bad = cert;
    bad.terms[1].side_a = DensityOperator::from_pure(singlet(A, C));
    try {
        verify_certificate(rho, cut, bad);
        FAIL() << "expected CertificateError";
    } catch (const CertificateError &e) {
        EXPECT_EQ(e.term(), 1u);
    }

    bad = cert;
    bad.terms.pop_back();
    EXPECT_THROW(verify_certificate(rho, cut, bad), CertificateError);
    EXPECT_THROW(verify_certificate(rho, cut, SeparableDecomposition{}), CertificateError);
}

TEST(certificate, transport_under_party_permutations) {
    // A certificate for one cut, moved by a symmetry of rho, certifies the image cut.
    const auto rho = smolin_abcd();
    const auto base = smolin_certificates({"A", "B", "C", "D"}).front();
    for (const auto &perm : party_permutations(rho.reg(), {"A", "B", "C", "D"})) {
        std::vector<QubitId> side;
        for (const auto &q : base.cut.side_a()) side.push_back(perm.at(q));
        EXPECT_LT(verify_certificate(rho, Bipartition(rho.reg(), side), base.certificate.relabeled(perm)), kCertTol)
            << permutation_label(perm);
    }
}

TEST(symmetry, smolin_report) {
    const auto rho = smolin_abcd();
    const auto perms = party_permutations(rho.reg(), {"D", "C", "B", "A"});
    ASSERT_EQ(perms.size(), 24u);
    EXPECT_EQ(permutation_label(perms.front()), "id");
    EXPECT_LT(symmetry_report(rho, perms).max_distance(), kAbsTol);
    EXPECT_THROW(party_permutations(rho.reg(), {"A", "A"}), std::invalid_argument);
}

TEST(symmetry, asymmetric_state_detected) {
    const auto rho = kron(DensityOperator::from_pure(singlet(A, B)), DensityOperator::maximally_mixed(Register{C, D}));
    EXPECT_GT(symmetry_report(rho, party_permutations(rho.reg(), {"A", "B", "C", "D"})).max_distance(), 0.1);
}

TEST(cut_survey, smolin_all_seven_cuts) {
    const auto rho = smolin_abcd();
    std::vector<Bipartition> cuts;
    for (const auto &q : {A, B, C, D}) cuts.emplace_back(rho.reg(), std::vector<QubitId>{q});
    for (const auto &q : {B, C, D}) cuts.emplace_back(rho.reg(), std::vector<QubitId>{A, q});
    const auto reports = cut_survey(rho, cuts, smolin_certificates({"A", "B", "C", "D"}));
    ASSERT_EQ(reports.size(), 7u);
    int certified = 0;
    for (const auto &r : reports) {
        if (r.cut.side_a().size() == 2) {
            EXPECT_TRUE(r.certified()) << r.cut.label();
            EXPECT_EQ(r.verdict, PptVerdict::kPpt);
            ++certified;
        } else {
            EXPECT_FALSE(r.certificate_error.has_value());
            EXPECT_EQ(r.verdict, PptVerdict::kNpt);
        }
    }
    EXPECT_EQ(certified, 3);
    for (std::size_t k = 1; k < reports.size(); ++k) EXPECT_LT(reports[k - 1].cut.label(), reports[k].cut.label());
}

TEST(cut_survey, wrong_certificate_is_not_certified) {
    const auto rho = DensityOperator::from_pure(singlet(A, B));
    const Bipartition cut(rho.reg(), {A});
    const auto bogus = product_certificate(DensityOperator::from_pure(PureState::basis(Register{A}, 0)),
                                           DensityOperator::from_pure(PureState::basis(Register{B}, 1)));
    const auto r = cut_survey(rho, {cut}, {{cut, bogus}});
    ASSERT_EQ(r.size(), 1u);
    EXPECT_FALSE(r.front().certified());
    EXPECT_EQ(r.front().verdict, PptVerdict::kNpt);
}

TEST(m_state, cuts_separating_d_from_e_are_npt) {
    const auto rho = m_state().density();
    for (int mask = 0; mask < 8; ++mask) {
        std::vector<std::string> side{"D"};
        const char *helpers[] = {"A", "B", "C"};
        for (int k = 0; k < 3; ++k)
            if (mask & (1 << k)) side.push_back(helpers[k]);
        const auto r = ppt_check(rho, Bipartition::of_parties(rho.reg(), side));
        EXPECT_EQ(r.verdict, PptVerdict::kNpt);
    }
}

TEST(negative_control, disconnected_product_is_separable_across_groups) {
    const auto rho = disconnected_fixture();
    const auto cut = Bipartition::of_parties(rho.reg(), {"A", "B", "C", "D"});
    const auto cert = product_certificate(smolin_state("A", "B", "C", "D").density(),
                                          smolin_state("E", "F", "G", "H").density());
    const auto r = cut_survey(rho, {cut}, {{cut, cert}});
    EXPECT_TRUE(r.front().certified());
    EXPECT_EQ(r.front().verdict, PptVerdict::kPpt);
}

TEST(negative_control, unlock_across_groups_yields_nothing) {
    // Helpers E,F measure their Bell pair; the A..D block is unaffected and A,B stay unentangled.
    const auto ens = kron(smolin_state("A", "B", "C", "D"), smolin_state("E", "F", "G", "H"));
    const QubitId e{"E", 0}, f{"F", 0};
    const Coalition ef(std::vector<std::string>{"E", "F"});
    LoccScript s{ens, {BellMeasure{ef, e, f, "m"}}, {A, B}, {ef}};
    const auto res = run(s);
    const auto avg = res.average_state();
    EXPECT_NEAR(fidelity_pure(avg, singlet(A, B)), 0.25, kAbsTol);
    EXPECT_EQ(ppt_check(avg, Bipartition(avg.reg(), {A})).verdict, PptVerdict::kPpt);
}

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

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "superact/analysis.hpp"
#include "test_util.hpp"

using namespace superact;
using superact::testing::max_abs_diff;

namespace {
const QubitId A{"A", 0}, B{"B", 0}, C{"C", 0}, D{"D", 0};
}

TEST(bell_state, singlet_amplitudes) {
    const double r = 1.0 / std::sqrt(2.0);
    Vector expected(4);
    expected << 0, r, -r, 0;
    EXPECT_LT((bell_state(BellIndex(0), A, B).amplitudes() - expected).norm(), 1e-16);
}

TEST(bell_state, phi_plus_amplitudes) {
    const double r = 1.0 / std::sqrt(2.0);
    Vector expected(4);
    expected << r, 0, 0, r;
    EXPECT_LT((bell_state(BellIndex(2), A, B).amplitudes() - expected).norm(), 1e-16);
}

TEST(bell_state, orthonormal_basis) {
    for (BellIndex i : BellIndex::all()) {
        for (BellIndex j : BellIndex::all()) {
            EXPECT_NEAR(std::abs(bell_state(i, A, B).inner(bell_state(j, A, B))), i == j ? 1.0 : 0.0, 1e-15);
        }
    }
}

TEST(bell_state, errors) {
    EXPECT_THROW(bell_state(BellIndex(0), A, A), std::invalid_argument);
    EXPECT_THROW(BellIndex(4), std::invalid_argument);
    EXPECT_THROW(BellIndex(-1), std::invalid_argument);
    EXPECT_EQ(BellIndex(0).name(), "Psi-");
    EXPECT_EQ(BellIndex(3).name(), "Phi-");
}

TEST(pauli, literal_matrices) {
    EXPECT_EQ(pauli_matrix(PauliIndex(0)), Matrix::Identity(2, 2));
    Matrix z(2, 2);
    z << 1, 0, 0, -1;
    EXPECT_EQ(pauli_matrix(PauliIndex(1)), z);
    Matrix s2(2, 2);
    s2 << 0, -1, 1, 0;
    EXPECT_EQ(pauli_matrix(PauliIndex(2)), s2);
    Matrix x(2, 2);
    x << 0, 1, 1, 0;
    EXPECT_EQ(pauli_matrix(PauliIndex(3)), x);
}

TEST(pauli, sigma2_squares_to_minus_identity) {
    // [[0,-1],[1,0]]^2 = [[-1,0],[0,-1]] by direct multiplication.
    const Matrix sq = pauli_matrix(PauliIndex(2)) * pauli_matrix(PauliIndex(2));
    EXPECT_EQ(sq, -Matrix::Identity(2, 2));
}

TEST(pauli, algebra) {
    for (PauliIndex i : PauliIndex::all()) {
        const Matrix s = pauli_matrix(i);
        EXPECT_LT((s.adjoint() * s - Matrix::Identity(2, 2)).norm(), 1e-15);
        const Matrix sq = s * s;
        EXPECT_TRUE((sq - Matrix::Identity(2, 2)).norm() < 1e-15 || (sq + Matrix::Identity(2, 2)).norm() < 1e-15);
        for (PauliIndex j : PauliIndex::all()) {
            const Matrix ij = s * pauli_matrix(j), ji = pauli_matrix(j) * s;
            EXPECT_TRUE((ij - ji).norm() < 1e-15 || (ij + ji).norm() < 1e-15);
        }
    }
}

TEST(bell_state, pauli_identities_both_forms) {
    const PureState psi = singlet(A, B);
    for (BellIndex i : BellIndex::all()) {
        const PauliIndex p(i);
        EXPECT_NEAR(overlap(bell_state(i, A, B), apply_local(psi, pauli(p, B))), 1.0, kAbsTol);
        EXPECT_NEAR(overlap(bell_state(i, A, B), apply_local(psi, pauli(p, A))), 1.0, kAbsTol);
        EXPECT_NEAR(overlap(psi, apply_local(bell_state(i, A, B), pauli(p, B))), 1.0, kAbsTol);
        EXPECT_NEAR(overlap(psi, apply_local(bell_state(i, A, B), pauli(p, A))), 1.0, kAbsTol);
    }
}

TEST(ensemble, validation) {
    const PureState s = singlet(A, B);
    EXPECT_THROW(MixedEnsemble({}), std::invalid_argument);
    EXPECT_THROW(MixedEnsemble({{0.5, s}}), std::invalid_argument);
    EXPECT_THROW(MixedEnsemble({{0.5, s}, {0.5, singlet(A, C)}}), std::invalid_argument);
    EXPECT_THROW(MixedEnsemble({{1.5, s}, {-0.5, s}}), std::invalid_argument);
    EXPECT_NO_THROW(MixedEnsemble({{0.5, s}, {0.5, s}}));
}

TEST(smolin_state, dense_matches_oracle) {
    const auto rho = smolin_state("A", "B", "C", "D").density();
    EXPECT_LT(max_abs_diff(rho.matrix(), oracle::smolin()), 1e-15);
}

TEST(smolin_state, trace_and_rank) {
    const auto rho = smolin_state("A", "B", "C", "D").density();
    EXPECT_NEAR(rho.trace().real(), 1.0, kAbsTol);
    const auto ev = oracle::jacobi_eigenvalues(superact::testing::to_oracle(rho.matrix()));
    EXPECT_EQ(std::count_if(ev.begin(), ev.end(), [](double v) { return v > kAbsTol; }), 4);
}

TEST(smolin_state, pairing_independent) {
    const auto abcd = smolin_state("A", "B", "C", "D").density();
    EXPECT_LT(frobenius_distance(abcd, smolin_state("A", "C", "B", "D").density()), kAbsTol);
    EXPECT_LT(frobenius_distance(abcd, smolin_state("A", "D", "B", "C").density()), kAbsTol);
}

TEST(smolin_state, singlet_pair_overlap) {
    const auto rho = smolin_state("A", "B", "C", "D").density();
    EXPECT_NEAR(fidelity_pure(rho, kron(singlet(A, B), singlet(C, D))), 0.25, 1e-15);
}

TEST(smolin_state, invariant_under_all_24_party_permutations) {
    const auto rho = smolin_state("A", "B", "C", "D").density();
    const auto perms = party_permutations(rho.reg(), {"A", "B", "C", "D"});
    ASSERT_EQ(perms.size(), 24u);
    for (const auto &p : perms) EXPECT_LT(frobenius_distance(rho, permute_qubits(rho, p)), kAbsTol);
}

TEST(smolin_state, components_orthonormal_and_duplicates_rejected) {
    const auto e = smolin_state("A", "B", "C", "D");
    EXPECT_LT((e.gram() - Matrix::Identity(4, 4)).norm(), kAbsTol);
    EXPECT_THROW(smolin_state("A", "B", "A", "D"), std::invalid_argument);
}

TEST(m_state, shape_and_validity) {
    const auto m = m_state();
    EXPECT_EQ(m.size(), 16u);
    EXPECT_EQ(m.reg(), m_register());
    EXPECT_EQ(m.reg().size(), 8u);
    const auto rho = m.density();
    EXPECT_EQ(rho.dim(), 256u);
    EXPECT_NEAR(rho.trace().real(), 1.0, kAbsTol);
    EXPECT_GE(rho.min_eigenvalue(), -kAbsTol);
    // Party Hilbert space dimensions 4, 4, 4, 2, 2.
    for (const char *p : {"A", "B", "C"}) EXPECT_EQ(m.reg().qubits_of(p).size(), 2u);
    for (const char *p : {"D", "E"}) EXPECT_EQ(m.reg().qubits_of(p).size(), 1u);
}

TEST(m_state, de_marginal_by_summation) {
    // Summation oracle: trace each component down to (D, E) and average.
    const auto m = m_state();
    const std::vector<QubitId> de{{"D", 0}, {"E", 0}};
    Matrix acc = Matrix::Zero(4, 4);
    for (const auto &c : m.components()) {
        const auto full = superact::testing::to_oracle(DensityOperator::from_pure(c.state).matrix());
        acc += c.probability * superact::testing::from_oracle(oracle::partial_trace(full, 8, {0, 1, 2, 3, 4, 5}));
    }
    EXPECT_LT((acc - Matrix::Identity(4, 4) / 4.0).norm(), 1e-14);
    EXPECT_LT((partial_trace(m.density(), de).matrix() - acc).norm(), 1e-14);
}

TEST(m_state, rank_16_and_orthogonal_components) {
    const auto m = m_state();
    EXPECT_LT((m.gram() - Matrix::Identity(16, 16)).norm(), kAbsTol);
    const auto ev = eig_hermitian(m.density().matrix());
    EXPECT_EQ((ev.array() > kAbsTol).count(), 16);
}

TEST(m_state, equals_kron_of_the_two_copies) {
    const auto first = smolin_state(QubitId{"A", 0}, QubitId{"C", 0}, QubitId{"B", 0}, QubitId{"D", 0}).density();
    const auto second = smolin_state(QubitId{"A", 1}, QubitId{"B", 1}, QubitId{"C", 1}, QubitId{"E", 0}).density();
    EXPECT_LT(frobenius_distance(m_state().density(), kron(first, second)), kAbsTol);
}

TEST(ms_descriptor, five_copies_on_distinct_four_subsets) {
    const auto ms = ms_descriptor();
    std::set<std::string> omitted;
    for (const auto &c : ms.copies) {
        std::set<std::string> ps(c.parties.begin(), c.parties.end());
        ASSERT_EQ(ps.size(), 4u);
        for (const char *p : {"A", "B", "C", "D", "E"}) {
            if (!ps.contains(p)) omitted.insert(p);
        }
    }
    EXPECT_EQ(omitted.size(), 5u);
    EXPECT_EQ(ms.copies[0].label(), "ABCD");
    EXPECT_EQ(ms.copies[4].label(), "BCDE");
}

TEST(ms_reduction, de_pair_is_identity_relabeling) {
    const auto red = ms_reduction(ms_descriptor(), {"D", "E"});
    for (const auto &[from, to] : red.party_map) EXPECT_EQ(from, to);
    EXPECT_EQ(ms_descriptor().copies[red.copies[0]].label(), "ABCD");
    EXPECT_EQ(ms_descriptor().copies[red.copies[1]].label(), "ABCE");
}

TEST(ms_reduction, every_pair_has_a_valid_relabeling) {
    const std::vector<std::string> ps{"A", "B", "C", "D", "E"};
    for (std::size_t x = 0; x < 5; ++x) {
        for (std::size_t y = x + 1; y < 5; ++y) {
            const auto red = ms_reduction(ms_descriptor(), {ps[x], ps[y]});
            const auto &ms = ms_descriptor();
            EXPECT_NE(red.copies[0], red.copies[1]);
            EXPECT_FALSE(ms.copies[red.copies[0]].contains(ps[y]));
            EXPECT_FALSE(ms.copies[red.copies[1]].contains(ps[x]));
            EXPECT_EQ(red.party_map.at("D"), ps[x]);
            EXPECT_EQ(red.party_map.at("E"), ps[y]);
            // Relabeled M is exactly the tensor product of the two selected copies.
            const auto relabeled = relabel(m_state().density(), red.qubit_map());
            const auto &c0 = ms.copies[red.copies[0]].parties;
            const auto &c1 = ms.copies[red.copies[1]].parties;
            const auto h = [&](const char *p) { return red.party_map.at(p); };
            const auto copy0 = smolin_state(c0[0], c0[1], c0[2], c0[3]).density();
            QubitMap to_slot1;
            for (const auto &p : {h("A"), h("B"), h("C")}) to_slot1[{p, 0}] = {p, 1};
            const auto copy1 = relabel(smolin_state(c1[0], c1[1], c1[2], c1[3]).density(), to_slot1);
            EXPECT_LT(frobenius_distance(relabeled, kron(copy0, copy1)), kAbsTol) << ps[x] << ps[y];
        }
    }
}

TEST(ms_reduction, invalid_pairs) {
    EXPECT_THROW(ms_reduction(ms_descriptor(), {"D", "D"}), std::invalid_argument);
    EXPECT_THROW(ms_reduction(ms_descriptor(), {"D", "F"}), std::invalid_argument);
}

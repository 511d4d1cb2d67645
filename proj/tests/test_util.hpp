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

#include <random>

#include "oracles.hpp"
#include "superact/tensor.hpp"

namespace superact::testing {

inline oracle::Mat to_oracle(const Matrix &m) {
    oracle::Mat out(static_cast<std::size_t>(m.rows()));
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) out(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = m(i, j);
    return out;
}

inline Matrix from_oracle(const oracle::Mat &m) {
    const auto n = static_cast<Eigen::Index>(m.n);
    Matrix out(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) out(i, j) = m(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
    return out;
}

inline double max_abs_diff(const Matrix &a, const oracle::Mat &b) { return (a - from_oracle(b)).cwiseAbs().maxCoeff(); }

/// Register of `n` qubits named q0, q1, ... (party "q", slot k).
inline Register qubits(std::size_t n, const std::string &party = "q") {
    std::vector<QubitId> qs;
    for (std::size_t k = 0; k < n; ++k) qs.push_back({party, static_cast<int>(k)});
    return Register(std::move(qs));
}

inline PureState random_pure(const Register &reg, std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    Vector v(static_cast<Eigen::Index>(reg.dim()));
    for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = cplx(g(rng), g(rng));
    return PureState(reg, v).normalized();
}

/// Random mixed state from a Ginibre matrix G: rho = G G^dagger / tr.
inline DensityOperator random_density(const Register &reg, std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    const auto d = static_cast<Eigen::Index>(reg.dim());
    Matrix G(d, d);
    for (Eigen::Index i = 0; i < d; ++i)
        for (Eigen::Index j = 0; j < d; ++j) G(i, j) = cplx(g(rng), g(rng));
    Matrix rho = G * G.adjoint();
    rho /= rho.trace();
    rho = (rho + rho.adjoint()) / 2.0;
    return DensityOperator(reg, rho);
}

}  // namespace superact::testing

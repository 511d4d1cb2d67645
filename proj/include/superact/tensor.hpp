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

// Dense complex linear algebra over registers of labeled qubits.
//
// Basis convention: register position 0 is the most significant bit of a
// basis-state index, i.e. index = sum_k bit_k << (n - 1 - k) for |q0 q1 ... q_{n-1}>.
// Every routine in the library follows this convention.

#include <complex>
#include <cstddef>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace superact {

using cplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Equality / positivity tolerance used throughout.
inline constexpr double kAbsTol = 1e-9;
/// Largest register that may be materialized densely (2^10 = 1024).
inline constexpr std::size_t kMaxQubits = 10;

struct QubitId {
    std::string party;
    int slot = 0;

    auto operator<=>(const QubitId &) const = default;
    bool operator==(const QubitId &) const = default;

    /// "A" for slot 0, "A1" for slot 1, ...
    std::string str() const;
};

/// Maps qubit identities to qubit identities (used for relabelings and permutations).
using QubitMap = std::map<QubitId, QubitId>;

class Register {
   public:
    Register() = default;
    explicit Register(std::vector<QubitId> qubits);
    Register(std::initializer_list<QubitId> qubits) : Register(std::vector<QubitId>(qubits)) {}

    std::size_t size() const { return qubits_.size(); }
    std::size_t dim() const { return std::size_t{1} << qubits_.size(); }
    const std::vector<QubitId> &qubits() const { return qubits_; }
    const QubitId &operator[](std::size_t k) const { return qubits_[k]; }

    bool contains(const QubitId &q) const;
    /// Position of q; throws std::invalid_argument if absent.
    std::size_t index_of(const QubitId &q) const;
    /// Distinct parties in order of first appearance.
    std::vector<std::string> parties() const;
    /// Qubits held by `party`, in register order.
    std::vector<QubitId> qubits_of(const std::string &party) const;
    /// True if both registers hold the same qubits, in any order.
    bool same_qubits(const Register &other) const;
    /// Bit mask (in basis-index space) of the given qubits.
    std::size_t mask_of(std::span<const QubitId> qs) const;

    Register concat(const Register &other) const;
    Register relabeled(const QubitMap &map) const;

    std::string str() const;

    bool operator==(const Register &) const = default;

   private:
    std::vector<QubitId> qubits_;
};

class PureState {
   public:
    PureState(Register reg, Vector amplitudes);

    /// Computational basis state |index> on `reg`.
    static PureState basis(Register reg, std::size_t index);

    const Register &reg() const { return reg_; }
    const Vector &amplitudes() const { return amps_; }
    std::size_t dim() const { return static_cast<std::size_t>(amps_.size()); }

    double norm() const { return amps_.norm(); }
    PureState normalized() const;
    /// <this|other>; registers must be identical (same order).
    cplx inner(const PureState &other) const;

   private:
    Register reg_;
    Vector amps_;
};

class DensityOperator {
   public:
    /// Checks dimension, Hermiticity and unit trace. Positivity is not
    /// checked here; see `checked` and `min_eigenvalue`.
    DensityOperator(Register reg, Matrix matrix);

    /// Full validation including positivity (eigendecomposition).
    static DensityOperator checked(Register reg, Matrix matrix);
    static DensityOperator from_pure(const PureState &s);
    static DensityOperator maximally_mixed(Register reg);

    const Register &reg() const { return reg_; }
    const Matrix &matrix() const { return m_; }
    std::size_t dim() const { return static_cast<std::size_t>(m_.rows()); }

    cplx trace() const { return m_.trace(); }
    double purity() const;
    double min_eigenvalue() const;

   private:
    Register reg_;
    Matrix m_;
};

class LocalOperator {
   public:
    LocalOperator(std::vector<QubitId> targets, Matrix matrix);

    const std::vector<QubitId> &targets() const { return targets_; }
    const Matrix &matrix() const { return m_; }

   private:
    std::vector<QubitId> targets_;
    Matrix m_;
};

PureState kron(const PureState &a, const PureState &b);
DensityOperator kron(const DensityOperator &a, const DensityOperator &b);

PureState apply_local(const PureState &s, const LocalOperator &op);

/// Reorders the tensor factors so that the register becomes `order`
/// (same qubit set). The physical state is unchanged.
PureState align(const PureState &s, const Register &order);
DensityOperator align(const DensityOperator &rho, const Register &order);

/// Renames qubits. `map` must be injective on the register; qubits not in
/// the map keep their identity.
PureState relabel(const PureState &s, const QubitMap &map);
DensityOperator relabel(const DensityOperator &rho, const QubitMap &map);

/// Moves the content of qubit q onto qubit perm(q), keeping the register.
/// `perm` must be a bijection of the register's qubits (identity on absent keys).
PureState permute_qubits(const PureState &s, const QubitMap &perm);
DensityOperator permute_qubits(const DensityOperator &rho, const QubitMap &perm);

/// Keeps `keep` (non-empty), result ordered as in the original register.
DensityOperator partial_trace(const DensityOperator &rho, std::span<const QubitId> keep);
/// Reduced state of a pure state, computed without forming |s><s|.
DensityOperator reduced_state(const PureState &s, std::span<const QubitId> keep);

Matrix partial_transpose(const DensityOperator &rho, std::span<const QubitId> part);
Matrix partial_transpose(const Register &reg, const Matrix &m, std::span<const QubitId> part);

/// Largest |m - m^dagger| entry.
double hermiticity_error(const Matrix &m);

/// Real spectrum of a Hermitian matrix, ascending. The input is symmetrized
/// as (m + m^dagger)/2; throws if it is further than kAbsTol from Hermitian.
Eigen::VectorXd eig_hermitian(const Matrix &m);

/// Eigenvector of the largest eigenvalue.
Vector principal_eigenvector(const Matrix &m);

/// <target|rho|target>, aligning target to rho's register first.
double fidelity_pure(const DensityOperator &rho, const PureState &target);
/// |<a|b>|^2 after alignment; phase-insensitive state comparison.
double overlap(const PureState &a, const PureState &b);

double frobenius_distance(const DensityOperator &a, const DensityOperator &b);

}  // namespace superact

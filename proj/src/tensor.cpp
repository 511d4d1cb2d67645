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

#include "superact/tensor.hpp"

#include <algorithm>
#include <set>

#include <Eigen/Eigenvalues>

namespace superact {

namespace {

std::size_t bit_of(std::size_t n, std::size_t pos) { return std::size_t{1} << (n - 1 - pos); }

// perm[i] = old basis index that lands on new basis index i, when the
// qubits are reordered from `from` into `to`.
std::vector<std::size_t> reorder_table(const Register &from, const Register &to) {
    if (!from.same_qubits(to)) {
        throw std::invalid_argument("register mismatch: " + from.str() + " vs " + to.str());
    }
    const std::size_t n = from.size();
    std::vector<std::size_t> src_bit(n);
    for (std::size_t k = 0; k < n; ++k) {
        src_bit[k] = bit_of(n, from.index_of(to[k]));
    }
    std::vector<std::size_t> table(from.dim());
    for (std::size_t i = 0; i < table.size(); ++i) {
        std::size_t old = 0;
        for (std::size_t k = 0; k < n; ++k) {
            if (i & bit_of(n, k)) old |= src_bit[k];
        }
        table[i] = old;
    }
    return table;
}

// Bit masks of the listed qubits, one per qubit, in the order given.
std::vector<std::size_t> bits_of(const Register &reg, std::span<const QubitId> qs) {
    std::vector<std::size_t> out;
    out.reserve(qs.size());
    for (const auto &q : qs) out.push_back(bit_of(reg.size(), reg.index_of(q)));
    return out;
}

// Spreads a k-bit local index onto the given register bits (MSB first).
std::size_t scatter(std::size_t local, const std::vector<std::size_t> &bits) {
    std::size_t out = 0;
    const std::size_t k = bits.size();
    for (std::size_t j = 0; j < k; ++j) {
        if (local & (std::size_t{1} << (k - 1 - j))) out |= bits[j];
    }
    return out;
}

void check_unique(std::span<const QubitId> qs, const char *what) {
    std::set<QubitId> seen;
    for (const auto &q : qs) {
        if (!seen.insert(q).second) {
            throw std::invalid_argument(std::string("duplicate qubit in ") + what + ": " + q.str());
        }
    }
}

}  // namespace

std::string QubitId::str() const { return slot == 0 ? party : party + std::to_string(slot); }

Register::Register(std::vector<QubitId> qubits) : qubits_(std::move(qubits)) {
    check_unique(qubits_, "register");
    for (const auto &q : qubits_) {
        if (q.slot < 0) throw std::invalid_argument("negative slot for qubit " + q.party);
    }
    if (qubits_.size() > kMaxQubits) {
        throw std::invalid_argument("register of " + std::to_string(qubits_.size()) +
                                    " qubits exceeds the dense limit of " + std::to_string(kMaxQubits));
    }
}

bool Register::contains(const QubitId &q) const {
    return std::find(qubits_.begin(), qubits_.end(), q) != qubits_.end();
}

std::size_t Register::index_of(const QubitId &q) const {
    auto it = std::find(qubits_.begin(), qubits_.end(), q);
    if (it == qubits_.end()) throw std::invalid_argument("qubit " + q.str() + " not in register " + str());
    return static_cast<std::size_t>(it - qubits_.begin());
}

std::vector<std::string> Register::parties() const {
    std::vector<std::string> out;
    for (const auto &q : qubits_) {
        if (std::find(out.begin(), out.end(), q.party) == out.end()) out.push_back(q.party);
    }
    return out;
}

std::vector<QubitId> Register::qubits_of(const std::string &party) const {
    std::vector<QubitId> out;
    for (const auto &q : qubits_) {
        if (q.party == party) out.push_back(q);
    }
    return out;
}

bool Register::same_qubits(const Register &other) const {
    if (size() != other.size()) return false;
    return std::all_of(qubits_.begin(), qubits_.end(), [&](const QubitId &q) { return other.contains(q); });
}

std::size_t Register::mask_of(std::span<const QubitId> qs) const {
    std::size_t m = 0;
    for (const auto &q : qs) m |= bit_of(size(), index_of(q));
    return m;
}

Register Register::concat(const Register &other) const {
    std::vector<QubitId> qs = qubits_;
    qs.insert(qs.end(), other.qubits_.begin(), other.qubits_.end());
    return Register(std::move(qs));
}

Register Register::relabeled(const QubitMap &map) const {
    std::vector<QubitId> qs;
    qs.reserve(qubits_.size());
    for (const auto &q : qubits_) {
        auto it = map.find(q);
        qs.push_back(it == map.end() ? q : it->second);
    }
    return Register(std::move(qs));
}

std::string Register::str() const {
    std::string s = "[";
    for (std::size_t k = 0; k < qubits_.size(); ++k) {
        if (k) s += ",";
        s += qubits_[k].str();
    }
    return s + "]";
}

PureState::PureState(Register reg, Vector amplitudes) : reg_(std::move(reg)), amps_(std::move(amplitudes)) {
    if (static_cast<std::size_t>(amps_.size()) != reg_.dim()) {
        throw std::invalid_argument("amplitude vector of length " + std::to_string(amps_.size()) +
                                    " does not match register " + reg_.str());
    }
}

PureState PureState::basis(Register reg, std::size_t index) {
    Vector v = Vector::Zero(static_cast<Eigen::Index>(reg.dim()));
    if (index >= reg.dim()) throw std::invalid_argument("basis index out of range");
    v(static_cast<Eigen::Index>(index)) = 1.0;
    return PureState(std::move(reg), std::move(v));
}

PureState PureState::normalized() const {
    const double n = norm();
    if (n <= 0.0) throw std::invalid_argument("cannot normalize the zero vector");
    return PureState(reg_, amps_ / n);
}

cplx PureState::inner(const PureState &other) const {
    if (!(reg_ == other.reg_)) throw std::invalid_argument("inner product across different registers");
    return amps_.dot(other.amps_);
}

DensityOperator::DensityOperator(Register reg, Matrix matrix) : reg_(std::move(reg)), m_(std::move(matrix)) {
    const auto d = static_cast<Eigen::Index>(reg_.dim());
    if (m_.rows() != d || m_.cols() != d) {
        throw std::invalid_argument("density matrix dimension does not match register " + reg_.str());
    }
    if (hermiticity_error(m_) > kAbsTol) throw std::invalid_argument("density matrix is not Hermitian");
    if (std::abs(m_.trace() - cplx(1.0)) > kAbsTol) throw std::invalid_argument("density matrix trace is not 1");
}

DensityOperator DensityOperator::checked(Register reg, Matrix matrix) {
    DensityOperator rho(std::move(reg), std::move(matrix));
    if (rho.min_eigenvalue() < -kAbsTol) throw std::invalid_argument("density matrix is not positive semidefinite");
    return rho;
}

DensityOperator DensityOperator::from_pure(const PureState &s) {
    const PureState u = s.normalized();
    return DensityOperator(u.reg(), u.amplitudes() * u.amplitudes().adjoint());
}

DensityOperator DensityOperator::maximally_mixed(Register reg) {
    const auto d = static_cast<Eigen::Index>(reg.dim());
    Matrix m = Matrix::Identity(d, d) / static_cast<double>(d);
    return DensityOperator(std::move(reg), std::move(m));
}

double DensityOperator::purity() const { return (m_ * m_).trace().real(); }

double DensityOperator::min_eigenvalue() const { return eig_hermitian(m_)(0); }

LocalOperator::LocalOperator(std::vector<QubitId> targets, Matrix matrix)
    : targets_(std::move(targets)), m_(std::move(matrix)) {
    check_unique(targets_, "operator targets");
    const auto d = static_cast<Eigen::Index>(std::size_t{1} << targets_.size());
    if (targets_.empty() || m_.rows() != d || m_.cols() != d) {
        throw std::invalid_argument("operator matrix is not 2^k x 2^k for k = " + std::to_string(targets_.size()));
    }
}

PureState kron(const PureState &a, const PureState &b) {
    Register reg = a.reg().concat(b.reg());
    Vector v(static_cast<Eigen::Index>(reg.dim()));
    const auto db = b.amplitudes().size();
    for (Eigen::Index i = 0; i < a.amplitudes().size(); ++i) {
        v.segment(i * db, db) = a.amplitudes()(i) * b.amplitudes();
    }
    return PureState(std::move(reg), std::move(v));
}

DensityOperator kron(const DensityOperator &a, const DensityOperator &b) {
    Register reg = a.reg().concat(b.reg());
    const auto da = a.matrix().rows();
    const auto db = b.matrix().rows();
    Matrix m(da * db, da * db);
    for (Eigen::Index i = 0; i < da; ++i) {
        for (Eigen::Index j = 0; j < da; ++j) {
            m.block(i * db, j * db, db, db) = a.matrix()(i, j) * b.matrix();
        }
    }
    return DensityOperator(std::move(reg), std::move(m));
}

PureState apply_local(const PureState &s, const LocalOperator &op) {
    const auto bits = bits_of(s.reg(), op.targets());
    const std::size_t local_dim = std::size_t{1} << bits.size();
    std::size_t mask = 0;
    for (auto b : bits) mask |= b;
    std::vector<std::size_t> offsets(local_dim);
    for (std::size_t l = 0; l < local_dim; ++l) offsets[l] = scatter(l, bits);

    const Vector &in = s.amplitudes();
    Vector out = Vector::Zero(in.size());
    const Matrix &u = op.matrix();
    for (std::size_t base = 0; base < s.dim(); ++base) {
        if (base & mask) continue;
        for (std::size_t r = 0; r < local_dim; ++r) {
            cplx acc = 0.0;
            for (std::size_t c = 0; c < local_dim; ++c) {
                acc += u(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) *
                       in(static_cast<Eigen::Index>(base | offsets[c]));
            }
            out(static_cast<Eigen::Index>(base | offsets[r])) = acc;
        }
    }
    return PureState(s.reg(), std::move(out));
}

PureState align(const PureState &s, const Register &order) {
    if (s.reg() == order) return s;
    const auto table = reorder_table(s.reg(), order);
    Vector v(s.amplitudes().size());
    for (std::size_t i = 0; i < table.size(); ++i) {
        v(static_cast<Eigen::Index>(i)) = s.amplitudes()(static_cast<Eigen::Index>(table[i]));
    }
    return PureState(order, std::move(v));
}

DensityOperator align(const DensityOperator &rho, const Register &order) {
    if (rho.reg() == order) return rho;
    const auto table = reorder_table(rho.reg(), order);
    const auto d = static_cast<Eigen::Index>(table.size());
    Matrix m(d, d);
    for (Eigen::Index j = 0; j < d; ++j) {
        for (Eigen::Index i = 0; i < d; ++i) {
            m(i, j) = rho.matrix()(static_cast<Eigen::Index>(table[static_cast<std::size_t>(i)]),
                                   static_cast<Eigen::Index>(table[static_cast<std::size_t>(j)]));
        }
    }
    return DensityOperator(order, std::move(m));
}

PureState relabel(const PureState &s, const QubitMap &map) {
    return PureState(s.reg().relabeled(map), s.amplitudes());
}

DensityOperator relabel(const DensityOperator &rho, const QubitMap &map) {
    return DensityOperator(rho.reg().relabeled(map), rho.matrix());
}

namespace {

void check_bijection(const Register &reg, const QubitMap &perm) {
    std::set<QubitId> image;
    for (const auto &q : reg.qubits()) {
        auto it = perm.find(q);
        image.insert(it == perm.end() ? q : it->second);
    }
    for (const auto &[from, to] : perm) {
        if (!reg.contains(from)) throw std::invalid_argument("permutation moves qubit " + from.str() + " not in register");
    }
    if (image.size() != reg.size() ||
        !std::all_of(image.begin(), image.end(), [&](const QubitId &q) { return reg.contains(q); })) {
        throw std::invalid_argument("qubit mapping is not a bijection of register " + reg.str());
    }
}

}  // namespace

PureState permute_qubits(const PureState &s, const QubitMap &perm) {
    check_bijection(s.reg(), perm);
    return align(relabel(s, perm), s.reg());
}

DensityOperator permute_qubits(const DensityOperator &rho, const QubitMap &perm) {
    check_bijection(rho.reg(), perm);
    return align(relabel(rho, perm), rho.reg());
}

DensityOperator partial_trace(const DensityOperator &rho, std::span<const QubitId> keep) {
    if (keep.empty()) throw std::invalid_argument("partial trace needs a non-empty keep set");
    check_unique(keep, "keep set");
    const Register &reg = rho.reg();
    std::vector<QubitId> kept, traced;
    for (const auto &q : reg.qubits()) {
        (std::find(keep.begin(), keep.end(), q) != keep.end() ? kept : traced).push_back(q);
    }
    if (kept.size() != keep.size()) {
        for (const auto &q : keep) reg.index_of(q);  // throws for the missing one
    }
    const auto kb = bits_of(reg, kept);
    const auto tb = bits_of(reg, traced);
    const std::size_t dk = std::size_t{1} << kb.size();
    const std::size_t dt = std::size_t{1} << tb.size();
    std::vector<std::size_t> ko(dk), to(dt);
    for (std::size_t i = 0; i < dk; ++i) ko[i] = scatter(i, kb);
    for (std::size_t t = 0; t < dt; ++t) to[t] = scatter(t, tb);

    Matrix out = Matrix::Zero(static_cast<Eigen::Index>(dk), static_cast<Eigen::Index>(dk));
    for (std::size_t j = 0; j < dk; ++j) {
        for (std::size_t i = 0; i < dk; ++i) {
            cplx acc = 0.0;
            for (std::size_t t = 0; t < dt; ++t) {
                acc += rho.matrix()(static_cast<Eigen::Index>(ko[i] | to[t]), static_cast<Eigen::Index>(ko[j] | to[t]));
            }
            out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = acc;
        }
    }
    return DensityOperator(Register(std::move(kept)), std::move(out));
}

DensityOperator reduced_state(const PureState &s, std::span<const QubitId> keep) {
    if (keep.empty()) throw std::invalid_argument("partial trace needs a non-empty keep set");
    check_unique(keep, "keep set");
    const Register &reg = s.reg();
    std::vector<QubitId> kept, traced;
    for (const auto &q : reg.qubits()) {
        (std::find(keep.begin(), keep.end(), q) != keep.end() ? kept : traced).push_back(q);
    }
    if (kept.size() != keep.size()) {
        for (const auto &q : keep) reg.index_of(q);
    }
    const auto kb = bits_of(reg, kept);
    const auto tb = bits_of(reg, traced);
    const auto dk = static_cast<Eigen::Index>(std::size_t{1} << kb.size());
    const auto dt = static_cast<Eigen::Index>(std::size_t{1} << tb.size());
    Matrix a(dk, dt);
    for (Eigen::Index t = 0; t < dt; ++t) {
        const std::size_t toff = scatter(static_cast<std::size_t>(t), tb);
        for (Eigen::Index i = 0; i < dk; ++i) {
            a(i, t) = s.amplitudes()(static_cast<Eigen::Index>(scatter(static_cast<std::size_t>(i), kb) | toff));
        }
    }
    const double n2 = s.amplitudes().squaredNorm();
    Matrix m = a * a.adjoint() / n2;
    return DensityOperator(Register(std::move(kept)), std::move(m));
}

Matrix partial_transpose(const Register &reg, const Matrix &m, std::span<const QubitId> part) {
    check_unique(part, "transpose set");
    const std::size_t mask = reg.mask_of(part);
    const auto d = m.rows();
    Matrix out(d, d);
    for (Eigen::Index j = 0; j < d; ++j) {
        for (Eigen::Index i = 0; i < d; ++i) {
            const auto ui = static_cast<std::size_t>(i);
            const auto uj = static_cast<std::size_t>(j);
            const std::size_t ti = (ui & ~mask) | (uj & mask);
            const std::size_t tj = (uj & ~mask) | (ui & mask);
            out(static_cast<Eigen::Index>(ti), static_cast<Eigen::Index>(tj)) = m(i, j);
        }
    }
    return out;
}

Matrix partial_transpose(const DensityOperator &rho, std::span<const QubitId> part) {
    return partial_transpose(rho.reg(), rho.matrix(), part);
}

double hermiticity_error(const Matrix &m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("matrix is not square");
    if (m.size() == 0) return 0.0;
    return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

Eigen::VectorXd eig_hermitian(const Matrix &m) {
    if (hermiticity_error(m) > kAbsTol) throw std::invalid_argument("eig_hermitian: matrix is not Hermitian");
    const Matrix h = (m + m.adjoint()) / 2.0;
    Eigen::SelfAdjointEigenSolver<Matrix> solver(h, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw std::runtime_error("eig_hermitian: solver did not converge");
    return solver.eigenvalues();
}

Vector principal_eigenvector(const Matrix &m) {
    if (hermiticity_error(m) > kAbsTol) throw std::invalid_argument("principal_eigenvector: matrix is not Hermitian");
    const Matrix h = (m + m.adjoint()) / 2.0;
    Eigen::SelfAdjointEigenSolver<Matrix> solver(h);
    if (solver.info() != Eigen::Success) throw std::runtime_error("principal_eigenvector: solver did not converge");
    return solver.eigenvectors().col(h.rows() - 1);
}

double fidelity_pure(const DensityOperator &rho, const PureState &target) {
    const PureState t = align(target, rho.reg()).normalized();
    return (t.amplitudes().adjoint() * rho.matrix() * t.amplitudes())(0, 0).real();
}

double overlap(const PureState &a, const PureState &b) {
    const PureState bb = align(b, a.reg());
    return std::norm(a.normalized().inner(bb.normalized()));
}

double frobenius_distance(const DensityOperator &a, const DensityOperator &b) {
    const DensityOperator bb = align(b, a.reg());
    return (a.matrix() - bb.matrix()).norm();
}

}  // namespace superact

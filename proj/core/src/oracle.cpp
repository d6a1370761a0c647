// Copyright 2026 The Abstraqt Authors
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

#include "abstraqt/oracle.hpp"

#include <map>

#include "abstraqt/abstract_state.hpp"
#include "abstraqt/errors.hpp"

namespace abstraqt {

namespace {

using cd = std::complex<double>;

// Terms whose merged coefficient falls below this are dropped.
constexpr double kNegligible = 1e-15;

void check_dense_size(std::size_t n) {
    if (n > kMaxDenseOracleQubits) {
        throw CapacityError("dense oracle supports at most " + std::to_string(kMaxDenseOracleQubits) + " qubits, got " +
                            std::to_string(n));
    }
}

// R|j> = phase(j) |j ^ flip>.
struct PauliAction {
    std::size_t flip = 0;
    std::vector<cd> phase;
};

PauliAction pauli_action(const ConcretePauli &r) {
    const std::size_t n = r.num_qubits();
    check_dense_size(n);
    const std::size_t dim = std::size_t{1} << n;
    PauliAction a;
    for (std::size_t q = 0; q < n; q++) {
        if (x_bit(r[q])) {
            a.flip |= std::size_t{1} << (n - 1 - q);
        }
    }
    a.phase.resize(dim);
    const cd base = i_power(r.prefactor());
    for (std::size_t j = 0; j < dim; j++) {
        cd ph = base;
        for (std::size_t q = 0; q < n; q++) {
            bool bit = (j >> (n - 1 - q)) & 1;
            switch (r[q]) {
                case PauliLetter::Z:
                    ph *= bit ? -1.0 : 1.0;
                    break;
                case PauliLetter::Y:
                    ph *= bit ? cd(0, -1) : cd(0, 1);
                    break;
                default:
                    break;
            }
        }
        a.phase[j] = ph;
    }
    return a;
}

// Left-multiplies m by the k-qubit u embedded on `targets`.
void apply_left(Eigen::MatrixXcd &m, const Eigen::MatrixXcd &u, std::span<const std::size_t> targets, std::size_t n) {
    const std::size_t k = targets.size();
    const std::size_t dim = std::size_t{1} << n;
    const std::size_t sub = std::size_t{1} << k;
    std::size_t target_mask = 0;
    std::vector<std::size_t> offsets(sub, 0);
    for (std::size_t t = 0; t < k; t++) {
        target_mask |= std::size_t{1} << (n - 1 - targets[t]);
    }
    for (std::size_t a = 0; a < sub; a++) {
        for (std::size_t t = 0; t < k; t++) {
            if ((a >> (k - 1 - t)) & 1) {
                offsets[a] |= std::size_t{1} << (n - 1 - targets[t]);
            }
        }
    }
    std::vector<cd> buf(sub);
    for (std::size_t base = 0; base < dim; base++) {
        if (base & target_mask) {
            continue;
        }
        for (Eigen::Index c = 0; c < m.cols(); c++) {
            for (std::size_t a = 0; a < sub; a++) {
                buf[a] = m((Eigen::Index)(base | offsets[a]), c);
            }
            for (std::size_t a = 0; a < sub; a++) {
                cd acc = 0;
                for (std::size_t b = 0; b < sub; b++) {
                    acc += u((Eigen::Index)a, (Eigen::Index)b) * buf[b];
                }
                m((Eigen::Index)(base | offsets[a]), c) = acc;
            }
        }
    }
}

std::string term_key(const SumTerm &t) {
    std::string key;
    key.reserve(t.pauli.num_qubits() + t.signs.size());
    for (PauliLetter l : t.pauli.letters()) {
        key += (char)('0' + (int)l);
    }
    for (std::uint8_t b : t.signs) {
        key += (char)('0' + b);
    }
    return key;
}

// Moves the prefactor of t.pauli into t.coeff.
void normalize(SumTerm &t) {
    t.coeff *= i_power(t.pauli.prefactor());
    t.pauli.set_prefactor(0);
}

}  // namespace

Eigen::MatrixXcd pauli_times(const ConcretePauli &r, const Eigen::MatrixXcd &m) {
    PauliAction a = pauli_action(r);
    Eigen::MatrixXcd out(m.rows(), m.cols());
    for (Eigen::Index j = 0; j < m.rows(); j++) {
        out.row((Eigen::Index)((std::size_t)j ^ a.flip)) = a.phase[(std::size_t)j] * m.row(j);
    }
    return out;
}

Eigen::MatrixXcd times_pauli(const Eigen::MatrixXcd &m, const ConcretePauli &r) {
    PauliAction a = pauli_action(r);
    Eigen::MatrixXcd out(m.rows(), m.cols());
    for (Eigen::Index c = 0; c < m.cols(); c++) {
        out.col(c) = a.phase[(std::size_t)c] * m.col((Eigen::Index)((std::size_t)c ^ a.flip));
    }
    return out;
}

DenseState::DenseState(std::size_t num_qubits) : num_qubits_(num_qubits) {
    check_dense_size(num_qubits);
    std::size_t dim = std::size_t{1} << num_qubits;
    rho_ = Eigen::MatrixXcd::Zero((Eigen::Index)dim, (Eigen::Index)dim);
    rho_(0, 0) = 1;
}

DenseState::DenseState(std::size_t num_qubits, Eigen::MatrixXcd rho) : num_qubits_(num_qubits), rho_(std::move(rho)) {
    check_dense_size(num_qubits);
    if (rho_.rows() != (Eigen::Index)(std::size_t{1} << num_qubits) || rho_.rows() != rho_.cols()) {
        throw UsageError("DenseState: matrix dimension does not match qubit count");
    }
}

void DenseState::apply(const Eigen::MatrixXcd &unitary, std::span<const std::size_t> targets) {
    if (unitary.rows() != (Eigen::Index)(std::size_t{1} << targets.size())) {
        throw UsageError("DenseState::apply: unitary size does not match targets");
    }
    check_targets(targets.size(), targets, num_qubits_);
    apply_left(rho_, unitary, targets, num_qubits_);
    Eigen::MatrixXcd adj = rho_.adjoint();
    apply_left(adj, unitary, targets, num_qubits_);
    rho_ = adj.adjoint();
}

void DenseState::apply(const Gate &gate) {
    if (gate.kind != GateKind::Unitary) {
        throw UsageError("DenseState::apply: not a unitary gate");
    }
    validate_gate(gate, num_qubits_);
    apply(gate_matrix(gate.name, gate.params), gate.targets);
}

void DenseState::project(const ConcretePauli &r) {
    if (r.num_qubits() != num_qubits_ || !r.is_hermitian()) {
        throw UsageError("DenseState::project: expected a Hermitian Pauli on all qubits");
    }
    Eigen::MatrixXcd rr = pauli_times(r, rho_);
    rho_ = (rho_ + rr + times_pauli(rho_, r) + times_pauli(rr, r)) / 4.0;
}

double DenseState::trace() const {
    return rho_.trace().real();
}

double DenseState::probability_one(std::size_t qubit) const {
    DenseState copy = *this;
    copy.project(ConcretePauli::single(num_qubits_, qubit, PauliLetter::Z, 2));
    return copy.trace();
}

ConcreteSumState::ConcreteSumState(std::size_t num_qubits) : num_qubits_(num_qubits) {
    if (num_qubits == 0) {
        throw UsageError("ConcreteSumState: need at least one qubit");
    }
    terms_.push_back({cd(1, 0), ConcretePauli(num_qubits), std::vector<std::uint8_t>(num_qubits, 0)});
    for (std::size_t j = 0; j < num_qubits; j++) {
        stabilizers_.push_back(ConcretePauli::single(num_qubits, j, PauliLetter::Z));
    }
}

void ConcreteSumState::merge() {
    std::map<std::string, std::size_t> index;
    std::vector<SumTerm> merged;
    for (auto &t : terms_) {
        auto [it, fresh] = index.emplace(term_key(t), merged.size());
        if (fresh) {
            merged.push_back(std::move(t));
        } else {
            merged[it->second].coeff += t.coeff;
        }
    }
    terms_.clear();
    for (auto &t : merged) {
        if (std::abs(t.coeff) > kNegligible) {
            terms_.push_back(std::move(t));
        }
    }
    if (terms_.size() > kSumTermCap) {
        throw CapacityError("sum oracle exceeded " + std::to_string(kSumTermCap) + " terms");
    }
}

void ConcreteSumState::apply(const GateAction &action, std::span<const std::size_t> targets) {
    if (const auto *table = std::get_if<CliffordTable>(&action)) {
        for (auto &t : terms_) {
            t.pauli = conjugate_concrete(*table, targets, t.pauli);
            normalize(t);
        }
        for (auto &q : stabilizers_) {
            q = conjugate_concrete(*table, targets, q);
        }
        return;
    }
    const auto &d = std::get<PauliSumDecomposition>(action);
    check_targets(d.arity, targets, num_qubits_);
    std::vector<ConcretePauli> paulis;
    for (const auto &term : d.terms) {
        paulis.push_back(embed_window(term.basis, targets, num_qubits_));
    }
    std::vector<SumTerm> next;
    next.reserve(terms_.size() * paulis.size() * paulis.size());
    for (const auto &t : terms_) {
        for (std::size_t p = 0; p < paulis.size(); p++) {
            ConcretePauli left = paulis[p] * t.pauli;
            for (std::size_t q = 0; q < paulis.size(); q++) {
                SumTerm s;
                s.coeff = d.terms[p].coefficient * t.coeff * std::conj(d.terms[q].coefficient);
                s.pauli = left * paulis[q];
                s.signs = t.signs;
                for (std::size_t j = 0; j < num_qubits_; j++) {
                    s.signs[j] ^= (std::uint8_t)commutator(stabilizers_[j], paulis[q]);
                }
                normalize(s);
                next.push_back(std::move(s));
            }
        }
    }
    terms_ = std::move(next);
    merge();
}

void ConcreteSumState::apply(const Gate &gate) {
    if (gate.kind != GateKind::Unitary) {
        throw UsageError("ConcreteSumState::apply: not a unitary gate");
    }
    validate_gate(gate, num_qubits_);
    apply(builtin_action(gate), gate.targets);
}

void ConcreteSumState::project(const ConcretePauli &r) {
    if (r.num_qubits() != num_qubits_ || !r.is_hermitian()) {
        throw UsageError("ConcreteSumState::project: expected a Hermitian Pauli on all qubits");
    }
    std::vector<std::size_t> anti;
    for (std::size_t j = 0; j < num_qubits_; j++) {
        if (commutator(r, stabilizers_[j])) {
            anti.push_back(j);
        }
    }
    if (anti.empty()) {
        std::vector<SumTerm> kept;
        for (auto &t : terms_) {
            auto f = f_concrete(r, stabilizers_, t.signs);
            if (f && *f == 0 && !commutator(r, t.pauli)) {
                kept.push_back(std::move(t));
            }
        }
        terms_ = std::move(kept);
        return;
    }
    std::size_t first = anti.front();
    std::swap(stabilizers_[0], stabilizers_[first]);
    for (auto &t : terms_) {
        std::swap(t.signs[0], t.signs[first]);
    }
    for (std::size_t idx = 1; idx < anti.size(); idx++) {
        std::size_t j = anti[idx];
        stabilizers_[j] = stabilizers_[0] * stabilizers_[j];
        for (auto &t : terms_) {
            t.signs[j] ^= t.signs[0];
        }
    }
    for (auto &t : terms_) {
        if (commutator(r, t.pauli)) {
            t.pauli = t.pauli * stabilizers_[0];
            if (t.signs[0]) {
                t.coeff = -t.coeff;
            }
            normalize(t);
        }
        t.coeff *= 0.5;
        t.signs[0] = r.prefactor() == 2 ? 1 : 0;
    }
    stabilizers_[0] = r.bare();
    merge();
}

double ConcreteSumState::trace() const {
    double total = 0;
    for (const auto &t : terms_) {
        auto f = f_concrete(t.pauli, stabilizers_, t.signs);
        if (f) {
            total += (t.coeff * i_power(*f)).real();
        }
    }
    return total;
}

double ConcreteSumState::probability_one(std::size_t qubit) const {
    ConcreteSumState copy = *this;
    copy.project(ConcretePauli::single(num_qubits_, qubit, PauliLetter::Z, 2));
    return copy.trace();
}

Eigen::MatrixXcd ConcreteSumState::to_dense() const {
    check_dense_size(num_qubits_);
    const Eigen::Index dim = (Eigen::Index)(std::size_t{1} << num_qubits_);
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim, dim);
    std::map<std::vector<std::uint8_t>, Eigen::MatrixXcd> projectors;
    for (const auto &t : terms_) {
        auto it = projectors.find(t.signs);
        if (it == projectors.end()) {
            Eigen::MatrixXcd proj = Eigen::MatrixXcd::Identity(dim, dim);
            for (std::size_t j = 0; j < num_qubits_; j++) {
                ConcretePauli s = t.signs[j] ? stabilizers_[j].times_i_pow(2) : stabilizers_[j];
                proj = (proj + times_pauli(proj, s)) / 2.0;
            }
            it = projectors.emplace(t.signs, std::move(proj)).first;
        }
        out += t.coeff * pauli_times(t.pauli, it->second);
    }
    return out;
}

std::vector<DenseState> dense_branches(const Circuit &circuit) {
    std::vector<DenseState> branches{DenseState(circuit.num_qubits)};
    for (const auto &g : circuit.gates) {
        if (g.kind == GateKind::Unitary) {
            for (auto &b : branches) {
                b.apply(g);
            }
            continue;
        }
        validate_gate(g, circuit.num_qubits);
        ConcretePauli r = measurement_pauli(g, circuit.num_qubits);
        std::vector<DenseState> next;
        for (const auto &b : branches) {
            DenseState plus = b;
            plus.project(r);
            next.push_back(std::move(plus));
            if (g.kind == GateKind::MeasureBoth) {
                DenseState minus = b;
                minus.project(r.times_i_pow(2));
                next.push_back(std::move(minus));
            }
        }
        branches = std::move(next);
    }
    return branches;
}

std::vector<ConcreteSumState> sum_branches(const Circuit &circuit) {
    std::vector<ConcreteSumState> branches{ConcreteSumState(circuit.num_qubits)};
    for (const auto &g : circuit.gates) {
        if (g.kind == GateKind::Unitary) {
            for (auto &b : branches) {
                b.apply(g);
            }
            continue;
        }
        validate_gate(g, circuit.num_qubits);
        ConcretePauli r = measurement_pauli(g, circuit.num_qubits);
        std::vector<ConcreteSumState> next;
        for (const auto &b : branches) {
            ConcreteSumState plus = b;
            plus.project(r);
            next.push_back(std::move(plus));
            if (g.kind == GateKind::MeasureBoth) {
                ConcreteSumState minus = b;
                minus.project(r.times_i_pow(2));
                next.push_back(std::move(minus));
            }
        }
        branches = std::move(next);
    }
    return branches;
}

}  // namespace abstraqt

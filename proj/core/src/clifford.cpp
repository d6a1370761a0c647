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

#include "abstraqt/clifford.hpp"

#include <optional>

#include "abstraqt/errors.hpp"

namespace abstraqt {

namespace {

std::size_t arity_of(const Eigen::MatrixXcd &u) {
    if (u.rows() != u.cols() || u.rows() == 0) {
        throw UsageError("gate matrix must be square");
    }
    std::size_t dim = (std::size_t)u.rows();
    std::size_t k = 0;
    while ((std::size_t{1} << k) < dim) {
        k++;
    }
    if ((std::size_t{1} << k) != dim) {
        throw UsageError("gate matrix dimension must be a power of two");
    }
    if (k > 6) {
        throw UsageError("gate arity too large");
    }
    return k;
}

void check_unitary(const Eigen::MatrixXcd &u) {
    Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(u.rows(), u.cols());
    if ((u * u.adjoint() - id).cwiseAbs().maxCoeff() > kUnitarityTolerance) {
        throw UsageError("gate matrix is not unitary");
    }
}

// Finds (letters, v) with m == i^v * dense(letters), if any.
std::optional<CliffordTable::Entry> match_pauli(const Eigen::MatrixXcd &m, std::size_t k) {
    double dim = (double)m.rows();
    std::size_t count = std::size_t{1} << (2 * k);
    for (std::size_t idx = 0; idx < count; idx++) {
        auto letters = CliffordTable::window_letters(idx, k);
        Eigen::MatrixXcd r = dense_letters(letters);
        // R is Hermitian, so tr(R^dagger m) = tr(R m).
        std::complex<double> t = (r * m).trace() / dim;
        if (std::abs(t) < 0.5) {
            continue;
        }
        for (std::uint8_t v = 0; v < 4; v++) {
            if (std::abs(t - i_power(v)) < kPauliMatchTolerance &&
                (m - i_power(v) * r).cwiseAbs().maxCoeff() < kPauliMatchTolerance) {
                return CliffordTable::Entry{std::move(letters), v};
            }
        }
        return std::nullopt;
    }
    return std::nullopt;
}

}  // namespace

CliffordTable::CliffordTable(std::size_t arity, std::vector<Entry> entries) : arity_(arity), entries_(std::move(entries)) {
    if (entries_.size() != (std::size_t{1} << (2 * arity_))) {
        throw UsageError("CliffordTable: expected 4^k entries");
    }
}

CliffordTable CliffordTable::identity(std::size_t arity) {
    std::vector<Entry> entries;
    std::size_t count = std::size_t{1} << (2 * arity);
    for (std::size_t idx = 0; idx < count; idx++) {
        entries.push_back({window_letters(idx, arity), 0});
    }
    return CliffordTable(arity, std::move(entries));
}

std::size_t CliffordTable::window_index(std::span<const PauliLetter> window) {
    std::size_t idx = 0;
    for (PauliLetter l : window) {
        idx = idx * 4 + (std::size_t)l;
    }
    return idx;
}

std::vector<PauliLetter> CliffordTable::window_letters(std::size_t index, std::size_t arity) {
    std::vector<PauliLetter> letters(arity);
    for (std::size_t k = arity; k-- > 0;) {
        letters[k] = (PauliLetter)(index & 3);
        index >>= 2;
    }
    return letters;
}

bool CliffordTable::operator==(const CliffordTable &other) const {
    if (arity_ != other.arity_) {
        return false;
    }
    for (std::size_t i = 0; i < entries_.size(); i++) {
        if (entries_[i].letters != other.entries_[i].letters || entries_[i].prefactor != other.entries_[i].prefactor) {
            return false;
        }
    }
    return true;
}

PauliSumDecomposition decompose(const Eigen::MatrixXcd &unitary) {
    std::size_t k = arity_of(unitary);
    double dim = (double)unitary.rows();
    PauliSumDecomposition out;
    out.arity = k;
    std::size_t count = std::size_t{1} << (2 * k);
    for (std::size_t idx = 0; idx < count; idx++) {
        auto letters = CliffordTable::window_letters(idx, k);
        Eigen::MatrixXcd r = dense_letters(letters);
        std::complex<double> d = (r * unitary).trace() / dim;
        if (std::abs(d) > kDecompositionDropTolerance) {
            out.terms.push_back({d, ConcretePauli(0, std::move(letters))});
        }
    }
    return out;
}

GateAction classify_gate(const Eigen::MatrixXcd &unitary) {
    std::size_t k = arity_of(unitary);
    check_unitary(unitary);
    std::size_t count = std::size_t{1} << (2 * k);
    std::vector<CliffordTable::Entry> entries;
    entries.reserve(count);
    for (std::size_t idx = 0; idx < count; idx++) {
        Eigen::MatrixXcd p = dense_letters(CliffordTable::window_letters(idx, k));
        Eigen::MatrixXcd conj = unitary * p * unitary.adjoint();
        auto entry = match_pauli(conj, k);
        if (!entry) {
            return decompose(unitary);
        }
        entries.push_back(std::move(*entry));
    }
    return CliffordTable(k, std::move(entries));
}

Eigen::MatrixXcd reconstruct(const PauliSumDecomposition &decomposition) {
    std::size_t dim = std::size_t{1} << decomposition.arity;
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero((Eigen::Index)dim, (Eigen::Index)dim);
    for (const auto &term : decomposition.terms) {
        out += term.coefficient * dense_letters(term.basis.letters());
    }
    return out;
}

void check_targets(std::size_t arity, std::span<const std::size_t> targets, std::size_t num_qubits) {
    if (targets.size() != arity) {
        throw UsageError("gate arity " + std::to_string(arity) + " does not match " + std::to_string(targets.size()) +
                         " targets");
    }
    for (std::size_t i = 0; i < targets.size(); i++) {
        if (targets[i] >= num_qubits) {
            throw UsageError("target qubit " + std::to_string(targets[i]) + " out of range");
        }
        for (std::size_t j = 0; j < i; j++) {
            if (targets[i] == targets[j]) {
                throw UsageError("duplicate target qubit " + std::to_string(targets[i]));
            }
        }
    }
}

ConcretePauli embed_window(const ConcretePauli &window, std::span<const std::size_t> targets, std::size_t num_qubits) {
    check_targets(window.num_qubits(), targets, num_qubits);
    ConcretePauli out(num_qubits);
    for (std::size_t i = 0; i < targets.size(); i++) {
        out.set_letter(targets[i], window[i]);
    }
    out.set_prefactor(window.prefactor());
    return out;
}

ConcretePauli conjugate_concrete(const CliffordTable &table, std::span<const std::size_t> targets,
                                 const ConcretePauli &p) {
    check_targets(table.arity(), targets, p.num_qubits());
    PauliLetter window[8];
    for (std::size_t i = 0; i < targets.size(); i++) {
        window[i] = p[targets[i]];
    }
    const auto &entry = table.image(std::span<const PauliLetter>(window, targets.size()));
    ConcretePauli out = p.times_i_pow(entry.prefactor);
    for (std::size_t i = 0; i < targets.size(); i++) {
        out.set_letter(targets[i], entry.letters[i]);
    }
    return out;
}

ConcretePauli conjugate_concrete(const GateAction &action, std::span<const std::size_t> targets,
                                 const ConcretePauli &p) {
    if (const auto *table = std::get_if<CliffordTable>(&action)) {
        return conjugate_concrete(*table, targets, p);
    }
    throw NotCliffordError("gate is not Clifford; use its Pauli-sum decomposition");
}

}  // namespace abstraqt

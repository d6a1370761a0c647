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

#ifndef ABSTRAQT_CLIFFORD_HPP
#define ABSTRAQT_CLIFFORD_HPP

#include <complex>
#include <variant>
#include <vector>

#include "abstraqt/pauli.hpp"

namespace abstraqt {

inline constexpr double kPauliMatchTolerance = 1e-9;
inline constexpr double kDecompositionDropTolerance = 1e-12;
inline constexpr double kUnitarityTolerance = 1e-9;

/// Conjugation table of a k-qubit Clifford gate U: for every bare letter tuple
/// P on the gate window, U P U^dagger = i^prefactor * letters.
class CliffordTable {
   public:
    struct Entry {
        std::vector<PauliLetter> letters;
        std::uint8_t prefactor = 0;
    };

    CliffordTable(std::size_t arity, std::vector<Entry> entries);

    /// Identity table on `arity` qubits.
    static CliffordTable identity(std::size_t arity);

    std::size_t arity() const {
        return arity_;
    }
    const std::vector<Entry> &entries() const {
        return entries_;
    }
    const Entry &image(std::span<const PauliLetter> window) const {
        return entries_[window_index(window)];
    }

    /// Base-4 index of a letter tuple, first letter most significant.
    static std::size_t window_index(std::span<const PauliLetter> window);
    static std::vector<PauliLetter> window_letters(std::size_t index, std::size_t arity);

    bool operator==(const CliffordTable &other) const;

   private:
    std::size_t arity_;
    std::vector<Entry> entries_;
};

struct PauliSumTerm {
    std::complex<double> coefficient;
    /// Bare (prefactor 0) Pauli over the gate window.
    ConcretePauli basis;
};

/// U = sum_p d_p R_p over distinct bare Paulis R_p.
struct PauliSumDecomposition {
    std::size_t arity = 0;
    std::vector<PauliSumTerm> terms;
};

using GateAction = std::variant<CliffordTable, PauliSumDecomposition>;

inline bool is_clifford(const GateAction &action) {
    return std::holds_alternative<CliffordTable>(action);
}

/// Builds the conjugation table when U maps every Pauli into the Pauli group
/// (within kPauliMatchTolerance), and the Pauli-sum decomposition otherwise.
/// Throws UsageError if `unitary` is not a 2^k x 2^k unitary.
GateAction classify_gate(const Eigen::MatrixXcd &unitary);

/// Pauli-basis decomposition with d_p = tr(R_p^dagger U) / 2^k, dropping
/// coefficients with magnitude <= kDecompositionDropTolerance.
PauliSumDecomposition decompose(const Eigen::MatrixXcd &unitary);

/// sum_p d_p dense(R_p).
Eigen::MatrixXcd reconstruct(const PauliSumDecomposition &decomposition);

/// U_pad p U_pad^dagger for a Clifford gate acting on `targets`.
ConcretePauli conjugate_concrete(const CliffordTable &table, std::span<const std::size_t> targets,
                                 const ConcretePauli &p);

/// Same as conjugate_concrete but dispatching on a GateAction; throws
/// NotCliffordError for decompositions.
ConcretePauli conjugate_concrete(const GateAction &action, std::span<const std::size_t> targets,
                                 const ConcretePauli &p);

/// Places a window Pauli (one letter per target) onto an n-qubit identity,
/// keeping its prefactor.
ConcretePauli embed_window(const ConcretePauli &window, std::span<const std::size_t> targets, std::size_t num_qubits);

/// Checks that targets are distinct, in range and match the gate arity.
void check_targets(std::size_t arity, std::span<const std::size_t> targets, std::size_t num_qubits);

}  // namespace abstraqt

#endif

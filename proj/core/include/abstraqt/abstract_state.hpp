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

#ifndef ABSTRAQT_ABSTRACT_STATE_HPP
#define ABSTRAQT_ABSTRACT_STATE_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <span>
#include <vector>

#include "abstraqt/abstract_domains.hpp"
#include "abstraqt/abstract_pauli.hpp"
#include "abstraqt/clifford.hpp"
#include "abstraqt/pauli.hpp"

namespace abstraqt {

using BigCount = boost::multiprecision::cpp_int;

/// r * c * P * prod_j (I + (-1)^{b_j} Q_j) / 2 where c, P and the b_j are
/// abstract and r counts the concrete summands folded into this one.
/// `zero` marks the exact zero matrix; its other fields are then ignored.
struct AbstractDensityMatrix {
    BigCount count = 1;
    AbstractComplex coeff;
    AbstractPauli pauli;
    std::vector<AbstractBool> signs;
    std::vector<ConcretePauli> stabilizers;
    bool zero = false;

    std::size_t num_qubits() const {
        return pauli.num_qubits();
    }

    static AbstractDensityMatrix zero_matrix(std::size_t num_qubits);

    bool operator==(const AbstractDensityMatrix &) const = default;

    std::string str() const;
};

/// |0...0><0...0|
AbstractDensityMatrix init_state(std::size_t num_qubits);

AbstractDensityMatrix apply_clifford(const AbstractDensityMatrix &rho, const CliffordTable &table,
                                     std::span<const std::size_t> targets);

/// All |D|^2 summands of U rho U^dagger, before merging.
std::vector<AbstractDensityMatrix> expand_decomposed(const AbstractDensityMatrix &rho,
                                                     const PauliSumDecomposition &decomposition,
                                                     std::span<const std::size_t> targets);

/// expand_decomposed followed by compress.
AbstractDensityMatrix apply_decomposed(const AbstractDensityMatrix &rho, const PauliSumDecomposition &decomposition,
                                       std::span<const std::size_t> targets);

/// Dispatches on the gate kind.
AbstractDensityMatrix apply_gate(const AbstractDensityMatrix &rho, const GateAction &action,
                                 std::span<const std::size_t> targets);

/// Over-approximates the sum of all summands by one. Zero summands are
/// dropped; throws UsageError if the stabilizers differ.
AbstractDensityMatrix compress(std::span<const AbstractDensityMatrix> summands);

/// Upper bound of two states with the same count and stabilizers. The zero
/// matrix joined with x yields x with its coefficient joined against zero.
AbstractDensityMatrix join_states(const AbstractDensityMatrix &a, const AbstractDensityMatrix &b);

/// Residue of R against the signed stabilizers: 0 iff R lies in the group
/// they generate, nullopt when no product of generators matches bare(R).
std::optional<std::uint8_t> f_concrete(const ConcretePauli &r, std::span<const ConcretePauli> stabilizers,
                                       std::span<const std::uint8_t> signs);

FResult f_abstract_b(const ConcretePauli &r, std::span<const ConcretePauli> stabilizers,
                     std::span<const AbstractBool> signs);

FResult f_abstract(const AbstractPauli &r, std::span<const ConcretePauli> stabilizers,
                   std::span<const AbstractBool> signs);

/// (I + R)/2 rho (I + R)/2 for a Hermitian Pauli R (prefactor 0 or 2).
AbstractDensityMatrix measure_project(const AbstractDensityMatrix &rho, const ConcretePauli &r);

/// Join of the projections onto R and -R. A provably zero branch is dropped.
AbstractDensityMatrix measure_both(const AbstractDensityMatrix &rho, const ConcretePauli &r);

/// Interval containing the trace of every concretization.
Interval trace(const AbstractDensityMatrix &rho);

/// Interval containing ln(r), outward rounded.
Interval log_count(const BigCount &r);

/// Checks that all stabilizers commute pairwise and have prefactor 0 or 2.
bool stabilizers_well_formed(std::span<const ConcretePauli> stabilizers);

}  // namespace abstraqt

#endif

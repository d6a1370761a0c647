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

#ifndef ABSTRAQT_ABSTRACT_PAULI_HPP
#define ABSTRAQT_ABSTRACT_PAULI_HPP

#include <string>
#include <vector>

#include "abstraqt/abstract_domains.hpp"
#include "abstraqt/clifford.hpp"
#include "abstraqt/pauli.hpp"

namespace abstraqt {

/// Subset of {I, X, Y, Z} as a 4-bit indicator: bit 0 = I, 1 = X, 2 = Y, 3 = Z.
/// So {Z, Y} is 1100b.
class LetterSet {
   public:
    constexpr LetterSet() = default;

    static constexpr LetterSet from_mask(std::uint8_t mask) {
        LetterSet s;
        s.mask_ = mask & 0xF;
        return s;
    }
    static constexpr LetterSet of(PauliLetter l) {
        return from_mask((std::uint8_t)(1u << (unsigned)l));
    }
    static constexpr LetterSet all() {
        return from_mask(0xF);
    }
    static constexpr LetterSet bottom() {
        return from_mask(0);
    }

    constexpr std::uint8_t mask() const {
        return mask_;
    }
    constexpr bool contains(PauliLetter l) const {
        return (mask_ >> (unsigned)l) & 1;
    }
    constexpr bool is_bottom() const {
        return mask_ == 0;
    }
    constexpr bool is_singleton() const {
        return mask_ != 0 && (mask_ & (mask_ - 1)) == 0;
    }
    constexpr LetterSet operator|(LetterSet other) const {
        return from_mask(mask_ | other.mask_);
    }

    constexpr bool operator==(const LetterSet &) const = default;

    /// e.g. "{I,Z}"
    std::string str() const;

   private:
    std::uint8_t mask_ = 0;
};

/// i^prefactor * L0 (x) L1 (x) ... with a set of prefactors and a set of
/// letters per qubit.
class AbstractPauli {
   public:
    explicit AbstractPauli(std::size_t num_qubits = 1);
    AbstractPauli(AbstractZ4 prefactor, std::vector<LetterSet> letters);

    /// i^{0} {I}^n
    static AbstractPauli identity(std::size_t num_qubits);
    /// Singleton abstraction of a concrete Pauli.
    static AbstractPauli lift(const ConcretePauli &p);

    std::size_t num_qubits() const {
        return letters_.size();
    }
    AbstractZ4 prefactor() const {
        return prefactor_;
    }
    LetterSet operator[](std::size_t q) const {
        return letters_[q];
    }
    const std::vector<LetterSet> &letters() const {
        return letters_;
    }

    void set_prefactor(AbstractZ4 v) {
        prefactor_ = v;
    }
    void set_letters(std::size_t q, LetterSet s) {
        letters_[q] = s;
    }

    bool is_bottom() const;
    /// Every component is a singleton.
    bool is_singleton() const;
    bool contains(const ConcretePauli &p) const;

    /// Number of concrete members (saturating at `limit + 1`).
    std::size_t member_count(std::size_t limit = 1u << 20) const;
    /// All members; throws UsageError when there are more than `limit`.
    std::vector<ConcretePauli> members(std::size_t limit = 4096) const;

    bool operator==(const AbstractPauli &) const = default;

    /// e.g. "i^{0,3}*{Y,Z}x{X}"
    std::string str() const;

   private:
    AbstractZ4 prefactor_;
    std::vector<LetterSet> letters_;
};

/// Per-letter-set product: bare letters joined over members and the set of
/// prefactor contributions.
struct LetterSetProduct {
    LetterSet letters;
    AbstractZ4 contribution;
};

/// Table lookups over all 16x16 letter-set pairs.
const LetterSetProduct &letter_set_product(LetterSet a, LetterSet b);
AbstractBool letter_set_commutator(LetterSet a, LetterSet b);

AbstractPauli apauli_mul(const AbstractPauli &a, const AbstractPauli &b);
/// Product with a concrete right operand (same result as lifting it).
AbstractPauli apauli_mul(const AbstractPauli &a, const ConcretePauli &b);
AbstractPauli apauli_mul(const ConcretePauli &a, const AbstractPauli &b);

/// Conjugation by a Clifford gate on `targets`: the letter window is replaced
/// by the join over member conjugations.
AbstractPauli apauli_conjugate(const CliffordTable &table, std::span<const std::size_t> targets,
                               const AbstractPauli &p);
/// Throws NotCliffordError for decompositions.
AbstractPauli apauli_conjugate(const GateAction &action, std::span<const std::size_t> targets,
                               const AbstractPauli &p);

AbstractBool apauli_commutator(const AbstractPauli &a, const AbstractPauli &b);
AbstractBool apauli_commutator(const AbstractPauli &a, const ConcretePauli &b);

AbstractPauli apauli_join(const AbstractPauli &a, const AbstractPauli &b);

/// (-1)^b * p
AbstractPauli apauli_sign_flip(AbstractBool b, const AbstractPauli &p);

AbstractZ4 apauli_pref(const AbstractPauli &p);
AbstractPauli apauli_bare(const AbstractPauli &p);

}  // namespace abstraqt

#endif

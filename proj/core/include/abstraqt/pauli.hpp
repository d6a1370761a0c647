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

#ifndef ABSTRAQT_PAULI_HPP
#define ABSTRAQT_PAULI_HPP

#include <Eigen/Dense>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace abstraqt {

/// Single-qubit Pauli letter. The numeric values double as the indicator-bit
/// positions used by `LetterSet` (bit 0 = I, bit 1 = X, bit 2 = Y, bit 3 = Z).
enum class PauliLetter : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

inline constexpr PauliLetter kAllLetters[4] = {PauliLetter::I, PauliLetter::X, PauliLetter::Y, PauliLetter::Z};

/// Symplectic encoding: I=(0,0), X=(1,0), Y=(1,1), Z=(0,1).
constexpr bool x_bit(PauliLetter l) {
    return l == PauliLetter::X || l == PauliLetter::Y;
}
constexpr bool z_bit(PauliLetter l) {
    return l == PauliLetter::Z || l == PauliLetter::Y;
}
constexpr PauliLetter letter_from_bits(bool x, bool z) {
    if (x) {
        return z ? PauliLetter::Y : PauliLetter::X;
    }
    return z ? PauliLetter::Z : PauliLetter::I;
}

char letter_char(PauliLetter l);
PauliLetter letter_from_char(char c);

/// 2x2 matrix of a letter.
Eigen::Matrix2cd letter_matrix(PauliLetter l);

/// Product of two letters: a * b = i^prefactor * letter.
struct LetterProduct {
    PauliLetter letter;
    std::uint8_t prefactor;
};

/// Looked up in a table derived from the 2x2 matrices on first use.
LetterProduct letter_product(PauliLetter a, PauliLetter b);

/// 1 iff the two letters anticommute.
bool letters_anticommute(PauliLetter a, PauliLetter b);

/// Pauli group element i^v * P0 (x) P1 (x) ... (x) P(n-1), with qubit 0 the
/// most significant tensor factor.
class ConcretePauli {
   public:
    /// The identity on `num_qubits` qubits.
    explicit ConcretePauli(std::size_t num_qubits = 1);
    ConcretePauli(std::uint8_t prefactor, std::vector<PauliLetter> letters);

    /// Parses "XZ", "+XZ", "-XZ", "iXZ", "-iXZ" ('_' is accepted for I).
    static ConcretePauli from_string(std::string_view text);

    /// `letter` on qubit `qubit`, identity elsewhere.
    static ConcretePauli single(std::size_t num_qubits, std::size_t qubit, PauliLetter letter, std::uint8_t prefactor = 0);

    std::size_t num_qubits() const {
        return letters_.size();
    }
    std::uint8_t prefactor() const {
        return prefactor_;
    }
    PauliLetter operator[](std::size_t q) const {
        return letters_[q];
    }
    std::span<const PauliLetter> letters() const {
        return letters_;
    }

    void set_prefactor(std::uint8_t v) {
        prefactor_ = v & 3;
    }
    void set_letter(std::size_t q, PauliLetter l) {
        letters_[q] = l;
    }

    /// Same letters, prefactor 0.
    ConcretePauli bare() const;
    /// Multiplies by i^v.
    ConcretePauli times_i_pow(std::uint8_t v) const;

    bool is_hermitian() const {
        return (prefactor_ & 1) == 0;
    }
    std::size_t weight() const;

    std::string str() const;

    bool operator==(const ConcretePauli &other) const = default;

   private:
    std::uint8_t prefactor_;
    std::vector<PauliLetter> letters_;
};

ConcretePauli multiply(const ConcretePauli &a, const ConcretePauli &b);
inline ConcretePauli operator*(const ConcretePauli &a, const ConcretePauli &b) {
    return multiply(a, b);
}

/// 0 if a and b commute, 1 if they anticommute.
bool commutator(const ConcretePauli &a, const ConcretePauli &b);

inline constexpr std::size_t kMaxDenseQubits = 12;

/// 2^n x 2^n matrix of p. Throws CapacityError when n > kMaxDenseQubits.
Eigen::MatrixXcd dense(const ConcretePauli &p);

/// Dense matrix of a bare letter tuple, no size guard. Used internally for
/// small gate windows.
Eigen::MatrixXcd dense_letters(std::span<const PauliLetter> letters);

/// i^v as a complex number.
std::complex<double> i_power(std::uint8_t v);

}  // namespace abstraqt

#endif

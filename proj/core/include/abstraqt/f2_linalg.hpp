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

#ifndef ABSTRAQT_F2_LINALG_HPP
#define ABSTRAQT_F2_LINALG_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "abstraqt/abstract_domains.hpp"
#include "abstraqt/abstract_pauli.hpp"
#include "abstraqt/pauli.hpp"

namespace abstraqt {

inline constexpr std::size_t kWordBits = 64;

/// Packed vector over GF(2). Tail bits of the last word are always zero.
class BitVector {
   public:
    explicit BitVector(std::size_t size = 0);

    std::size_t size() const {
        return size_;
    }
    bool get(std::size_t i) const {
        return (words_[i / kWordBits] >> (i % kWordBits)) & 1;
    }
    void set(std::size_t i, bool v);
    void flip(std::size_t i) {
        words_[i / kWordBits] ^= std::uint64_t{1} << (i % kWordBits);
    }
    bool any() const;
    std::size_t popcount() const;

    BitVector &operator^=(const BitVector &other);
    friend BitVector operator^(BitVector a, const BitVector &b) {
        a ^= b;
        return a;
    }

    const std::vector<std::uint64_t> &words() const {
        return words_;
    }

    bool operator==(const BitVector &) const = default;

    /// e.g. "0110"
    std::string str() const;

   private:
    std::size_t size_;
    std::vector<std::uint64_t> words_;
};

/// Row-major packed matrix over GF(2).
class BitMatrix {
   public:
    BitMatrix(std::size_t rows, std::size_t cols);

    std::size_t rows() const {
        return rows_;
    }
    std::size_t cols() const {
        return cols_;
    }
    std::size_t words_per_row() const {
        return stride_;
    }

    bool get(std::size_t r, std::size_t c) const {
        return (words_[r * stride_ + c / kWordBits] >> (c % kWordBits)) & 1;
    }
    void set(std::size_t r, std::size_t c, bool v);

    /// row[dst] ^= row[src]
    void xor_row(std::size_t dst, std::size_t src);
    void swap_rows(std::size_t a, std::size_t b);

    /// A * x
    BitVector multiply(const BitVector &x) const;

    bool operator==(const BitMatrix &) const = default;

   private:
    std::size_t rows_;
    std::size_t cols_;
    std::size_t stride_;
    std::vector<std::uint64_t> words_;
};

enum class SolveStatus {
    NoSolution,
    Solved,
    /// The abstract right-hand side had an empty entry.
    Bottom,
};

/// Solutions are exactly particular + span(null_basis) when status is Solved.
struct SolveResult {
    SolveStatus status = SolveStatus::NoSolution;
    BitVector particular;
    std::vector<BitVector> null_basis;
};

/// Solves A x = rhs by Gaussian elimination.
SolveResult solve(const BitMatrix &a, const BitVector &rhs);

/// Drops the rows whose right-hand side is {0,1} and solves the rest.
SolveResult solve_abstract_rhs(const BitMatrix &a, std::span<const AbstractBool> rhs);

/// 2n bits, (x, z) of qubit q at rows 2q and 2q + 1. The prefactor is ignored.
BitVector encode_pauli(const ConcretePauli &p);
/// Per-entry join of member encodings.
std::vector<AbstractBool> encode_pauli(const AbstractPauli &p);

/// 2n x m matrix whose column j encodes stabilizers[j].
BitMatrix encode_stabilizers(std::span<const ConcretePauli> stabilizers, std::size_t num_qubits);

}  // namespace abstraqt

#endif

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

#include "abstraqt/f2_linalg.hpp"

#include <bit>
#include <utility>

#include "abstraqt/errors.hpp"

namespace abstraqt {

namespace {

std::size_t word_count(std::size_t bits) {
    return (bits + kWordBits - 1) / kWordBits;
}

}  // namespace

BitVector::BitVector(std::size_t size) : size_(size), words_(word_count(size), 0) {
}

void BitVector::set(std::size_t i, bool v) {
    std::uint64_t mask = std::uint64_t{1} << (i % kWordBits);
    if (v) {
        words_[i / kWordBits] |= mask;
    } else {
        words_[i / kWordBits] &= ~mask;
    }
}

bool BitVector::any() const {
    for (std::uint64_t w : words_) {
        if (w) {
            return true;
        }
    }
    return false;
}

std::size_t BitVector::popcount() const {
    std::size_t c = 0;
    for (std::uint64_t w : words_) {
        c += (std::size_t)std::popcount(w);
    }
    return c;
}

BitVector &BitVector::operator^=(const BitVector &other) {
    if (size_ != other.size_) {
        throw UsageError("BitVector: size mismatch");
    }
    for (std::size_t i = 0; i < words_.size(); i++) {
        words_[i] ^= other.words_[i];
    }
    return *this;
}

std::string BitVector::str() const {
    std::string out;
    out.reserve(size_);
    for (std::size_t i = 0; i < size_; i++) {
        out += get(i) ? '1' : '0';
    }
    return out;
}

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), stride_(word_count(cols)), words_(rows * word_count(cols), 0) {
}

void BitMatrix::set(std::size_t r, std::size_t c, bool v) {
    std::uint64_t mask = std::uint64_t{1} << (c % kWordBits);
    std::uint64_t &w = words_[r * stride_ + c / kWordBits];
    w = v ? (w | mask) : (w & ~mask);
}

void BitMatrix::xor_row(std::size_t dst, std::size_t src) {
    std::uint64_t *d = &words_[dst * stride_];
    const std::uint64_t *s = &words_[src * stride_];
    for (std::size_t i = 0; i < stride_; i++) {
        d[i] ^= s[i];
    }
}

void BitMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) {
        return;
    }
    for (std::size_t i = 0; i < stride_; i++) {
        std::swap(words_[a * stride_ + i], words_[b * stride_ + i]);
    }
}

BitVector BitMatrix::multiply(const BitVector &x) const {
    if (x.size() != cols_) {
        throw UsageError("BitMatrix::multiply: dimension mismatch");
    }
    BitVector out(rows_);
    for (std::size_t r = 0; r < rows_; r++) {
        std::uint64_t acc = 0;
        for (std::size_t i = 0; i < stride_; i++) {
            acc ^= words_[r * stride_ + i] & x.words()[i];
        }
        out.set(r, std::popcount(acc) & 1);
    }
    return out;
}

SolveResult solve(const BitMatrix &a, const BitVector &rhs) {
    if (rhs.size() != a.rows()) {
        throw UsageError("solve: right-hand side length does not match row count");
    }
    BitMatrix m = a;
    BitVector b = rhs;
    std::vector<std::size_t> pivot_cols;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < m.cols() && rank < m.rows(); c++) {
        std::size_t pivot = rank;
        while (pivot < m.rows() && !m.get(pivot, c)) {
            pivot++;
        }
        if (pivot == m.rows()) {
            continue;
        }
        m.swap_rows(rank, pivot);
        bool bp = b.get(pivot);
        b.set(pivot, b.get(rank));
        b.set(rank, bp);
        for (std::size_t r = 0; r < m.rows(); r++) {
            if (r != rank && m.get(r, c)) {
                m.xor_row(r, rank);
                if (b.get(rank)) {
                    b.flip(r);
                }
            }
        }
        pivot_cols.push_back(c);
        rank++;
    }

    SolveResult result;
    for (std::size_t r = rank; r < m.rows(); r++) {
        if (b.get(r)) {
            result.status = SolveStatus::NoSolution;
            return result;
        }
    }
    result.status = SolveStatus::Solved;
    result.particular = BitVector(m.cols());
    for (std::size_t i = 0; i < rank; i++) {
        result.particular.set(pivot_cols[i], b.get(i));
    }
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : pivot_cols) {
        is_pivot[c] = true;
    }
    for (std::size_t f = 0; f < m.cols(); f++) {
        if (is_pivot[f]) {
            continue;
        }
        BitVector u(m.cols());
        u.set(f, true);
        for (std::size_t i = 0; i < rank; i++) {
            if (m.get(i, f)) {
                u.set(pivot_cols[i], true);
            }
        }
        result.null_basis.push_back(std::move(u));
    }
    return result;
}

SolveResult solve_abstract_rhs(const BitMatrix &a, std::span<const AbstractBool> rhs) {
    if (rhs.size() != a.rows()) {
        throw UsageError("solve_abstract_rhs: right-hand side length does not match row count");
    }
    std::vector<std::size_t> kept;
    for (std::size_t r = 0; r < rhs.size(); r++) {
        if (rhs[r].is_bottom()) {
            SolveResult bottom;
            bottom.status = SolveStatus::Bottom;
            return bottom;
        }
        if (rhs[r].is_singleton()) {
            kept.push_back(r);
        }
    }
    BitMatrix reduced(kept.size(), a.cols());
    BitVector b(kept.size());
    for (std::size_t i = 0; i < kept.size(); i++) {
        for (std::size_t c = 0; c < a.cols(); c++) {
            if (a.get(kept[i], c)) {
                reduced.set(i, c, true);
            }
        }
        b.set(i, rhs[kept[i]].contains(true));
    }
    return solve(reduced, b);
}

BitVector encode_pauli(const ConcretePauli &p) {
    BitVector out(2 * p.num_qubits());
    for (std::size_t q = 0; q < p.num_qubits(); q++) {
        out.set(2 * q, x_bit(p[q]));
        out.set(2 * q + 1, z_bit(p[q]));
    }
    return out;
}

std::vector<AbstractBool> encode_pauli(const AbstractPauli &p) {
    std::vector<AbstractBool> out(2 * p.num_qubits(), AbstractBool::bottom());
    for (std::size_t q = 0; q < p.num_qubits(); q++) {
        for (PauliLetter l : kAllLetters) {
            if (p[q].contains(l)) {
                out[2 * q] = abool_join(out[2 * q], AbstractBool::of(x_bit(l)));
                out[2 * q + 1] = abool_join(out[2 * q + 1], AbstractBool::of(z_bit(l)));
            }
        }
    }
    return out;
}

BitMatrix encode_stabilizers(std::span<const ConcretePauli> stabilizers, std::size_t num_qubits) {
    BitMatrix m(2 * num_qubits, stabilizers.size());
    for (std::size_t j = 0; j < stabilizers.size(); j++) {
        const ConcretePauli &s = stabilizers[j];
        if (s.num_qubits() != num_qubits) {
            throw UsageError("encode_stabilizers: qubit count mismatch");
        }
        for (std::size_t q = 0; q < num_qubits; q++) {
            if (x_bit(s[q])) {
                m.set(2 * q, j, true);
            }
            if (z_bit(s[q])) {
                m.set(2 * q + 1, j, true);
            }
        }
    }
    return m;
}

}  // namespace abstraqt

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

#include <gtest/gtest.h>

#include <set>

#include "abstraqt/f2_linalg.hpp"
#include "support.hpp"

using namespace abstraqt;
using namespace abstraqt::testing_support;

namespace {

std::vector<ConcretePauli> paulis(std::initializer_list<const char *> texts) {
    std::vector<ConcretePauli> out;
    for (const char *t : texts) {
        out.push_back(ConcretePauli::from_string(t));
    }
    return out;
}

std::uint64_t to_mask(const BitVector &v) {
    std::uint64_t m = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        m |= std::uint64_t(v.get(i)) << i;
    }
    return m;
}

// Every x with A x = rhs, by enumeration.
std::set<std::uint64_t> brute_force(const BitMatrix &a, const BitVector &rhs) {
    std::set<std::uint64_t> out;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << a.cols()); ++m) {
        BitVector x(a.cols());
        for (std::size_t i = 0; i < a.cols(); ++i) {
            x.set(i, (m >> i) & 1);
        }
        if (a.multiply(x) == rhs) {
            out.insert(m);
        }
    }
    return out;
}

std::set<std::uint64_t> solution_set(const SolveResult &r) {
    std::set<std::uint64_t> out;
    if (r.status != SolveStatus::Solved) {
        return out;
    }
    std::size_t k = r.null_basis.size();
    for (std::uint64_t combo = 0; combo < (std::uint64_t{1} << k); ++combo) {
        BitVector x = r.particular;
        for (std::size_t i = 0; i < k; ++i) {
            if ((combo >> i) & 1) {
                x ^= r.null_basis[i];
            }
        }
        out.insert(to_mask(x));
    }
    return out;
}

BitMatrix random_matrix(Rng &rng, std::size_t rows, std::size_t cols) {
    BitMatrix a(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            a.set(r, c, coin(rng));
        }
    }
    return a;
}

}  // namespace

TEST(BitVector, BasicOperations) {
    BitVector v(130);
    EXPECT_FALSE(v.any());
    v.set(0, true);
    v.set(64, true);
    v.set(129, true);
    EXPECT_EQ(v.popcount(), 3u);
    v.flip(64);
    EXPECT_FALSE(v.get(64));
    BitVector w(130);
    w.set(129, true);
    v ^= w;
    EXPECT_EQ(v.popcount(), 1u);
    EXPECT_TRUE(v.get(0));
}

TEST(BitMatrix, RowOperations) {
    BitMatrix a(3, 70);
    a.set(0, 69, true);
    a.set(1, 3, true);
    a.xor_row(1, 0);
    EXPECT_TRUE(a.get(1, 69));
    EXPECT_TRUE(a.get(1, 3));
    a.swap_rows(0, 2);
    EXPECT_FALSE(a.get(0, 69));
    EXPECT_TRUE(a.get(2, 69));
}

TEST(Encoding, SingleLetters) {
    BitVector x = encode_pauli(ConcretePauli::from_string("X"));
    EXPECT_TRUE(x.get(0));
    EXPECT_FALSE(x.get(1));
    BitVector y = encode_pauli(ConcretePauli::from_string("Y"));
    EXPECT_TRUE(y.get(0));
    EXPECT_TRUE(y.get(1));
    BitVector z = encode_pauli(ConcretePauli::from_string("IZ"));
    EXPECT_EQ(z.popcount(), 1u);
    EXPECT_TRUE(z.get(3));
}

TEST(Encoding, AbstractXY) {
    AbstractPauli p(AbstractZ4::of(0), {LetterSet::of(PauliLetter::X) | LetterSet::of(PauliLetter::Y)});
    std::vector<AbstractBool> e = encode_pauli(p);
    ASSERT_EQ(e.size(), 2u);
    EXPECT_EQ(e[0], AbstractBool::of(true));
    EXPECT_EQ(e[1], AbstractBool::top());
}

TEST(Solve, UniqueSolution) {
    auto q = paulis({"ZI", "IZ"});
    BitMatrix a = encode_stabilizers(q, 2);
    SolveResult r = solve(a, encode_pauli(ConcretePauli::from_string("ZI")));
    ASSERT_EQ(r.status, SolveStatus::Solved);
    EXPECT_TRUE(r.particular.get(0));
    EXPECT_FALSE(r.particular.get(1));
    EXPECT_TRUE(r.null_basis.empty());
}

TEST(Solve, NotInSpan) {
    auto q = paulis({"XX", "XI"});
    BitMatrix a = encode_stabilizers(q, 2);
    SolveResult r = solve(a, encode_pauli(ConcretePauli::from_string("ZI")));
    EXPECT_EQ(r.status, SolveStatus::NoSolution);
}

TEST(Solve, AbstractRhsDropsUnknownRows) {
    auto q = paulis({"IZ", "XI"});
    BitMatrix a = encode_stabilizers(q, 2);
    AbstractPauli rhs(AbstractZ4::of(0), {LetterSet::of(PauliLetter::I) | LetterSet::of(PauliLetter::Z),
                                          LetterSet::of(PauliLetter::I)});
    std::vector<AbstractBool> enc = encode_pauli(rhs);
    SolveResult r = solve_abstract_rhs(a, enc);
    ASSERT_EQ(r.status, SolveStatus::Solved);
    EXPECT_FALSE(r.particular.any());
    EXPECT_TRUE(r.null_basis.empty());
}

TEST(Solve, AbstractRhsTopGivesNullBasis) {
    auto q = paulis({"ZI", "IZ"});
    BitMatrix a = encode_stabilizers(q, 2);
    std::vector<AbstractBool> rhs(4, AbstractBool::top());
    SolveResult r = solve_abstract_rhs(a, rhs);
    ASSERT_EQ(r.status, SolveStatus::Solved);
    EXPECT_EQ(r.null_basis.size(), 2u);
}

TEST(Solve, AbstractRhsBottomEntry) {
    BitMatrix a(2, 1);
    std::vector<AbstractBool> rhs{AbstractBool::of(false), AbstractBool::bottom()};
    EXPECT_EQ(solve_abstract_rhs(a, rhs).status, SolveStatus::Bottom);
}

TEST(Solve, MatchesBruteForceProperty) {
    Rng rng(201);
    for (int iter = 0; iter < 1500; ++iter) {
        std::size_t rows = 1 + below(rng, 9);
        std::size_t cols = 1 + below(rng, 7);
        BitMatrix a = random_matrix(rng, rows, cols);
        BitVector rhs(rows);
        if (coin(rng)) {
            BitVector x(cols);
            for (std::size_t i = 0; i < cols; ++i) {
                x.set(i, coin(rng));
            }
            rhs = a.multiply(x);
        } else {
            for (std::size_t i = 0; i < rows; ++i) {
                rhs.set(i, coin(rng));
            }
        }
        SolveResult r = solve(a, rhs);
        std::set<std::uint64_t> want = brute_force(a, rhs);
        ASSERT_EQ(r.status == SolveStatus::Solved, !want.empty());
        ASSERT_EQ(solution_set(r), want);
        for (const auto &v : r.null_basis) {
            ASSERT_FALSE(a.multiply(v).any());
        }
    }
}

TEST(Solve, WideMatricesAcrossWordBoundaries) {
    Rng rng(202);
    for (int iter = 0; iter < 50; ++iter) {
        std::size_t rows = 60 + below(rng, 140);
        std::size_t cols = 60 + below(rng, 80);
        BitMatrix a = random_matrix(rng, rows, cols);
        BitVector x(cols);
        for (std::size_t i = 0; i < cols; ++i) {
            x.set(i, coin(rng));
        }
        BitVector rhs = a.multiply(x);
        SolveResult r = solve(a, rhs);
        ASSERT_EQ(r.status, SolveStatus::Solved);
        ASSERT_EQ(a.multiply(r.particular), rhs);
        for (const auto &v : r.null_basis) {
            ASSERT_FALSE(a.multiply(v).any());
        }
    }
}

TEST(Solve, AbstractRhsIsSoundProperty) {
    Rng rng(203);
    for (int iter = 0; iter < 1200; ++iter) {
        std::size_t rows = 1 + below(rng, 7);
        std::size_t cols = 1 + below(rng, 6);
        BitMatrix a = random_matrix(rng, rows, cols);
        std::vector<AbstractBool> rhs(rows);
        for (auto &b : rhs) {
            b = uniform(rng, 0, 1) < 0.3 ? AbstractBool::top() : AbstractBool::of(coin(rng));
        }
        SolveResult r = solve_abstract_rhs(a, rhs);
        std::set<std::uint64_t> abstract = solution_set(r);
        // Every concrete right-hand side member.
        for (std::uint64_t m = 0; m < (std::uint64_t{1} << rows); ++m) {
            BitVector concrete(rows);
            bool member = true;
            for (std::size_t i = 0; i < rows; ++i) {
                bool bit = (m >> i) & 1;
                concrete.set(i, bit);
                member = member && rhs[i].contains(bit);
            }
            if (!member) {
                continue;
            }
            for (std::uint64_t x : brute_force(a, concrete)) {
                ASSERT_TRUE(abstract.count(x)) << "missing solution";
            }
        }
    }
}

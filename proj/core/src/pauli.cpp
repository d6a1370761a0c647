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

#include "abstraqt/pauli.hpp"

#include <array>
#include <complex>

#include "abstraqt/errors.hpp"

namespace abstraqt {

namespace {

using cd = std::complex<double>;

struct LetterTables {
    std::array<std::array<LetterProduct, 4>, 4> product{};
    std::array<std::array<bool, 4>, 4> anticommute{};

    LetterTables() {
        for (PauliLetter a : kAllLetters) {
            for (PauliLetter b : kAllLetters) {
                Eigen::Matrix2cd m = letter_matrix(a) * letter_matrix(b);
                bool found = false;
                for (PauliLetter c : kAllLetters) {
                    for (std::uint8_t v = 0; v < 4 && !found; v++) {
                        if ((m - i_power(v) * letter_matrix(c)).cwiseAbs().maxCoeff() < 1e-12) {
                            product[(int)a][(int)b] = {c, v};
                            found = true;
                        }
                    }
                }
                if (!found) {
                    throw InvariantError("letter product table: product is not a Pauli");
                }
                Eigen::Matrix2cd ba = letter_matrix(b) * letter_matrix(a);
                anticommute[(int)a][(int)b] = (m - ba).cwiseAbs().maxCoeff() > 1e-12;
            }
        }
    }
};

const LetterTables &letter_tables() {
    static const LetterTables tables;
    return tables;
}

}  // namespace

char letter_char(PauliLetter l) {
    return "IXYZ"[(int)l];
}

PauliLetter letter_from_char(char c) {
    switch (c) {
        case 'I':
        case 'i':
        case '_':
            return PauliLetter::I;
        case 'X':
        case 'x':
            return PauliLetter::X;
        case 'Y':
        case 'y':
            return PauliLetter::Y;
        case 'Z':
        case 'z':
            return PauliLetter::Z;
        default:
            throw UsageError(std::string("not a Pauli letter: '") + c + "'");
    }
}

std::complex<double> i_power(std::uint8_t v) {
    switch (v & 3) {
        case 0:
            return {1, 0};
        case 1:
            return {0, 1};
        case 2:
            return {-1, 0};
        default:
            return {0, -1};
    }
}

Eigen::Matrix2cd letter_matrix(PauliLetter l) {
    Eigen::Matrix2cd m;
    switch (l) {
        case PauliLetter::I:
            m << 1, 0, 0, 1;
            break;
        case PauliLetter::X:
            m << 0, 1, 1, 0;
            break;
        case PauliLetter::Y:
            m << 0, cd(0, -1), cd(0, 1), 0;
            break;
        case PauliLetter::Z:
            m << 1, 0, 0, -1;
            break;
    }
    return m;
}

LetterProduct letter_product(PauliLetter a, PauliLetter b) {
    return letter_tables().product[(int)a][(int)b];
}

bool letters_anticommute(PauliLetter a, PauliLetter b) {
    return letter_tables().anticommute[(int)a][(int)b];
}

ConcretePauli::ConcretePauli(std::size_t num_qubits) : prefactor_(0), letters_(num_qubits, PauliLetter::I) {
}

ConcretePauli::ConcretePauli(std::uint8_t prefactor, std::vector<PauliLetter> letters)
    : prefactor_(prefactor & 3), letters_(std::move(letters)) {
}

ConcretePauli ConcretePauli::from_string(std::string_view text) {
    std::uint8_t v = 0;
    std::size_t k = 0;
    if (k < text.size() && (text[k] == '+' || text[k] == '-')) {
        if (text[k] == '-') {
            v = 2;
        }
        k++;
    }
    // A leading 'i' is a phase only when more letters follow.
    if (k + 1 < text.size() && text[k] == 'i') {
        v = (v + 1) & 3;
        k++;
    }
    std::vector<PauliLetter> letters;
    for (; k < text.size(); k++) {
        letters.push_back(letter_from_char(text[k]));
    }
    if (letters.empty()) {
        throw UsageError("empty Pauli string");
    }
    return ConcretePauli(v, std::move(letters));
}

ConcretePauli ConcretePauli::single(std::size_t num_qubits, std::size_t qubit, PauliLetter letter, std::uint8_t prefactor) {
    if (qubit >= num_qubits) {
        throw UsageError("qubit index out of range");
    }
    ConcretePauli p(num_qubits);
    p.letters_[qubit] = letter;
    p.prefactor_ = prefactor & 3;
    return p;
}

ConcretePauli ConcretePauli::bare() const {
    return ConcretePauli(0, letters_);
}

ConcretePauli ConcretePauli::times_i_pow(std::uint8_t v) const {
    return ConcretePauli((prefactor_ + v) & 3, letters_);
}

std::size_t ConcretePauli::weight() const {
    std::size_t w = 0;
    for (auto l : letters_) {
        w += l != PauliLetter::I;
    }
    return w;
}

std::string ConcretePauli::str() const {
    static const char *phases[4] = {"+", "+i", "-", "-i"};
    std::string out = phases[prefactor_];
    for (auto l : letters_) {
        out.push_back(letter_char(l));
    }
    return out;
}

ConcretePauli multiply(const ConcretePauli &a, const ConcretePauli &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw UsageError("multiply: qubit count mismatch");
    }
    const auto &tables = letter_tables();
    std::vector<PauliLetter> letters(a.num_qubits());
    unsigned v = a.prefactor() + b.prefactor();
    for (std::size_t q = 0; q < letters.size(); q++) {
        const LetterProduct &lp = tables.product[(int)a[q]][(int)b[q]];
        letters[q] = lp.letter;
        v += lp.prefactor;
    }
    return ConcretePauli(v & 3, std::move(letters));
}

bool commutator(const ConcretePauli &a, const ConcretePauli &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw UsageError("commutator: qubit count mismatch");
    }
    const auto &tables = letter_tables();
    bool parity = false;
    for (std::size_t q = 0; q < a.num_qubits(); q++) {
        parity ^= tables.anticommute[(int)a[q]][(int)b[q]];
    }
    return parity;
}

Eigen::MatrixXcd dense_letters(std::span<const PauliLetter> letters) {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(1, 1);
    for (PauliLetter l : letters) {
        Eigen::Matrix2cd f = letter_matrix(l);
        // next = m (x) f
        Eigen::MatrixXcd next(m.rows() * 2, m.cols() * 2);
        for (Eigen::Index r = 0; r < m.rows(); r++) {
            for (Eigen::Index c = 0; c < m.cols(); c++) {
                next.block(r * 2, c * 2, 2, 2) = m(r, c) * f;
            }
        }
        m = std::move(next);
    }
    return m;
}

Eigen::MatrixXcd dense(const ConcretePauli &p) {
    if (p.num_qubits() > kMaxDenseQubits) {
        throw CapacityError("dense: " + std::to_string(p.num_qubits()) + " qubits exceeds the limit of " +
                            std::to_string(kMaxDenseQubits));
    }
    return i_power(p.prefactor()) * dense_letters(p.letters());
}

}  // namespace abstraqt

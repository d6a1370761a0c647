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

#include "abstraqt/abstract_pauli.hpp"

#include <array>

#include "abstraqt/errors.hpp"

namespace abstraqt {

namespace {

struct LetterSetTables {
    std::array<std::array<LetterSetProduct, 16>, 16> product{};
    std::array<std::array<AbstractBool, 16>, 16> commutator{};

    LetterSetTables() {
        for (std::uint8_t a = 0; a < 16; a++) {
            for (std::uint8_t b = 0; b < 16; b++) {
                LetterSet sa = LetterSet::from_mask(a);
                LetterSet sb = LetterSet::from_mask(b);
                LetterSetProduct prod{LetterSet::bottom(), AbstractZ4::bottom()};
                AbstractBool comm = AbstractBool::bottom();
                for (PauliLetter x : kAllLetters) {
                    if (!sa.contains(x)) {
                        continue;
                    }
                    for (PauliLetter y : kAllLetters) {
                        if (!sb.contains(y)) {
                            continue;
                        }
                        LetterProduct lp = letter_product(x, y);
                        prod.letters = prod.letters | LetterSet::of(lp.letter);
                        prod.contribution = az4_join(prod.contribution, AbstractZ4::of(lp.prefactor));
                        comm = abool_join(comm, AbstractBool::of(letters_anticommute(x, y)));
                    }
                }
                product[a][b] = prod;
                commutator[a][b] = comm;
            }
        }
    }
};

const LetterSetTables &tables() {
    static const LetterSetTables t;
    return t;
}

void check_same_size(const AbstractPauli &a, std::size_t n, const char *op) {
    if (a.num_qubits() != n) {
        throw UsageError(std::string(op) + ": qubit count mismatch");
    }
}

AbstractPauli bottom_like(std::size_t n) {
    return AbstractPauli(AbstractZ4::bottom(), std::vector<LetterSet>(n, LetterSet::bottom()));
}

}  // namespace

std::string LetterSet::str() const {
    std::string out = "{";
    bool first = true;
    for (PauliLetter l : kAllLetters) {
        if (contains(l)) {
            if (!first) {
                out += ",";
            }
            out += letter_char(l);
            first = false;
        }
    }
    return out + "}";
}

AbstractPauli::AbstractPauli(std::size_t num_qubits)
    : prefactor_(AbstractZ4::of(0)), letters_(num_qubits, LetterSet::of(PauliLetter::I)) {
}

AbstractPauli::AbstractPauli(AbstractZ4 prefactor, std::vector<LetterSet> letters)
    : prefactor_(prefactor), letters_(std::move(letters)) {
}

AbstractPauli AbstractPauli::identity(std::size_t num_qubits) {
    return AbstractPauli(num_qubits);
}

AbstractPauli AbstractPauli::lift(const ConcretePauli &p) {
    std::vector<LetterSet> letters;
    letters.reserve(p.num_qubits());
    for (PauliLetter l : p.letters()) {
        letters.push_back(LetterSet::of(l));
    }
    return AbstractPauli(AbstractZ4::of(p.prefactor()), std::move(letters));
}

bool AbstractPauli::is_bottom() const {
    if (prefactor_.is_bottom()) {
        return true;
    }
    for (LetterSet s : letters_) {
        if (s.is_bottom()) {
            return true;
        }
    }
    return false;
}

bool AbstractPauli::is_singleton() const {
    if (!prefactor_.is_singleton()) {
        return false;
    }
    for (LetterSet s : letters_) {
        if (!s.is_singleton()) {
            return false;
        }
    }
    return true;
}

bool AbstractPauli::contains(const ConcretePauli &p) const {
    if (p.num_qubits() != num_qubits() || !prefactor_.contains(p.prefactor())) {
        return false;
    }
    for (std::size_t q = 0; q < letters_.size(); q++) {
        if (!letters_[q].contains(p[q])) {
            return false;
        }
    }
    return true;
}

std::size_t AbstractPauli::member_count(std::size_t limit) const {
    auto popcount = [](unsigned m) { return (std::size_t)__builtin_popcount(m); };
    std::size_t count = popcount(prefactor_.mask());
    for (LetterSet s : letters_) {
        count *= popcount(s.mask());
        if (count > limit) {
            return limit + 1;
        }
    }
    return count;
}

std::vector<ConcretePauli> AbstractPauli::members(std::size_t limit) const {
    if (member_count(limit) > limit) {
        throw UsageError("AbstractPauli::members: too many members");
    }
    std::vector<ConcretePauli> out;
    if (is_bottom()) {
        return out;
    }
    std::vector<ConcretePauli> partial{ConcretePauli(0, {})};
    for (LetterSet s : letters_) {
        std::vector<ConcretePauli> next;
        for (const auto &p : partial) {
            for (PauliLetter l : kAllLetters) {
                if (!s.contains(l)) {
                    continue;
                }
                std::vector<PauliLetter> letters(p.letters().begin(), p.letters().end());
                letters.push_back(l);
                next.emplace_back(0, std::move(letters));
            }
        }
        partial = std::move(next);
    }
    for (unsigned v = 0; v < 4; v++) {
        if (!prefactor_.contains(v)) {
            continue;
        }
        for (const auto &p : partial) {
            out.push_back(p.times_i_pow((std::uint8_t)v));
        }
    }
    return out;
}

std::string AbstractPauli::str() const {
    std::string out = "i^" + prefactor_.str() + "*";
    for (std::size_t q = 0; q < letters_.size(); q++) {
        if (q) {
            out += "x";
        }
        out += letters_[q].str();
    }
    return out;
}

const LetterSetProduct &letter_set_product(LetterSet a, LetterSet b) {
    return tables().product[a.mask()][b.mask()];
}

AbstractBool letter_set_commutator(LetterSet a, LetterSet b) {
    return tables().commutator[a.mask()][b.mask()];
}

AbstractPauli apauli_mul(const AbstractPauli &a, const AbstractPauli &b) {
    check_same_size(a, b.num_qubits(), "apauli_mul");
    const auto &t = tables();
    std::vector<LetterSet> letters(a.num_qubits());
    AbstractZ4 v = az4_add(a.prefactor(), b.prefactor());
    for (std::size_t q = 0; q < letters.size(); q++) {
        const LetterSetProduct &lp = t.product[a[q].mask()][b[q].mask()];
        letters[q] = lp.letters;
        v = az4_add(v, lp.contribution);
    }
    return AbstractPauli(v, std::move(letters));
}

AbstractPauli apauli_mul(const AbstractPauli &a, const ConcretePauli &b) {
    check_same_size(a, b.num_qubits(), "apauli_mul");
    const auto &t = tables();
    std::vector<LetterSet> letters(a.num_qubits());
    AbstractZ4 v = az4_add(a.prefactor(), AbstractZ4::of(b.prefactor()));
    for (std::size_t q = 0; q < letters.size(); q++) {
        const LetterSetProduct &lp = t.product[a[q].mask()][LetterSet::of(b[q]).mask()];
        letters[q] = lp.letters;
        v = az4_add(v, lp.contribution);
    }
    return AbstractPauli(v, std::move(letters));
}

AbstractPauli apauli_mul(const ConcretePauli &a, const AbstractPauli &b) {
    check_same_size(b, a.num_qubits(), "apauli_mul");
    const auto &t = tables();
    std::vector<LetterSet> letters(b.num_qubits());
    AbstractZ4 v = az4_add(AbstractZ4::of(a.prefactor()), b.prefactor());
    for (std::size_t q = 0; q < letters.size(); q++) {
        const LetterSetProduct &lp = t.product[LetterSet::of(a[q]).mask()][b[q].mask()];
        letters[q] = lp.letters;
        v = az4_add(v, lp.contribution);
    }
    return AbstractPauli(v, std::move(letters));
}

AbstractPauli apauli_conjugate(const CliffordTable &table, std::span<const std::size_t> targets,
                               const AbstractPauli &p) {
    check_targets(table.arity(), targets, p.num_qubits());
    if (p.is_bottom()) {
        return bottom_like(p.num_qubits());
    }
    const std::size_t k = targets.size();
    std::vector<LetterSet> joined(k, LetterSet::bottom());
    AbstractZ4 contribution = AbstractZ4::bottom();
    // Enumerate the members of the window (at most 4^k).
    std::size_t count = std::size_t{1} << (2 * k);
    for (std::size_t idx = 0; idx < count; idx++) {
        auto window = CliffordTable::window_letters(idx, k);
        bool member = true;
        for (std::size_t i = 0; i < k && member; i++) {
            member = p[targets[i]].contains(window[i]);
        }
        if (!member) {
            continue;
        }
        const auto &entry = table.entries()[idx];
        for (std::size_t i = 0; i < k; i++) {
            joined[i] = joined[i] | LetterSet::of(entry.letters[i]);
        }
        contribution = az4_join(contribution, AbstractZ4::of(entry.prefactor));
    }
    AbstractPauli out = p;
    out.set_prefactor(az4_add(p.prefactor(), contribution));
    for (std::size_t i = 0; i < k; i++) {
        out.set_letters(targets[i], joined[i]);
    }
    return out;
}

AbstractPauli apauli_conjugate(const GateAction &action, std::span<const std::size_t> targets,
                               const AbstractPauli &p) {
    if (const auto *table = std::get_if<CliffordTable>(&action)) {
        return apauli_conjugate(*table, targets, p);
    }
    throw NotCliffordError("apauli_conjugate: gate is not Clifford");
}

AbstractBool apauli_commutator(const AbstractPauli &a, const AbstractPauli &b) {
    check_same_size(a, b.num_qubits(), "apauli_commutator");
    if (a.is_bottom() || b.is_bottom()) {
        return AbstractBool::bottom();
    }
    const auto &t = tables();
    AbstractBool out = AbstractBool::of(false);
    for (std::size_t q = 0; q < a.num_qubits(); q++) {
        out = abool_add(out, t.commutator[a[q].mask()][b[q].mask()]);
    }
    return out;
}

AbstractBool apauli_commutator(const AbstractPauli &a, const ConcretePauli &b) {
    check_same_size(a, b.num_qubits(), "apauli_commutator");
    if (a.is_bottom()) {
        return AbstractBool::bottom();
    }
    const auto &t = tables();
    AbstractBool out = AbstractBool::of(false);
    for (std::size_t q = 0; q < a.num_qubits(); q++) {
        out = abool_add(out, t.commutator[a[q].mask()][LetterSet::of(b[q]).mask()]);
    }
    return out;
}

AbstractPauli apauli_join(const AbstractPauli &a, const AbstractPauli &b) {
    check_same_size(a, b.num_qubits(), "apauli_join");
    if (a.is_bottom()) {
        return b;
    }
    if (b.is_bottom()) {
        return a;
    }
    std::vector<LetterSet> letters(a.num_qubits());
    for (std::size_t q = 0; q < letters.size(); q++) {
        letters[q] = a[q] | b[q];
    }
    return AbstractPauli(az4_join(a.prefactor(), b.prefactor()), std::move(letters));
}

AbstractPauli apauli_sign_flip(AbstractBool b, const AbstractPauli &p) {
    AbstractPauli out = p;
    out.set_prefactor(az4_add(p.prefactor(), az4_mul(AbstractZ4::of(2), embed_bool(b))));
    return out;
}

AbstractZ4 apauli_pref(const AbstractPauli &p) {
    return p.prefactor();
}

AbstractPauli apauli_bare(const AbstractPauli &p) {
    AbstractPauli out = p;
    out.set_prefactor(AbstractZ4::of(0));
    return out;
}

}  // namespace abstraqt

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

#include "abstraqt/abstract_state.hpp"

#include <cmath>
#include <numbers>

#include "abstraqt/errors.hpp"
#include "abstraqt/f2_linalg.hpp"

namespace abstraqt {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Abstract x_j from a solution space: {y_j} unless some null vector moves it.
std::vector<AbstractBool> abstract_solution(const SolveResult &s, std::size_t m) {
    std::vector<AbstractBool> x(m);
    for (std::size_t j = 0; j < m; j++) {
        bool free = false;
        for (const auto &u : s.null_basis) {
            free = free || u.get(j);
        }
        x[j] = free ? AbstractBool::top() : AbstractBool::of(s.particular.get(j));
    }
    return x;
}

// 2 * sum_j x_j * b_j in Z4.
AbstractZ4 doubled_sign_sum(std::span<const AbstractBool> x, std::span<const AbstractBool> b) {
    AbstractBool sum = AbstractBool::of(false);
    for (std::size_t j = 0; j < x.size(); j++) {
        sum = abool_add(sum, abool_mul(x[j], b[j]));
    }
    return az4_mul(AbstractZ4::of(2), embed_bool(sum));
}

FResult f_from_solution(AbstractZ4 pref_r, const SolveResult &s, std::span<const ConcretePauli> stabilizers,
                        std::span<const AbstractBool> signs, std::size_t n) {
    if (s.status == SolveStatus::NoSolution) {
        return FResult::undefined_only();
    }
    if (s.status == SolveStatus::Bottom) {
        return FResult::of(AbstractZ4::bottom(), false);
    }
    std::vector<AbstractBool> x = abstract_solution(s, stabilizers.size());
    AbstractPauli product = AbstractPauli::identity(n);
    for (std::size_t j = 0; j < stabilizers.size(); j++) {
        if (x[j] == AbstractBool::of(false)) {
            continue;
        }
        AbstractPauli factor = AbstractPauli::lift(stabilizers[j]);
        if (!x[j].is_singleton()) {
            factor = apauli_join(factor, AbstractPauli::identity(n));
        }
        product = apauli_mul(product, factor);
    }
    AbstractZ4 v = az4_sub(az4_sub(pref_r, apauli_pref(product)), doubled_sign_sum(x, signs));
    return FResult::of(v, false);
}

AbstractComplex halve(const AbstractComplex &c) {
    static const AbstractComplex half = AbstractComplex::from_complex(0.5);
    return acomplex_mul(c, half);
}

}  // namespace

AbstractDensityMatrix AbstractDensityMatrix::zero_matrix(std::size_t num_qubits) {
    AbstractDensityMatrix out = init_state(num_qubits);
    out.count = 0;
    out.coeff = AbstractComplex::zero();
    out.zero = true;
    return out;
}

std::string AbstractDensityMatrix::str() const {
    if (zero) {
        return "0";
    }
    std::string out = count.str() + " * " + coeff.str() + " * " + pauli.str() + " * prod[";
    for (std::size_t j = 0; j < stabilizers.size(); j++) {
        if (j) {
            out += ", ";
        }
        out += "(-1)^" + signs[j].str() + " " + stabilizers[j].str();
    }
    return out + "]";
}

AbstractDensityMatrix init_state(std::size_t num_qubits) {
    if (num_qubits == 0) {
        throw UsageError("init_state: need at least one qubit");
    }
    AbstractDensityMatrix out;
    out.count = 1;
    out.coeff = AbstractComplex::one();
    out.pauli = AbstractPauli::identity(num_qubits);
    out.signs.assign(num_qubits, AbstractBool::of(false));
    for (std::size_t j = 0; j < num_qubits; j++) {
        out.stabilizers.push_back(ConcretePauli::single(num_qubits, j, PauliLetter::Z));
    }
    return out;
}

AbstractDensityMatrix apply_clifford(const AbstractDensityMatrix &rho, const CliffordTable &table,
                                     std::span<const std::size_t> targets) {
    check_targets(table.arity(), targets, rho.num_qubits());
    if (rho.zero) {
        return rho;
    }
    AbstractDensityMatrix out = rho;
    out.pauli = apauli_conjugate(table, targets, rho.pauli);
    for (auto &q : out.stabilizers) {
        q = conjugate_concrete(table, targets, q);
    }
    return out;
}

std::vector<AbstractDensityMatrix> expand_decomposed(const AbstractDensityMatrix &rho,
                                                     const PauliSumDecomposition &decomposition,
                                                     std::span<const std::size_t> targets) {
    check_targets(decomposition.arity, targets, rho.num_qubits());
    if (decomposition.terms.empty()) {
        throw UsageError("expand_decomposed: empty decomposition");
    }
    if (rho.zero) {
        return {rho};
    }
    const std::size_t n = rho.num_qubits();
    const std::size_t k = decomposition.terms.size();
    std::vector<ConcretePauli> paulis;
    std::vector<AbstractComplex> left, right;
    std::vector<std::vector<AbstractBool>> flipped(k);
    for (std::size_t p = 0; p < k; p++) {
        const auto &term = decomposition.terms[p];
        paulis.push_back(embed_window(term.basis, targets, n));
        left.push_back(AbstractComplex::from_complex(term.coefficient));
        right.push_back(AbstractComplex::from_complex(std::conj(term.coefficient)));
        flipped[p] = rho.signs;
        for (std::size_t j = 0; j < n; j++) {
            flipped[p][j] = abool_add(rho.signs[j], AbstractBool::of(commutator(rho.stabilizers[j], paulis[p])));
        }
    }
    std::vector<AbstractDensityMatrix> out;
    out.reserve(k * k);
    for (std::size_t p = 0; p < k; p++) {
        AbstractComplex lc = acomplex_mul(left[p], rho.coeff);
        AbstractPauli lp = apauli_mul(paulis[p], rho.pauli);
        for (std::size_t q = 0; q < k; q++) {
            AbstractDensityMatrix s;
            s.count = rho.count;
            s.coeff = acomplex_mul(lc, right[q]);
            s.pauli = apauli_mul(lp, paulis[q]);
            s.signs = flipped[q];
            s.stabilizers = rho.stabilizers;
            out.push_back(std::move(s));
        }
    }
    return out;
}

AbstractDensityMatrix apply_decomposed(const AbstractDensityMatrix &rho, const PauliSumDecomposition &decomposition,
                                       std::span<const std::size_t> targets) {
    auto summands = expand_decomposed(rho, decomposition, targets);
    return compress(summands);
}

AbstractDensityMatrix apply_gate(const AbstractDensityMatrix &rho, const GateAction &action,
                                 std::span<const std::size_t> targets) {
    if (const auto *table = std::get_if<CliffordTable>(&action)) {
        return apply_clifford(rho, *table, targets);
    }
    return apply_decomposed(rho, std::get<PauliSumDecomposition>(action), targets);
}

AbstractDensityMatrix compress(std::span<const AbstractDensityMatrix> summands) {
    if (summands.empty()) {
        throw UsageError("compress: no summands");
    }
    const AbstractDensityMatrix *base = nullptr;
    for (const auto &s : summands) {
        if (!s.zero) {
            base = &s;
            break;
        }
    }
    if (!base) {
        return AbstractDensityMatrix::zero_matrix(summands.front().num_qubits());
    }
    AbstractDensityMatrix out = *base;
    out.count = 0;
    out.coeff = AbstractComplex::bottom();
    out.pauli = AbstractPauli(AbstractZ4::bottom(), std::vector<LetterSet>(base->num_qubits(), LetterSet::bottom()));
    out.signs.assign(base->num_qubits(), AbstractBool::bottom());
    for (const auto &s : summands) {
        if (s.zero) {
            continue;
        }
        if (s.stabilizers != out.stabilizers) {
            throw UsageError("compress: summands have different stabilizers");
        }
        out.count += s.count;
        out.coeff = acomplex_join(out.coeff, s.coeff);
        out.pauli = apauli_join(out.pauli, s.pauli);
        for (std::size_t j = 0; j < out.signs.size(); j++) {
            out.signs[j] = abool_join(out.signs[j], s.signs[j]);
        }
    }
    return out;
}

AbstractDensityMatrix join_states(const AbstractDensityMatrix &a, const AbstractDensityMatrix &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw UsageError("join_states: qubit count mismatch");
    }
    if (a.zero && b.zero) {
        return a;
    }
    if (a.zero || b.zero) {
        AbstractDensityMatrix out = a.zero ? b : a;
        out.coeff = acomplex_join(out.coeff, AbstractComplex::zero());
        return out;
    }
    if (a.stabilizers != b.stabilizers) {
        throw UsageError("join_states: states have different stabilizers");
    }
    AbstractDensityMatrix out = a;
    out.coeff = acomplex_join(a.coeff, b.coeff);
    if (a.count != b.count) {
        // The state with fewer summands is padded with zero summands.
        out.count = a.count > b.count ? a.count : b.count;
        out.coeff = acomplex_join(out.coeff, AbstractComplex::zero());
    }
    out.pauli = apauli_join(a.pauli, b.pauli);
    for (std::size_t j = 0; j < out.signs.size(); j++) {
        out.signs[j] = abool_join(a.signs[j], b.signs[j]);
    }
    return out;
}

std::optional<std::uint8_t> f_concrete(const ConcretePauli &r, std::span<const ConcretePauli> stabilizers,
                                       std::span<const std::uint8_t> signs) {
    const std::size_t n = r.num_qubits();
    if (signs.size() != stabilizers.size()) {
        throw UsageError("f_concrete: one sign per stabilizer expected");
    }
    for (const auto &q : stabilizers) {
        if (q.num_qubits() != n) {
            throw UsageError("f_concrete: qubit count mismatch");
        }
        if (commutator(r, q)) {
            return std::nullopt;
        }
    }
    SolveResult s = solve(encode_stabilizers(stabilizers, n), encode_pauli(r));
    if (s.status != SolveStatus::Solved) {
        return std::nullopt;
    }
    ConcretePauli product(n);
    unsigned sign_sum = 0;
    for (std::size_t j = 0; j < stabilizers.size(); j++) {
        if (s.particular.get(j)) {
            product = product * stabilizers[j];
            sign_sum += signs[j] & 1;
        }
    }
    return (std::uint8_t)((r.prefactor() + 4 - product.prefactor() + 2 * (sign_sum % 2)) % 4);
}

FResult f_abstract_b(const ConcretePauli &r, std::span<const ConcretePauli> stabilizers,
                     std::span<const AbstractBool> signs) {
    const std::size_t n = r.num_qubits();
    if (signs.size() != stabilizers.size()) {
        throw UsageError("f_abstract_b: one sign per stabilizer expected");
    }
    for (const auto &q : stabilizers) {
        if (q.num_qubits() != n) {
            throw UsageError("f_abstract_b: qubit count mismatch");
        }
        if (commutator(r, q)) {
            return FResult::undefined_only();
        }
    }
    SolveResult s = solve(encode_stabilizers(stabilizers, n), encode_pauli(r));
    return f_from_solution(AbstractZ4::of(r.prefactor()), s, stabilizers, signs, n);
}

FResult f_abstract(const AbstractPauli &r, std::span<const ConcretePauli> stabilizers,
                   std::span<const AbstractBool> signs) {
    const std::size_t n = r.num_qubits();
    if (signs.size() != stabilizers.size()) {
        throw UsageError("f_abstract: one sign per stabilizer expected");
    }
    if (r.is_bottom()) {
        return FResult::of(AbstractZ4::bottom(), false);
    }
    bool mixed = false;
    for (const auto &q : stabilizers) {
        if (q.num_qubits() != n) {
            throw UsageError("f_abstract: qubit count mismatch");
        }
        AbstractBool c = apauli_commutator(r, q);
        if (c == AbstractBool::of(true)) {
            return FResult::undefined_only();
        }
        mixed = mixed || c == AbstractBool::top();
    }
    SolveResult s = solve_abstract_rhs(encode_stabilizers(stabilizers, n), encode_pauli(r));
    FResult f = f_from_solution(apauli_pref(r), s, stabilizers, signs, n);
    return FResult::of(f.values(), f.has_undefined() || mixed);
}

AbstractDensityMatrix measure_project(const AbstractDensityMatrix &rho, const ConcretePauli &r) {
    if (r.num_qubits() != rho.num_qubits()) {
        throw UsageError("measure_project: qubit count mismatch");
    }
    if (!r.is_hermitian()) {
        throw UsageError("measure_project: measured Pauli must have a real sign");
    }
    if (rho.zero) {
        return rho;
    }
    const std::size_t n = rho.num_qubits();
    std::vector<std::size_t> anti;
    for (std::size_t j = 0; j < n; j++) {
        if (commutator(r, rho.stabilizers[j])) {
            anti.push_back(j);
        }
    }
    AbstractBool comm = apauli_commutator(rho.pauli, r);

    if (anti.empty()) {
        FResult f = f_abstract_b(r, rho.stabilizers, rho.signs);
        if (f.is_exactly_zero() && comm == AbstractBool::of(false)) {
            return rho;
        }
        if (f.excludes_zero() || comm == AbstractBool::of(true)) {
            return AbstractDensityMatrix::zero_matrix(n);
        }
        AbstractDensityMatrix out = rho;
        out.coeff = acomplex_join(rho.coeff, AbstractComplex::zero());
        return out;
    }

    AbstractDensityMatrix out = rho;
    std::size_t first = anti.front();
    std::swap(out.stabilizers[0], out.stabilizers[first]);
    std::swap(out.signs[0], out.signs[first]);
    for (std::size_t idx = 1; idx < anti.size(); idx++) {
        std::size_t j = anti[idx];
        out.stabilizers[j] = out.stabilizers[0] * out.stabilizers[j];
        out.signs[j] = abool_add(out.signs[j], out.signs[0]);
    }
    const ConcretePauli &q1 = out.stabilizers[0];
    AbstractPauli flipped = apauli_sign_flip(out.signs[0], apauli_mul(rho.pauli, q1));
    if (comm == AbstractBool::of(true)) {
        out.pauli = flipped;
    } else if (comm == AbstractBool::top()) {
        out.pauli = apauli_join(rho.pauli, flipped);
    }
    out.coeff = halve(rho.coeff);
    out.stabilizers[0] = r.bare();
    out.signs[0] = AbstractBool::of(r.prefactor() == 2);
    return out;
}

AbstractDensityMatrix measure_both(const AbstractDensityMatrix &rho, const ConcretePauli &r) {
    AbstractDensityMatrix plus = measure_project(rho, r);
    AbstractDensityMatrix minus = measure_project(rho, r.times_i_pow(2));
    if (plus.zero) {
        return minus;
    }
    if (minus.zero) {
        return plus;
    }
    return join_states(plus, minus);
}

Interval log_count(const BigCount &r) {
    if (r <= 0) {
        return Interval::point(-kInf);
    }
    if (r == 1) {
        return Interval::point(0);
    }
    std::size_t m = boost::multiprecision::msb(r);
    if (m < 53) {
        double d = r.convert_to<double>();
        return widen_ulps(Interval::point(std::log(d)), 2);
    }
    std::size_t shift = m - 52;
    BigCount top = r >> shift;
    double t = top.convert_to<double>();
    double base = (double)shift * std::numbers::ln2;
    return widen_ulps(Interval::of(std::log(t) + base, std::log(t + 1) + base), 4);
}

Interval trace(const AbstractDensityMatrix &rho) {
    if (rho.zero) {
        return Interval::point(0);
    }
    FResult f = f_abstract(rho.pauli, rho.stabilizers, rho.signs);
    AbstractComplex c = acomplex_mul(rho.coeff, i_pow(f));
    if (c.is_bottom()) {
        return Interval::bottom();
    }
    if (c.is_zero()) {
        return Interval::point(0);
    }
    c.log_mag = interval_add(c.log_mag, log_count(rho.count));
    return acomplex_re(c);
}

bool stabilizers_well_formed(std::span<const ConcretePauli> stabilizers) {
    for (std::size_t i = 0; i < stabilizers.size(); i++) {
        if (!stabilizers[i].is_hermitian()) {
            return false;
        }
        for (std::size_t j = 0; j < i; j++) {
            if (commutator(stabilizers[i], stabilizers[j])) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace abstraqt

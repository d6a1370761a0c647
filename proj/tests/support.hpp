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

// Hand-rolled generators and concrete reference helpers shared by the tests.

#ifndef ABSTRAQT_TESTS_SUPPORT_HPP
#define ABSTRAQT_TESTS_SUPPORT_HPP

#include <Eigen/Dense>
#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "abstraqt/abstract_domains.hpp"
#include "abstraqt/abstract_pauli.hpp"
#include "abstraqt/abstract_state.hpp"
#include "abstraqt/bench_gen.hpp"
#include "abstraqt/circuit.hpp"
#include "abstraqt/clifford.hpp"
#include "abstraqt/pauli.hpp"

namespace abstraqt::testing_support {

using Rng = std::mt19937_64;

inline std::size_t below(Rng &rng, std::size_t bound) {
    return static_cast<std::size_t>(uniform_below(rng, bound));
}

inline bool coin(Rng &rng) {
    return below(rng, 2) == 1;
}

inline double uniform(Rng &rng, double lo, double hi) {
    // 53 random mantissa bits.
    double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
}

inline PauliLetter random_letter(Rng &rng) {
    return static_cast<PauliLetter>(below(rng, 4));
}

inline ConcretePauli random_pauli(Rng &rng, std::size_t n, bool with_prefactor = true) {
    std::vector<PauliLetter> letters(n);
    for (auto &l : letters) {
        l = random_letter(rng);
    }
    return ConcretePauli(with_prefactor ? static_cast<std::uint8_t>(below(rng, 4)) : 0, std::move(letters));
}

inline ConcretePauli random_hermitian_pauli(Rng &rng, std::size_t n) {
    return random_pauli(rng, n, false).times_i_pow(coin(rng) ? 2 : 0);
}

inline AbstractBool random_abool(Rng &rng) {
    return AbstractBool::from_mask(static_cast<std::uint8_t>(1 + below(rng, 3)));
}

inline bool sample(Rng &rng, AbstractBool b) {
    for (;;) {
        bool v = coin(rng);
        if (b.contains(v)) {
            return v;
        }
    }
}

inline AbstractZ4 random_az4(Rng &rng) {
    return AbstractZ4::from_mask(static_cast<std::uint8_t>(1 + below(rng, 15)));
}

inline unsigned sample(Rng &rng, AbstractZ4 z) {
    for (;;) {
        auto v = static_cast<unsigned>(below(rng, 4));
        if (z.contains(v)) {
            return v;
        }
    }
}

inline LetterSet random_letter_set(Rng &rng) {
    return LetterSet::from_mask(static_cast<std::uint8_t>(1 + below(rng, 15)));
}

inline PauliLetter sample(Rng &rng, LetterSet s) {
    for (;;) {
        PauliLetter l = random_letter(rng);
        if (s.contains(l)) {
            return l;
        }
    }
}

/// Mostly singletons, so that products stay small enough to enumerate.
inline AbstractPauli random_abstract_pauli(Rng &rng, std::size_t n, double spread = 0.3) {
    std::vector<LetterSet> letters(n);
    for (auto &s : letters) {
        s = uniform(rng, 0, 1) < spread ? random_letter_set(rng) : LetterSet::of(random_letter(rng));
    }
    AbstractZ4 pref = uniform(rng, 0, 1) < spread ? random_az4(rng) : AbstractZ4::of(static_cast<unsigned>(below(rng, 4)));
    return AbstractPauli(pref, std::move(letters));
}

inline ConcretePauli sample(Rng &rng, const AbstractPauli &p) {
    std::vector<PauliLetter> letters(p.num_qubits());
    for (std::size_t q = 0; q < letters.size(); ++q) {
        letters[q] = sample(rng, p[q]);
    }
    return ConcretePauli(static_cast<std::uint8_t>(sample(rng, p.prefactor())), std::move(letters));
}

inline Interval random_interval(Rng &rng, double lo, double hi) {
    double a = uniform(rng, lo, hi);
    double b = uniform(rng, lo, hi);
    if (coin(rng)) {
        b = a;
    }
    return Interval::of(std::min(a, b), std::max(a, b));
}

inline double sample(Rng &rng, const Interval &i) {
    switch (below(rng, 4)) {
        case 0:
            return i.lo;
        case 1:
            return i.hi;
        default:
            return uniform(rng, i.lo, i.hi);
    }
}

/// Finite boxes, sometimes the exact zero or a box that may be zero.
inline AbstractComplex random_acomplex(Rng &rng) {
    switch (below(rng, 10)) {
        case 0:
            return AbstractComplex::zero();
        case 1:
            return AbstractComplex::polar(Interval::of(-std::numeric_limits<double>::infinity(), uniform(rng, -2, 1)),
                                          random_interval(rng, -3.5, 3.5));
        default:
            return AbstractComplex::polar(random_interval(rng, -3, 1), random_interval(rng, -3.5, 3.5));
    }
}

inline std::complex<double> sample(Rng &rng, const AbstractComplex &c) {
    if (c.is_zero()) {
        return 0.0;
    }
    if (c.log_mag.lo == -std::numeric_limits<double>::infinity() && below(rng, 4) == 0) {
        return 0.0;
    }
    Interval mag = c.log_mag;
    if (mag.lo == -std::numeric_limits<double>::infinity()) {
        mag.lo = mag.hi - 30;
    }
    return std::polar(std::exp(sample(rng, mag)), sample(rng, c.phase));
}

/// Signed stabilizer frame reached from |0..0> by a random Clifford circuit.
struct Frame {
    std::vector<ConcretePauli> stabilizers;
};

inline const std::vector<std::string> &clifford_gate_names() {
    static const std::vector<std::string> names{"h", "s", "sdg", "x", "y", "z", "cx", "cz", "swap"};
    return names;
}

inline Gate random_clifford_gate(Rng &rng, std::size_t n) {
    const auto &names = clifford_gate_names();
    for (;;) {
        const std::string &name = names[below(rng, names.size())];
        std::size_t arity = gate_arity(name);
        if (arity > n) {
            continue;
        }
        std::vector<std::size_t> targets;
        while (targets.size() < arity) {
            std::size_t q = below(rng, n);
            if (std::find(targets.begin(), targets.end(), q) == targets.end()) {
                targets.push_back(q);
            }
        }
        return Gate::unitary(name, targets);
    }
}

inline std::vector<ConcretePauli> random_frame(Rng &rng, std::size_t n, std::size_t depth = 12) {
    std::vector<ConcretePauli> q;
    for (std::size_t j = 0; j < n; ++j) {
        q.push_back(ConcretePauli::single(n, j, PauliLetter::Z));
    }
    for (std::size_t d = 0; d < depth; ++d) {
        Gate g = random_clifford_gate(rng, n);
        for (auto &p : q) {
            p = conjugate_concrete(builtin_action(g), g.targets, p);
        }
    }
    return q;
}

/// Non-Clifford gates used by the random-circuit tests.
inline Gate random_non_clifford_gate(Rng &rng, std::size_t n) {
    for (;;) {
        switch (below(rng, 5)) {
            case 0:
                return Gate::unitary("t", {below(rng, n)});
            case 1:
                return Gate::unitary("tdg", {below(rng, n)});
            case 2:
                return Gate::unitary("rx", {below(rng, n)}, {std::numbers::pi / 4});
            case 3:
                return Gate::unitary("rz", {below(rng, n)}, {2.0});
            default:
                if (n < 3) {
                    continue;
                }
                std::vector<std::size_t> t;
                while (t.size() < 3) {
                    std::size_t q = below(rng, n);
                    if (std::find(t.begin(), t.end(), q) == t.end()) {
                        t.push_back(q);
                    }
                }
                return Gate::unitary("ccx", t);
        }
    }
}

/// Dense c * P * prod_j (I + (-1)^b_j Q_j) / 2.
inline Eigen::MatrixXcd dense_summand(std::complex<double> c, const ConcretePauli &p,
                                      const std::vector<ConcretePauli> &stabilizers,
                                      const std::vector<std::uint8_t> &signs) {
    std::size_t dim = std::size_t{1} << p.num_qubits();
    Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(dim, dim);
    Eigen::MatrixXcd m = c * dense(p);
    for (std::size_t j = 0; j < stabilizers.size(); ++j) {
        double s = signs[j] ? -1.0 : 1.0;
        m = m * (id + s * dense(stabilizers[j])) * 0.5;
    }
    return m;
}

inline double max_abs(const Eigen::MatrixXcd &m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

/// One concrete summand c * P * prod (I + (-1)^b Q)/2 in the frame of some
/// abstract state.
struct ConcreteSummand {
    std::complex<double> coeff;
    ConcretePauli pauli;
    std::vector<std::uint8_t> signs;
};

/// Random abstract state over `stabilizers` that is exactly the compression
/// of `members` (returned through the out parameter).
inline AbstractDensityMatrix random_state_with_members(Rng &rng, const std::vector<ConcretePauli> &stabilizers,
                                                       std::vector<ConcreteSummand> &members) {
    std::size_t n = stabilizers.size();
    std::size_t k = 1 + below(rng, 3);
    members.clear();
    std::vector<AbstractDensityMatrix> lifted;
    for (std::size_t i = 0; i < k; ++i) {
        ConcreteSummand s;
        s.coeff = std::polar(std::exp(uniform(rng, -1.5, 0.5)), uniform(rng, -3.1, 3.1));
        s.pauli = random_pauli(rng, n);
        for (std::size_t j = 0; j < n; ++j) {
            s.signs.push_back(coin(rng) ? 1 : 0);
        }
        AbstractDensityMatrix a;
        a.count = 1;
        a.coeff = AbstractComplex::from_complex(s.coeff);
        a.pauli = AbstractPauli::lift(s.pauli);
        for (auto b : s.signs) {
            a.signs.push_back(AbstractBool::of(b != 0));
        }
        a.stabilizers = stabilizers;
        lifted.push_back(std::move(a));
        members.push_back(std::move(s));
    }
    return compress(lifted);
}

/// Searches for c in gamma(coeff), P in gamma(pauli), b in gamma(signs) with
/// target == c * P * prod (I + (-1)^b Q)/2 over the state's stabilizers.
inline bool summand_contained(const Eigen::MatrixXcd &target, const AbstractDensityMatrix &rho,
                              double tolerance = 1e-9) {
    if (rho.zero) {
        return max_abs(target) <= tolerance;
    }
    if (max_abs(target) <= tolerance && rho.coeff.may_be_zero()) {
        return true;
    }
    std::size_t n = rho.num_qubits();
    std::vector<ConcretePauli> paulis = rho.pauli.members(1u << 14);
    std::vector<std::vector<std::uint8_t>> sign_choices{{}};
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<std::vector<std::uint8_t>> next;
        for (const auto &prefix : sign_choices) {
            for (std::uint8_t b = 0; b < 2; ++b) {
                if (rho.signs[j].contains(b != 0)) {
                    auto extended = prefix;
                    extended.push_back(b);
                    next.push_back(std::move(extended));
                }
            }
        }
        sign_choices = std::move(next);
    }
    for (const auto &signs : sign_choices) {
        Eigen::MatrixXcd proj = dense_summand(1.0, ConcretePauli(n), rho.stabilizers, signs);
        for (const auto &p : paulis) {
            Eigen::MatrixXcd basis = dense(p) * proj;
            std::complex<double> num = (basis.adjoint() * target).trace();
            double den = (basis.adjoint() * basis).trace().real();
            std::complex<double> c = num / den;
            if (max_abs(target - c * basis) > tolerance) {
                continue;
            }
            if (rho.coeff.contains(c, 1e-9)) {
                return true;
            }
        }
    }
    return false;
}

// Brute force over all signed generator products.
inline std::optional<std::uint8_t> f_reference(const ConcretePauli &r, const std::vector<ConcretePauli> &q,
                                        const std::vector<std::uint8_t> &b) {
    std::size_t n = r.num_qubits();
    for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << q.size()); ++subset) {
        ConcretePauli prod(n);
        for (std::size_t j = 0; j < q.size(); ++j) {
            if ((subset >> j) & 1) {
                prod = prod * q[j].times_i_pow(b[j] ? 2 : 0);
            }
        }
        if (prod.bare() == r.bare()) {
            return static_cast<std::uint8_t>((r.prefactor() + 4 - prod.prefactor()) & 3);
        }
    }
    return std::nullopt;
}

inline std::vector<std::uint8_t> sample_signs(Rng &rng, const std::vector<AbstractBool> &signs) {
    std::vector<std::uint8_t> out;
    for (auto s : signs) {
        out.push_back(sample(rng, s) ? 1 : 0);
    }
    return out;
}

inline Eigen::MatrixXcd dense_member(const ConcreteSummand &s, const std::vector<ConcretePauli> &q) {
    return dense_summand(s.coeff, s.pauli, q, s.signs);
}

inline Eigen::MatrixXcd projector(const ConcretePauli &r) {
    std::size_t dim = std::size_t{1} << r.num_qubits();
    return (Eigen::MatrixXcd::Identity(dim, dim) + dense(r)) * 0.5;
}

inline Eigen::MatrixXcd full_unitary(const Gate &g, std::size_t n) {
    std::size_t dim = std::size_t{1} << n;
    // sum_p d_p R_p, embedded.
    PauliSumDecomposition d = decompose(gate_matrix(g.name, g.params));
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim, dim);
    for (const auto &term : d.terms) {
        out += term.coefficient * dense(embed_window(term.basis, g.targets, n));
    }
    return out;
}

}  // namespace abstraqt::testing_support

#endif

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

#include "abstraqt/abstract_domains.hpp"

#include <algorithm>
#include <array>
#include <cfloat>
#include <cmath>
#include <numbers>
#include <sstream>

namespace abstraqt {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2 * std::numbers::pi;
constexpr int kUlps = 2;

// Lookup tables over indicator encodings, built at compile time from the
// element-wise definitions.
template <std::size_t Bits, typename Op>
constexpr auto make_set_table(Op op) {
    constexpr std::size_t N = std::size_t{1} << Bits;
    std::array<std::array<std::uint8_t, N>, N> table{};
    for (std::size_t a = 0; a < N; a++) {
        for (std::size_t b = 0; b < N; b++) {
            std::uint8_t out = 0;
            for (std::size_t x = 0; x < Bits; x++) {
                if (!((a >> x) & 1)) {
                    continue;
                }
                for (std::size_t y = 0; y < Bits; y++) {
                    if ((b >> y) & 1) {
                        out |= (std::uint8_t)(1u << op(x, y));
                    }
                }
            }
            table[a][b] = out;
        }
    }
    return table;
}

constexpr auto kBoolAdd = make_set_table<2>([](std::size_t x, std::size_t y) { return (x + y) % 2; });
constexpr auto kBoolMul = make_set_table<2>([](std::size_t x, std::size_t y) { return (x * y) % 2; });
constexpr auto kZ4Add = make_set_table<4>([](std::size_t x, std::size_t y) { return (x + y) % 4; });
constexpr auto kZ4Sub = make_set_table<4>([](std::size_t x, std::size_t y) { return (x + 4 - y) % 4; });
constexpr auto kZ4Mul = make_set_table<4>([](std::size_t x, std::size_t y) { return (x * y) % 4; });

double down(double x, int ulps = kUlps) {
    if (!std::isfinite(x)) {
        return x;
    }
    for (int i = 0; i < ulps; i++) {
        x = std::nextafter(x, -kInf);
    }
    return x;
}

double up(double x, int ulps = kUlps) {
    if (!std::isfinite(x)) {
        return x;
    }
    for (int i = 0; i < ulps; i++) {
        x = std::nextafter(x, kInf);
    }
    return x;
}

// True if the floating-point sum s = a + b carries no rounding error.
bool sum_is_exact(double a, double b, double s) {
    if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(s)) {
        return true;
    }
    double bb = s - a;
    double err = (a - (s - bb)) + (b - bb);
    return err == 0;
}

double add_down(double a, double b) {
    double s = a + b;
    if (std::isnan(s)) {
        return -kInf;
    }
    return sum_is_exact(a, b, s) ? s : down(s);
}

double add_up(double a, double b) {
    double s = a + b;
    if (std::isnan(s)) {
        return kInf;
    }
    return sum_is_exact(a, b, s) ? s : up(s);
}

// Endpoint product with 0 * inf := 0.
double endpoint_mul(double a, double b) {
    if (a == 0 || b == 0) {
        return 0;
    }
    return a * b;
}

bool product_is_exact(double a, double b, double p) {
    if (!std::isfinite(p) || a == 0 || b == 0) {
        return true;
    }
    return std::fma(a, b, -p) == 0;
}

// Absolute slack for a value obtained from a libm call on rounded inputs.
double libm_slack(double x) {
    return 4 * DBL_EPSILON * (1 + std::abs(x));
}

Interval full_circle() {
    return Interval::of(-up(kPi, 1), up(kPi, 1));
}

std::string format_double(double x) {
    if (x == kInf) {
        return "inf";
    }
    if (x == -kInf) {
        return "-inf";
    }
    std::ostringstream os;
    os.precision(6);
    os << x;
    return os.str();
}

}  // namespace

std::string AbstractBool::str() const {
    std::string out = "{";
    bool first = true;
    for (int v = 0; v < 2; v++) {
        if (contains(v)) {
            out += first ? "" : ",";
            out += std::to_string(v);
            first = false;
        }
    }
    return out + "}";
}

AbstractBool abool_add(AbstractBool a, AbstractBool b) {
    return AbstractBool::from_mask(kBoolAdd[a.mask()][b.mask()]);
}

AbstractBool abool_mul(AbstractBool a, AbstractBool b) {
    return AbstractBool::from_mask(kBoolMul[a.mask()][b.mask()]);
}

AbstractBool abool_join(AbstractBool a, AbstractBool b) {
    return AbstractBool::from_mask(a.mask() | b.mask());
}

std::string AbstractZ4::str() const {
    std::string out = "{";
    bool first = true;
    for (unsigned v = 0; v < 4; v++) {
        if (contains(v)) {
            out += first ? "" : ",";
            out += std::to_string(v);
            first = false;
        }
    }
    return out + "}";
}

AbstractZ4 az4_add(AbstractZ4 a, AbstractZ4 b) {
    return AbstractZ4::from_mask(kZ4Add[a.mask()][b.mask()]);
}

AbstractZ4 az4_sub(AbstractZ4 a, AbstractZ4 b) {
    return AbstractZ4::from_mask(kZ4Sub[a.mask()][b.mask()]);
}

AbstractZ4 az4_mul(AbstractZ4 a, AbstractZ4 b) {
    return AbstractZ4::from_mask(kZ4Mul[a.mask()][b.mask()]);
}

AbstractZ4 az4_join(AbstractZ4 a, AbstractZ4 b) {
    return AbstractZ4::from_mask(a.mask() | b.mask());
}

AbstractZ4 embed_bool(AbstractBool b) {
    // {0,1} embeds bit-for-bit into the low two indicator bits.
    return AbstractZ4::from_mask(b.mask());
}

std::string Interval::str() const {
    if (is_bottom()) {
        return "bottom";
    }
    return "[" + format_double(lo) + ", " + format_double(hi) + "]";
}

Interval interval_add(const Interval &a, const Interval &b) {
    if (a.is_bottom() || b.is_bottom()) {
        return Interval::bottom();
    }
    return Interval::of(add_down(a.lo, b.lo), add_up(a.hi, b.hi));
}

Interval interval_neg(const Interval &a) {
    if (a.is_bottom()) {
        return Interval::bottom();
    }
    return Interval::of(-a.hi, -a.lo);
}

Interval interval_mul(const Interval &a, const Interval &b) {
    if (a.is_bottom() || b.is_bottom()) {
        return Interval::bottom();
    }
    const double xs[2] = {a.lo, a.hi};
    const double ys[2] = {b.lo, b.hi};
    double lo = kInf;
    double hi = -kInf;
    for (double x : xs) {
        for (double y : ys) {
            double p = endpoint_mul(x, y);
            bool exact = product_is_exact(x, y, p);
            lo = std::min(lo, exact ? p : down(p));
            hi = std::max(hi, exact ? p : up(p));
        }
    }
    return Interval::of(lo, hi);
}

Interval interval_exp(const Interval &a) {
    if (a.is_bottom()) {
        return Interval::bottom();
    }
    auto exp_down = [](double x) {
        if (x == -kInf) {
            return 0.0;
        }
        if (x == 0) {
            return 1.0;
        }
        return std::max(0.0, down(std::exp(x)));
    };
    auto exp_up = [](double x) {
        if (x == -kInf) {
            return 0.0;
        }
        if (x == 0) {
            return 1.0;
        }
        return up(std::exp(x));
    };
    return Interval::of(exp_down(a.lo), exp_up(a.hi));
}

Interval interval_cos(const Interval &a) {
    if (a.is_bottom()) {
        return Interval::bottom();
    }
    if (!std::isfinite(a.lo) || !std::isfinite(a.hi) || a.hi - a.lo >= kTwoPi) {
        return Interval::of(-1, 1);
    }
    auto cos_down = [](double x) { return x == 0 ? 1.0 : down(std::cos(x)); };
    auto cos_up = [](double x) { return x == 0 ? 1.0 : up(std::cos(x)); };
    double lo = std::min(cos_down(a.lo), cos_down(a.hi));
    double hi = std::max(cos_up(a.lo), cos_up(a.hi));

    // Interior extrema: maxima at 2k*pi, minima at (2k+1)*pi. The membership
    // test is slackened outward so rounding can only add extrema, never drop.
    double slack = 1e-12 * (1 + std::abs(a.lo) + std::abs(a.hi));
    double k_max = std::ceil((a.lo - slack) / kTwoPi);
    if (k_max * kTwoPi <= a.hi + slack) {
        hi = 1;
    }
    double k_min = std::ceil((a.lo - slack - kPi) / kTwoPi);
    if (k_min * kTwoPi + kPi <= a.hi + slack) {
        lo = -1;
    }
    return Interval::of(std::max(-1.0, lo), std::min(1.0, hi));
}

Interval interval_join(const Interval &a, const Interval &b) {
    if (a.is_bottom()) {
        return b;
    }
    if (b.is_bottom()) {
        return a;
    }
    return Interval::of(std::min(a.lo, b.lo), std::max(a.hi, b.hi));
}

Interval interval_meet(const Interval &a, const Interval &b) {
    Interval out = Interval::of(std::max(a.lo, b.lo), std::min(a.hi, b.hi));
    return out.is_bottom() ? Interval::bottom() : out;
}

Interval widen_ulps(const Interval &a, int ulps) {
    if (a.is_bottom()) {
        return a;
    }
    return Interval::of(down(a.lo, ulps), up(a.hi, ulps));
}

AbstractComplex AbstractComplex::zero() {
    return {Interval::point(-kInf), Interval::point(0)};
}

AbstractComplex AbstractComplex::from_complex(std::complex<double> c) {
    if (c == std::complex<double>(0, 0)) {
        return zero();
    }
    AbstractComplex out;
    bool axis_aligned = c.real() == 0 || c.imag() == 0;
    double m = std::abs(c);
    double lm = std::log(m);
    if (axis_aligned && m == 1) {
        out.log_mag = Interval::point(0);
    } else {
        double s = libm_slack(lm);
        out.log_mag = Interval::of(down(lm - s), up(lm + s));
    }
    if (c.imag() == 0 && c.real() > 0) {
        out.phase = Interval::point(0);
    } else {
        double phi = std::arg(c);
        if (phi <= -kPi) {
            phi = kPi;
        }
        double s = libm_slack(phi);
        out.phase = Interval::of(down(phi - s), up(phi + s));
    }
    return out;
}

bool AbstractComplex::is_zero() const {
    return !is_bottom() && log_mag.hi == -kInf;
}

bool AbstractComplex::may_be_zero() const {
    return !is_bottom() && log_mag.lo == -kInf;
}

bool AbstractComplex::contains(std::complex<double> z, double tolerance) const {
    if (is_bottom()) {
        return false;
    }
    double m = std::abs(z);
    if (m == 0) {
        return may_be_zero();
    }
    double lm = std::log(m);
    if (!(log_mag.lo - tolerance <= lm && lm <= log_mag.hi + tolerance)) {
        // Tiny magnitudes still count as zero if the box admits zero.
        if (!(may_be_zero() && lm < log_mag.lo)) {
            return false;
        }
        if (m > tolerance) {
            return false;
        }
        return true;
    }
    if (phase.hi - phase.lo >= kTwoPi) {
        return true;
    }
    double phi = std::arg(z);
    double lo = phase.lo - tolerance;
    double hi = phase.hi + tolerance;
    double k = std::ceil((lo - phi) / kTwoPi);
    return phi + k * kTwoPi <= hi;
}

std::string AbstractComplex::str() const {
    if (is_bottom()) {
        return "bottom";
    }
    if (is_zero()) {
        return "0";
    }
    return "e^(" + log_mag.str() + " + " + phase.str() + "i)";
}

AbstractComplex acomplex_mul(const AbstractComplex &a, const AbstractComplex &b) {
    if (a.is_bottom() || b.is_bottom()) {
        return AbstractComplex::bottom();
    }
    if (a.is_zero() || b.is_zero()) {
        return AbstractComplex::zero();
    }
    AbstractComplex out{interval_add(a.log_mag, b.log_mag), interval_add(a.phase, b.phase)};
    if (out.phase.width() >= kTwoPi) {
        out.phase = full_circle();
    }
    return out;
}

AbstractComplex acomplex_join(const AbstractComplex &a, const AbstractComplex &b) {
    if (a.is_bottom()) {
        return b;
    }
    if (b.is_bottom()) {
        return a;
    }
    return {interval_join(a.log_mag, b.log_mag), interval_join(a.phase, b.phase)};
}

AbstractComplex acomplex_conj(const AbstractComplex &a) {
    if (a.is_bottom() || a.is_zero()) {
        return a;
    }
    return {a.log_mag, interval_neg(a.phase)};
}

Interval acomplex_re(const AbstractComplex &c) {
    if (c.is_bottom()) {
        return Interval::bottom();
    }
    return interval_mul(interval_exp(c.log_mag), interval_cos(c.phase));
}

std::string FResult::str() const {
    std::string out = "{";
    bool first = true;
    for (unsigned v = 0; v < 4; v++) {
        if (values_.contains(v)) {
            out += first ? "" : ",";
            out += std::to_string(v);
            first = false;
        }
    }
    if (undefined_) {
        out += first ? "" : ",";
        out += "undef";
    }
    return out + "}";
}

AbstractComplex i_pow(const FResult &s) {
    static const AbstractComplex powers[4] = {
        AbstractComplex::one(),
        AbstractComplex::polar(Interval::point(0), Interval::of(down(kPi / 2, 1), up(kPi / 2, 1))),
        AbstractComplex::polar(Interval::point(0), Interval::of(kPi, up(kPi, 1))),
        AbstractComplex::polar(Interval::point(0), Interval::of(-up(kPi / 2, 1), -down(kPi / 2, 1))),
    };
    AbstractComplex out = AbstractComplex::bottom();
    for (unsigned v = 0; v < 4; v++) {
        if (s.values().contains(v)) {
            out = acomplex_join(out, powers[v]);
        }
    }
    if (s.has_undefined()) {
        out = acomplex_join(out, AbstractComplex::zero());
    }
    return out;
}

}  // namespace abstraqt

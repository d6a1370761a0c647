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

#ifndef ABSTRAQT_ABSTRACT_DOMAINS_HPP
#define ABSTRAQT_ABSTRACT_DOMAINS_HPP

#include <complex>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>

namespace abstraqt {

/// Subset of {0, 1} stored as a 2-bit indicator (bit k set iff k is a member).
class AbstractBool {
   public:
    constexpr AbstractBool() = default;

    static constexpr AbstractBool from_mask(std::uint8_t mask) {
        AbstractBool b;
        b.mask_ = mask & 0x3;
        return b;
    }
    static constexpr AbstractBool bottom() {
        return from_mask(0);
    }
    static constexpr AbstractBool of(bool value) {
        return from_mask(value ? 0x2 : 0x1);
    }
    static constexpr AbstractBool top() {
        return from_mask(0x3);
    }

    constexpr std::uint8_t mask() const {
        return mask_;
    }
    constexpr bool contains(bool value) const {
        return (mask_ >> (value ? 1 : 0)) & 1;
    }
    constexpr bool is_bottom() const {
        return mask_ == 0;
    }
    constexpr bool is_singleton() const {
        return mask_ == 0x1 || mask_ == 0x2;
    }

    constexpr bool operator==(const AbstractBool &) const = default;

    std::string str() const;

   private:
    std::uint8_t mask_ = 0;
};

AbstractBool abool_add(AbstractBool a, AbstractBool b);
AbstractBool abool_mul(AbstractBool a, AbstractBool b);
AbstractBool abool_join(AbstractBool a, AbstractBool b);

/// Subset of Z4 stored as a 4-bit indicator.
class AbstractZ4 {
   public:
    constexpr AbstractZ4() = default;

    static constexpr AbstractZ4 from_mask(std::uint8_t mask) {
        AbstractZ4 z;
        z.mask_ = mask & 0xF;
        return z;
    }
    static constexpr AbstractZ4 bottom() {
        return from_mask(0);
    }
    static constexpr AbstractZ4 of(unsigned value) {
        return from_mask((std::uint8_t)(1u << (value & 3)));
    }
    static constexpr AbstractZ4 top() {
        return from_mask(0xF);
    }

    constexpr std::uint8_t mask() const {
        return mask_;
    }
    constexpr bool contains(unsigned value) const {
        return (mask_ >> (value & 3)) & 1;
    }
    constexpr bool is_bottom() const {
        return mask_ == 0;
    }
    constexpr bool is_singleton() const {
        return mask_ != 0 && (mask_ & (mask_ - 1)) == 0;
    }

    constexpr bool operator==(const AbstractZ4 &) const = default;

    std::string str() const;

   private:
    std::uint8_t mask_ = 0;
};

AbstractZ4 az4_add(AbstractZ4 a, AbstractZ4 b);
AbstractZ4 az4_sub(AbstractZ4 a, AbstractZ4 b);
AbstractZ4 az4_mul(AbstractZ4 a, AbstractZ4 b);
AbstractZ4 az4_join(AbstractZ4 a, AbstractZ4 b);
AbstractZ4 embed_bool(AbstractBool b);

/// Closed interval over the extended reals. Bottom is (+inf, -inf).
struct Interval {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();

    static constexpr Interval of(double lo, double hi) {
        return Interval{lo, hi};
    }
    static constexpr Interval point(double x) {
        return Interval{x, x};
    }
    static constexpr Interval bottom() {
        return Interval{};
    }
    static constexpr Interval top() {
        return Interval{-std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()};
    }

    bool is_bottom() const {
        return !(lo <= hi);
    }
    bool contains(double x) const {
        return lo <= x && x <= hi;
    }
    double width() const {
        return is_bottom() ? 0.0 : hi - lo;
    }

    bool operator==(const Interval &) const = default;

    std::string str() const;
};

Interval interval_add(const Interval &a, const Interval &b);
Interval interval_neg(const Interval &a);
Interval interval_mul(const Interval &a, const Interval &b);
Interval interval_exp(const Interval &a);
Interval interval_cos(const Interval &a);
Interval interval_join(const Interval &a, const Interval &b);
/// Intersection; bottom if disjoint.
Interval interval_meet(const Interval &a, const Interval &b);
/// Widens both endpoints outward by `ulps` units in the last place.
Interval widen_ulps(const Interval &a, int ulps);

/// Set of complex numbers {e^(r + phi*i) : r in log_mag, phi in phase}. The
/// exact zero is log_mag = [-inf, -inf] with phase [0, 0].
struct AbstractComplex {
    Interval log_mag = Interval::point(0);
    Interval phase = Interval::point(0);

    static AbstractComplex one() {
        return {};
    }
    static AbstractComplex zero();
    static AbstractComplex bottom() {
        return {Interval::bottom(), Interval::bottom()};
    }
    static AbstractComplex polar(Interval log_mag, Interval phase) {
        return {log_mag, phase};
    }
    /// Degenerate box around a concrete value, phase canonicalized to (-pi, pi]
    /// and both coordinates widened for rounding.
    static AbstractComplex from_complex(std::complex<double> c);

    bool is_bottom() const {
        return log_mag.is_bottom() || phase.is_bottom();
    }
    /// Concretizes to exactly {0}.
    bool is_zero() const;
    /// 0 is a member.
    bool may_be_zero() const;

    /// Membership test. `tolerance` is an absolute slack on both the
    /// log-magnitude and the phase (used by sampling tests whose concrete
    /// side is itself computed in floating point).
    bool contains(std::complex<double> z, double tolerance = 0.0) const;

    bool operator==(const AbstractComplex &) const = default;

    std::string str() const;
};

AbstractComplex acomplex_mul(const AbstractComplex &a, const AbstractComplex &b);
AbstractComplex acomplex_join(const AbstractComplex &a, const AbstractComplex &b);
AbstractComplex acomplex_conj(const AbstractComplex &a);
Interval acomplex_re(const AbstractComplex &c);

/// Subset of Z4 together with the "no solution" marker, as produced by the
/// prefactor-residue function used for measurement and trace.
class FResult {
   public:
    constexpr FResult() = default;

    static constexpr FResult of(AbstractZ4 values, bool undefined) {
        FResult f;
        f.values_ = values;
        f.undefined_ = undefined;
        return f;
    }
    static constexpr FResult undefined_only() {
        return of(AbstractZ4::bottom(), true);
    }
    static constexpr FResult value(unsigned v) {
        return of(AbstractZ4::of(v), false);
    }
    static FResult from_concrete(std::optional<std::uint8_t> v) {
        return v ? value(*v) : undefined_only();
    }

    constexpr AbstractZ4 values() const {
        return values_;
    }
    constexpr bool has_undefined() const {
        return undefined_;
    }
    constexpr bool is_empty() const {
        return values_.is_bottom() && !undefined_;
    }
    bool contains(std::optional<std::uint8_t> v) const {
        return v ? values_.contains(*v) : undefined_;
    }
    /// The set is exactly {0}.
    constexpr bool is_exactly_zero() const {
        return values_ == AbstractZ4::of(0) && !undefined_;
    }
    constexpr bool excludes_zero() const {
        return !values_.contains(0);
    }

    constexpr bool operator==(const FResult &) const = default;

    std::string str() const;

   private:
    AbstractZ4 values_;
    bool undefined_ = false;
};

/// Abstract i^s with i^(undefined) := 0.
AbstractComplex i_pow(const FResult &s);

}  // namespace abstraqt

#endif

#pragma once

#include <array>
#include <string>

#include "heron4/rational.hpp"

namespace heron4 {

/*
 * Exact element of Q(sqrt(d1), sqrt(d2)) for non-negative rational bases:
 *
 *     value = c0 + c1*sqrt(d1) + c2*sqrt(d2) + c3*sqrt(d1*d2)
 *
 * Canonical form invariants:
 *   - each base slot is 1 or a positive rational that is not a perfect
 *     square; slots equal to 1 carry a zero coordinate in the matching
 *     radical positions;
 *   - when both slots are nontrivial, d2/d1 is not a rational square
 *     (so {1, sqrt(d1), sqrt(d2), sqrt(d1*d2)} is a Q-basis and the
 *     all-coordinates-zero test is a sound zero test);
 *   - perfect-square radicands are folded into the rational coordinates
 *     during construction, including collisions like d1=2, d2=8 where
 *     sqrt(d2) = 2*sqrt(d1).
 *
 * Values with different declared bases combine by first unifying onto a
 * common base; this fails (domain_error) only when more than two
 * independent square classes are actually in play.
 *
 * sign() is exact: a nested squaring comparison that never leaves the
 * field and uses no floating point.
 */
class QuadScalar {
public:
    QuadScalar() : base_{Rational(1), Rational(1)}, c_{} {}
    QuadScalar(long n) : QuadScalar(Rational(n)) {}
    QuadScalar(const Rational& r) : base_{Rational(1), Rational(1)}, c_{r, Rational(0), Rational(0), Rational(0)} {}

    /// q0 + q1*sqrt(d1) + q2*sqrt(d2) + q3*sqrt(d1*d2), canonicalized.
    /// Negative bases are a domain error.
    static QuadScalar make(const Rational& q0, const Rational& q1, const Rational& q2,
                           const Rational& q3, const Rational& d1, const Rational& d2);

    /// Exact square root of a non-negative rational.
    static QuadScalar sqrt_of(const Rational& value);

    const Rational& base1() const { return base_[0]; }
    const Rational& base2() const { return base_[1]; }
    const Rational& coord(int i) const { return c_[i]; }

    bool is_zero() const;
    bool is_rational() const { return c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero(); }
    /// Throws if the value is irrational.
    Rational as_rational() const;

    /// Exact sign in {-1, 0, +1}.
    int sign() const;

    QuadScalar operator-() const;
    QuadScalar operator+(const QuadScalar& o) const;
    QuadScalar operator-(const QuadScalar& o) const;
    QuadScalar operator*(const QuadScalar& o) const;
    QuadScalar operator/(const QuadScalar& o) const;
    QuadScalar& operator+=(const QuadScalar& o) { *this = *this + o; return *this; }
    QuadScalar& operator-=(const QuadScalar& o) { *this = *this - o; return *this; }
    QuadScalar& operator*=(const QuadScalar& o) { *this = *this * o; return *this; }

    bool operator==(const QuadScalar& o) const { return (*this - o).is_zero(); }
    bool operator!=(const QuadScalar& o) const { return !(*this == o); }

    /// sign(*this - o); a total order on values.
    int compare(const QuadScalar& o) const { return (*this - o).sign(); }
    bool operator<(const QuadScalar& o) const { return compare(o) < 0; }
    bool operator<=(const QuadScalar& o) const { return compare(o) <= 0; }
    bool operator>(const QuadScalar& o) const { return compare(o) > 0; }
    bool operator>=(const QuadScalar& o) const { return compare(o) >= 0; }

    QuadScalar abs() const { return sign() < 0 ? -*this : *this; }

    /// "q0 + q1*sqrt(d1) + q2*sqrt(d2) + q3*sqrt(d1*d2)" with rationals as
    /// "num/den"; zero terms are omitted, a pure rational renders plain.
    std::string str() const;

    /// Approximate value for display only; exactness is never consumed here.
    double to_double() const;

private:
    std::array<Rational, 2> base_;
    std::array<Rational, 4> c_;

    QuadScalar(std::array<Rational, 2> base, std::array<Rational, 4> coords)
        : base_(std::move(base)), c_(std::move(coords)) {}

    static void unify(QuadScalar& a, QuadScalar& b);
    static QuadScalar mul_common(const QuadScalar& a, const QuadScalar& b);
};

}  // namespace heron4

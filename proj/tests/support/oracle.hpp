#pragma once

// Test-only numeric oracle: evaluates scalars in 100+ digit decimal
// arithmetic (MPFR) independently of the exact code paths under test.

#include <mpfr.h>

#include <random>

#include "heron4/quad_scalar.hpp"

namespace heron4::testing {

inline constexpr int kOraclePrecision = 512;  // bits, ~154 decimal digits

class BigFloat {
public:
    BigFloat() { mpfr_init2(v_, kOraclePrecision); mpfr_set_zero(v_, 1); }
    explicit BigFloat(const Rational& r) {
        mpfr_init2(v_, kOraclePrecision);
        mpfr_set_q(v_, r.raw().get_mpq_t(), MPFR_RNDN);
    }
    BigFloat(const BigFloat& o) { mpfr_init2(v_, kOraclePrecision); mpfr_set(v_, o.v_, MPFR_RNDN); }
    BigFloat& operator=(const BigFloat& o) {
        if (this != &o) mpfr_set(v_, o.v_, MPFR_RNDN);
        return *this;
    }
    ~BigFloat() { mpfr_clear(v_); }

    BigFloat sqrt() const {
        BigFloat r;
        mpfr_sqrt(r.v_, v_, MPFR_RNDN);
        return r;
    }
    BigFloat operator*(const BigFloat& o) const {
        BigFloat r;
        mpfr_mul(r.v_, v_, o.v_, MPFR_RNDN);
        return r;
    }
    BigFloat operator+(const BigFloat& o) const {
        BigFloat r;
        mpfr_add(r.v_, v_, o.v_, MPFR_RNDN);
        return r;
    }
    int sign() const { return mpfr_sgn(v_); }
    bool magnitude_exceeds_1e_minus_50() const {
        if (mpfr_zero_p(v_)) return false;
        BigFloat a;
        mpfr_abs(a.v_, v_, MPFR_RNDN);
        return mpfr_cmp_d(a.v_, 1e-50) > 0;
    }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

private:
    mpfr_t v_;
};

// q0 + q1*sqrt(d1) + q2*sqrt(d2) + q3*sqrt(d1*d2) in decimal arithmetic
inline BigFloat decimal_eval(const QuadScalar& x) {
    BigFloat s1 = BigFloat(x.base1()).sqrt();
    BigFloat s2 = BigFloat(x.base2()).sqrt();
    return BigFloat(x.coord(0)) + BigFloat(x.coord(1)) * s1 + BigFloat(x.coord(2)) * s2 +
           BigFloat(x.coord(3)) * s1 * s2;
}

struct Rng {
    std::mt19937_64 gen;
    explicit Rng(std::uint64_t seed) : gen(seed) {}

    long integer(long lo, long hi) {
        return std::uniform_int_distribution<long>(lo, hi)(gen);
    }
    Rational rational(long span = 9) {
        long num = integer(-span, span);
        long den = integer(1, span);
        return Rational(num, den);
    }
    Rational positive_rational(long span = 9) {
        long num = integer(1, span);
        long den = integer(1, span);
        return Rational(num, den);
    }
    Rational nonsquare_base() {
        static const long pool[] = {2, 3, 5, 6, 7, 10, 11, 13, 15, 17};
        return Rational(pool[integer(0, 9)]);
    }
};

}  // namespace heron4::testing

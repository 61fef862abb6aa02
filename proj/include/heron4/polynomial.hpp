#pragma once

#include <map>
#include <string>
#include <vector>

#include "heron4/quad_scalar.hpp"
#include "heron4/rational.hpp"

namespace heron4 {

/// Sparse polynomial with rational coefficients over a fixed list of
/// symbols. Zero coefficients are never stored.
class Polynomial {
public:
    using Exponents = std::vector<int>;

    Polynomial() = default;
    explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}

    static Polynomial constant(std::size_t nvars, const Rational& c);
    static Polynomial variable(std::size_t nvars, std::size_t index);

    std::size_t nvars() const { return nvars_; }
    const std::map<Exponents, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Exponents& e, const Rational& c);

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(const Rational& c) const;
    Polynomial pow(int e) const;

    bool operator==(const Polynomial& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    QuadScalar eval(const std::vector<QuadScalar>& values) const;
    Rational eval_rational(const std::vector<Rational>& values) const;

    /// e.g. "2*a^2*b^2 - a^4" for the given symbol names.
    std::string str(const std::vector<std::string>& names) const;

private:
    std::size_t nvars_ = 0;
    std::map<Exponents, Rational> terms_;
};

}  // namespace heron4

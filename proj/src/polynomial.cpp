#include "heron4/polynomial.hpp"

#include <stdexcept>

namespace heron4 {

Polynomial Polynomial::constant(std::size_t nvars, const Rational& c) {
    Polynomial p(nvars);
    p.add_term(Exponents(nvars, 0), c);
    return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t index) {
    Polynomial p(nvars);
    Exponents e(nvars, 0);
    e.at(index) = 1;
    p.add_term(e, Rational(1));
    return p;
}

void Polynomial::add_term(const Exponents& e, const Rational& c) {
    if (e.size() != nvars_) throw std::invalid_argument("Polynomial: exponent arity mismatch");
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

Polynomial Polynomial::operator-() const {
    Polynomial r(nvars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    Polynomial r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
    Polynomial r(nvars_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) {
            Exponents e(nvars_);
            for (std::size_t i = 0; i < nvars_; ++i) e[i] = e1[i] + e2[i];
            r.add_term(e, c1 * c2);
        }
    return r;
}

Polynomial Polynomial::operator*(const Rational& c) const {
    Polynomial r(nvars_);
    for (const auto& [e, coeff] : terms_) r.add_term(e, coeff * c);
    return r;
}

Polynomial Polynomial::pow(int e) const {
    if (e < 0) throw std::invalid_argument("Polynomial: negative power");
    Polynomial r = constant(nvars_, Rational(1));
    for (int i = 0; i < e; ++i) r = r * *this;
    return r;
}

QuadScalar Polynomial::eval(const std::vector<QuadScalar>& values) const {
    if (values.size() != nvars_) throw std::invalid_argument("Polynomial: value arity mismatch");
    QuadScalar total(0);
    for (const auto& [e, c] : terms_) {
        QuadScalar term{c};
        for (std::size_t i = 0; i < nvars_; ++i)
            for (int k = 0; k < e[i]; ++k) term *= values[i];
        total += term;
    }
    return total;
}

Rational Polynomial::eval_rational(const std::vector<Rational>& values) const {
    if (values.size() != nvars_) throw std::invalid_argument("Polynomial: value arity mismatch");
    Rational total(0);
    for (const auto& [e, c] : terms_) {
        Rational term = c;
        for (std::size_t i = 0; i < nvars_; ++i)
            for (int k = 0; k < e[i]; ++k) term *= values[i];
        total += term;
    }
    return total;
}

std::string Polynomial::str(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : terms_) {
        bool neg = c.sign() < 0;
        Rational mag = neg ? -c : c;
        std::string body;
        bool unit = mag == Rational(1);
        if (!unit) body = mag.str();
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            if (!body.empty()) body += "*";
            body += names.at(i);
            if (e[i] > 1) body += "^" + std::to_string(e[i]);
        }
        if (body.empty()) body = mag.str();
        if (out.empty())
            out = (neg ? "-" : "") + body;
        else
            out += (neg ? " - " : " + ") + body;
    }
    return out;
}

}  // namespace heron4

#include "heron4/quad_scalar.hpp"

#include <cassert>
#include <cmath>
#include <cstdio>
#include <utility>
#include <vector>

namespace heron4 {

namespace {

struct Term {
    Rational coeff;
    Rational rad;  // positive, not a perfect square
};

// Accumulates coeff*sqrt(rad); perfect-square radicands fold into `rat`.
void add_term(std::vector<Term>& items, Rational& rat, const Rational& coeff, const Rational& rad) {
    if (coeff.is_zero()) return;
    if (rad.sign() < 0) throw std::domain_error("QuadScalar: negative base");
    if (auto root = rad.sqrt_exact()) {
        rat += coeff * *root;
        return;
    }
    items.push_back({coeff, rad});
}

// Which product of basis elements makes `rad` a perfect square.
// Returns the bitmask over basis slots, or -1 if rad is independent.
int square_class_mask(const Rational& rad, const std::vector<Rational>& basis) {
    if (rad.sqrt_exact()) return 0;
    for (std::size_t m = 1; m < (std::size_t(1) << basis.size()); ++m) {
        Rational prod = rad;
        for (std::size_t k = 0; k < basis.size(); ++k)
            if (m & (std::size_t(1) << k)) prod *= basis[k];
        if (prod.sqrt_exact()) return static_cast<int>(m);
    }
    return -1;
}

}  // namespace

QuadScalar QuadScalar::make(const Rational& q0, const Rational& q1, const Rational& q2,
                            const Rational& q3, const Rational& d1, const Rational& d2) {
    if (d1.sign() < 0 || d2.sign() < 0) throw std::domain_error("QuadScalar: negative base");

    std::vector<Term> items;
    Rational rat = q0;
    add_term(items, rat, q1, d1);
    add_term(items, rat, q2, d2);
    add_term(items, rat, q3, d1 * d2);

    // Declared base slots are preserved (after square folding), so
    // make(0,1,0,0, 2,3) keeps base (2,3) even though only sqrt(2) is used.
    std::vector<Rational> basis;
    int slot_of_basis[2] = {-1, -1};  // basis index -> declared slot
    std::array<Rational, 2> base{Rational(1), Rational(1)};
    if (!d1.is_zero() && !d1.sqrt_exact()) {
        basis.push_back(d1);
        slot_of_basis[0] = 0;
        base[0] = d1;
    }
    if (!d2.is_zero() && !d2.sqrt_exact()) {
        if (square_class_mask(d2, basis) == -1) {
            slot_of_basis[basis.size()] = 1;
            basis.push_back(d2);
            base[1] = d2;
        }
    }

    std::array<Rational, 4> coords{rat, Rational(0), Rational(0), Rational(0)};
    for (const Term& t : items) {
        int m = square_class_mask(t.rad, basis);
        if (m < 0) throw std::logic_error("QuadScalar::make: unreachable class");
        Rational d(1);
        int slot_mask = 0;
        for (std::size_t k = 0; k < basis.size(); ++k)
            if (m & (1 << k)) {
                d *= basis[k];
                slot_mask |= 1 << slot_of_basis[k];
            }
        Rational root = *(t.rad * d).sqrt_exact();
        if (m == 0)
            coords[0] += t.coeff * root;
        else
            coords[slot_mask == 1 ? 1 : slot_mask == 2 ? 2 : 3] += t.coeff * root / d;
    }
    return QuadScalar(base, coords);
}

QuadScalar QuadScalar::sqrt_of(const Rational& value) {
    if (value.sign() < 0) throw std::domain_error("QuadScalar: sqrt of negative rational");
    if (auto root = value.sqrt_exact()) return QuadScalar(*root);
    return make(Rational(0), Rational(1), Rational(0), Rational(0), value, Rational(1));
}

bool QuadScalar::is_zero() const {
    return c_[0].is_zero() && c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero();
}

Rational QuadScalar::as_rational() const {
    if (!is_rational()) throw std::domain_error("QuadScalar: value is irrational");
    return c_[0];
}

// Rewrites a and b over one common base; throws when more than two
// independent square classes are involved.  Unused base slots of the
// operands are ignored, so (1 + sqrt(2) declared over base (2,7)) still
// combines with sqrt(5).
void QuadScalar::unify(QuadScalar& a, QuadScalar& b) {
    struct Item {
        Rational coeff;
        Rational rad;
        int owner;  // 0 = a, 1 = b
        int mask = 0;
    };
    std::vector<Item> items;
    auto gather = [&items](const QuadScalar& s, int owner) {
        const Rational rads[4] = {Rational(1), s.base_[0], s.base_[1], s.base_[0] * s.base_[1]};
        for (int i = 1; i < 4; ++i)
            if (!s.c_[i].is_zero()) items.push_back({s.c_[i], rads[i], owner});
    };
    gather(a, 0);
    gather(b, 1);

    std::vector<Rational> basis;
    for (Item& it : items) {
        int m = square_class_mask(it.rad, basis);
        if (m < 0) {
            if (basis.size() == 2) throw std::domain_error("QuadScalar: incompatible bases");
            m = 1 << basis.size();
            basis.push_back(it.rad);
        }
        it.mask = m;
    }
    // smallest representative per class, then sort for a deterministic base
    for (std::size_t k = 0; k < basis.size(); ++k)
        for (const Item& it : items)
            if (it.mask == (1 << k) && it.rad < basis[k]) basis[k] = it.rad;
    if (basis.size() == 2 && basis[1] < basis[0]) {
        std::swap(basis[0], basis[1]);
        for (Item& it : items) {
            if (it.mask == 1)
                it.mask = 2;
            else if (it.mask == 2)
                it.mask = 1;
        }
    }

    std::array<Rational, 2> base{basis.size() > 0 ? basis[0] : Rational(1),
                                 basis.size() > 1 ? basis[1] : Rational(1)};
    std::array<Rational, 4> ca{a.c_[0], Rational(0), Rational(0), Rational(0)};
    std::array<Rational, 4> cb{b.c_[0], Rational(0), Rational(0), Rational(0)};
    for (const Item& it : items) {
        Rational d(1);
        if (it.mask & 1) d *= base[0];
        if (it.mask & 2) d *= base[1];
        Rational root = *(it.rad * d).sqrt_exact();
        auto& coords = it.owner == 0 ? ca : cb;
        if (it.mask == 0)
            coords[0] += it.coeff * root;
        else
            coords[it.mask] += it.coeff * root / d;
    }
    a = QuadScalar(base, ca);
    b = QuadScalar(base, cb);
}

QuadScalar QuadScalar::operator-() const {
    return QuadScalar(base_, {-c_[0], -c_[1], -c_[2], -c_[3]});
}

QuadScalar QuadScalar::operator+(const QuadScalar& o) const {
    if (base_ == o.base_)
        return QuadScalar(base_, {c_[0] + o.c_[0], c_[1] + o.c_[1], c_[2] + o.c_[2], c_[3] + o.c_[3]});
    QuadScalar a = *this, b = o;
    unify(a, b);
    return a + b;
}

QuadScalar QuadScalar::operator-(const QuadScalar& o) const { return *this + (-o); }

QuadScalar QuadScalar::mul_common(const QuadScalar& a, const QuadScalar& b) {
    const Rational& d1 = a.base_[0];
    const Rational& d2 = a.base_[1];
    const auto& c = a.c_;
    const auto& e = b.c_;
    std::array<Rational, 4> r{
        c[0] * e[0] + c[1] * e[1] * d1 + c[2] * e[2] * d2 + c[3] * e[3] * d1 * d2,
        c[0] * e[1] + c[1] * e[0] + (c[2] * e[3] + c[3] * e[2]) * d2,
        c[0] * e[2] + c[2] * e[0] + (c[1] * e[3] + c[3] * e[1]) * d1,
        c[0] * e[3] + c[3] * e[0] + c[1] * e[2] + c[2] * e[1]};
    return QuadScalar(a.base_, r);
}

QuadScalar QuadScalar::operator*(const QuadScalar& o) const {
    if (base_ == o.base_) return mul_common(*this, o);
    QuadScalar a = *this, b = o;
    unify(a, b);
    return mul_common(a, b);
}

QuadScalar QuadScalar::operator/(const QuadScalar& o) const {
    if (o.is_zero()) throw std::domain_error("QuadScalar: division by zero");
    QuadScalar a = *this, b = o;
    if (base_ != o.base_) unify(a, b);
    // inverse via the two conjugations: N = y*y^s1*y^s2*y^s1s2 is rational
    QuadScalar b1(b.base_, {b.c_[0], -b.c_[1], b.c_[2], -b.c_[3]});
    QuadScalar p = mul_common(b, b1);  // lives in Q(sqrt(d2))
    QuadScalar p2(p.base_, {p.c_[0], p.c_[1], -p.c_[2], -p.c_[3]});
    QuadScalar norm = mul_common(p, p2);
    assert(norm.is_rational());
    Rational n = norm.c_[0];
    if (n.is_zero()) throw std::domain_error("QuadScalar: division by zero");
    QuadScalar inv = mul_common(b1, p2);
    Rational invn = Rational(1) / n;
    for (auto& coord : inv.c_) coord *= invn;
    return mul_common(a, inv);
}

namespace {

// sign of u + v*sqrt(d) with rational u, v and positive non-square d
int sign_pair(const Rational& u, const Rational& v, const Rational& d) {
    if (v.is_zero()) return u.sign();
    if (u.is_zero()) return v.sign();
    if (u.sign() == v.sign()) return u.sign();
    int cmp = (u * u - v * v * d).sign();
    if (cmp == 0) return 0;
    return cmp > 0 ? u.sign() : v.sign();
}

}  // namespace

int QuadScalar::sign() const {
    const Rational& d1 = base_[0];
    const Rational& d2 = base_[1];
    const bool has_hi = !c_[2].is_zero() || !c_[3].is_zero();
    if (!has_hi) return sign_pair(c_[0], c_[1], d1);
    const bool has_lo = !c_[0].is_zero() || !c_[1].is_zero();
    // value = A + B*sqrt(d2) with A, B in Q(sqrt(d1))
    if (!has_lo) return sign_pair(c_[2], c_[3], d1);
    int sa = sign_pair(c_[0], c_[1], d1);
    int sb = sign_pair(c_[2], c_[3], d1);
    if (sa == sb) return sa;
    // compare A^2 against B^2*d2 inside Q(sqrt(d1))
    Rational u = c_[0] * c_[0] + c_[1] * c_[1] * d1 - (c_[2] * c_[2] + c_[3] * c_[3] * d1) * d2;
    Rational v = c_[0] * c_[1] * Rational(2) - c_[2] * c_[3] * Rational(2) * d2;
    int cmp = sign_pair(u, v, d1);
    if (cmp == 0) return 0;
    return cmp > 0 ? sa : sb;
}

std::string QuadScalar::str() const {
    const Rational rads[4] = {Rational(1), base_[0], base_[1], base_[0] * base_[1]};
    std::string out;
    for (int i = 0; i < 4; ++i) {
        if (c_[i].is_zero()) continue;
        bool neg = c_[i].sign() < 0;
        Rational mag = neg ? -c_[i] : c_[i];
        std::string body = mag.str();
        if (i > 0) body += "*sqrt(" + rads[i].str() + ")";
        if (out.empty())
            out = (neg ? "-" : "") + body;
        else
            out += (neg ? " - " : " + ") + body;
    }
    return out.empty() ? "0" : out;
}

double QuadScalar::to_double() const {
    double d1 = base_[0].to_double();
    double d2 = base_[1].to_double();
    return c_[0].to_double() + c_[1].to_double() * std::sqrt(d1) + c_[2].to_double() * std::sqrt(d2) +
           c_[3].to_double() * std::sqrt(d1 * d2);
}

}  // namespace heron4

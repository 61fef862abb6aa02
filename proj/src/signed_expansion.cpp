#include "heron4/signed_expansion.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace heron4::expand {

std::vector<MultinomialClass> multinomial_expand(int k, int n) {
    if (k < 1 || n < 1) throw std::invalid_argument("multinomial_expand: k, n must be positive");
    double size = std::pow(static_cast<double>(k), n);
    if (size > 1e6) throw std::invalid_argument("multinomial_expand: k^n exceeds 10^6");

    std::vector<MultinomialClass> classes;
    std::map<std::vector<int>, std::size_t> index;
    std::vector<int> address(n, 0);
    for (;;) {
        std::vector<int> exps(k, 0);
        for (int v : address) ++exps[v];
        auto it = index.find(exps);
        if (it == index.end()) {
            MultinomialClass cls;
            cls.exponents = exps;
            mpz_class coeff;
            mpz_fac_ui(coeff.get_mpz_t(), n);
            for (int e : exps) {
                mpz_class f;
                mpz_fac_ui(f.get_mpz_t(), e);
                coeff /= f;
            }
            cls.coefficient = coeff;
            index.emplace(exps, classes.size());
            classes.push_back(std::move(cls));
            it = index.find(exps);
        }
        classes[it->second].addresses.push_back(address);
        // odometer
        int pos = n - 1;
        while (pos >= 0 && address[pos] == k - 1) address[pos--] = 0;
        if (pos < 0) break;
        ++address[pos];
    }
    return classes;
}

namespace {

// factor sign table for (a+b+c)(a+b-c)(a-b+c)(-a+b+c)
constexpr int kFactorSign[4][3] = {
    {+1, +1, +1},
    {+1, +1, -1},
    {+1, -1, +1},
    {-1, +1, +1},
};

}  // namespace

std::vector<SignedBox> heron_signed_expansion(const QuadScalar& a, const QuadScalar& b,
                                              const QuadScalar& c) {
    if (a.sign() <= 0 || b.sign() <= 0 || c.sign() <= 0)
        throw std::domain_error("heron_signed_expansion: lengths must be positive");
    const QuadScalar* lengths[3] = {&a, &b, &c};
    std::vector<SignedBox> out;
    out.reserve(81);
    std::array<int, 4> addr{0, 0, 0, 0};
    for (;;) {
        SignedBox box;
        box.address = addr;
        box.sign = 1;
        box.volume = QuadScalar(1);
        for (int f = 0; f < 4; ++f) {
            box.sign *= kFactorSign[f][addr[f]];
            ++box.exponents[addr[f]];
            box.volume *= *lengths[addr[f]];
        }
        out.push_back(std::move(box));
        int pos = 3;
        while (pos >= 0 && addr[pos] == 2) addr[pos--] = 0;
        if (pos < 0) break;
        ++addr[pos];
    }
    return out;
}

std::map<int, std::vector<SignedBox>> group_by_level(const std::vector<SignedBox>& terms) {
    std::map<int, std::vector<SignedBox>> out;
    for (const SignedBox& t : terms) out[t.level()].push_back(t);
    return out;
}

CancelResult cancel(const std::vector<SignedBox>& terms) {
    // bucket by (level, monomial class); a monomial class always lies in a
    // single level, so this is the per-plane grouping of the terms
    std::map<std::pair<int, std::array<int, 3>>, std::vector<SignedBox>> buckets;
    for (const SignedBox& t : terms) buckets[{t.level(), t.exponents}].push_back(t);

    CancelResult result;
    result.net = Polynomial(3);
    for (auto& [key, bucket] : buckets) {
        std::sort(bucket.begin(), bucket.end(),
                  [](const SignedBox& x, const SignedBox& y) { return x.address < y.address; });
        std::vector<const SignedBox*> plus, minus;
        for (const SignedBox& t : bucket) (t.sign > 0 ? plus : minus).push_back(&t);
        std::size_t paired = std::min(plus.size(), minus.size());
        for (std::size_t i = 0; i < paired; ++i) result.pairs.emplace_back(*plus[i], *minus[i]);
        long leftover = static_cast<long>(plus.size()) - static_cast<long>(minus.size());
        if (leftover != 0) {
            Polynomial::Exponents e{key.second[0], key.second[1], key.second[2]};
            result.net.add_term(e, Rational(leftover));
        }
    }
    return result;
}

Polynomial heron_rhs_target() {
    Polynomial t(3);
    t.add_term({2, 2, 0}, Rational(2));
    t.add_term({2, 0, 2}, Rational(2));
    t.add_term({0, 2, 2}, Rational(2));
    t.add_term({4, 0, 0}, Rational(-1));
    t.add_term({0, 4, 0}, Rational(-1));
    t.add_term({0, 0, 4}, Rational(-1));
    return t;
}

}  // namespace heron4::expand

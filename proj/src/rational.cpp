#include "heron4/rational.hpp"

#include <cctype>

namespace heron4 {

Rational Rational::parse(const std::string& text) {
    // strict "[-]digits[/digits]" so CLI input errors are caught early
    auto bad = [&] { throw std::invalid_argument("malformed rational: '" + text + "'"); };
    if (text.empty()) bad();
    std::size_t i = 0;
    if (text[0] == '-') i = 1;
    std::size_t digits = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) { ++i; ++digits; }
    if (digits == 0) bad();
    if (i == text.size()) return Rational(mpz_class(text));
    if (text[i] != '/') bad();
    std::string num = text.substr(0, i);
    std::string den = text.substr(i + 1);
    if (den.empty()) bad();
    for (char ch : den)
        if (!std::isdigit(static_cast<unsigned char>(ch))) bad();
    mpz_class d(den);
    if (d == 0) bad();
    return Rational(mpz_class(num), d);
}

std::optional<Rational> Rational::sqrt_exact() const {
    if (sign() < 0) return std::nullopt;
    if (is_zero()) return Rational(0);
    const mpz_class& n = num();
    const mpz_class& d = den();
    if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return std::nullopt;
    if (mpz_perfect_square_p(d.get_mpz_t()) == 0) return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
    return Rational(rn, rd);
}

std::string Rational::str() const {
    if (is_integer()) return num().get_str();
    return num().get_str() + "/" + den().get_str();
}

}  // namespace heron4

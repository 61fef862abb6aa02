#pragma once

#include <map>
#include <vector>

#include "heron4/polynomial.hpp"
#include "heron4/quad_scalar.hpp"

namespace heron4::expand {

/// One signed hyper-rectangle term of the 81-term product expansion.
struct SignedBox {
    int sign = 1;                    // product of the selected factor signs
    std::array<int, 4> address{};    // i_l in {0,1,2}: which symbol factor l contributes
    std::array<int, 3> exponents{};  // multiset of selected symbols (a, b, c)
    QuadScalar volume;               // product of the selected lengths, positive

    int level() const { return address[0] + address[1] + address[2] + address[3]; }
};

struct MultinomialClass {
    std::vector<int> exponents;                // size k; exponent of x_{v+1}
    mpz_class coefficient;                     // n! / prod(exponents!)
    std::vector<std::vector<int>> addresses;   // lattice points carrying this monomial
};

/// All k^n lattice addresses of (x_1 + ... + x_k)^n grouped into
/// monomial classes, in first-encounter order of the odometer enumeration.
std::vector<MultinomialClass> multinomial_expand(int k, int n);

/// The 81 signed boxes of (a+b+c)(a+b-c)(a-b+c)(-a+b+c).
std::vector<SignedBox> heron_signed_expansion(const QuadScalar& a, const QuadScalar& b,
                                              const QuadScalar& c);

/// Buckets by the affine 3-plane x+y+z+w = K.
std::map<int, std::vector<SignedBox>> group_by_level(const std::vector<SignedBox>& terms);

struct CancelResult {
    Polynomial net;                                      // over symbols (a, b, c)
    std::vector<std::pair<SignedBox, SignedBox>> pairs;  // matched (+, -) terms
};

/// Pairs off +/- terms of identical monomial class inside each level,
/// first-plus with first-minus in lexicographic address order.
CancelResult cancel(const std::vector<SignedBox>& terms);

/// 2a^2b^2 + 2a^2c^2 + 2b^2c^2 - a^4 - b^4 - c^4
Polynomial heron_rhs_target();

}  // namespace heron4::expand

#pragma once

#include <string>
#include <vector>

#include "heron4/polynomial.hpp"
#include "heron4/pythag_dissect.hpp"
#include "heron4/signed_expansion.hpp"

namespace heron4::pipeline {

/// Triangle given by coordinates: base c = p on the axis, apex at (r, h).
/// Some derived squares (a2, b2) are rational by construction; a and b
/// themselves live in Q(sqrt(a2), sqrt(b2)).
struct TriangleDatum {
    Rational p, r, h;
    Rational a2, b2;  // r^2 + h^2 and (p-r)^2 + h^2, with a2 <= b2
    Rational c;       // = p
    Rational area;    // p h / 2
    bool right_triangle = false;   // r = 0: a is a vertical leg
    bool isosceles_right = false;  // a = b, c = a sqrt(2): the 4a^4 case

    /// Validates p, h > 0, 0 <= r <= p, reflects r so that a <= b, and
    /// requires c to be the longest side (b2 <= p^2); otherwise throws a
    /// domain_error telling the caller to relabel.
    static TriangleDatum from_coords(const Rational& p, const Rational& r, const Rational& h);
    /// Same derivation without the longest-side requirement; the pipeline
    /// steps handle the degenerate placements this admits.
    static TriangleDatum unchecked(const Rational& p, const Rational& r, const Rational& h);

    QuadScalar a() const;  // sqrt(a2) over base (a2, b2)
    QuadScalar b() const;
    QuadScalar c_len() const { return QuadScalar(c); }
};

struct CertificateRef {
    std::string name;
    std::string kind;  // "tiling" | "cancellation" | "signed" | "identity" | "congruence"
    bool verdict = false;
    std::string detail;  // exact values, rendered
};

struct ChainStep {
    std::string name;
    QuadScalar lhs, rhs;
    bool equal = false;
    std::vector<CertificateRef> certificates;
    std::vector<std::string> notes;

    bool ok() const;
};

struct ChainReport {
    TriangleDatum datum;
    std::vector<ChainStep> steps;
    Rational chain_value;                      // the common value 16 A^2
    std::vector<std::string> chain_expressions;  // rendered name = value lines
    std::vector<std::string> flags;
    bool verdict = false;
};

/// (a+b+c)(a+b-c)(a-b+c)(-a+b+c) equals the cancelled 81-term net.
ChainStep verify_rhs_expansion(const TriangleDatum& t);
/// a^2 -> r^2+h^2, b^2 -> (p-r)^2+h^2, c^2 -> p^2 at the level of
/// certified box decompositions (25-piece products, 5-piece-times-square).
ChainStep verify_pythagorean_rewrites(const TriangleDatum& t);
/// The printed cancellation ledger in Q[p,r,h], each displayed equality an
/// exact polynomial identity, ending in 4 h^2 p^2.
ChainStep verify_regrouping(const TriangleDatum& t);
/// Sixteen triangle-times-triangle copies as four parallelogram products,
/// each translated into rectangle-times-rectangle; 16 A^2 = 4 p^2 h^2.
ChainStep verify_lhs(const TriangleDatum& t);

ChainReport verify_heron(const Rational& p, const Rational& r, const Rational& h);
ChainReport verify_heron(const TriangleDatum& datum);

/// True when every step is equal and carries at least one certificate,
/// with every certificate verdict true.
bool validate_report(const ChainReport& report);

}  // namespace heron4::pipeline

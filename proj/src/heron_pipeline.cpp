#include "heron4/heron_pipeline.hpp"

#include <stdexcept>

namespace heron4::pipeline {

using pythag::Dissection2D;
using pythag::RightTriangleParams;

namespace {

TriangleDatum derive(const Rational& p, const Rational& r_in, const Rational& h,
                     bool check_longest) {
    if (p.sign() <= 0) throw std::domain_error("triangle: p must be positive");
    if (h.sign() <= 0) throw std::domain_error("triangle: h must be positive");
    if (r_in.sign() < 0 || r_in > p) throw std::domain_error("triangle: r must lie in [0, p]");
    Rational r = r_in;
    if (r > p / Rational(2)) r = p - r;  // reflect so that a <= b
    TriangleDatum t;
    t.p = p;
    t.r = r;
    t.h = h;
    t.a2 = r * r + h * h;
    t.b2 = (p - r) * (p - r) + h * h;
    t.c = p;
    t.area = p * h / Rational(2);
    if (check_longest && t.b2 > p * p)
        throw std::domain_error(
            "triangle: c is not the longest side (b^2 > c^2); relabel so the longest side is the base");
    t.right_triangle = t.r.is_zero();
    t.isosceles_right = t.a2 == t.b2 && p * p == Rational(2) * t.a2;
    return t;
}

CertificateRef tiling_ref(const std::string& name, const TilingCertificate& cert) {
    CertificateRef ref;
    ref.name = name;
    ref.kind = "tiling";
    ref.verdict = cert.verdict;
    ref.detail = "container=" + cert.container_volume.str() +
                 " pieces=" + std::to_string(cert.piece_volumes.size()) +
                 " sum=" + cert.volume_sum().str();
    return ref;
}

CertificateRef identity_ref(const std::string& name, bool ok, const std::string& detail) {
    return CertificateRef{name, "identity", ok, detail};
}

// the 25-piece rewrite of a product of two squared hypotenuses
void add_quartic_rewrite(std::vector<CertificateRef>& certs, const std::string& label,
                         const RightTriangleParams& t1, const RightTriangleParams& t2,
                         const Rational& expected) {
    auto re = pythag::reassemble_product(t1, t2);
    certs.push_back(tiling_ref(label + ".cut", re.dissection.certificate));
    certs.push_back(tiling_ref(label + ".cut_box_frame", re.dissection.certificate_box));
    for (int i = 0; i < 4; ++i)
        certs.push_back(
            tiling_ref(label + "." + re.target_names[i], re.certificates[i]));
    bool translations_only = true;
    for (const auto& placed : re.placements)
        if (!placed.placement.is_translation()) translations_only = false;
    certs.push_back(identity_ref(
        label + ".value",
        re.identity_ok && translations_only && re.source_volume == QuadScalar(expected),
        label + " = " + re.source_volume.str()));
}

// dissected leg square times the c-square: 5 (or 4) product pieces
void add_square_times_c(std::vector<CertificateRef>& certs, const std::string& label,
                        const RightTriangleParams& t, const Rational& c,
                        const Rational& expected) {
    Dissection2D d = pythag::dissect_square(t, {0, 1});
    QuadScalar zero(0), cq{c};
    Polygon2 csq{{2, 3}, {{zero, zero}, {cq, zero}, {cq, cq}, {zero, cq}}};
    Piece container{Product2x2{d.container, csq}};
    std::vector<Piece> pieces;
    for (const auto& poly : d.pieces) pieces.emplace_back(Product2x2{poly, csq});
    auto cert = certify_tiling(container, pieces);
    certs.push_back(tiling_ref(label + ".cut", cert));
    certs.push_back(identity_ref(label + ".value",
                                 cert.container_volume == QuadScalar(expected),
                                 label + " = " + cert.container_volume.str()));
    // reassemble into y-square x c-square and x-square x c-square
    std::vector<Piece> to_y, to_x;
    for (const auto& placed : d.reassembly) {
        Polygon2 moved = placed.shape.translated(placed.translation);
        (placed.target == 0 ? to_y : to_x).emplace_back(Product2x2{moved, csq});
    }
    certs.push_back(
        tiling_ref(label + ".y_square", certify_tiling(Piece{Product2x2{d.y_square, csq}}, to_y)));
    certs.push_back(
        tiling_ref(label + ".x_square", certify_tiling(Piece{Product2x2{d.x_square, csq}}, to_x)));
}

void add_marked_box(std::vector<CertificateRef>& certs, const std::string& label,
                    const std::vector<QuadScalar>& parts1, const std::vector<QuadScalar>& parts2,
                    const Rational& expected) {
    auto m = pythag::marked_box_product(parts1, parts2);
    certs.push_back(tiling_ref(label + ".boxes", m.certificate));
    certs.push_back(identity_ref(label + ".value", m.total == QuadScalar(expected),
                                 label + " = " + m.total.str()));
}

struct RegroupPolys {
    Polynomial a2, b2, c2;        // in Q[p, r, h]
    Polynomial target;            // 2a2 b2 + 2a2 c2 + 2b2 c2 - a2^2 - b2^2 - c2^2
    Polynomial middle;            // the display after cancelling like terms
    Polynomial group_b, group_c;  // the two regrouped blocks
    Polynomial bracket;           // 2r^2 + 2p^2 - (p-r)^2 - (p+r)^2
    Polynomial final4h2p2;
};

RegroupPolys regroup_polys() {
    auto P = Polynomial::variable(3, 0);
    auto R = Polynomial::variable(3, 1);
    auto H = Polynomial::variable(3, 2);
    auto cst = [](long v) { return Polynomial::constant(3, Rational(v)); };
    RegroupPolys g;
    g.a2 = R * R + H * H;
    g.b2 = (P - R) * (P - R) + H * H;
    g.c2 = P * P;
    g.target = g.a2 * g.b2 * cst(2) + g.a2 * g.c2 * cst(2) + g.b2 * g.c2 * cst(2) -
               g.a2 * g.a2 - g.b2 * g.b2 - g.c2 * g.c2;
    Polynomial pr = P - R;
    g.middle = R * R * pr * pr * cst(2) + R * R * P * P * cst(2) + H * H * P * P * cst(4) +
               pr * pr * P * P * cst(2) - R.pow(4) - pr.pow(4) - P.pow(4);
    g.group_b = R * R * pr * pr * cst(2) + pr * pr * P * P * cst(2) - pr.pow(4);
    g.group_c = P * P * R * R * cst(2) - P.pow(4) - R.pow(4);
    g.bracket = R * R * cst(2) + P * P * cst(2) - pr * pr - (P + R) * (P + R);
    g.final4h2p2 = H * H * P * P * cst(4);
    return g;
}

}  // namespace

TriangleDatum TriangleDatum::from_coords(const Rational& p, const Rational& r, const Rational& h) {
    return derive(p, r, h, true);
}

TriangleDatum TriangleDatum::unchecked(const Rational& p, const Rational& r, const Rational& h) {
    return derive(p, r, h, false);
}

QuadScalar TriangleDatum::a() const {
    return QuadScalar::make(Rational(0), Rational(1), Rational(0), Rational(0), a2, b2);
}

QuadScalar TriangleDatum::b() const {
    return QuadScalar::make(Rational(0), Rational(0), Rational(1), Rational(0), a2, b2);
}

bool ChainStep::ok() const {
    if (!equal || certificates.empty()) return false;
    for (const auto& c : certificates)
        if (!c.verdict) return false;
    return true;
}

ChainStep verify_rhs_expansion(const TriangleDatum& t) {
    ChainStep step;
    step.name = "rhs_expansion";
    QuadScalar a = t.a(), b = t.b(), c = t.c_len();
    auto terms = expand::heron_signed_expansion(a, b, c);
    auto cancelled = expand::cancel(terms);

    bool levels_ok = true;
    for (const auto& [plus, minus] : cancelled.pairs)
        if (plus.level() != minus.level() || plus.exponents != minus.exponents) levels_ok = false;
    bool net_ok = cancelled.net == expand::heron_rhs_target();

    step.lhs = (a + b + c) * (a + b - c) * (a - b + c) * (-a + b + c);
    step.rhs = cancelled.net.eval({a, b, c});
    step.equal = step.lhs == step.rhs;
    step.certificates.push_back(CertificateRef{
        "expansion.cancellation", "cancellation", terms.size() == 81 && net_ok && levels_ok,
        "81 terms, " + std::to_string(cancelled.pairs.size()) +
            " level-local cancelled pairs, net = " +
            cancelled.net.str({"a", "b", "c"})});
    return step;
}

ChainStep verify_pythagorean_rewrites(const TriangleDatum& t) {
    ChainStep step;
    step.name = "pythagorean_rewrites";
    const Rational &p = t.p, &r = t.r, &h = t.h;
    Rational pr = p - r;
    QuadScalar h2{h * h};

    if (!t.right_triangle) {
        auto ta = RightTriangleParams::from_legs(QuadScalar(r), QuadScalar(h));
        auto tb = RightTriangleParams::from_legs(QuadScalar(pr), QuadScalar(h));
        add_quartic_rewrite(step.certificates, "a^4", ta, ta, t.a2 * t.a2);
        add_quartic_rewrite(step.certificates, "b^4", tb, tb, t.b2 * t.b2);
        add_quartic_rewrite(step.certificates, "a^2b^2", ta, tb, t.a2 * t.b2);
        add_square_times_c(step.certificates, "a^2c^2", ta, p, t.a2 * p * p);
        add_square_times_c(step.certificates, "b^2c^2", tb, p, t.b2 * p * p);
    } else {
        // a^2 = h^2 is already a single square: no five-piece dissection
        step.notes.push_back("leg-square shortcut: a^2 = h^2 needs no dissection");
        auto tb = RightTriangleParams::from_legs(QuadScalar(p), QuadScalar(h));
        add_marked_box(step.certificates, "a^4", {h2}, {h2}, t.a2 * t.a2);
        add_quartic_rewrite(step.certificates, "b^4", tb, tb, t.b2 * t.b2);
        add_marked_box(step.certificates, "a^2b^2", {h2},
                       {QuadScalar(p * p), h2}, t.a2 * t.b2);
        add_marked_box(step.certificates, "a^2c^2", {h2}, {QuadScalar(p * p)}, t.a2 * p * p);
        add_square_times_c(step.certificates, "b^2c^2", tb, p, t.b2 * p * p);
    }
    step.certificates.push_back(identity_ref("c^4.value", true, "c^4 = " + (p * p * p * p).str()));

    QuadScalar a = t.a(), b = t.b(), c = t.c_len();
    step.lhs = expand::heron_rhs_target().eval({a, b, c});
    RegroupPolys g = regroup_polys();
    step.rhs = QuadScalar(g.target.eval_rational({p, r, h}));
    step.equal = step.lhs == step.rhs;
    return step;
}

ChainStep verify_regrouping(const TriangleDatum& t) {
    ChainStep step;
    step.name = "regrouping";
    const Rational &p = t.p, &r = t.r, &h = t.h;
    Rational pr = p - r;
    QuadScalar rq{r}, hq{h}, prq{pr};
    RegroupPolys g = regroup_polys();

    // the six expansion blocks, each carried by a box decomposition
    if (!t.right_triangle) {
        auto ss_ab = pythag::sum_of_squares_product(rq, hq, prq, hq);
        step.certificates.push_back(tiling_ref("block.2a2b2.boxes", ss_ab.decomposition.certificate));
        step.certificates.push_back(identity_ref("block.2a2b2.value",
                                                 ss_ab.ok && ss_ab.total == QuadScalar(t.a2 * t.b2),
                                                 "a^2 b^2 = " + ss_ab.total.str()));
        auto ss_a4 = pythag::sum_of_squares_product(rq, hq, rq, hq);
        step.certificates.push_back(tiling_ref("block.a4.boxes", ss_a4.decomposition.certificate));
        step.certificates.push_back(identity_ref("block.a4.value",
                                                 ss_a4.ok && ss_a4.total == QuadScalar(t.a2 * t.a2),
                                                 "a^4 = " + ss_a4.total.str()));
        add_marked_box(step.certificates, "block.2a2c2", {QuadScalar(r * r), QuadScalar(h * h)},
                       {QuadScalar(p * p)}, t.a2 * p * p);
    } else {
        step.notes.push_back("leg-square shortcut: a^2 = h^2 expands to a single box");
        add_marked_box(step.certificates, "block.2a2b2", {QuadScalar(h * h)},
                       {QuadScalar(p * p), QuadScalar(h * h)}, t.a2 * t.b2);
        add_marked_box(step.certificates, "block.a4", {QuadScalar(h * h)}, {QuadScalar(h * h)},
                       t.a2 * t.a2);
        add_marked_box(step.certificates, "block.2a2c2", {QuadScalar(h * h)}, {QuadScalar(p * p)},
                       t.a2 * p * p);
    }
    auto ss_b4 = pythag::sum_of_squares_product(prq, hq, prq, hq);
    step.certificates.push_back(tiling_ref("block.b4.boxes", ss_b4.decomposition.certificate));
    step.certificates.push_back(identity_ref("block.b4.value",
                                             ss_b4.ok && ss_b4.total == QuadScalar(t.b2 * t.b2),
                                             "b^4 = " + ss_b4.total.str()));
    add_marked_box(step.certificates, "block.2b2c2", {QuadScalar(pr * pr), QuadScalar(h * h)},
                   {QuadScalar(p * p)}, t.b2 * p * p);

    // the printed ledger as exact polynomial identities in Q[p, r, h]
    std::vector<std::string> names{"p", "r", "h"};
    bool cancel_ok = g.target == g.middle;
    step.certificates.push_back(
        identity_ref("ledger.cancel_like_terms", cancel_ok, g.middle.str(names)));
    bool regroup_ok = g.middle == g.final4h2p2 + g.group_b + g.group_c;
    step.certificates.push_back(identity_ref("ledger.regroup", regroup_ok,
                                             "middle = 4h^2p^2 + groupB + groupC"));
    auto P = Polynomial::variable(3, 0);
    auto R = Polynomial::variable(3, 1);
    Polynomial p2r2 = P * P - R * R;
    bool factor_ok = g.group_c == -(p2r2 * p2r2) &&
                     p2r2 * p2r2 == (P - R) * (P - R) * (P + R) * (P + R);
    step.certificates.push_back(
        identity_ref("ledger.factor", factor_ok, "groupC = -(p^2 - r^2)^2"));
    if (!t.right_triangle) {
        auto ds = pythag::difference_of_squares_product(QuadScalar(p), QuadScalar(r));
        Rational want = (p * p - r * r) * (p * p - r * r);
        step.certificates.push_back(CertificateRef{
            "ledger.factor.signed_boxes", "signed", ds.ok && ds.net == QuadScalar(want),
            "(p^2-r^2)^2 = " + ds.net.str() + " via x^4 - 2x^2y^2 + y^4"});
    } else {
        step.notes.push_back("r = 0: groupC is -p^4 directly, no signed-box factoring");
    }
    Polynomial prp = P - R;
    bool combine_ok =
        g.group_b - prp * prp * (P + R) * (P + R) == prp * prp * g.bracket && g.bracket.is_zero();
    step.certificates.push_back(
        identity_ref("ledger.combine", combine_ok, "2r^2 + 2p^2 - (p-r)^2 - (p+r)^2 = 0"));
    bool final_ok = g.middle == g.final4h2p2;
    step.certificates.push_back(identity_ref("ledger.final", final_ok, "net = 4h^2p^2"));

    step.lhs = QuadScalar(g.middle.eval_rational({p, r, h}));
    step.rhs = QuadScalar(Rational(4) * h * h * p * p);
    step.equal = step.lhs == step.rhs;
    return step;
}

ChainStep verify_lhs(const TriangleDatum& t) {
    ChainStep step;
    step.name = "lhs";
    QuadScalar zero(0);
    QuadScalar p{t.p}, r{t.r}, h{t.h};

    // the triangle, its reflected copy, and the parallelogram they bound
    auto tri = [&](int pa, int pb) {
        return Polygon2{{pa, pb}, {{zero, zero}, {p, zero}, {r, h}}};
    };
    auto tri_reflected = [&](int pa, int pb) {
        return Polygon2{{pa, pb}, {{p, zero}, {p + r, h}, {r, h}}};
    };
    auto para = [&](int pa, int pb) {
        return Polygon2{{pa, pb}, {{zero, zero}, {p, zero}, {p + r, h}, {r, h}}};
    };
    Piece pxp{Product2x2{para(0, 1), para(2, 3)}};

    // four congruent triangle-times-triangle quadrants
    std::vector<Piece> quadrants;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            quadrants.emplace_back(Product2x2{i == 0 ? tri(0, 1) : tri_reflected(0, 1),
                                              j == 0 ? tri(2, 3) : tri_reflected(2, 3)});
    step.certificates.push_back(
        tiling_ref("pxp.quadrants", certify_tiling(pxp, quadrants)));
    bool congruences_ok = true;
    for (const auto& quad : quadrants) {
        auto w = congruent(quadrants[0], quad);
        if (!w || !(piece_vertices(apply_isometry(*w, quadrants[0])) == piece_vertices(quad)))
            congruences_ok = false;
    }
    step.certificates.push_back(CertificateRef{
        "pxp.sixteen_copies", "congruence", congruences_ok,
        "4 quadrants per parallelogram product, all congruent to triangle x triangle; "
        "16 copies across the four products"});

    // parallelogram = trapezoid + right triangle, cut at the p mark;
    // translating the triangle by -p turns the product into rectangle x rectangle
    bool sheared = !t.right_triangle;
    auto trap = [&](int pa, int pb) {
        return Polygon2{{pa, pb}, {{zero, zero}, {p, zero}, {p, h}, {r, h}}};
    };
    auto cut_tri = [&](int pa, int pb) {
        return Polygon2{{pa, pb}, {{p, zero}, {p + r, h}, {p, h}}};
    };
    std::vector<Polygon2> parts1, rect_parts1;
    parts1.push_back(trap(0, 1));
    rect_parts1.push_back(trap(0, 1));
    if (sheared) {
        parts1.push_back(cut_tri(0, 1));
        rect_parts1.push_back(cut_tri(0, 1).translated({-p, zero}));
    } else {
        step.notes.push_back("r = 0: the parallelogram is already a rectangle");
    }
    std::vector<Piece> split_pieces, rect_pieces;
    for (const auto& f1 : parts1)
        for (const auto& f2 : parts1) split_pieces.emplace_back(Product2x2{f1, f2.replaned(2, 3)});
    for (const auto& f1 : rect_parts1)
        for (const auto& f2 : rect_parts1)
            rect_pieces.emplace_back(Product2x2{f1, f2.replaned(2, 3)});
    step.certificates.push_back(
        tiling_ref("pxp.trapezoid_cut", certify_tiling(pxp, split_pieces)));
    Piece rect_box = make_box(zero, p, zero, h, zero, p, zero, h);
    step.certificates.push_back(
        tiling_ref("rect_x_rect", certify_tiling(rect_box, rect_pieces)));

    Rational sixteen_a2 = Rational(16) * t.area * t.area;
    Rational four_p2h2 = Rational(4) * t.p * t.p * t.h * t.h;
    step.lhs = QuadScalar(sixteen_a2);
    step.rhs = QuadScalar(four_p2h2);
    step.equal = step.lhs == step.rhs;
    step.certificates.push_back(identity_ref(
        "lhs.value", piece_volume(pxp) == QuadScalar(t.p * t.h * t.p * t.h),
        "vol(P x P) = (p h)^2; 16 A^2 = 4 (p h)^2 / ... = " + sixteen_a2.str()));
    return step;
}

ChainReport verify_heron(const TriangleDatum& datum) {
    ChainReport report;
    report.datum = datum;
    report.steps.push_back(verify_lhs(datum));
    report.steps.push_back(verify_regrouping(datum));
    report.steps.push_back(verify_rhs_expansion(datum));
    report.steps.push_back(verify_pythagorean_rewrites(datum));

    report.chain_value = Rational(16) * datum.area * datum.area;
    QuadScalar chain{report.chain_value};
    report.verdict = true;
    for (const auto& step : report.steps) {
        if (!step.ok()) report.verdict = false;
        if (!(step.lhs == chain) || !(step.rhs == chain)) report.verdict = false;
    }
    report.chain_expressions = {
        "16*A^2 = " + report.chain_value.str(),
        "4*p^2*h^2 = " + (Rational(4) * datum.p * datum.p * datum.h * datum.h).str(),
        "2a^2b^2 + 2a^2c^2 + 2b^2c^2 - a^4 - b^4 - c^4 = " +
            expand::heron_rhs_target()
                .eval({datum.a(), datum.b(), datum.c_len()})
                .str(),
        "(a+b+c)(a+b-c)(a-b+c)(-a+b+c) = " + report.steps[2].lhs.str(),
    };
    if (datum.isosceles_right) report.flags.push_back("degenerate_rhs_reduces_to_4a4");
    if (datum.right_triangle) report.flags.push_back("right_triangle_leg_square_shortcut");
    return report;
}

ChainReport verify_heron(const Rational& p, const Rational& r, const Rational& h) {
    return verify_heron(TriangleDatum::from_coords(p, r, h));
}

bool validate_report(const ChainReport& report) {
    if (report.steps.empty()) return false;
    for (const auto& step : report.steps)
        if (!step.ok()) return false;
    return report.verdict;
}

}  // namespace heron4::pipeline

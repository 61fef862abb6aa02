#include "heron4/pythag_dissect.hpp"

#include <algorithm>
#include <stdexcept>

namespace heron4::pythag {

RightTriangleParams RightTriangleParams::from_legs(const QuadScalar& leg1, const QuadScalar& leg2) {
    if (leg1.sign() <= 0 || leg2.sign() <= 0)
        throw std::domain_error("RightTriangleParams: legs must be positive");
    RightTriangleParams t;
    bool swap = leg1.compare(leg2) > 0;
    t.x = swap ? leg2 : leg1;
    t.y = swap ? leg1 : leg2;
    QuadScalar h2 = t.x * t.x + t.y * t.y;
    if (!h2.is_rational())
        throw std::domain_error("RightTriangleParams: x^2 + y^2 must be rational");
    t.hyp2 = h2.as_rational();
    t.hyp = QuadScalar::sqrt_of(t.hyp2);
    return t;
}

namespace {

Polygon2 make_polygon(const std::array<int, 2>& plane, std::vector<Vec2> verts) {
    Polygon2 p;
    p.plane = plane;
    p.vertices = std::move(verts);
    p.validate();
    return p;
}

// clip a convex ccw polygon against v <= cut (keep_below) or v >= cut
std::optional<Polygon2> clip_horizontal(const Polygon2& poly, const QuadScalar& cut,
                                        bool keep_below) {
    auto inside = [&](const Vec2& p) {
        int s = (p[1] - cut).sign();
        return keep_below ? s <= 0 : s >= 0;
    };
    std::vector<Vec2> out;
    const std::size_t n = poly.vertices.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2& p = poly.vertices[i];
        const Vec2& q = poly.vertices[(i + 1) % n];
        bool pin = inside(p), qin = inside(q);
        if (pin) out.push_back(p);
        if (pin != qin) {
            QuadScalar t = (cut - p[1]) / (q[1] - p[1]);
            out.push_back({p[0] + t * (q[0] - p[0]), cut});
        }
    }
    // drop duplicate and collinear vertices introduced by on-line contacts
    std::vector<Vec2> clean;
    for (const Vec2& v : out) {
        if (!clean.empty() && clean.back()[0] == v[0] && clean.back()[1] == v[1]) continue;
        clean.push_back(v);
    }
    while (clean.size() > 1 && clean.front()[0] == clean.back()[0] &&
           clean.front()[1] == clean.back()[1])
        clean.pop_back();
    if (clean.size() >= 3) {
        std::vector<Vec2> strict;
        const std::size_t m = clean.size();
        for (std::size_t i = 0; i < m; ++i) {
            const Vec2& a = clean[(i + m - 1) % m];
            const Vec2& b = clean[i];
            const Vec2& c = clean[(i + 1) % m];
            QuadScalar cross = (b[0] - a[0]) * (c[1] - b[1]) - (b[1] - a[1]) * (c[0] - b[0]);
            if (!cross.is_zero()) strict.push_back(b);
        }
        clean = std::move(strict);
    }
    if (clean.size() < 3) return std::nullopt;
    Polygon2 result;
    result.plane = poly.plane;
    result.vertices = std::move(clean);
    result.validate();
    return result;
}

}  // namespace

Dissection2D dissect_square(const RightTriangleParams& t, const std::array<int, 2>& plane) {
    const QuadScalar& x = t.x;
    const QuadScalar& y = t.y;
    QuadScalar zero(0);
    Dissection2D d;
    d.triangle = t;

    // tilted z-square A(0,0), B(y,x), C(y-x, x+y), D(-x, y)
    d.container = make_polygon(plane, {{zero, zero}, {y, x}, {y - x, x + y}, {-x, y}});

    Polygon2 ne = make_polygon(plane, {{y, x}, {y - x, x + y}, {y - x, x}});
    Polygon2 se = make_polygon(plane, {{zero, zero}, {y, x}, {zero, x}});
    Polygon2 sw = make_polygon(plane, {{-x, y}, {zero, zero}, {zero, y}});
    Polygon2 nw = make_polygon(plane, {{y - x, x + y}, {-x, y}, {y - x, y}});
    const bool isosceles = x == y;

    d.pieces = {ne, se, sw, nw};
    d.piece_names = {"NE", "SE", "SW", "NW"};
    if (!isosceles) {
        d.pieces.push_back(make_polygon(plane, {{zero, x}, {y - x, x}, {y - x, y}, {zero, y}}));
        d.piece_names.push_back("C");
    }

    d.y_square = make_polygon(plane, {{zero, zero}, {y, zero}, {y, y}, {zero, y}});
    d.x_square = make_polygon(plane, {{y, zero}, {y + x, zero}, {y + x, x}, {y, x}});

    // SE and NW pair into the rectangle [0,y] x [0,x] at the bottom of the
    // y-square; NE and SW pair into an x-by-y rectangle whose lower
    // (y-x)-band completes the y-square and whose upper band is the x-square.
    auto place = [&d](const Polygon2& shape, int source, int target, QuadScalar tu, QuadScalar tv) {
        d.reassembly.push_back(PlacedPiece2D{shape, source, target, Vec2{std::move(tu), std::move(tv)}});
    };
    place(se, 1, 0, zero, zero);
    place(nw, 3, 0, x, -y);
    if (isosceles) {
        place(ne, 0, 1, x, -y);
        place(sw, 2, 1, x + y, x - y);
    } else {
        place(d.pieces[4], 4, 0, zero, zero);
        auto ne_below = clip_horizontal(ne, y, true);
        auto ne_above = clip_horizontal(ne, y, false);
        auto sw_below = clip_horizontal(sw, y - x, true);
        auto sw_above = clip_horizontal(sw, y - x, false);
        if (!ne_below || !ne_above || !sw_below || !sw_above)
            throw std::logic_error("dissect_square: degenerate split");
        place(*ne_below, 0, 0, zero, zero);
        place(*ne_above, 0, 1, x, -y);
        place(*sw_below, 2, 0, y, x);
        place(*sw_above, 2, 1, x + y, x - y);
    }
    return d;
}

TilingCertificate certify_polygon_tiling(const Polygon2& container,
                                         const std::vector<Polygon2>& pieces) {
    TilingCertificate cert;
    cert.container_volume = container.area();
    cert.containment_ok = true;
    for (const Polygon2& p : pieces) {
        cert.piece_volumes.push_back(p.area());
        for (const Vec2& v : p.vertices)
            if (!container.contains(v)) cert.containment_ok = false;
    }
    cert.volume_sum_ok = cert.volume_sum() == cert.container_volume;
    cert.verdict = cert.containment_ok && cert.volume_sum_ok;
    return cert;
}

ProductDissection product_dissection(const RightTriangleParams& t1, const RightTriangleParams& t2) {
    ProductDissection pd;
    pd.t1 = t1;
    pd.t2 = t2;
    pd.d1 = dissect_square(t1, {0, 1});
    pd.d2 = dissect_square(t2, {2, 3});

    pd.container = Product2x2{pd.d1.container, pd.d2.container};
    for (std::size_t i = 0; i < pd.d1.pieces.size(); ++i)
        for (std::size_t j = 0; j < pd.d2.pieces.size(); ++j) {
            Piece p{Product2x2{pd.d1.pieces[i], pd.d2.pieces[j]}};
            pd.class_census[piece_class(p)] += 1;
            pd.pieces.push_back(std::move(p));
            pd.piece_factors.emplace_back(static_cast<int>(i), static_cast<int>(j));
        }
    pd.certificate = certify_tiling(pd.container, pd.pieces);

    // exact in-plane rotations carry the lattice frame onto R_zzww
    Matrix4 rot = Matrix4::zero();
    rot.m[0][0] = t1.y / t1.hyp;
    rot.m[0][1] = t1.x / t1.hyp;
    rot.m[1][0] = -(t1.x / t1.hyp);
    rot.m[1][1] = t1.y / t1.hyp;
    rot.m[2][2] = t2.y / t2.hyp;
    rot.m[2][3] = t2.x / t2.hyp;
    rot.m[3][2] = -(t2.x / t2.hyp);
    rot.m[3][3] = t2.y / t2.hyp;
    pd.frame_rotation = IsometryMap{rot, Point4()};

    pd.container_box = make_box(QuadScalar(0), t1.hyp, QuadScalar(0), t1.hyp, QuadScalar(0), t2.hyp,
                                QuadScalar(0), t2.hyp);
    for (const Piece& p : pd.pieces) pd.pieces_box.push_back(apply_isometry(pd.frame_rotation, p));
    pd.certificate_box = certify_tiling(pd.container_box, pd.pieces_box);
    return pd;
}

ProductReassembly reassemble_product(const RightTriangleParams& t1, const RightTriangleParams& t2) {
    ProductReassembly r;
    r.dissection = product_dissection(t1, t2);
    const ProductDissection& pd = r.dissection;

    const QuadScalar &x = t1.x, &y = t1.y, &u = t2.x, &v = t2.y;
    QuadScalar zero(0);
    Interval y1a{zero, y}, y1b{zero, y};
    Interval x1a{y, y + x}, x1b{zero, x};
    Interval y2a{zero, v}, y2b{zero, v};
    Interval x2a{v, v + u}, x2b{zero, u};
    r.targets = {Piece{Box4{{x1a, x1b, x2a, x2b}}}, Piece{Box4{{x1a, x1b, y2a, y2b}}},
                 Piece{Box4{{y1a, y1b, x2a, x2b}}}, Piece{Box4{{y1a, y1b, y2a, y2b}}}};
    r.target_names = {"R_xxuu", "R_xxvv", "R_yyuu", "R_yyvv"};
    for (int i = 0; i < 4; ++i) r.target_volumes[i] = piece_volume(r.targets[i]);

    for (const PlacedPiece2D& p1 : pd.d1.reassembly)
        for (const PlacedPiece2D& p2 : pd.d2.reassembly) {
            PlacedPiece4D placed;
            placed.shape = Product2x2{p1.shape, p2.shape};
            placed.source = {p1.source_piece, p2.source_piece};
            placed.target = p1.target == 1 ? (p2.target == 1 ? 0 : 1) : (p2.target == 1 ? 2 : 3);
            placed.placement = IsometryMap::translate(
                {p1.translation[0], p1.translation[1], p2.translation[0], p2.translation[1]});
            r.placements.push_back(std::move(placed));
        }

    std::array<std::vector<Piece>, 4> landed;
    for (const PlacedPiece4D& p : r.placements)
        landed[p.target].push_back(apply_isometry(p.placement, p.shape));
    for (int i = 0; i < 4; ++i) r.certificates[i] = certify_tiling(r.targets[i], landed[i]);

    r.source_volume = piece_volume(pd.container);
    QuadScalar total(0);
    for (const auto& tv : r.target_volumes) total += tv;
    r.identity_ok = r.source_volume == total;
    return r;
}

MarkedBoxProduct marked_box_product(const std::vector<QuadScalar>& parts1,
                                    const std::vector<QuadScalar>& parts2) {
    if (parts1.empty() || parts2.empty())
        throw std::invalid_argument("marked_box_product: empty factor");
    for (const auto& p : parts1)
        if (p.sign() <= 0) throw std::domain_error("marked_box_product: parts must be positive");
    for (const auto& p : parts2)
        if (p.sign() <= 0) throw std::domain_error("marked_box_product: parts must be positive");

    MarkedBoxProduct m;
    QuadScalar zero(0), one(1);
    std::vector<QuadScalar> marks1{zero}, marks2{zero};
    for (const auto& p : parts1) marks1.push_back(marks1.back() + p);
    for (const auto& p : parts2) marks2.push_back(marks2.back() + p);
    m.container = make_box(zero, marks1.back(), zero, one, zero, marks2.back(), zero, one);
    for (std::size_t i = 0; i + 1 < marks1.size(); ++i)
        for (std::size_t j = 0; j + 1 < marks2.size(); ++j) {
            m.pieces.push_back(
                make_box(marks1[i], marks1[i + 1], zero, one, marks2[j], marks2[j + 1], zero, one));
            m.terms.push_back(parts1[i] * parts2[j]);
        }
    m.certificate = certify_tiling(m.container, m.pieces);
    m.total = marks1.back() * marks2.back();
    return m;
}

SumOfSquaresCert sum_of_squares_product(const QuadScalar& x, const QuadScalar& y,
                                        const QuadScalar& z, const QuadScalar& w) {
    if (x.sign() <= 0 || y.sign() <= 0 || z.sign() <= 0 || w.sign() <= 0)
        throw std::domain_error("sum_of_squares_product: inputs must be positive");
    SumOfSquaresCert cert;
    cert.decomposition = marked_box_product({x * x, y * y}, {z * z, w * w});
    cert.terms = {x * x * z * z, x * x * w * w, y * y * z * z, y * y * w * w};
    cert.total = (x * x + y * y) * (z * z + w * w);
    QuadScalar sum(0);
    for (const auto& t : cert.terms) sum += t;
    cert.ok = cert.decomposition.certificate.verdict && sum == cert.total &&
              cert.decomposition.total == cert.total;
    return cert;
}

DiffOfSquaresCert difference_of_squares_product(const QuadScalar& x, const QuadScalar& y) {
    if (!(y.sign() > 0) || !(x.compare(y) > 0))
        throw std::domain_error("difference_of_squares_product: requires x > y > 0");
    DiffOfSquaresCert cert;
    QuadScalar x2 = x * x, y2 = y * y;
    cert.terms = {SignedTerm{+1, x2 * x2, "x^4"}, SignedTerm{-1, x2 * y2, "x^2*y^2"},
                  SignedTerm{-1, x2 * y2, "x^2*y^2"}, SignedTerm{+1, y2 * y2, "y^4"}};
    QuadScalar net(0);
    for (const auto& t : cert.terms) net += QuadScalar(t.sign) * t.value;
    cert.net = net;
    cert.expected = (x2 - y2) * (x2 - y2);
    cert.ok = cert.net == cert.expected;
    return cert;
}

}  // namespace heron4::pythag

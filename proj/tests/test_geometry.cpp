#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "heron4/geometry.hpp"
#include "support/oracle.hpp"

using namespace heron4;

namespace {

QuadScalar q(long n) { return QuadScalar(Rational(n)); }
QuadScalar q(long n, long d) { return QuadScalar(Rational(n, d)); }

Point4 pt(long x, long y, long z, long w) { return {q(x), q(y), q(z), q(w)}; }

// 0 <= x <= y <= z <= w <= 1 as a concrete simplex
Simplex4 unit_right_simplex() {
    Simplex4 s;
    s.v[0] = pt(0, 0, 0, 0);
    s.v[1] = pt(0, 0, 0, 1);
    s.v[2] = pt(0, 0, 1, 1);
    s.v[3] = pt(0, 1, 1, 1);
    s.v[4] = pt(1, 1, 1, 1);
    return s;
}

Box4 unit_box() { return make_box(q(0), q(1), q(0), q(1), q(0), q(1), q(0), q(1)); }

Polygon2 lower_triangle(int a, int b) {  // 0 <= u <= v <= 1 in plane (a, b)
    return Polygon2{{a, b}, {{q(0), q(0)}, {q(1), q(1)}, {q(0), q(1)}}};
}

Polygon2 unit_square(int a, int b) {
    return Polygon2{{a, b}, {{q(0), q(0)}, {q(1), q(0)}, {q(1), q(1)}, {q(0), q(1)}}};
}

Polygon2 random_convex_polygon(heron4::testing::Rng& rng, int a, int b) {
    // angle-sorted edge vectors summing to zero give a convex polygon;
    // floating point is used only to propose an order, convexity is checked exactly
    for (;;) {
        int n = static_cast<int>(rng.integer(3, 6));
        std::vector<Vec2> edges;
        Vec2 sum{q(0), q(0)};
        for (int i = 0; i + 1 < n; ++i) {
            Vec2 e{QuadScalar(rng.rational(4)), QuadScalar(rng.rational(4))};
            sum = {sum[0] + e[0], sum[1] + e[1]};
            edges.push_back(e);
        }
        edges.push_back({-sum[0], -sum[1]});
        std::sort(edges.begin(), edges.end(), [](const Vec2& l, const Vec2& r) {
            return std::atan2(l[1].to_double(), l[0].to_double()) <
                   std::atan2(r[1].to_double(), r[0].to_double());
        });
        Polygon2 poly;
        poly.plane = {a, b};
        Vec2 cur{q(0), q(0)};
        for (const auto& e : edges) {
            poly.vertices.push_back(cur);
            cur = {cur[0] + e[0], cur[1] + e[1]};
        }
        try {
            poly.validate();
            return poly;
        } catch (const std::invalid_argument&) {
            continue;  // collinear edges proposed; try again
        }
    }
}

IsometryMap random_signed_perm(heron4::testing::Rng& rng) {
    std::array<int, 4> perm{0, 1, 2, 3};
    for (int i = 3; i > 0; --i) std::swap(perm[i], perm[rng.integer(0, i)]);
    std::array<int, 4> signs;
    for (auto& s : signs) s = rng.integer(0, 1) ? 1 : -1;
    Point4 t{QuadScalar(rng.rational(5)), QuadScalar(rng.rational(5)), QuadScalar(rng.rational(5)),
             QuadScalar(rng.rational(5))};
    return IsometryMap::signed_permutation(perm, signs, t);
}

}  // namespace

TEST_CASE("piece volumes") {
    CHECK(piece_volume(unit_right_simplex()) == QuadScalar(Rational(1, 24)));
    CHECK(piece_volume(make_box(q(0), q(2), q(0), q(2), q(0), q(2), q(0), q(2))) == q(16));
    Product2x2 tt{lower_triangle(0, 1), lower_triangle(2, 3)};
    CHECK(piece_volume(tt) == q(1, 4));
    CHECK_THROWS_AS(validate_piece(Simplex4{{pt(0, 0, 0, 0), pt(1, 0, 0, 0), pt(2, 0, 0, 0),
                                             pt(0, 1, 0, 0), pt(0, 0, 1, 0)}}),
                    std::invalid_argument);
}

TEST_CASE("apply_isometry basics") {
    Piece box = unit_box();
    Piece same = apply_isometry(IsometryMap::identity(), box);
    CHECK(piece_vertices(same) == piece_vertices(box));

    Piece moved = apply_isometry(IsometryMap::translate(pt(1, 0, 0, 0)), box);
    const Box4& mb = std::get<Box4>(moved);
    CHECK(mb.iv[0].lo == q(1));
    CHECK(mb.iv[0].hi == q(2));
    CHECK(mb.iv[1].lo == q(0));

    // coordinate swap (x<->z, y<->w) carries one triangle product to the other
    Product2x2 p1{lower_triangle(0, 1), lower_triangle(2, 3)};
    Product2x2 p2{lower_triangle(2, 3).replaned(0, 1), lower_triangle(0, 1).replaned(2, 3)};
    IsometryMap swap01_23 = IsometryMap::signed_permutation({2, 3, 0, 1}, {1, 1, 1, 1}, Point4());
    Piece mappedv = apply_isometry(swap01_23, p1);
    CHECK(piece_vertices(mappedv) == piece_vertices(Piece{Product2x2{lower_triangle(0, 1),
                                                                     lower_triangle(2, 3)}}));
    CHECK(piece_volume(mappedv) == piece_volume(Piece{p2}));
}

TEST_CASE("apply_isometry with an in-plane rational rotation keeps products") {
    // rotation by the 3-4-5 angle in the (0,1) plane
    Matrix4 m = Matrix4::identity();
    m.m[0][0] = q(3, 5);
    m.m[0][1] = q(-4, 5);
    m.m[1][0] = q(4, 5);
    m.m[1][1] = q(3, 5);
    IsometryMap iso{m, Point4()};
    REQUIRE(iso.is_orthogonal());
    Product2x2 p{unit_square(0, 1), unit_square(2, 3)};
    Piece image = apply_isometry(iso, p);
    CHECK(std::holds_alternative<Product2x2>(image));
    CHECK(piece_volume(image) == piece_volume(Piece{p}));

    // a box under the same rotation leaves the taxonomy only via refinement
    Piece box = unit_box();
    Piece boxim = apply_isometry(iso, box);
    CHECK(piece_volume(boxim) == q(1));
}

TEST_CASE("apply_isometry_refined falls back to simplices") {
    // mix the (0,1) and (2,3) planes so no block structure survives
    Matrix4 m = Matrix4::zero();
    m.m[0][0] = q(3, 5);
    m.m[0][2] = q(-4, 5);
    m.m[2][0] = q(4, 5);
    m.m[2][2] = q(3, 5);
    m.m[1][1] = q(1);
    m.m[3][3] = q(1);
    IsometryMap iso{m, Point4()};
    REQUIRE(iso.is_orthogonal());
    Product2x2 p{lower_triangle(0, 1), lower_triangle(2, 3)};
    CHECK_THROWS_AS(apply_isometry(iso, p), std::domain_error);
    auto refined = apply_isometry_refined(iso, p);
    CHECK(refined.size() == 6);
    QuadScalar total(0);
    for (const auto& s : refined) total += piece_volume(s);
    CHECK(total == q(1, 4));
}

TEST_CASE("to_simplices subdivides boxes and products") {
    auto box24 = to_simplices(unit_box());
    CHECK(box24.size() == 24);
    QuadScalar sum(0);
    for (const auto& s : box24) sum += piece_volume(s);
    CHECK(sum == q(1));

    Product2x2 squares{unit_square(0, 1), unit_square(2, 3)};
    auto snx = to_simplices(squares);
    CHECK(snx.size() == 24);  // 2 x 2 fan triangles, 6 simplices each
}

TEST_CASE("congruent finds signed-permutation witnesses") {
    // 0<=x<=y<=z<=w vs 0<=y<=x<=z<=w differ by swapping the first two axes
    Simplex4 s1 = unit_right_simplex();
    Simplex4 s2 = s1;
    s2.v[3] = pt(1, 0, 1, 1);  // swap roles of x and y
    auto witness = congruent(s1, s2);
    REQUIRE(witness.has_value());
    CHECK(witness->is_orthogonal());
    auto image = piece_vertices(apply_isometry(*witness, s1));
    CHECK(image == piece_vertices(Piece{s2}));

    Product2x2 sq{unit_square(0, 1), unit_square(2, 3)};
    Piece moved = apply_isometry(IsometryMap::translate(pt(2, 3, -1, 0)), sq);
    auto w2 = congruent(sq, moved);
    REQUIRE(w2.has_value());
    CHECK(w2->is_translation());

    // equal volume, different vertex counts: no witness
    Box4 thin = make_box(q(0), q(1, 24), q(0), q(1), q(0), q(1), q(0), q(1));
    CHECK(!congruent(unit_right_simplex(), thin).has_value());
}

TEST_CASE("congruent general fallback sees rotated copies") {
    Matrix4 m = Matrix4::identity();
    m.m[0][0] = q(3, 5);
    m.m[0][1] = q(-4, 5);
    m.m[1][0] = q(4, 5);
    m.m[1][1] = q(3, 5);
    IsometryMap rot{m, pt(1, -2, 0, 3)};
    Product2x2 p{lower_triangle(0, 1), unit_square(2, 3)};
    Piece image = apply_isometry(rot, p);
    auto witness = congruent(p, image);
    REQUIRE(witness.has_value());
    CHECK(witness->is_orthogonal());
    CHECK(piece_vertices(apply_isometry(*witness, p)) == piece_vertices(image));
}

TEST_CASE("congruence is an equivalence with exact inverse witnesses") {
    heron4::testing::Rng rng(5);
    Product2x2 p{lower_triangle(0, 1), lower_triangle(2, 3)};
    Piece a = apply_isometry(random_signed_perm(rng), p);
    Piece b = apply_isometry(random_signed_perm(rng), p);
    auto self = congruent(a, a);
    REQUIRE(self.has_value());
    auto ab = congruent(a, b);
    auto ba = congruent(b, a);
    REQUIRE(ab.has_value());
    REQUIRE(ba.has_value());
    IsometryMap inv = ab->inverse();
    CHECK(piece_vertices(apply_isometry(inv, b)) == piece_vertices(a));
}

TEST_CASE("containment") {
    Piece box = unit_box();
    for (const auto& s : to_simplices(box)) CHECK(contains(box, s));
    Piece big = make_box(q(0), q(2), q(0), q(2), q(0), q(2), q(0), q(2));
    CHECK(!contains(box, big));
    CHECK(contains(big, box));

    Piece simplex = unit_right_simplex();
    CHECK(contains(simplex, simplex));
    CHECK(contains(box, simplex));
    CHECK(!contains(simplex, box));

    Product2x2 tt{lower_triangle(0, 1), lower_triangle(2, 3)};
    CHECK(contains(box, tt));
    CHECK(contains_point(tt, pt(0, 1, 0, 1)));
    CHECK(!contains_point(tt, pt(1, 0, 0, 1)));
}

TEST_CASE("certify_tiling on the 24 right simplices") {
    Piece box = unit_box();
    auto pieces = to_simplices(box);
    auto cert = certify_tiling(box, pieces);
    CHECK(cert.verdict);
    CHECK(cert.container_volume == q(1));
    CHECK(cert.volume_sum() == q(1));

    pieces.pop_back();  // 23 simplices no longer sum to the cube
    auto cert23 = certify_tiling(box, pieces);
    CHECK(cert23.containment_ok);
    CHECK(!cert23.volume_sum_ok);
    CHECK(!cert23.verdict);
}

TEST_CASE("certificate catches a perturbed piece") {
    Piece box = unit_box();
    auto pieces = to_simplices(box);
    pieces[0] = apply_isometry(IsometryMap::translate({q(-1, 1000), q(0), q(0), q(0)}), pieces[0]);
    auto cert = certify_tiling(box, pieces);
    CHECK(!cert.containment_ok);
    CHECK(!cert.verdict);
}

TEST_CASE("volume is invariant under 500 random isometries") {
    heron4::testing::Rng rng(99);
    Product2x2 tt{lower_triangle(0, 1), lower_triangle(2, 3)};
    std::vector<Piece> shapes{unit_right_simplex(), unit_box(), tt};
    for (int i = 0; i < 500; ++i) {
        const Piece& p = shapes[rng.integer(0, 2)];
        IsometryMap iso = random_signed_perm(rng);
        CHECK(piece_volume(apply_isometry(iso, p)) == piece_volume(p));
    }
}

TEST_CASE("shoelace area equals fan triangulation on random convex polygons") {
    heron4::testing::Rng rng(123);
    for (int i = 0; i < 40; ++i) {
        Polygon2 poly = random_convex_polygon(rng, 0, 1);
        QuadScalar fan(0);
        for (std::size_t k = 1; k + 1 < poly.vertices.size(); ++k) {
            Vec2 e1{poly.vertices[k][0] - poly.vertices[0][0], poly.vertices[k][1] - poly.vertices[0][1]};
            Vec2 e2{poly.vertices[k + 1][0] - poly.vertices[0][0],
                    poly.vertices[k + 1][1] - poly.vertices[0][1]};
            fan += (e1[0] * e2[1] - e1[1] * e2[0]) / QuadScalar(2);
        }
        CHECK(poly.area() == fan);
    }
}

TEST_CASE("wireframe projection") {
    auto segments = project_wireframe(unit_box(), Projection::oblique_default());
    CHECK(segments.size() == 32);
    CHECK(piece_vertices(unit_box()).size() == 16);  // all 16 corners feed the wireframe
    std::vector<Vec2> endpoints;
    for (const auto& s : segments) {
        endpoints.push_back(s[0]);
        endpoints.push_back(s[1]);
    }
    std::sort(endpoints.begin(), endpoints.end(), [](const Vec2& a, const Vec2& b) {
        int s = a[0].compare(b[0]);
        if (s != 0) return s < 0;
        return a[1].compare(b[1]) < 0;
    });
    endpoints.erase(std::unique(endpoints.begin(), endpoints.end(),
                                [](const Vec2& a, const Vec2& b) {
                                    return a[0] == b[0] && a[1] == b[1];
                                }),
                    endpoints.end());
    // the oblique projection identifies corner pairs like (x,1,0,0)/(x,0,1,1)
    CHECK(endpoints.size() == 12);

    Projection zero;
    zero.rows = {{{Rational(0), Rational(0)},
                  {Rational(0), Rational(0)},
                  {Rational(0), Rational(0)},
                  {Rational(0), Rational(0)}}};
    Product2x2 tt{lower_triangle(0, 1), lower_triangle(2, 3)};
    for (const auto& seg : project_wireframe(tt, zero)) {
        CHECK(seg[0][0].is_zero());
        CHECK(seg[1][1].is_zero());
    }
}

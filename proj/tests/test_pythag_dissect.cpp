#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "heron4/pythag_dissect.hpp"
#include "support/oracle.hpp"

using namespace heron4;
using namespace heron4::pythag;

namespace {

RightTriangleParams legs(long a, long b) {
    return RightTriangleParams::from_legs(QuadScalar(a), QuadScalar(b));
}

// apply the recorded reassembly and certify both target squares
void check_reassembly(const Dissection2D& d) {
    std::vector<Polygon2> to_y, to_x;
    for (const auto& placed : d.reassembly)
        (placed.target == 0 ? to_y : to_x).push_back(placed.shape.translated(placed.translation));
    auto ycert = certify_polygon_tiling(d.y_square, to_y);
    auto xcert = certify_polygon_tiling(d.x_square, to_x);
    CHECK(ycert.verdict);
    CHECK(xcert.verdict);

    // the placed shapes partition each source piece exactly
    std::vector<QuadScalar> covered(d.pieces.size(), QuadScalar(0));
    for (const auto& placed : d.reassembly) covered[placed.source_piece] += placed.shape.area();
    for (std::size_t i = 0; i < d.pieces.size(); ++i) CHECK(covered[i] == d.pieces[i].area());
}

}  // namespace

TEST_CASE("right triangle params") {
    auto t = legs(4, 3);
    CHECK(t.x == QuadScalar(3));
    CHECK(t.y == QuadScalar(4));
    CHECK(t.hyp2 == Rational(25));
    CHECK(t.hyp == QuadScalar(5));

    auto ti = legs(1, 2);
    CHECK(ti.hyp2 == Rational(5));
    CHECK((ti.hyp * ti.hyp).as_rational() == Rational(5));

    CHECK_THROWS_AS(legs(0, 1), std::domain_error);
    QuadScalar one_plus_r2 = QuadScalar::make(Rational(1), Rational(1), Rational(0), Rational(0),
                                              Rational(2), Rational(1));
    CHECK_THROWS_AS(RightTriangleParams::from_legs(one_plus_r2, QuadScalar(1)), std::domain_error);
}

TEST_CASE("dissect_square legs (3,4)") {
    auto d = dissect_square(legs(3, 4));
    REQUIRE(d.pieces.size() == 5);
    CHECK(d.piece_names == std::vector<std::string>{"NE", "SE", "SW", "NW", "C"});
    for (int i = 0; i < 4; ++i) CHECK(d.pieces[i].area() == QuadScalar(6));
    CHECK(d.pieces[4].area() == QuadScalar(1));  // central side y - x = 1
    CHECK(d.container.area() == QuadScalar(25));
    CHECK(certify_polygon_tiling(d.container, d.pieces).verdict);
    CHECK(d.y_square.area() == QuadScalar(16));
    CHECK(d.x_square.area() == QuadScalar(9));
    check_reassembly(d);
}

TEST_CASE("dissect_square isosceles legs (1,1)") {
    auto d = dissect_square(legs(1, 1));
    REQUIRE(d.pieces.size() == 4);  // the central square is empty
    for (const auto& p : d.pieces) CHECK(p.area() == QuadScalar(Rational(1, 2)));
    CHECK(certify_polygon_tiling(d.container, d.pieces).verdict);
    CHECK(d.container.area() == QuadScalar(2));
    check_reassembly(d);
}

TEST_CASE("dissect_square legs (5,12)") {
    auto d = dissect_square(legs(5, 12));
    REQUIRE(d.pieces.size() == 5);
    CHECK(d.pieces[4].area() == QuadScalar(49));
    CHECK(certify_polygon_tiling(d.container, d.pieces).verdict);
    CHECK(d.container.area() == QuadScalar(169));
    check_reassembly(d);
}

TEST_CASE("dissect_square with an irrational hypotenuse") {
    auto d = dissect_square(legs(1, 2));  // z = sqrt(5)
    CHECK(d.container.area() == QuadScalar(5));
    CHECK(certify_polygon_tiling(d.container, d.pieces).verdict);
    check_reassembly(d);
}

TEST_CASE("random leg pairs: containment, conservation, reassembly") {
    heron4::testing::Rng rng(17);
    for (int i = 0; i < 100; ++i) {
        QuadScalar a{rng.positive_rational(8)};
        QuadScalar b{rng.positive_rational(8)};
        auto t = RightTriangleParams::from_legs(a, b);
        auto d = dissect_square(t);
        CHECK(d.pieces.size() == (t.x == t.y ? 4 : 5));
        auto cert = certify_polygon_tiling(d.container, d.pieces);
        CHECK(cert.verdict);
        CHECK(cert.container_volume == QuadScalar(t.hyp2));
        check_reassembly(d);
    }
}

TEST_CASE("product dissection (3,4) x (5,12)") {
    auto pd = product_dissection(legs(3, 4), legs(5, 12));
    REQUIRE(pd.pieces.size() == 25);
    CHECK(pd.class_census["triangle x triangle"] == 16);
    CHECK(pd.class_census["triangle x square"] == 4);
    CHECK(pd.class_census["square x triangle"] == 4);
    CHECK(pd.class_census["square x square"] == 1);
    CHECK(pd.certificate.verdict);
    CHECK(pd.certificate.container_volume == QuadScalar(4225));

    // the same cut presented inside the axis-aligned box R_zzww
    CHECK(pd.certificate_box.verdict);
    CHECK(piece_volume(pd.container_box) == QuadScalar(4225));
    CHECK(pd.frame_rotation.is_orthogonal());

    // the central square times the central square sits inside R_zzww
    const Piece* central_box = nullptr;
    for (std::size_t i = 0; i < pd.pieces_box.size(); ++i)
        if (pd.piece_factors[i].first == 4 && pd.piece_factors[i].second == 4)
            central_box = &pd.pieces_box[i];
    REQUIRE(central_box != nullptr);
    CHECK(piece_class(*central_box) == "square x square");
    CHECK(contains(pd.container_box, *central_box));
    CHECK(piece_volume(*central_box) == QuadScalar(49));
}

TEST_CASE("product dissection of two isosceles triangles") {
    auto pd = product_dissection(legs(1, 1), legs(1, 1));
    CHECK(pd.pieces.size() == 16);
    CHECK(pd.class_census["triangle x triangle"] == 16);
    CHECK(pd.certificate.verdict);
    CHECK(pd.certificate.container_volume == QuadScalar(4));
}

TEST_CASE("reassemble_product (3,4) x (5,12)") {
    auto r = reassemble_product(legs(3, 4), legs(5, 12));
    CHECK(r.target_volumes[0] == QuadScalar(225));   // R_xxuu
    CHECK(r.target_volumes[1] == QuadScalar(1296));  // R_xxvv
    CHECK(r.target_volumes[2] == QuadScalar(400));   // R_yyuu
    CHECK(r.target_volumes[3] == QuadScalar(2304));  // R_yyvv
    CHECK(r.source_volume == QuadScalar(4225));
    CHECK(r.identity_ok);
    for (int i = 0; i < 4; ++i) CHECK(r.certificates[i].verdict);
    for (const auto& placed : r.placements) CHECK(placed.placement.is_translation());

    // every one of the 25 product pieces contributes somewhere
    std::set<std::pair<int, int>> sources;
    for (const auto& placed : r.placements) sources.insert(placed.source);
    CHECK(sources.size() == 25);
}

TEST_CASE("reassemble_product unit isosceles case") {
    auto r = reassemble_product(legs(1, 1), legs(1, 1));
    for (int i = 0; i < 4; ++i) {
        CHECK(r.target_volumes[i] == QuadScalar(1));
        CHECK(r.certificates[i].verdict);
    }
    CHECK(r.placements.size() == 16);
}

TEST_CASE("random product reassemblies conserve volume") {
    heron4::testing::Rng rng(41);
    for (int i = 0; i < 10; ++i) {
        auto t1 = RightTriangleParams::from_legs(QuadScalar(rng.positive_rational(5)),
                                                 QuadScalar(rng.positive_rational(5)));
        auto t2 = RightTriangleParams::from_legs(QuadScalar(rng.positive_rational(5)),
                                                 QuadScalar(rng.positive_rational(5)));
        auto r = reassemble_product(t1, t2);
        CHECK(r.identity_ok);
        for (int k = 0; k < 4; ++k) CHECK(r.certificates[k].verdict);
        for (const auto& placed : r.placements) CHECK(placed.placement.is_translation());
    }
}

TEST_CASE("sum of squares products") {
    auto big = sum_of_squares_product(QuadScalar(3), QuadScalar(4), QuadScalar(5), QuadScalar(12));
    CHECK(big.ok);
    CHECK(big.total == QuadScalar(4225));
    CHECK(big.terms[0] == QuadScalar(225));
    CHECK(big.terms[1] == QuadScalar(1296));
    CHECK(big.terms[2] == QuadScalar(400));
    CHECK(big.terms[3] == QuadScalar(2304));
    CHECK(big.decomposition.certificate.verdict);

    auto small = sum_of_squares_product(QuadScalar(1), QuadScalar(2), QuadScalar(1), QuadScalar(2));
    CHECK(small.ok);
    CHECK(small.total == QuadScalar(25));
    CHECK(small.terms == std::array<QuadScalar, 4>{QuadScalar(1), QuadScalar(4), QuadScalar(4),
                                                   QuadScalar(16)});

    auto unit = sum_of_squares_product(QuadScalar(1), QuadScalar(1), QuadScalar(1), QuadScalar(1));
    CHECK(unit.ok);
    CHECK(unit.total == QuadScalar(4));
    CHECK(unit.decomposition.pieces.size() == 4);
}

TEST_CASE("difference of squares products") {
    auto d = difference_of_squares_product(QuadScalar(2), QuadScalar(1));
    CHECK(d.ok);
    CHECK(d.net.as_rational() == Rational(9));  // 16 - 8 + 1
    CHECK(d.expected.as_rational() == Rational(9));

    auto half = difference_of_squares_product(QuadScalar(1), QuadScalar(Rational(1, 2)));
    CHECK(half.ok);
    CHECK(half.net.as_rational() == Rational(9, 16));

    CHECK_THROWS_AS(difference_of_squares_product(QuadScalar(1), QuadScalar(1)), std::domain_error);
    CHECK_THROWS_AS(difference_of_squares_product(QuadScalar(1), QuadScalar(2)), std::domain_error);

    heron4::testing::Rng rng(53);
    for (int i = 0; i < 50; ++i) {
        QuadScalar a{rng.positive_rational() + Rational(1)};
        QuadScalar b{rng.positive_rational()};
        if (!(a.compare(b) > 0)) continue;
        auto c = difference_of_squares_product(a, b);
        CHECK(c.ok);
        CHECK(c.net.sign() >= 0);  // always a perfect square
        CHECK(QuadScalar::sqrt_of(c.net.as_rational()) == a * a - b * b);
    }
}

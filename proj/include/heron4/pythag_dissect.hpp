#pragma once

#include <map>
#include <string>
#include <vector>

#include "heron4/geometry.hpp"

namespace heron4::pythag {

/// Right triangle with legs 0 < x <= y and rational squared hypotenuse.
struct RightTriangleParams {
    QuadScalar x, y;
    Rational hyp2;   // x^2 + y^2
    QuadScalar hyp;  // sqrt(hyp2)

    /// Sorts the legs; throws when a leg is non-positive or x^2 + y^2
    /// is irrational.
    static RightTriangleParams from_legs(const QuadScalar& leg1, const QuadScalar& leg2);
};

/// A sub-polygon of one dissection piece together with the translation
/// that lands it in its target square.
struct PlacedPiece2D {
    Polygon2 shape;    // in source position
    int source_piece;  // index into Dissection2D::pieces
    int target;        // 0 = y-square, 1 = x-square
    Vec2 translation;
};

/// Five-piece dissection of a z x z square (four right triangles around a
/// (y-x)-square) plus a translation-only reassembly into the two leg
/// squares.  The square is positioned with vertices (0,0), (y,x),
/// (y-x, x+y), (-x, y) so that every coordinate, every cut and every
/// translation is rational whenever the legs are; the reassembly targets
/// are then the axis-aligned squares [0,y]^2 and [y, y+x] x [0,x].
struct Dissection2D {
    RightTriangleParams triangle;
    Polygon2 container;
    std::vector<Polygon2> pieces;           // NE, SE, SW, NW and, when x < y, C
    std::vector<std::string> piece_names;
    Polygon2 y_square, x_square;
    std::vector<PlacedPiece2D> reassembly;  // partitions the pieces
};

Dissection2D dissect_square(const RightTriangleParams& t, const std::array<int, 2>& plane = {0, 1});

/// Containment plus exact area sum for polygons sharing one plane.
TilingCertificate certify_polygon_tiling(const Polygon2& container,
                                         const std::vector<Polygon2>& pieces);

/// The product of the two five-piece dissections: up to 25 product
/// pieces cutting the z^2 w^2 hyper-rectangle.  The pieces are produced
/// in two exactly-congruent frames: the lattice frame (everything
/// rational for rational legs) and the axis-aligned box R_zzww, tied
/// together by the recorded in-plane rotation.
struct ProductDissection {
    RightTriangleParams t1, t2;
    Dissection2D d1, d2;  // factor dissections in planes (0,1) and (2,3)

    Piece container;                                // product of the two tilted squares
    std::vector<Piece> pieces;                      // lattice frame
    std::vector<std::pair<int, int>> piece_factors; // factor piece indices
    TilingCertificate certificate;

    IsometryMap frame_rotation;   // lattice frame -> box frame
    Piece container_box;          // Box4 [0,z]^2 x [0,w]^2
    std::vector<Piece> pieces_box;
    TilingCertificate certificate_box;

    std::map<std::string, int> class_census;  // e.g. "triangle x triangle" -> 16
};

ProductDissection product_dissection(const RightTriangleParams& t1, const RightTriangleParams& t2);

struct PlacedPiece4D {
    Piece shape;                  // lattice frame, source position
    std::pair<int, int> source;   // indices of the 25-piece product factors
    int target;                   // 0..3
    IsometryMap placement;        // always a pure translation
};

/// Reassembly of the product dissection into the four axis-aligned boxes
/// R_xxuu, R_xxvv, R_yyuu, R_yyvv by per-subpiece translations.
struct ProductReassembly {
    ProductDissection dissection;
    std::array<Piece, 4> targets;  // Box4 each
    std::array<std::string, 4> target_names;
    std::array<QuadScalar, 4> target_volumes;
    std::vector<PlacedPiece4D> placements;
    std::array<TilingCertificate, 4> certificates;
    QuadScalar source_volume;  // z^2 w^2
    bool identity_ok;          // z^2 w^2 = x^2u^2 + x^2v^2 + y^2u^2 + y^2v^2
};

ProductReassembly reassemble_product(const RightTriangleParams& t1, const RightTriangleParams& t2);

/// Tiling of [0, sum(parts1)] x [0,1] x [0, sum(parts2)] x [0,1] by the
/// grid of boxes with volumes parts1[i] * parts2[j]; the distributive law
/// as a certified box decomposition.
struct MarkedBoxProduct {
    Piece container;
    std::vector<Piece> pieces;
    std::vector<QuadScalar> terms;
    TilingCertificate certificate;
    QuadScalar total;
};

MarkedBoxProduct marked_box_product(const std::vector<QuadScalar>& parts1,
                                    const std::vector<QuadScalar>& parts2);

/// (x^2+y^2)(z^2+w^2) = x^2z^2 + x^2w^2 + y^2z^2 + y^2w^2, as four boxes.
struct SumOfSquaresCert {
    MarkedBoxProduct decomposition;
    std::array<QuadScalar, 4> terms;  // x^2z^2, x^2w^2, y^2z^2, y^2w^2
    QuadScalar total;
    bool ok;
};

SumOfSquaresCert sum_of_squares_product(const QuadScalar& x, const QuadScalar& y,
                                        const QuadScalar& z, const QuadScalar& w);

/// (x^2-y^2)^2 = x^4 - 2x^2y^2 + y^4 by signed boxes, the directed-segment
/// convention: no geometry, exact signed evaluation.
struct SignedTerm {
    int sign;
    QuadScalar value;
    std::string label;
};

struct DiffOfSquaresCert {
    std::vector<SignedTerm> terms;
    QuadScalar net;
    QuadScalar expected;  // (x^2-y^2)^2
    bool ok;
};

DiffOfSquaresCert difference_of_squares_product(const QuadScalar& x, const QuadScalar& y);

}  // namespace heron4::pythag

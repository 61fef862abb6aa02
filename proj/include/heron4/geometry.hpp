#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "heron4/quad_scalar.hpp"

namespace heron4 {

struct Point4 {
    std::array<QuadScalar, 4> c;

    Point4() : c{QuadScalar(0), QuadScalar(0), QuadScalar(0), QuadScalar(0)} {}
    Point4(QuadScalar x, QuadScalar y, QuadScalar z, QuadScalar w)
        : c{std::move(x), std::move(y), std::move(z), std::move(w)} {}

    const QuadScalar& operator[](int i) const { return c[i]; }
    QuadScalar& operator[](int i) { return c[i]; }

    Point4 operator+(const Point4& o) const;
    Point4 operator-(const Point4& o) const;
    bool operator==(const Point4& o) const;
    /// lexicographic exact order, for canonical vertex-set comparison
    int compare(const Point4& o) const;
};

QuadScalar dot(const Point4& a, const Point4& b);
QuadScalar squared_distance(const Point4& a, const Point4& b);

using Vec2 = std::array<QuadScalar, 2>;

/// Convex polygon in one coordinate 2-plane of R^4, counterclockwise.
struct Polygon2 {
    std::array<int, 2> plane;  // ordered axis indices; vertex (u,v) sits at x[plane[0]]=u, x[plane[1]]=v
    std::vector<Vec2> vertices;

    void validate() const;                    // >= 3 vertices, strictly convex, ccw
    QuadScalar area() const;                  // shoelace
    bool contains(const Vec2& p) const;       // closed region
    Polygon2 translated(const Vec2& t) const;
    Polygon2 replaned(int a, int b) const;    // same shape in another plane pair
};

struct Interval {
    QuadScalar lo, hi;
};

struct Simplex4 {
    std::array<Point4, 5> v;
};

struct Box4 {
    std::array<Interval, 4> iv;
};

struct Product2x2 {
    Polygon2 first, second;  // plane pairs partition {0,1,2,3}
};

using Piece = std::variant<Simplex4, Box4, Product2x2>;

Box4 make_box(const QuadScalar& x0, const QuadScalar& x1, const QuadScalar& y0, const QuadScalar& y1,
              const QuadScalar& z0, const QuadScalar& z1, const QuadScalar& w0, const QuadScalar& w1);

struct Matrix4 {
    std::array<std::array<QuadScalar, 4>, 4> m;

    static Matrix4 zero();
    static Matrix4 identity();
    Point4 apply(const Point4& p) const;
    Matrix4 transpose() const;
    Matrix4 operator*(const Matrix4& o) const;
    bool operator==(const Matrix4& o) const;
    bool is_identity() const;
};

QuadScalar det4(const Matrix4& m);

/// Exact isometry x -> M x + t with M orthogonal.
struct IsometryMap {
    Matrix4 matrix;
    Point4 translation;

    static IsometryMap identity();
    static IsometryMap translate(const Point4& t);
    /// axis i of the source goes to axis perm[i] with sign signs[i]
    static IsometryMap signed_permutation(const std::array<int, 4>& perm,
                                          const std::array<int, 4>& signs, const Point4& t);

    bool is_orthogonal() const;  // M^T M == I, exact
    bool is_translation() const { return matrix.is_identity(); }
    Point4 apply(const Point4& p) const;
    IsometryMap inverse() const;
    /// first `inner`, then this map
    IsometryMap after(const IsometryMap& inner) const;
};

struct TilingCertificate {
    QuadScalar container_volume;
    std::vector<QuadScalar> piece_volumes;
    bool containment_ok = false;
    bool volume_sum_ok = false;
    bool verdict = false;  // containment_ok && volume_sum_ok

    QuadScalar volume_sum() const;
};

void validate_piece(const Piece& p);  // kind invariants, throws
QuadScalar piece_volume(const Piece& p);
std::vector<Point4> piece_vertices(const Piece& p);  // deduplicated
std::vector<std::pair<Point4, Point4>> piece_edges(const Piece& p);
/// "simplex", "box", "triangle x triangle", "triangle x square", ...
std::string piece_class(const Piece& p);

/// Kind-preserving image; throws std::domain_error when the matrix cannot
/// keep a Box4/Product2x2 within the taxonomy (use apply_isometry_refined).
Piece apply_isometry(const IsometryMap& iso, const Piece& p);
/// Total version: falls back to mapping the canonical simplicial subdivision.
std::vector<Piece> apply_isometry_refined(const IsometryMap& iso, const Piece& p);
/// Canonical simplicial subdivision (24 per box, 6 per triangle pair).
std::vector<Piece> to_simplices(const Piece& p);

/// Witness isometry with apply(witness, p1) = p2 as vertex sets, if any.
/// Signed coordinate permutations are searched first, then a general
/// distance-multiset-filtered frame search.
std::optional<IsometryMap> congruent(const Piece& p1, const Piece& p2);

bool contains_point(const Piece& container, const Point4& q);
bool contains(const Piece& container, const Piece& p);

TilingCertificate certify_tiling(const Piece& container, const std::vector<Piece>& pieces);

/// 4x2 rational projection, applied on the right: image = (p . col0, p . col1).
struct Projection {
    std::array<std::array<Rational, 2>, 4> rows;

    /// First plane pair to unit horizontal/vertical, second pair to the
    /// two diagonal directions at half scale.
    static Projection oblique_default();
};

std::vector<std::array<Vec2, 2>> project_wireframe(const Piece& p, const Projection& proj);

}  // namespace heron4

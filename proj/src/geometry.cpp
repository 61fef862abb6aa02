#include "heron4/geometry.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace heron4 {

Point4 Point4::operator+(const Point4& o) const {
    return {c[0] + o.c[0], c[1] + o.c[1], c[2] + o.c[2], c[3] + o.c[3]};
}

Point4 Point4::operator-(const Point4& o) const {
    return {c[0] - o.c[0], c[1] - o.c[1], c[2] - o.c[2], c[3] - o.c[3]};
}

bool Point4::operator==(const Point4& o) const {
    return c[0] == o.c[0] && c[1] == o.c[1] && c[2] == o.c[2] && c[3] == o.c[3];
}

int Point4::compare(const Point4& o) const {
    for (int i = 0; i < 4; ++i) {
        int s = c[i].compare(o.c[i]);
        if (s != 0) return s;
    }
    return 0;
}

QuadScalar dot(const Point4& a, const Point4& b) {
    return a.c[0] * b.c[0] + a.c[1] * b.c[1] + a.c[2] * b.c[2] + a.c[3] * b.c[3];
}

QuadScalar squared_distance(const Point4& a, const Point4& b) {
    Point4 d = a - b;
    return dot(d, d);
}

namespace {

QuadScalar cross2(const Vec2& a, const Vec2& b) { return a[0] * b[1] - a[1] * b[0]; }

Vec2 sub2(const Vec2& a, const Vec2& b) { return {a[0] - b[0], a[1] - b[1]}; }

bool sort_points(const Point4& a, const Point4& b) { return a.compare(b) < 0; }

}  // namespace

void Polygon2::validate() const {
    if (plane[0] == plane[1] || plane[0] < 0 || plane[0] > 3 || plane[1] < 0 || plane[1] > 3)
        throw std::invalid_argument("Polygon2: bad plane pair");
    const std::size_t n = vertices.size();
    if (n < 3) throw std::invalid_argument("Polygon2: fewer than 3 vertices");
    for (std::size_t i = 0; i < n; ++i) {
        Vec2 e1 = sub2(vertices[(i + 1) % n], vertices[i]);
        Vec2 e2 = sub2(vertices[(i + 2) % n], vertices[(i + 1) % n]);
        if (cross2(e1, e2).sign() <= 0)
            throw std::invalid_argument("Polygon2: not strictly convex counterclockwise");
    }
}

QuadScalar Polygon2::area() const {
    QuadScalar twice(0);
    const std::size_t n = vertices.size();
    for (std::size_t i = 0; i < n; ++i) twice += cross2(vertices[i], vertices[(i + 1) % n]);
    return twice / QuadScalar(2);
}

bool Polygon2::contains(const Vec2& p) const {
    const std::size_t n = vertices.size();
    for (std::size_t i = 0; i < n; ++i) {
        Vec2 edge = sub2(vertices[(i + 1) % n], vertices[i]);
        if (cross2(edge, sub2(p, vertices[i])).sign() < 0) return false;
    }
    return true;
}

Polygon2 Polygon2::translated(const Vec2& t) const {
    Polygon2 out = *this;
    for (auto& v : out.vertices) v = {v[0] + t[0], v[1] + t[1]};
    return out;
}

Polygon2 Polygon2::replaned(int a, int b) const {
    Polygon2 out = *this;
    out.plane = {a, b};
    return out;
}

Box4 make_box(const QuadScalar& x0, const QuadScalar& x1, const QuadScalar& y0, const QuadScalar& y1,
              const QuadScalar& z0, const QuadScalar& z1, const QuadScalar& w0, const QuadScalar& w1) {
    return Box4{{Interval{x0, x1}, Interval{y0, y1}, Interval{z0, z1}, Interval{w0, w1}}};
}

Matrix4 Matrix4::zero() {
    Matrix4 r;
    for (auto& row : r.m)
        for (auto& e : row) e = QuadScalar(0);
    return r;
}

Matrix4 Matrix4::identity() {
    Matrix4 r = zero();
    for (int i = 0; i < 4; ++i) r.m[i][i] = QuadScalar(1);
    return r;
}

Point4 Matrix4::apply(const Point4& p) const {
    Point4 out;
    for (int i = 0; i < 4; ++i) {
        QuadScalar s(0);
        for (int j = 0; j < 4; ++j) s += m[i][j] * p[j];
        out[i] = s;
    }
    return out;
}

Matrix4 Matrix4::transpose() const {
    Matrix4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r.m[i][j] = m[j][i];
    return r;
}

Matrix4 Matrix4::operator*(const Matrix4& o) const {
    Matrix4 r = zero();
    for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 4; ++k)
            for (int j = 0; j < 4; ++j) r.m[i][j] += m[i][k] * o.m[k][j];
    return r;
}

bool Matrix4::operator==(const Matrix4& o) const {
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (m[i][j] != o.m[i][j]) return false;
    return true;
}

bool Matrix4::is_identity() const { return *this == identity(); }

namespace {

QuadScalar det3(const std::array<std::array<QuadScalar, 3>, 3>& a) {
    return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
           a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
           a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
}

}  // namespace

QuadScalar det4(const Matrix4& mat) {
    QuadScalar total(0);
    for (int col = 0; col < 4; ++col) {
        std::array<std::array<QuadScalar, 3>, 3> minor;
        for (int i = 1; i < 4; ++i) {
            int jj = 0;
            for (int j = 0; j < 4; ++j) {
                if (j == col) continue;
                minor[i - 1][jj++] = mat.m[i][j];
            }
        }
        QuadScalar term = mat.m[0][col] * det3(minor);
        total += (col % 2 == 0) ? term : -term;
    }
    return total;
}

IsometryMap IsometryMap::identity() { return {Matrix4::identity(), Point4()}; }

IsometryMap IsometryMap::translate(const Point4& t) { return {Matrix4::identity(), t}; }

IsometryMap IsometryMap::signed_permutation(const std::array<int, 4>& perm,
                                            const std::array<int, 4>& signs, const Point4& t) {
    Matrix4 m = Matrix4::zero();
    for (int j = 0; j < 4; ++j) m.m[perm[j]][j] = QuadScalar(signs[j]);
    return {m, t};
}

bool IsometryMap::is_orthogonal() const { return (matrix.transpose() * matrix).is_identity(); }

Point4 IsometryMap::apply(const Point4& p) const { return matrix.apply(p) + translation; }

IsometryMap IsometryMap::inverse() const {
    Matrix4 mt = matrix.transpose();
    Point4 t = mt.apply(translation);
    return {mt, Point4() - t};
}

IsometryMap IsometryMap::after(const IsometryMap& inner) const {
    return {matrix * inner.matrix, matrix.apply(inner.translation) + translation};
}

QuadScalar TilingCertificate::volume_sum() const {
    QuadScalar s(0);
    for (const auto& v : piece_volumes) s += v;
    return s;
}

namespace {

Matrix4 edge_matrix(const Simplex4& s) {
    Matrix4 m;
    for (int k = 1; k < 5; ++k) {
        Point4 e = s.v[k] - s.v[0];
        for (int i = 0; i < 4; ++i) m.m[i][k - 1] = e[i];
    }
    return m;
}

Point4 embed_product(const Product2x2& p, const Vec2& a, const Vec2& b) {
    Point4 out;
    out[p.first.plane[0]] = a[0];
    out[p.first.plane[1]] = a[1];
    out[p.second.plane[0]] = b[0];
    out[p.second.plane[1]] = b[1];
    return out;
}

Vec2 project_to_plane(const Point4& q, const std::array<int, 2>& plane) {
    return {q[plane[0]], q[plane[1]]};
}

}  // namespace

void validate_piece(const Piece& p) {
    if (const auto* s = std::get_if<Simplex4>(&p)) {
        if (det4(edge_matrix(*s)).is_zero())
            throw std::invalid_argument("Simplex4: degenerate (zero determinant)");
    } else if (const auto* b = std::get_if<Box4>(&p)) {
        for (const auto& iv : b->iv)
            if ((iv.hi - iv.lo).sign() < 0) throw std::invalid_argument("Box4: interval with lo > hi");
    } else {
        const auto& pr = std::get<Product2x2>(p);
        pr.first.validate();
        pr.second.validate();
        std::array<bool, 4> seen{};
        for (int a : pr.first.plane) seen[a] = true;
        for (int a : pr.second.plane) seen[a] = true;
        if (!(seen[0] && seen[1] && seen[2] && seen[3]))
            throw std::invalid_argument("Product2x2: plane pairs do not partition the axes");
    }
}

QuadScalar piece_volume(const Piece& p) {
    if (const auto* s = std::get_if<Simplex4>(&p))
        return det4(edge_matrix(*s)).abs() / QuadScalar(24);
    if (const auto* b = std::get_if<Box4>(&p)) {
        QuadScalar v(1);
        for (const auto& iv : b->iv) v *= iv.hi - iv.lo;
        return v;
    }
    const auto& pr = std::get<Product2x2>(p);
    return pr.first.area() * pr.second.area();
}

std::vector<Point4> piece_vertices(const Piece& p) {
    std::vector<Point4> out;
    if (const auto* s = std::get_if<Simplex4>(&p)) {
        out.assign(s->v.begin(), s->v.end());
    } else if (const auto* b = std::get_if<Box4>(&p)) {
        for (int mask = 0; mask < 16; ++mask) {
            Point4 q;
            for (int i = 0; i < 4; ++i) q[i] = (mask >> i) & 1 ? b->iv[i].hi : b->iv[i].lo;
            out.push_back(q);
        }
    } else {
        const auto& pr = std::get<Product2x2>(p);
        for (const auto& a : pr.first.vertices)
            for (const auto& bv : pr.second.vertices) out.push_back(embed_product(pr, a, bv));
    }
    std::sort(out.begin(), out.end(), sort_points);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<std::pair<Point4, Point4>> piece_edges(const Piece& p) {
    std::vector<std::pair<Point4, Point4>> out;
    if (const auto* s = std::get_if<Simplex4>(&p)) {
        for (int i = 0; i < 5; ++i)
            for (int j = i + 1; j < 5; ++j) out.emplace_back(s->v[i], s->v[j]);
        return out;
    }
    if (const auto* b = std::get_if<Box4>(&p)) {
        for (int axis = 0; axis < 4; ++axis) {
            if ((b->iv[axis].hi - b->iv[axis].lo).is_zero()) continue;
            for (int mask = 0; mask < 16; ++mask) {
                if ((mask >> axis) & 1) continue;
                Point4 lo, hi;
                for (int i = 0; i < 4; ++i) {
                    QuadScalar v = (mask >> i) & 1 ? b->iv[i].hi : b->iv[i].lo;
                    lo[i] = v;
                    hi[i] = v;
                }
                hi[axis] = b->iv[axis].hi;
                out.emplace_back(lo, hi);
            }
        }
        return out;
    }
    const auto& pr = std::get<Product2x2>(p);
    const auto& A = pr.first.vertices;
    const auto& B = pr.second.vertices;
    for (std::size_t i = 0; i < A.size(); ++i)
        for (const auto& bv : B)
            out.emplace_back(embed_product(pr, A[i], bv), embed_product(pr, A[(i + 1) % A.size()], bv));
    for (std::size_t j = 0; j < B.size(); ++j)
        for (const auto& av : A)
            out.emplace_back(embed_product(pr, av, B[j]), embed_product(pr, av, B[(j + 1) % B.size()]));
    return out;
}

std::string piece_class(const Piece& p) {
    if (std::holds_alternative<Simplex4>(p)) return "simplex";
    if (std::holds_alternative<Box4>(p)) return "box";
    const auto& pr = std::get<Product2x2>(p);
    auto factor = [](const Polygon2& poly) { return poly.vertices.size() == 3 ? "triangle" : "square"; };
    return std::string(factor(pr.first)) + " x " + factor(pr.second);
}

namespace {

struct SignedPerm {
    std::array<int, 4> perm;   // source axis -> target axis
    std::array<int, 4> signs;  // per source axis
};

std::optional<SignedPerm> as_signed_permutation(const Matrix4& m) {
    SignedPerm sp{};
    std::array<bool, 4> used{};
    for (int j = 0; j < 4; ++j) {
        int row = -1;
        for (int i = 0; i < 4; ++i) {
            if (m.m[i][j].is_zero()) continue;
            if (row != -1) return std::nullopt;
            row = i;
        }
        if (row == -1 || used[row]) return std::nullopt;
        const QuadScalar& e = m.m[row][j];
        if (!e.is_rational()) return std::nullopt;
        Rational r = e.as_rational();
        if (r != Rational(1) && r != Rational(-1)) return std::nullopt;
        used[row] = true;
        sp.perm[j] = row;
        sp.signs[j] = r.sign();
    }
    return sp;
}

// image polygon of `poly` when the isometry maps its plane span onto the
// rows in `rows` (a 2x2 orthogonal block); restores ccw orientation
Polygon2 map_polygon(const Polygon2& poly, const IsometryMap& iso, const std::array<int, 2>& rows) {
    const int i = poly.plane[0], j = poly.plane[1];
    Polygon2 out;
    out.plane = rows;
    out.vertices.reserve(poly.vertices.size());
    for (const auto& v : poly.vertices) {
        QuadScalar u = iso.matrix.m[rows[0]][i] * v[0] + iso.matrix.m[rows[0]][j] * v[1] +
                       iso.translation[rows[0]];
        QuadScalar w = iso.matrix.m[rows[1]][i] * v[0] + iso.matrix.m[rows[1]][j] * v[1] +
                       iso.translation[rows[1]];
        out.vertices.push_back({u, w});
    }
    QuadScalar blockdet = iso.matrix.m[rows[0]][i] * iso.matrix.m[rows[1]][j] -
                          iso.matrix.m[rows[0]][j] * iso.matrix.m[rows[1]][i];
    if (blockdet.sign() < 0) std::reverse(out.vertices.begin(), out.vertices.end());
    return out;
}

// rows touched by the two columns of a plane pair, or nullopt if more than 2
std::optional<std::array<int, 2>> column_support(const Matrix4& m, const std::array<int, 2>& cols) {
    std::vector<int> rows;
    for (int i = 0; i < 4; ++i) {
        bool touched = !m.m[i][cols[0]].is_zero() || !m.m[i][cols[1]].is_zero();
        if (touched) rows.push_back(i);
    }
    if (rows.size() != 2) return std::nullopt;
    return std::array<int, 2>{rows[0], rows[1]};
}

}  // namespace

Piece apply_isometry(const IsometryMap& iso, const Piece& p) {
    if (const auto* s = std::get_if<Simplex4>(&p)) {
        Simplex4 out;
        for (int i = 0; i < 5; ++i) out.v[i] = iso.apply(s->v[i]);
        return out;
    }
    if (const auto* b = std::get_if<Box4>(&p)) {
        if (as_signed_permutation(iso.matrix)) {
            Point4 lo, hi;
            for (int i = 0; i < 4; ++i) {
                lo[i] = b->iv[i].lo;
                hi[i] = b->iv[i].hi;
            }
            Point4 c1 = iso.apply(lo), c2 = iso.apply(hi);
            Box4 out;
            for (int i = 0; i < 4; ++i) {
                bool swap = c1[i].compare(c2[i]) > 0;
                out.iv[i] = Interval{swap ? c2[i] : c1[i], swap ? c1[i] : c2[i]};
            }
            return out;
        }
        // re-express the box as a product of two rectangles and retry
        Polygon2 rect01{{0, 1},
                        {{b->iv[0].lo, b->iv[1].lo},
                         {b->iv[0].hi, b->iv[1].lo},
                         {b->iv[0].hi, b->iv[1].hi},
                         {b->iv[0].lo, b->iv[1].hi}}};
        Polygon2 rect23{{2, 3},
                        {{b->iv[2].lo, b->iv[3].lo},
                         {b->iv[2].hi, b->iv[3].lo},
                         {b->iv[2].hi, b->iv[3].hi},
                         {b->iv[2].lo, b->iv[3].hi}}};
        return apply_isometry(iso, Product2x2{rect01, rect23});
    }
    const auto& pr = std::get<Product2x2>(p);
    auto rows_a = column_support(iso.matrix, pr.first.plane);
    auto rows_b = column_support(iso.matrix, pr.second.plane);
    if (!rows_a || !rows_b)
        throw std::domain_error("apply_isometry: matrix does not preserve the piece taxonomy");
    for (int r : *rows_a)
        for (int r2 : *rows_b)
            if (r == r2) throw std::domain_error("apply_isometry: matrix mixes the factor planes");
    return Product2x2{map_polygon(pr.first, iso, *rows_a), map_polygon(pr.second, iso, *rows_b)};
}

std::vector<Piece> apply_isometry_refined(const IsometryMap& iso, const Piece& p) {
    try {
        return {apply_isometry(iso, p)};
    } catch (const std::domain_error&) {
        std::vector<Piece> out;
        for (const Piece& s : to_simplices(p)) out.push_back(apply_isometry(iso, s));
        return out;
    }
}

namespace {

std::vector<std::array<int, 4>> permutations4() {
    std::array<int, 4> p{0, 1, 2, 3};
    std::vector<std::array<int, 4>> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

std::vector<Piece> box_simplices(const Box4& b) {
    std::vector<Piece> out;
    Point4 lo;
    for (int i = 0; i < 4; ++i) lo[i] = b.iv[i].lo;
    for (const auto& order : permutations4()) {
        Simplex4 s;
        s.v[0] = lo;
        for (int k = 1; k < 5; ++k) {
            int axis = order[4 - k];  // largest coordinate first
            s.v[k] = s.v[k - 1];
            s.v[k][axis] = s.v[k][axis] + (b.iv[axis].hi - b.iv[axis].lo);
        }
        if (!det4(edge_matrix(s)).is_zero()) out.emplace_back(s);
    }
    return out;
}

// staircase triangulation of (triangle a) x (triangle b): one 4-simplex per
// monotone lattice path through the 3x3 grid of product vertices
std::vector<Piece> triangle_product_simplices(const Product2x2& pr, const std::array<Vec2, 3>& a,
                                              const std::array<Vec2, 3>& b) {
    static const int kPaths[6][4] = {{0, 0, 1, 1}, {0, 1, 0, 1}, {0, 1, 1, 0},
                                     {1, 0, 0, 1}, {1, 0, 1, 0}, {1, 1, 0, 0}};
    std::vector<Piece> out;
    for (const auto& path : kPaths) {
        Simplex4 s;
        int ai = 0, bi = 0;
        s.v[0] = embed_product(pr, a[0], b[0]);
        for (int step = 0; step < 4; ++step) {
            if (path[step] == 0)
                ++ai;
            else
                ++bi;
            s.v[step + 1] = embed_product(pr, a[ai], b[bi]);
        }
        if (!det4(edge_matrix(s)).is_zero()) out.emplace_back(s);
    }
    return out;
}

}  // namespace

std::vector<Piece> to_simplices(const Piece& p) {
    if (std::holds_alternative<Simplex4>(p)) return {p};
    if (const auto* b = std::get_if<Box4>(&p)) return box_simplices(*b);
    const auto& pr = std::get<Product2x2>(p);
    std::vector<Piece> out;
    const auto& A = pr.first.vertices;
    const auto& B = pr.second.vertices;
    for (std::size_t i = 1; i + 1 < A.size(); ++i)
        for (std::size_t j = 1; j + 1 < B.size(); ++j) {
            std::array<Vec2, 3> ta{A[0], A[i], A[i + 1]};
            std::array<Vec2, 3> tb{B[0], B[j], B[j + 1]};
            for (auto& s : triangle_product_simplices(pr, ta, tb)) out.push_back(std::move(s));
        }
    return out;
}

namespace {

std::vector<QuadScalar> distance_multiset(const std::vector<Point4>& v) {
    std::vector<QuadScalar> d;
    d.reserve(v.size() * (v.size() - 1) / 2);
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j) d.push_back(squared_distance(v[i], v[j]));
    std::sort(d.begin(), d.end(), [](const QuadScalar& a, const QuadScalar& b) { return a < b; });
    return d;
}

bool same_point_set(std::vector<Point4> a, const std::vector<Point4>& sorted_b) {
    std::sort(a.begin(), a.end(), sort_points);
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!(a[i] == sorted_b[i])) return false;
    return true;
}

Point4 apply_signed_perm(const SignedPerm& sp, const Point4& p) {
    Point4 out;
    for (int j = 0; j < 4; ++j) out[sp.perm[j]] = sp.signs[j] > 0 ? p[j] : -p[j];
    return out;
}

// exact 4x4 inverse by Gauss-Jordan elimination
std::optional<Matrix4> invert(Matrix4 a) {
    Matrix4 inv = Matrix4::identity();
    for (int col = 0; col < 4; ++col) {
        int pivot = -1;
        for (int r = col; r < 4; ++r)
            if (a.m[r][col].sign() != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) return std::nullopt;
        std::swap(a.m[pivot], a.m[col]);
        std::swap(inv.m[pivot], inv.m[col]);
        QuadScalar scale = QuadScalar(1) / a.m[col][col];
        for (int j = 0; j < 4; ++j) {
            a.m[col][j] *= scale;
            inv.m[col][j] *= scale;
        }
        for (int r = 0; r < 4; ++r) {
            if (r == col || a.m[r][col].is_zero()) continue;
            QuadScalar f = a.m[r][col];
            for (int j = 0; j < 4; ++j) {
                a.m[r][j] -= f * a.m[col][j];
                inv.m[r][j] -= f * inv.m[col][j];
            }
        }
    }
    return inv;
}

std::optional<IsometryMap> congruent_general(const std::vector<Point4>& v1,
                                             const std::vector<Point4>& v2,
                                             const std::vector<Point4>& sorted_v2) {
    if (distance_multiset(v1) != distance_multiset(v2)) return std::nullopt;

    // greedy frame of 4 independent edge vectors from v1[0]
    const Point4& a0 = v1[0];
    std::vector<std::size_t> frame;
    {
        Matrix4 probe = Matrix4::zero();
        int rank = 0;
        for (std::size_t i = 1; i < v1.size() && rank < 4; ++i) {
            Point4 e = v1[i] - a0;
            for (int r = 0; r < 4; ++r) probe.m[r][rank] = e[r];
            // accept when the chosen columns stay independent
            Matrix4 test = Matrix4::identity();
            for (int cc = 0; cc <= rank; ++cc)
                for (int r = 0; r < 4; ++r) test.m[r][cc] = probe.m[r][cc];
            bool independent = true;
            if (rank == 3)
                independent = !det4(test).is_zero();
            else {
                // Gram determinant of the chosen columns
                int k = rank + 1;
                std::vector<std::vector<QuadScalar>> g(k, std::vector<QuadScalar>(k, QuadScalar(0)));
                for (int x = 0; x < k; ++x)
                    for (int y = 0; y < k; ++y)
                        for (int r = 0; r < 4; ++r) g[x][y] += probe.m[r][x] * probe.m[r][y];
                // small determinant by elimination
                QuadScalar detg(1);
                for (int c = 0; c < k && independent; ++c) {
                    int piv = -1;
                    for (int r = c; r < k; ++r)
                        if (g[r][c].sign() != 0) {
                            piv = r;
                            break;
                        }
                    if (piv < 0) {
                        independent = false;
                        break;
                    }
                    std::swap(g[piv], g[c]);
                    for (int r = c + 1; r < k; ++r) {
                        QuadScalar f = g[r][c] / g[c][c];
                        for (int cc2 = c; cc2 < k; ++cc2) g[r][cc2] -= f * g[c][cc2];
                    }
                }
            }
            if (independent) {
                frame.push_back(i);
                ++rank;
            }
        }
        if (rank < 4) return std::nullopt;  // degenerate vertex set
    }

    Matrix4 fmat = Matrix4::zero();
    for (int k = 0; k < 4; ++k) {
        Point4 e = v1[frame[k]] - a0;
        for (int r = 0; r < 4; ++r) fmat.m[r][k] = e[r];
    }
    auto finv = invert(fmat);
    if (!finv) return std::nullopt;

    std::vector<QuadScalar> want_d0;
    for (std::size_t k = 0; k < 4; ++k) want_d0.push_back(squared_distance(v1[frame[k]], a0));

    for (const Point4& c0 : v2) {
        // candidate images for each frame point, filtered by anchor distance
        std::array<std::vector<const Point4*>, 4> cands;
        for (int k = 0; k < 4; ++k)
            for (const Point4& g : v2)
                if (squared_distance(g, c0) == want_d0[k]) cands[k].push_back(&g);
        std::array<const Point4*, 4> chosen{};
        auto rec = [&](auto&& self, int k) -> std::optional<IsometryMap> {
            if (k == 4) {
                Matrix4 gmat = Matrix4::zero();
                for (int c = 0; c < 4; ++c) {
                    Point4 e = *chosen[c] - c0;
                    for (int r = 0; r < 4; ++r) gmat.m[r][c] = e[r];
                }
                Matrix4 m = gmat * *finv;
                IsometryMap iso{m, c0 - m.apply(a0)};
                if (!iso.is_orthogonal()) return std::nullopt;
                std::vector<Point4> image;
                image.reserve(v1.size());
                for (const Point4& q : v1) image.push_back(iso.apply(q));
                if (!same_point_set(std::move(image), sorted_v2)) return std::nullopt;
                return iso;
            }
            for (const Point4* g : cands[k]) {
                bool ok = true;
                for (int j = 0; j < k && ok; ++j)
                    ok = squared_distance(*g, *chosen[j]) ==
                         squared_distance(v1[frame[k]], v1[frame[j]]);
                if (!ok) continue;
                chosen[k] = g;
                if (auto r = self(self, k + 1)) return r;
            }
            return std::nullopt;
        };
        if (auto r = rec(rec, 0)) return r;
    }
    return std::nullopt;
}

}  // namespace

std::optional<IsometryMap> congruent(const Piece& p1, const Piece& p2) {
    std::vector<Point4> v1 = piece_vertices(p1);
    std::vector<Point4> v2 = piece_vertices(p2);
    if (v1.size() != v2.size()) return std::nullopt;
    if (piece_volume(p1) != piece_volume(p2)) return std::nullopt;
    std::vector<Point4> sorted_v2 = v2;  // piece_vertices is already sorted
    static const std::vector<std::array<int, 4>> perms = permutations4();
    for (const auto& perm : perms) {
        for (int smask = 0; smask < 16; ++smask) {
            SignedPerm sp;
            sp.perm = perm;
            for (int j = 0; j < 4; ++j) sp.signs[j] = (smask >> j) & 1 ? -1 : 1;
            std::vector<Point4> image;
            image.reserve(v1.size());
            for (const Point4& q : v1) image.push_back(apply_signed_perm(sp, q));
            Point4 mn = image[0];
            for (const Point4& q : image)
                if (q.compare(mn) < 0) mn = q;
            Point4 t = sorted_v2[0] - mn;  // lexicographic minima must correspond
            for (Point4& q : image) q = q + t;
            if (same_point_set(std::move(image), sorted_v2))
                return IsometryMap::signed_permutation(sp.perm, sp.signs, t);
        }
    }
    return congruent_general(v1, v2, sorted_v2);
}

namespace {

Point4 cross4(const Point4& a, const Point4& b, const Point4& c) {
    Point4 n;
    int sign = 1;
    for (int k = 0; k < 4; ++k) {
        std::array<std::array<QuadScalar, 3>, 3> minor;
        int jj = 0;
        for (int j = 0; j < 4; ++j) {
            if (j == k) continue;
            minor[0][jj] = a[j];
            minor[1][jj] = b[j];
            minor[2][jj] = c[j];
            ++jj;
        }
        QuadScalar d = det3(minor);
        n[k] = sign > 0 ? d : -d;
        sign = -sign;
    }
    return n;
}

}  // namespace

bool contains_point(const Piece& container, const Point4& q) {
    if (const auto* b = std::get_if<Box4>(&container)) {
        for (int i = 0; i < 4; ++i)
            if ((q[i] - b->iv[i].lo).sign() < 0 || (b->iv[i].hi - q[i]).sign() < 0) return false;
        return true;
    }
    if (const auto* pr = std::get_if<Product2x2>(&container)) {
        return pr->first.contains(project_to_plane(q, pr->first.plane)) &&
               pr->second.contains(project_to_plane(q, pr->second.plane));
    }
    const auto& s = std::get<Simplex4>(container);
    for (int omit = 0; omit < 5; ++omit) {
        int base = omit == 0 ? 1 : 0;
        std::array<Point4, 3> edges;
        int e = 0;
        for (int i = 0; i < 5; ++i) {
            if (i == omit || i == base) continue;
            edges[e++] = s.v[i] - s.v[base];
        }
        Point4 n = cross4(edges[0], edges[1], edges[2]);
        QuadScalar inside = dot(n, s.v[omit] - s.v[base]);
        int flip = inside.sign();
        if (flip == 0) continue;  // defensive; valid simplices never hit this
        QuadScalar side = dot(n, q - s.v[base]);
        if ((flip > 0 ? side : -side).sign() < 0) return false;
    }
    return true;
}

bool contains(const Piece& container, const Piece& p) {
    for (const Point4& q : piece_vertices(p))
        if (!contains_point(container, q)) return false;
    return true;
}

TilingCertificate certify_tiling(const Piece& container, const std::vector<Piece>& pieces) {
    TilingCertificate cert;
    cert.container_volume = piece_volume(container);
    cert.containment_ok = true;
    for (const Piece& p : pieces) {
        cert.piece_volumes.push_back(piece_volume(p));
        if (!contains(container, p)) cert.containment_ok = false;
    }
    cert.volume_sum_ok = cert.volume_sum() == cert.container_volume;
    cert.verdict = cert.containment_ok && cert.volume_sum_ok;
    return cert;
}

Projection Projection::oblique_default() {
    Projection p;
    p.rows = {{{Rational(1), Rational(0)},
               {Rational(0), Rational(1)},
               {Rational(1, 2), Rational(1, 2)},
               {Rational(-1, 2), Rational(1, 2)}}};
    return p;
}

std::vector<std::array<Vec2, 2>> project_wireframe(const Piece& p, const Projection& proj) {
    auto project = [&proj](const Point4& q) -> Vec2 {
        QuadScalar u(0), v(0);
        for (int i = 0; i < 4; ++i) {
            u += q[i] * QuadScalar(proj.rows[i][0]);
            v += q[i] * QuadScalar(proj.rows[i][1]);
        }
        return {u, v};
    };
    std::vector<std::array<Vec2, 2>> out;
    for (const auto& [a, b] : piece_edges(p)) out.push_back({project(a), project(b)});
    return out;
}

}  // namespace heron4

#include "heron4/cube_decomp.hpp"

#include <stdexcept>

namespace heron4::cubes {

bool VertexMatrix::staircase_ok() const {
    const int cols = n();
    if (static_cast<int>(rows.size()) != cols + 1) return false;
    for (int v : rows.front())
        if (v != 0) return false;
    for (int v : rows.back())
        if (v != 1) return false;
    for (std::size_t r = 1; r < rows.size(); ++r) {
        int flips = 0;
        for (int j = 0; j < cols; ++j) {
            int d = rows[r][j] - rows[r - 1][j];
            if (d < 0) return false;
            flips += d;
        }
        if (flips != 1) return false;
    }
    return true;
}

std::vector<VertexMatrix> l7_vertex_matrices(int n) {
    if (n < 1 || n > 8) throw std::invalid_argument("l7_vertex_matrices: n out of range [1,8]");
    if (n == 1) return {VertexMatrix{{{0}, {1}}}};
    std::vector<VertexMatrix> out;
    for (const VertexMatrix& sub : l7_vertex_matrices(n - 1)) {
        // append the column of ones below each of the n zeros, rightmost first
        for (int col = n - 1; col >= 0; --col) {
            VertexMatrix m;
            m.rows.assign(n + 1, std::vector<int>(n, 0));
            for (int r = 1; r <= n; ++r) {
                m.rows[r][col] = 1;
                int jj = 0;
                for (int j = 0; j < n; ++j) {
                    if (j == col) continue;
                    m.rows[r][j] = sub.rows[r - 1][jj++];
                }
            }
            out.push_back(std::move(m));
        }
    }
    return out;
}

OrderingSimplex matrix_to_ordering(const VertexMatrix& m) {
    const int n = m.n();
    OrderingSimplex o;
    o.order.assign(n, -1);
    // the column flipped at step r holds the r-th largest coordinate
    for (int r = 1; r <= n; ++r) {
        for (int j = 0; j < n; ++j) {
            if (m.rows[r][j] - m.rows[r - 1][j] == 1) {
                o.order[n - r] = j;
                break;
            }
        }
    }
    return o;
}

VertexMatrix ordering_to_matrix(const OrderingSimplex& o) {
    const int n = static_cast<int>(o.order.size());
    VertexMatrix m;
    m.rows.assign(n + 1, std::vector<int>(n, 0));
    for (int r = 1; r <= n; ++r) {
        m.rows[r] = m.rows[r - 1];
        m.rows[r][o.order[n - r]] = 1;
    }
    return m;
}

Simplex4 materialize_ordering(const OrderingSimplex& o, const QuadScalar& edge) {
    if (o.order.size() != 4) throw std::invalid_argument("materialize_ordering: needs n = 4");
    Simplex4 s;
    s.v[0] = Point4();
    for (int k = 1; k < 5; ++k) {
        s.v[k] = s.v[k - 1];
        int axis = o.order[4 - k];
        s.v[k][axis] = s.v[k][axis] + edge;
    }
    return s;
}

SimplicialDecomposition simplicial_decomposition(int n, const QuadScalar& edge) {
    SimplicialDecomposition d;
    d.n = n;
    d.matrices = l7_vertex_matrices(n);
    if (n == 4) {
        for (const VertexMatrix& m : d.matrices)
            d.pieces.emplace_back(materialize_ordering(matrix_to_ordering(m), edge));
        d.container = make_box(QuadScalar(0), edge, QuadScalar(0), edge, QuadScalar(0), edge,
                               QuadScalar(0), edge);
    }
    return d;
}

std::vector<PyramidalPiece> pyramidal_decomposition(int n) {
    if (n < 2 || n > 8) throw std::invalid_argument("pyramidal_decomposition: n out of range [2,8]");
    std::vector<PyramidalPiece> out(n);
    for (int k = 0; k < n; ++k) out[k].dominant_axis = k;
    for (const VertexMatrix& m : l7_vertex_matrices(n)) {
        OrderingSimplex o = matrix_to_ordering(m);
        int dominant = o.order.back();
        if (n == 4) out[dominant].pieces.emplace_back(materialize_ordering(o, QuadScalar(1)));
        out[dominant].refinement.push_back(std::move(o));
    }
    return out;
}

namespace {

Polygon2 isosceles_lower(int a, int b, const QuadScalar& edge) {  // 0 <= u <= v <= edge
    return Polygon2{{a, b}, {{QuadScalar(0), QuadScalar(0)}, {edge, edge}, {QuadScalar(0), edge}}};
}

Polygon2 isosceles_upper(int a, int b, const QuadScalar& edge) {  // 0 <= v <= u <= edge
    return Polygon2{{a, b}, {{QuadScalar(0), QuadScalar(0)}, {edge, QuadScalar(0)}, {edge, edge}}};
}

}  // namespace

QuarterDecomposition quarter_hypercube(const QuadScalar& edge) {
    if (edge.sign() <= 0) throw std::invalid_argument("quarter_hypercube: edge must be positive");
    QuarterDecomposition q;
    q.container = make_box(QuadScalar(0), edge, QuadScalar(0), edge, QuadScalar(0), edge,
                           QuadScalar(0), edge);
    // Delta_{x<=y} x Delta_{z<=w}, Delta_{y<=x} x Delta_{z<=w},
    // Delta_{x<=y} x Delta_{w<=z}, Delta_{y<=x} x Delta_{w<=z}
    q.pieces = {
        Piece{Product2x2{isosceles_lower(0, 1, edge), isosceles_lower(2, 3, edge)}},
        Piece{Product2x2{isosceles_upper(0, 1, edge), isosceles_lower(2, 3, edge)}},
        Piece{Product2x2{isosceles_lower(0, 1, edge), isosceles_upper(2, 3, edge)}},
        Piece{Product2x2{isosceles_upper(0, 1, edge), isosceles_upper(2, 3, edge)}},
    };
    for (const Piece& p : q.pieces) {
        auto w = congruent(q.pieces[0], p);
        if (!w) throw std::logic_error("quarter_hypercube: missing congruence witness");
        q.witnesses.push_back(*w);
    }
    q.certificate = certify_tiling(q.container, q.pieces);
    return q;
}

SixRefinement refine_to_six(SixPieceId id) {
    auto chain = [](int a, int b, int c, int d) { return OrderingSimplex{{a, b, c, d}}; };
    SixRefinement r;
    if (id == SixPieceId::DeltaDelta) {
        // x<=y<=z<=w, x<=z<=w<=y, x<=z<=y<=w, z<=x<=w<=y, z<=x<=y<=w, z<=w<=x<=y
        r.orderings = {chain(0, 1, 2, 3), chain(0, 2, 3, 1), chain(0, 2, 1, 3),
                       chain(2, 0, 3, 1), chain(2, 0, 1, 3), chain(2, 3, 0, 1)};
        r.shared = {true, false, true, false, true, false};
    } else {
        // x<=y<=z<=w, y<=x<=z<=w, x<=z<=y<=w, y<=z<=x<=w, z<=x<=y<=w, z<=y<=x<=w
        r.orderings = {chain(0, 1, 2, 3), chain(1, 0, 2, 3), chain(0, 2, 1, 3),
                       chain(1, 2, 0, 3), chain(2, 0, 1, 3), chain(2, 1, 0, 3)};
        r.shared = {true, false, true, false, true, false};
    }
    return r;
}

NicomachusCheck nicomachus_check(int n) {
    if (n < 1) throw std::invalid_argument("nicomachus_check: n must be positive");
    NicomachusCheck c;
    c.sum_of_cubes = 0;
    for (int k = 1; k <= n; ++k) {
        mpz_class kk(k);
        c.sum_of_cubes += kk * kk * kk;
    }
    mpz_class tri = mpz_class(n) * mpz_class(n + 1) / 2;
    c.squared_triangle = tri * tri;
    c.equal = c.sum_of_cubes == c.squared_triangle;
    return c;
}

}  // namespace heron4::cubes

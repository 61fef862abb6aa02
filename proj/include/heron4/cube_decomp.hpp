#pragma once

#include <vector>

#include "heron4/geometry.hpp"

namespace heron4::cubes {

/// (n+1) x n staircase 0/1 matrix; rows are the vertices of one right
/// n-simplex of the unit n-cube.
struct VertexMatrix {
    std::vector<std::vector<int>> rows;

    int n() const { return rows.empty() ? 0 : static_cast<int>(rows.front().size()); }
    bool staircase_ok() const;
    bool operator==(const VertexMatrix& o) const { return rows == o.rows; }
};

/// Total order on axes: order[0] is the smallest coordinate, order[n-1]
/// the largest, i.e. 0 <= x_order[0] <= ... <= x_order[n-1] <= 1.
struct OrderingSimplex {
    std::vector<int> order;
};

/// All n! vertex matrices, in the construction order of the column-of-ones
/// recursion (sub-matrix major, rightmost insertion column first).
std::vector<VertexMatrix> l7_vertex_matrices(int n);

OrderingSimplex matrix_to_ordering(const VertexMatrix& m);
VertexMatrix ordering_to_matrix(const OrderingSimplex& o);

/// The 4-D ordering simplex scaled to edge length `edge`.
Simplex4 materialize_ordering(const OrderingSimplex& o, const QuadScalar& edge);

struct SimplicialDecomposition {
    int n = 0;
    std::vector<VertexMatrix> matrices;
    // populated for n == 4 only; geometry is 4-D-specific
    std::vector<Piece> pieces;
    Piece container;  // Box4 [0, edge]^4 when n == 4
};

SimplicialDecomposition simplicial_decomposition(int n, const QuadScalar& edge);

struct PyramidalPiece {
    int dominant_axis = 0;  // axis index k-1 for the set P_k
    std::vector<OrderingSimplex> refinement;  // the (n-1)! orderings with that axis maximal
    std::vector<Piece> pieces;                // materialized for n == 4
};

std::vector<PyramidalPiece> pyramidal_decomposition(int n);

struct QuarterDecomposition {
    Piece container;                       // Box4 [0, edge]^4
    std::vector<Piece> pieces;             // four triangle x triangle products
    std::vector<IsometryMap> witnesses;    // congruences piece 0 -> piece i
    TilingCertificate certificate;
};

/// The four products of right isosceles triangles that quarter the 4-cube.
QuarterDecomposition quarter_hypercube(const QuadScalar& edge);

enum class SixPieceId { DeltaDelta, P4 };

struct SixRefinement {
    std::vector<OrderingSimplex> orderings;  // exactly six
    std::vector<bool> shared;                // marks the triple common to both refinements
};

/// The six-simplex refinements of Delta_{x<=y} x Delta_{z<=w} and of the
/// pyramid P4, with the shared orderings marked.
SixRefinement refine_to_six(SixPieceId id);

struct NicomachusCheck {
    mpz_class sum_of_cubes;
    mpz_class squared_triangle;
    bool equal = false;
};

NicomachusCheck nicomachus_check(int n);

}  // namespace heron4::cubes

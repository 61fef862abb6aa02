#pragma once

#include <string>
#include <vector>

#include "heron4/geometry.hpp"

namespace heron4::report {

/// 12-significant-digit decimal rendering, for SVG/JSON display only.
std::string decimal12(const QuadScalar& v);
std::string decimal12(double v);

/// Deterministic wireframe SVG: one stroke color per piece class, fixed
/// canvas, vertices at 12-digit decimals.  Identical inputs produce
/// byte-identical documents.
std::string svg_document(const std::vector<Piece>& pieces, const Projection& projection);

/// Writes svg_document to path; throws std::runtime_error on I/O failure.
void emit_svg(const std::vector<Piece>& pieces, const Projection& projection,
              const std::string& path);

}  // namespace heron4::report

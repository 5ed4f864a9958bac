#pragma once

#include <string>

#include "boxres/cellcomplex.hpp"

namespace boxres {

// Renders a three-variable complex as a standalone SVG document.  Vertices
// are placed by barycentric coordinates of their exponent vectors inside a
// fixed reference triangle, so every monomial of a given degree has a
// deterministic position.  Faces are drawn back-to-front (2-cells, then
// edges, then labelled vertex dots); 2-cells are tinted by their vertex
// count so boxes of different shapes are easy to tell apart.
//
// Throws std::invalid_argument when x.n() != 3.
std::string render_svg(const LabelledComplex& x);

}  // namespace boxres

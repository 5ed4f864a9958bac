/**
 * Byte-deterministic JSON serialization of labelled complexes.
 *
 * Schema:
 *   {
 *     "n": <int>,
 *     "variant": <string>,
 *     "faces": [
 *       { "id": "<exponents joined by ';'>",
 *         "dim": <int>,
 *         "vertices": [[int, ...], ...],
 *         "label": [int, ...],
 *         "boundary": [ { "id": "<facet id>", "sign": 1|-1 }, ... ] },
 *       ...
 *     ]
 *   }
 * faces are sorted by (dim, id), vertices ascending in the global monomial
 * order, boundary entries by facet id.  With differentials enabled a
 * "differentials" array is appended: one object per homological degree
 * p >= 1 holding the matrix entries (row, col, sign, quotient) of the map
 * from degree p to p-1 in the canonical bases.
 */
#pragma once

#include <string>

#include "boxres/cellcomplex.hpp"

namespace boxres {

std::string complex_to_json(const LabelledComplex& x, bool with_differentials = false);

/// Parse and structurally validate (ids, labels, dimensions, closure);
/// throws std::invalid_argument on any malformed input.  Orientation signs
/// are taken from the file and NOT revalidated here, so a loaded complex
/// can fail the d^2 or acyclicity checks downstream by design.
LabelledComplex complex_from_json(const std::string& text);

}  // namespace boxres

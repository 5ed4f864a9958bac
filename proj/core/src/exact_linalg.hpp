/**
 * Small exact integer linear algebra helpers (fraction-free Bareiss
 * elimination over __int128) used for affine ranks and orientation signs
 * of labelled faces.  Internal to the library.
 */
#pragma once

#include <vector>

namespace boxres::detail {

using Wide = __int128;
using IMatrix = std::vector<std::vector<Wide>>;

/// Rank of an integer matrix, computed exactly.
int int_rank(IMatrix m);

/// Sign of the determinant of a square integer matrix: -1, 0 or +1.
int det_sign(IMatrix m);

/// Lexicographically first subset of columns, of size target, on which the
/// matrix has full rank.  Greedy left-to-right selection; throws
/// std::logic_error when the matrix has rank below target.
std::vector<int> pivot_columns(const IMatrix& m, int target);

/// Rank of the span of (points[i] - points[0]).
int affine_rank(const std::vector<std::vector<int>>& points);

/// Orientation sign of a facet inside a face, both given by their vertex
/// point lists sorted in the canonical (library-wide) order.  The face is
/// oriented by the canonical basis extracted from its sorted vertices; the
/// facet inherits the outward-vector-first boundary orientation, and the
/// sign compares that with the facet's own canonical orientation.  Returns
/// +1 or -1; throws std::logic_error on degenerate geometry.
int boundary_orientation_sign(const std::vector<std::vector<int>>& facet_points,
                              const std::vector<std::vector<int>>& face_points);

}  // namespace boxres::detail

#include "exact_linalg.hpp"

#include <numeric>
#include <stdexcept>

namespace boxres::detail {

namespace {

// Fraction-free Bareiss elimination in place.  Returns the rank; if
// sign_out is non-null the matrix must be square and *sign_out receives
// the sign of its determinant.
int bareiss(IMatrix& m, int* sign_out) {
    const int rows = static_cast<int>(m.size());
    const int cols = rows ? static_cast<int>(m[0].size()) : 0;
    int rank = 0;
    int swap_sign = 1;
    Wide prev = 1;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r) {
            if (m[r][col] != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        if (pivot != rank) {
            std::swap(m[pivot], m[rank]);
            swap_sign = -swap_sign;
        }
        for (int r = rank + 1; r < rows; ++r) {
            for (int c = col + 1; c < cols; ++c) {
                m[r][c] = (m[rank][col] * m[r][c] - m[r][col] * m[rank][c]) / prev;
            }
            m[r][col] = 0;
        }
        prev = m[rank][col];
        ++rank;
    }
    if (sign_out) {
        if (rows != cols) throw std::logic_error("det_sign: matrix not square");
        if (rank < rows) {
            *sign_out = 0;
        } else {
            // Bareiss leaves det = prev (last pivot) up to row swaps.
            *sign_out = (prev > 0 ? 1 : -1) * swap_sign;
        }
    }
    return rank;
}

IMatrix select_columns(const IMatrix& m, const std::vector<int>& cols) {
    IMatrix out(m.size(), std::vector<Wide>(cols.size()));
    for (std::size_t r = 0; r < m.size(); ++r) {
        for (std::size_t c = 0; c < cols.size(); ++c) {
            out[r][c] = m[r][cols[c]];
        }
    }
    return out;
}

IMatrix difference_basis(const std::vector<std::vector<int>>& points) {
    // Greedily keep the differences (in vertex order) that raise the rank;
    // the result is the canonical ordered basis of the face's direction
    // space.
    IMatrix basis;
    for (std::size_t i = 1; i < points.size(); ++i) {
        std::vector<Wide> diff(points[i].size());
        for (std::size_t c = 0; c < diff.size(); ++c) {
            diff[c] = static_cast<Wide>(points[i][c]) - points[0][c];
        }
        basis.push_back(std::move(diff));
        IMatrix probe = basis;
        if (bareiss(probe, nullptr) < static_cast<int>(basis.size())) {
            basis.pop_back();
        }
    }
    return basis;
}

}  // namespace

int int_rank(IMatrix m) { return bareiss(m, nullptr); }

int det_sign(IMatrix m) {
    int s = 0;
    bareiss(m, &s);
    return s;
}

std::vector<int> pivot_columns(const IMatrix& m, int target) {
    std::vector<int> cols;
    const int ncols = m.empty() ? 0 : static_cast<int>(m[0].size());
    for (int c = 0; c < ncols && static_cast<int>(cols.size()) < target; ++c) {
        cols.push_back(c);
        IMatrix probe = select_columns(m, cols);
        if (bareiss(probe, nullptr) < static_cast<int>(cols.size())) {
            cols.pop_back();
        }
    }
    if (static_cast<int>(cols.size()) < target) {
        throw std::logic_error("pivot_columns: matrix rank below target");
    }
    return cols;
}

int affine_rank(const std::vector<std::vector<int>>& points) {
    if (points.empty()) return -1;
    return int_rank(difference_basis(points));
}

int boundary_orientation_sign(const std::vector<std::vector<int>>& facet_points,
                              const std::vector<std::vector<int>>& face_points) {
    const IMatrix face_basis = difference_basis(face_points);
    const IMatrix facet_basis = difference_basis(facet_points);
    const int d = static_cast<int>(face_basis.size());
    if (static_cast<int>(facet_basis.size()) != d - 1) {
        throw std::logic_error("boundary_orientation_sign: facet dimension mismatch");
    }
    // Outward direction: a positive multiple of centroid(facet) -
    // centroid(face), kept integral by cross-scaling, reduced by the gcd.
    const std::size_t dims = face_points[0].size();
    std::vector<Wide> w(dims, 0);
    for (const auto& p : facet_points) {
        for (std::size_t c = 0; c < dims; ++c) {
            w[c] += static_cast<Wide>(p[c]) * static_cast<Wide>(face_points.size());
        }
    }
    for (const auto& p : face_points) {
        for (std::size_t c = 0; c < dims; ++c) {
            w[c] -= static_cast<Wide>(p[c]) * static_cast<Wide>(facet_points.size());
        }
    }
    long long g = 0;
    for (Wide v : w) {
        g = std::gcd(g, static_cast<long long>(v < 0 ? -v : v));
    }
    if (g == 0) {
        throw std::logic_error("boundary_orientation_sign: facet centroid equals face centroid");
    }
    for (Wide& v : w) v /= g;

    // Both [w; facet_basis] and face_basis live in the face's direction
    // space, so comparing their orientations is well defined after
    // projecting to any coordinate subset where face_basis is nonsingular.
    const std::vector<int> cols = pivot_columns(face_basis, d);
    IMatrix induced;
    induced.push_back(w);
    induced.insert(induced.end(), facet_basis.begin(), facet_basis.end());
    const int s_induced = det_sign(select_columns(induced, cols));
    const int s_canonical = det_sign(select_columns(face_basis, cols));
    if (s_induced == 0 || s_canonical == 0) {
        throw std::logic_error("boundary_orientation_sign: degenerate orientation");
    }
    return s_induced * s_canonical;
}

}  // namespace boxres::detail

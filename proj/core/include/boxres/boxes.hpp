/**
 * Boxes: products of simplices attached to monomial generators.  A
 * generator of degree d factors (after rotating the variable order) as
 * x_{i_1} ... x_{i_d} with i_1 <= ... <= i_d, and its box is the product
 * of the simplices on the variable intervals [0, i_1], [i_1, i_2], ...,
 * [i_{d-1}, i_d], rotated back.  Vertices of a box are monomials obtained
 * by choosing one variable per factor; the box is admissible when those
 * monomials are pairwise distinct, and then it embeds as a polytopal cell
 * whose faces are products of nonempty subsets of the factors.
 */
#pragma once

#include <vector>

#include "boxres/cellcomplex.hpp"
#include "boxres/ideal.hpp"
#include "boxres/monomial.hpp"

namespace boxres {

/// A face of a box: one nonempty set of variable indices per factor,
/// together with advisory metadata recording which generator and cyclic
/// rotation produced it.  Equality ignores the metadata.
struct BoxFace {
    int n = 0;
    std::vector<std::vector<int>> factors;  // sorted 0-based indices per factor

    // advisory provenance; never part of equality
    Monomial origin_generator;
    int origin_start = 0;

    /// Sum over factors of (size - 1).
    int dim() const;

    /// All products of one variable choice per factor, sorted, with
    /// duplicates kept (admissibility testing needs them).
    std::vector<Monomial> vertex_labels() const;

    /// True when all vertex labels are pairwise distinct.
    bool admissible() const;

    friend bool operator==(const BoxFace& a, const BoxFace& b) {
        return a.n == b.n && a.factors == b.factors;
    }
};

bool is_admissible(const BoxFace& box);

/// The full box attached to a generator under the cyclic variable order
/// starting at x_start.  Throws std::invalid_argument for the constant
/// monomial.
BoxFace generator_box_face(const Monomial& generator, int start);

/// The polytopal complex of all faces of the generator's box (the box,
/// its facets, and so on down to vertices), labelled by vertex lcms.
/// Asserts admissibility.
LabelledComplex generator_box(const Monomial& generator, int start);

/// Union of the generator boxes over all minimal generators of an
/// equigenerated Borel-closed ideal (for the cyclic order starting at
/// x_start).  Throws std::invalid_argument when the ideal is not
/// equigenerated or not Borel-closed for that order.
LabelledComplex box_complex(const MonomialIdeal& ideal, int start);

}  // namespace boxres

/**
 * The named complexes of the library, all supported on monomials in the
 * cyclic-symmetric setting where the generating degree equals the number
 * of variables:
 *
 *  - summand_complex(n, i): box complex of the cyclic Borel closure of the
 *    center monomial x_0...x_{n-1} for the order starting at x_i;
 *  - power_complex(n): union over all n rotations; resolves the n-th
 *    power of the maximal ideal;
 *  - star_complex(n): union of the n center boxes; a star around the
 *    center vertex resolving the product of consecutive-pair primes;
 *  - collapsed_star_complex(n): the star with its interior replaced by a
 *    single top cell (the center vertex disappears); resolves the star
 *    ideal minus its center generator;
 *  - pinched_complex(n): collapsed star glued to the rotated box
 *    complexes with the center's star deleted; resolves the power ideal
 *    minus the center generator;
 *  - product_complex(n, starts): product of the box complexes of the
 *    interval ideals cut out by a set of rotations; equals the
 *    intersection of the corresponding summand complexes.
 */
#pragma once

#include <string>
#include <vector>

#include "boxres/boxes.hpp"
#include "boxres/cellcomplex.hpp"
#include "boxres/monomial.hpp"

namespace boxres {

/// Box complex of the ideal generated by all degree-n monomials below the
/// center in the cyclic Borel order starting at x_start (0-based).
LabelledComplex summand_complex(int n, int start);

/// Union of all summand complexes; a polytopal subdivision supported on
/// the minimal generators of the n-th power of the maximal ideal.
LabelledComplex power_complex(int n);

/// Union of the n boxes of the center monomial itself.  Built directly
/// from the slotwise combinatorial description (each slot j picks a
/// nonempty subset of {x_{j-1}, x_j} and some slot picks exactly {x_j}),
/// then cross-checked face-for-face against the union of the rotated
/// center boxes; a mismatch throws std::logic_error.
LabelledComplex star_complex(int n);

/// collapse_star of the star complex at the center vertex.
LabelledComplex collapsed_star_complex(int n);

/// Collapsed star glued to the center-deleted summand complexes.
LabelledComplex pinched_complex(int n);

/// Product complex for a sorted list of distinct rotations i_1 < ... < i_l
/// (0-based).  Factor j is the box complex of the Borel closure of the
/// product of the variables in the cyclic interval [i_j, i_{j+1} - 1].
/// Faces are products of factor faces; supports are disjoint, so vertex
/// labels multiply.
LabelledComplex product_complex(int n, const std::vector<int>& starts);

/// The unique maximal face containing the center vertex in the
/// restriction of the star complex to alpha, computed directly from the
/// divisibility pattern: slot j spans {x_{j-1}, x_j} when x_{j-1}^2
/// divides alpha and pins {x_j} otherwise.  Requires alpha to be a
/// multiple of the center but not of its square.
BoxFace unique_center_facet(int n, const Monomial& alpha);

/// Descriptor for the complexes reachable from the command line.
struct ComplexRequest {
    int n = 0;
    std::string object;        // power | pinched | star | star-hat | box-complex | product
    int perm = 1;              // 1-based rotation for box-complex
    std::vector<int> indices;  // 1-based rotations for product
};

/// Dispatch on the object tag; throws std::invalid_argument for unknown
/// tags or out-of-range parameters.
LabelledComplex build_complex(const ComplexRequest& request);

}  // namespace boxres

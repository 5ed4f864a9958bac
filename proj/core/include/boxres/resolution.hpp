/**
 * Free complexes over the polynomial ring obtained from labelled
 * complexes: one basis element per face, graded by the face label, with
 * differential entries sign * (label quotient).  Minimality and Betti
 * extraction live here; the homological certification they rely on comes
 * from the homology module.
 */
#pragma once

#include <vector>

#include "boxres/betti.hpp"
#include "boxres/cellcomplex.hpp"
#include "boxres/homology.hpp"

namespace boxres {

/// One nonzero entry of a differential matrix: basis indices within the
/// fixed per-degree orderings, the orientation sign, and the monomial
/// quotient label(source) / label(target).
struct DifferentialEntry {
    int row = 0;   // target basis index in degree p-1
    int col = 0;   // source basis index in degree p
    int sign = 0;
    Monomial quotient;

    friend bool operator==(const DifferentialEntry&, const DifferentialEntry&) = default;
};

/// The free complex of a labelled complex.  basis[p] lists the p-faces in
/// canonical key order; degrees[p] the corresponding multidegrees (face
/// labels); diff[p] (p >= 1) the entries of the map from degree p to
/// degree p-1, sorted by (col, row).  When augmented, diff[0] holds the
/// augmentation onto the ring (row 0, quotient = vertex label).
struct FreeComplex {
    int n = 0;
    bool augmented = false;
    std::vector<std::vector<FaceKey>> basis;
    std::vector<std::vector<Monomial>> degrees;
    std::vector<std::vector<DifferentialEntry>> diff;

    std::vector<long long> ranks() const;

    friend bool operator==(const FreeComplex&, const FreeComplex&) = default;
};

/// Build the free complex.  The symbolic identity d^2 = 0 (signs and
/// quotients both) is verified during construction and a violation throws
/// std::logic_error, since it can only come from an orientation bug.
FreeComplex free_complex(const LabelledComplex& x, bool augmented = false);

/// A graded free complex is minimal iff no differential entry has unit
/// quotient (equal source and target degrees).  The augmentation is not a
/// differential and is ignored.
bool is_minimal(const FreeComplex& f);

/// Raw Betti candidate read off dimensions and labels: entry (p, q) counts
/// the p-faces whose label has total degree q.  Only meaningful as Betti
/// numbers when the complex is certified; see betti_from_complex.
BettiTable betti_from_faces(const LabelledComplex& x);

/// Betti numbers of the ideal resolved by a certified complex.  The
/// caller passes the acyclicity sweep report as evidence; this function
/// re-checks d^2 = 0 and minimality and throws std::invalid_argument if
/// any piece of the certificate fails.
BettiTable betti_from_complex(const LabelledComplex& x, const SweepReport& sweep);

}  // namespace boxres

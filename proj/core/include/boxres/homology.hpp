/**
 * Exact homological certification: reduced homology of labelled complexes
 * over the rationals or a prime field, acyclicity sweeps over multidegree
 * lattices, and the independent upper Koszul Betti oracle for monomial
 * ideals.
 */
#pragma once

#include <vector>

#include "boxres/betti.hpp"
#include "boxres/cellcomplex.hpp"
#include "boxres/ideal.hpp"

namespace boxres {

/// Coefficient field: characteristic 0 selects exact rational (big
/// integer, fraction-free) elimination; a prime p selects F_p.
struct FieldSpec {
    long long characteristic = 32003;

    static FieldSpec rationals() { return FieldSpec{0}; }
    static FieldSpec prime(long long p);

    /// Throws std::invalid_argument unless the characteristic is 0 or prime.
    void validate() const;

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

/// Dimensions of reduced homology in degrees -1 .. dim(x): entry i of the
/// result is dim H~_{i-1}.  The empty complex yields {1} (its single
/// reduced homology group sits in degree -1).
std::vector<long long> reduced_homology(const LabelledComplex& x, FieldSpec k);

/// One multidegree whose restriction has nonvanishing reduced homology.
struct SweepFailure {
    Monomial alpha;
    std::vector<long long> homology;  // same layout as reduced_homology
};

struct SweepOptions {
    int threads = 1;
    /// Sweep every divisor of the label lcm instead of the lcm closure of
    /// the vertex labels.
    bool exhaustive = false;
};

struct SweepReport {
    long long checked = 0;       // multidegrees examined
    long long lattice_size = 0;  // size of the lcm closure of the vertex labels
    std::vector<SweepFailure> failures;

    bool ok() const { return failures.empty(); }
};

/// Acyclicity certificate for the restriction family {x_{<= alpha}}: every
/// multidegree in the lcm closure of the vertex labels (all lcms of
/// nonempty subsets, computed as a closure under pairwise joins) is
/// checked; a nonempty restriction fails iff some reduced homology in
/// degree >= 0 is nonzero, and empty restrictions pass.  Restrictions with
/// identical face sets are computed once.  The result is deterministic and
/// independent of opts.threads.
SweepReport acyclicity_sweep(const LabelledComplex& x, FieldSpec k, SweepOptions opts = {});

/// Independent Betti number oracle: for every multidegree alpha in the lcm
/// closure of the generators, beta_{i,alpha} is the dimension of reduced
/// homology in degree i-1 of the upper Koszul subcomplex
///   { W subset of supp(alpha) : alpha / prod_{j in W} x_j lies in the ideal },
/// computed by hand-rolled simplicial elimination (independent of the
/// cell-complex machinery), then aggregated by total degree.
BettiTable koszul_betti_oracle(const MonomialIdeal& ideal, FieldSpec k, int threads = 1);

}  // namespace boxres

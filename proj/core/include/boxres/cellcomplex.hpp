/**
 * Labelled polytopal cell complexes: faces identified by their sorted
 * vertex monomials, labelled by least common multiples, and oriented by
 * exact integer geometry.  These complexes are the combinatorial carriers
 * of the free resolutions built elsewhere in the library.
 */
#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "boxres/monomial.hpp"

namespace boxres {

/// Canonical identity of a face: its vertex monomials, sorted ascending in
/// the global monomial order, all distinct.
using FaceKey = std::vector<Monomial>;

/// Printable face id: exponent lists of the vertices joined by ';', e.g.
/// "2 1 0;1 2 0".
std::string face_id(const FaceKey& key);

/// One signed facet reference inside a face's boundary.
struct BoundaryEntry {
    FaceKey facet;
    int sign = 0;  // -1 or +1 once oriented; 0 while pending

    friend bool operator==(const BoundaryEntry&, const BoundaryEntry&) = default;
};

/// A face of a labelled polytopal complex.
///
/// Invariants (enforced when a complex is finalized):
///  - dim equals the affine rank of the vertex exponent vectors;
///  - label is the lcm of the vertex monomials;
///  - boundary lists each geometric facet exactly once, sorted by key,
///    with sign +1 or -1, and the facets' labels divide the face label;
///  - the signed boundary operator squares to zero.
struct Face {
    FaceKey key;
    int dim = 0;
    Monomial label;
    std::vector<BoundaryEntry> boundary;

    friend bool operator==(const Face&, const Face&) = default;
};

/// A finite polytopal complex whose vertices are labelled by monomials in
/// a common ring and whose faces carry lcm labels.  Faces are stored in a
/// map ordered by FaceKey, which makes every traversal deterministic.
class LabelledComplex {
public:
    LabelledComplex() = default;
    LabelledComplex(int n, std::string variant);

    int n() const { return n_; }
    const std::string& variant() const { return variant_; }
    void set_variant(std::string v) { variant_ = std::move(v); }

    const std::map<FaceKey, Face>& faces() const { return faces_; }
    bool empty() const { return faces_.empty(); }
    long long face_count() const { return static_cast<long long>(faces_.size()); }

    /// Top dimension; -1 for the empty complex.
    int dim() const;

    /// Face counts by dimension, indices 0..dim(); empty vector for the
    /// empty complex.
    std::vector<long long> f_vector() const;

    bool has_face(const FaceKey& key) const { return faces_.count(key) > 0; }
    const Face& face(const FaceKey& key) const;

    /// Labels of the 0-faces, ascending.
    std::vector<Monomial> vertex_labels() const;

    /// lcm of all face labels (equivalently of the vertex labels);
    /// the constant monomial for the empty complex.
    Monomial label_lcm() const;

    /// Keys of the faces that are not facets of any other face.
    std::vector<FaceKey> maximal_faces() const;

    /// True when the signed boundary operator composes to zero in every
    /// degree >= 2.
    bool d2_holds() const;

    /// Structural validation: facets exist, dimensions drop by one, vertex
    /// sets nest, labels are lcms and divide upward.  Throws
    /// std::logic_error on violation.
    void check_closure() const;

    /// Geometric validation: every face's dimension equals the affine rank
    /// of its vertex exponent vectors.  Throws std::logic_error.
    void check_geometry() const;

    /// Subcomplex of the faces satisfying pred.  The caller is responsible
    /// for choosing a predicate that keeps the complex closed (label
    /// divisibility and vertex deletion both do).
    LabelledComplex subcomplex_if(const std::function<bool(const Face&)>& pred,
                                  std::string variant) const;

    friend bool operator==(const LabelledComplex&, const LabelledComplex&) = default;

private:
    friend class ComplexBuilder;
    // Deserialization bypasses the builder so that structurally valid but
    // mathematically broken complexes (negative controls) stay loadable.
    friend LabelledComplex complex_from_json(const std::string& text);

    int n_ = 0;
    std::string variant_;
    std::map<FaceKey, Face> faces_;
};

/// Incremental assembler for labelled complexes.  Faces may be added with
/// unsigned facet lists (orientation signs are then computed geometrically
/// at finalize) or with fully signed boundaries (used when merging already
/// oriented complexes and for propagated top cells).  finalize() runs the
/// full battery of structural, geometric and d^2 = 0 checks and returns
/// the immutable complex.
class ComplexBuilder {
public:
    ComplexBuilder(int n, std::string variant);

    /// Add a face from its vertex labels (any order, must be distinct) and
    /// the keys of its geometric facets.  Adding the same face twice is
    /// allowed when the data agrees; disagreement throws std::logic_error.
    void add_face(const std::vector<Monomial>& vertices, int dim,
                  std::vector<FaceKey> facets);

    /// Add a face whose boundary signs are already known.
    void add_face_signed(const std::vector<Monomial>& vertices, int dim,
                         std::vector<BoundaryEntry> boundary);

    /// Add every face of an already finalized complex, keeping its signs.
    void merge(const LabelledComplex& complex);

    bool has(const FaceKey& key) const { return faces_.count(key) > 0; }
    LabelledComplex finalize();

private:
    int n_;
    std::string variant_;
    std::map<FaceKey, Face> faces_;
};

/// Union / intersection of complexes over the same ring.  Shared faces
/// must agree exactly (same dimension, facets and signs); orientation
/// signs are canonical per face, so independently built complexes do.
LabelledComplex complex_union(const LabelledComplex& a, const LabelledComplex& b);
LabelledComplex complex_intersection(const LabelledComplex& a, const LabelledComplex& b);

/// Faces whose label divides alpha (restrict_leq) or properly divides it
/// (restrict_lt).  Closed automatically because labels divide upward.
LabelledComplex restrict_leq(const LabelledComplex& x, const Monomial& alpha);
LabelledComplex restrict_lt(const LabelledComplex& x, const Monomial& alpha);

/// Remove every face whose vertex set contains the vertex labelled v.
/// Throws std::invalid_argument when v is not a vertex.
LabelledComplex delete_star(const LabelledComplex& x, const Monomial& v);

/// Replace the open star of the vertex `center` by a single new top cell.
/// Preconditions: every maximal face contains the center, and the
/// remaining boundary complex is a combinatorial sphere (pure, thin,
/// connected, Euler characteristic of a sphere); violations throw
/// std::invalid_argument.  The new cell's vertex set is every vertex
/// except the center, its label the lcm of those vertices, and its
/// boundary signs are fixed by orienting the lexicographically least
/// boundary facet positively and propagating across ridges.
LabelledComplex collapse_star(const LabelledComplex& star, const Monomial& center);

/// Relabel every vertex by the k-th cyclic shift and rebuild (orientation
/// signs are recomputed canonically).
LabelledComplex shift_complex(const LabelledComplex& x, int k);

/// Same face keys with the same dimensions (labels then agree as well);
/// ignores orientation data.
bool same_faces(const LabelledComplex& a, const LabelledComplex& b);

}  // namespace boxres

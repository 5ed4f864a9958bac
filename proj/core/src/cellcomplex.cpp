#include "boxres/cellcomplex.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

#include "exact_linalg.hpp"

namespace boxres {

namespace {

std::vector<std::vector<int>> key_points(const FaceKey& key) {
    std::vector<std::vector<int>> pts;
    pts.reserve(key.size());
    for (const Monomial& v : key) pts.push_back(v.exponents());
    return pts;
}

Monomial key_lcm(const FaceKey& key) {
    Monomial l = key.front();
    for (std::size_t i = 1; i < key.size(); ++i) l = lcm(l, key[i]);
    return l;
}

bool key_subset(const FaceKey& sub, const FaceKey& super) {
    // both sorted ascending
    return std::includes(super.begin(), super.end(), sub.begin(), sub.end());
}

bool key_contains(const FaceKey& key, const Monomial& v) {
    return std::binary_search(key.begin(), key.end(), v);
}

FaceKey canonical_key(std::vector<Monomial> vertices, int n) {
    if (vertices.empty()) {
        throw std::invalid_argument("face needs at least one vertex");
    }
    for (const Monomial& v : vertices) {
        if (v.n() != n) {
            throw std::invalid_argument("face vertex in wrong ring");
        }
    }
    std::sort(vertices.begin(), vertices.end());
    if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end()) {
        throw std::invalid_argument("face has repeated vertex labels");
    }
    return vertices;
}

}  // namespace

std::string face_id(const FaceKey& key) {
    std::string id;
    for (std::size_t i = 0; i < key.size(); ++i) {
        if (i) id += ';';
        id += key[i].str();
    }
    return id;
}

LabelledComplex::LabelledComplex(int n, std::string variant)
    : n_(n), variant_(std::move(variant)) {
    if (n < 2) throw std::invalid_argument("LabelledComplex: need n >= 2");
}

int LabelledComplex::dim() const {
    int d = -1;
    for (const auto& [key, f] : faces_) d = std::max(d, f.dim);
    return d;
}

std::vector<long long> LabelledComplex::f_vector() const {
    std::vector<long long> fv(static_cast<std::size_t>(dim() + 1), 0);
    for (const auto& [key, f] : faces_) ++fv[f.dim];
    return fv;
}

const Face& LabelledComplex::face(const FaceKey& key) const {
    auto it = faces_.find(key);
    if (it == faces_.end()) {
        throw std::invalid_argument("LabelledComplex::face: no face " + face_id(key));
    }
    return it->second;
}

std::vector<Monomial> LabelledComplex::vertex_labels() const {
    std::vector<Monomial> out;
    for (const auto& [key, f] : faces_) {
        if (f.dim == 0) out.push_back(f.label);
    }
    std::sort(out.begin(), out.end());
    return out;
}

Monomial LabelledComplex::label_lcm() const {
    Monomial l = Monomial::one(n_);
    for (const auto& [key, f] : faces_) {
        if (f.dim == 0) l = lcm(l, f.label);
    }
    return l;
}

std::vector<FaceKey> LabelledComplex::maximal_faces() const {
    std::set<FaceKey> referenced;
    for (const auto& [key, f] : faces_) {
        for (const BoundaryEntry& b : f.boundary) referenced.insert(b.facet);
    }
    std::vector<FaceKey> out;
    for (const auto& [key, f] : faces_) {
        if (!referenced.count(key)) out.push_back(key);
    }
    return out;
}

bool LabelledComplex::d2_holds() const {
    for (const auto& [key, f] : faces_) {
        if (f.dim < 2) continue;
        std::map<FaceKey, long long> acc;
        for (const BoundaryEntry& b : f.boundary) {
            const Face& h = face(b.facet);
            for (const BoundaryEntry& c : h.boundary) {
                acc[c.facet] += static_cast<long long>(b.sign) * c.sign;
            }
        }
        for (const auto& [g, v] : acc) {
            if (v != 0) return false;
        }
    }
    return true;
}

void LabelledComplex::check_closure() const {
    for (const auto& [key, f] : faces_) {
        if (f.key != key) throw std::logic_error("face key out of sync");
        if (f.dim == 0) {
            if (key.size() != 1 || !f.boundary.empty()) {
                throw std::logic_error("malformed vertex " + face_id(key));
            }
            if (!(f.label == key.front())) {
                throw std::logic_error("vertex label mismatch at " + face_id(key));
            }
            continue;
        }
        if (f.boundary.size() < 2) {
            throw std::logic_error("face " + face_id(key) + " has fewer than two facets");
        }
        if (!(f.label == key_lcm(key))) {
            throw std::logic_error("label of " + face_id(key) + " is not the vertex lcm");
        }
        for (const Monomial& v : key) {
            if (!faces_.count(FaceKey{v})) {
                throw std::logic_error("vertex of " + face_id(key) + " missing from complex");
            }
        }
        for (std::size_t i = 0; i + 1 < f.boundary.size(); ++i) {
            if (!(f.boundary[i].facet < f.boundary[i + 1].facet)) {
                throw std::logic_error("boundary of " + face_id(key) + " not sorted/unique");
            }
        }
        for (const BoundaryEntry& b : f.boundary) {
            auto it = faces_.find(b.facet);
            if (it == faces_.end()) {
                throw std::logic_error("facet of " + face_id(key) + " missing from complex");
            }
            const Face& h = it->second;
            if (h.dim != f.dim - 1) {
                throw std::logic_error("facet dimension mismatch under " + face_id(key));
            }
            if (!key_subset(h.key, key)) {
                throw std::logic_error("facet vertices not nested under " + face_id(key));
            }
            if (!divides(h.label, f.label)) {
                throw std::logic_error("facet label does not divide under " + face_id(key));
            }
            if (b.sign != 1 && b.sign != -1) {
                throw std::logic_error("unoriented boundary entry under " + face_id(key));
            }
        }
    }
}

void LabelledComplex::check_geometry() const {
    for (const auto& [key, f] : faces_) {
        if (detail::affine_rank(key_points(key)) != f.dim) {
            throw std::logic_error("face " + face_id(key) +
                                   " has affine rank different from its dimension");
        }
    }
}

LabelledComplex LabelledComplex::subcomplex_if(
    const std::function<bool(const Face&)>& pred, std::string variant) const {
    LabelledComplex out(n_, std::move(variant));
    for (const auto& [key, f] : faces_) {
        if (pred(f)) out.faces_.emplace(key, f);
    }
    return out;
}

ComplexBuilder::ComplexBuilder(int n, std::string variant)
    : n_(n), variant_(std::move(variant)) {
    if (n < 2) throw std::invalid_argument("ComplexBuilder: need n >= 2");
}

void ComplexBuilder::add_face(const std::vector<Monomial>& vertices, int dim,
                              std::vector<FaceKey> facets) {
    std::vector<BoundaryEntry> boundary;
    boundary.reserve(facets.size());
    for (FaceKey& fk : facets) boundary.push_back({std::move(fk), 0});
    add_face_signed(vertices, dim, std::move(boundary));
}

void ComplexBuilder::add_face_signed(const std::vector<Monomial>& vertices, int dim,
                                     std::vector<BoundaryEntry> boundary) {
    FaceKey key = canonical_key(vertices, n_);
    if (dim < 0) throw std::invalid_argument("add_face: negative dimension");
    std::sort(boundary.begin(), boundary.end(),
              [](const BoundaryEntry& a, const BoundaryEntry& b) { return a.facet < b.facet; });
    for (std::size_t i = 0; i + 1 < boundary.size(); ++i) {
        if (boundary[i].facet == boundary[i + 1].facet) {
            throw std::logic_error("add_face: repeated facet under " + face_id(key));
        }
    }
    Face face{key, dim, key_lcm(key), std::move(boundary)};
    auto it = faces_.find(key);
    if (it == faces_.end()) {
        faces_.emplace(std::move(key), std::move(face));
        return;
    }
    // The same face reached from two sources must carry identical
    // combinatorics; signs may still be pending (0) on either side, in
    // which case the oriented version wins.
    Face& a = it->second;
    if (a.dim != face.dim || a.boundary.size() != face.boundary.size()) {
        throw std::logic_error("conflicting duplicate face " + face_id(key));
    }
    for (std::size_t i = 0; i < a.boundary.size(); ++i) {
        BoundaryEntry& ea = a.boundary[i];
        const BoundaryEntry& eb = face.boundary[i];
        if (ea.facet != eb.facet) {
            throw std::logic_error("conflicting facets for duplicate face " + face_id(key));
        }
        if (ea.sign != 0 && eb.sign != 0 && ea.sign != eb.sign) {
            throw std::logic_error("conflicting signs for duplicate face " + face_id(key));
        }
        if (ea.sign == 0) ea.sign = eb.sign;
    }
}

void ComplexBuilder::merge(const LabelledComplex& complex) {
    if (complex.n() != n_) {
        throw std::invalid_argument("merge: complex in wrong ring");
    }
    for (const auto& [key, f] : complex.faces()) {
        add_face_signed(key, f.dim, f.boundary);
    }
}

LabelledComplex ComplexBuilder::finalize() {
    LabelledComplex out(n_, variant_);
    out.faces_ = std::move(faces_);
    faces_.clear();
    // Orient pending boundary entries by exact geometry.
    for (auto& [key, f] : out.faces_) {
        for (BoundaryEntry& b : f.boundary) {
            if (b.sign != 0) continue;
            auto it = out.faces_.find(b.facet);
            if (it == out.faces_.end()) {
                throw std::logic_error("finalize: facet of " + face_id(key) +
                                       " missing from complex");
            }
            b.sign = detail::boundary_orientation_sign(key_points(it->first),
                                                       key_points(key));
        }
    }
    out.check_closure();
    out.check_geometry();
    if (!out.d2_holds()) {
        throw std::logic_error("finalize: boundary operator does not square to zero");
    }
    return out;
}

LabelledComplex complex_union(const LabelledComplex& a, const LabelledComplex& b) {
    if (a.n() != b.n()) {
        throw std::invalid_argument("complex_union: complexes in different rings");
    }
    ComplexBuilder builder(a.n(), a.variant());
    builder.merge(a);
    builder.merge(b);
    return builder.finalize();
}

LabelledComplex complex_intersection(const LabelledComplex& a, const LabelledComplex& b) {
    if (a.n() != b.n()) {
        throw std::invalid_argument("complex_intersection: complexes in different rings");
    }
    return a.subcomplex_if(
        [&](const Face& f) {
            if (!b.has_face(f.key)) return false;
            if (!(b.face(f.key) == f)) {
                throw std::logic_error("complex_intersection: complexes disagree on face " +
                                       face_id(f.key));
            }
            return true;
        },
        a.variant());
}

LabelledComplex restrict_leq(const LabelledComplex& x, const Monomial& alpha) {
    if (alpha.n() != x.n()) {
        throw std::invalid_argument("restrict_leq: multidegree in wrong ring");
    }
    return x.subcomplex_if([&](const Face& f) { return divides(f.label, alpha); },
                           x.variant());
}

LabelledComplex restrict_lt(const LabelledComplex& x, const Monomial& alpha) {
    if (alpha.n() != x.n()) {
        throw std::invalid_argument("restrict_lt: multidegree in wrong ring");
    }
    return x.subcomplex_if(
        [&](const Face& f) { return divides(f.label, alpha) && !(f.label == alpha); },
        x.variant());
}

LabelledComplex delete_star(const LabelledComplex& x, const Monomial& v) {
    if (!x.has_face(FaceKey{v})) {
        throw std::invalid_argument("delete_star: not a vertex of the complex");
    }
    return x.subcomplex_if([&](const Face& f) { return !key_contains(f.key, v); },
                           x.variant());
}

LabelledComplex collapse_star(const LabelledComplex& star, const Monomial& center) {
    if (!star.has_face(FaceKey{center})) {
        throw std::invalid_argument("collapse_star: center is not a vertex");
    }
    const int top_dim = star.dim();
    if (top_dim < 1) {
        throw std::invalid_argument("collapse_star: complex has no positive-dimensional face");
    }
    for (const FaceKey& key : star.maximal_faces()) {
        if (!key_contains(key, center)) {
            throw std::invalid_argument(
                "collapse_star: a maximal face misses the center; not a star");
        }
    }

    const LabelledComplex boundary = delete_star(star, center);
    if (boundary.empty()) {
        throw std::invalid_argument("collapse_star: boundary complex is empty");
    }

    // The boundary must be a combinatorial (top_dim - 1)-sphere: pure,
    // thin (every ridge in exactly two facets), connected across ridges,
    // with the Euler characteristic of a sphere.
    for (const FaceKey& key : boundary.maximal_faces()) {
        if (boundary.face(key).dim != top_dim - 1) {
            throw std::invalid_argument("collapse_star: boundary complex is not pure");
        }
    }
    {
        long long euler = 0;
        const std::vector<long long> fv = boundary.f_vector();
        for (std::size_t d = 0; d < fv.size(); ++d) {
            euler += (d % 2 == 0) ? fv[d] : -fv[d];
        }
        const long long sphere_euler = (top_dim % 2 == 1) ? 2 : 0;  // chi(S^{top_dim-1})
        if (euler != sphere_euler) {
            throw std::invalid_argument(
                "collapse_star: boundary complex has non-sphere Euler characteristic");
        }
    }

    std::vector<FaceKey> sphere_facets;
    for (const auto& [key, f] : boundary.faces()) {
        if (f.dim == top_dim - 1) sphere_facets.push_back(key);
    }

    std::map<FaceKey, int> orientation;  // sphere facet -> coefficient in the new cell
    if (top_dim == 1) {
        // 0-sphere: exactly two vertices, oriented oppositely; the
        // lexicographically least one positively.
        if (sphere_facets.size() != 2) {
            throw std::invalid_argument("collapse_star: boundary is not a 0-sphere");
        }
        orientation[sphere_facets[0]] = 1;
        orientation[sphere_facets[1]] = -1;
    } else {
        std::map<FaceKey, std::vector<FaceKey>> ridge_to_facets;
        for (const FaceKey& key : sphere_facets) {
            for (const BoundaryEntry& b : boundary.face(key).boundary) {
                ridge_to_facets[b.facet].push_back(key);
            }
        }
        for (const auto& [ridge, fs] : ridge_to_facets) {
            if (fs.size() != 2) {
                throw std::invalid_argument(
                    "collapse_star: boundary ridge not in exactly two facets");
            }
        }
        auto facet_sign = [&](const FaceKey& facet, const FaceKey& ridge) {
            for (const BoundaryEntry& b : boundary.face(facet).boundary) {
                if (b.facet == ridge) return b.sign;
            }
            throw std::logic_error("collapse_star: ridge lookup failed");
        };
        // Orient the least facet positively and propagate the relation
        // eps(H') = -eps(H) * sign(G,H) * sign(G,H') across each ridge G.
        std::deque<FaceKey> queue;
        orientation[sphere_facets.front()] = 1;
        queue.push_back(sphere_facets.front());
        while (!queue.empty()) {
            const FaceKey h = queue.front();
            queue.pop_front();
            const int eps_h = orientation.at(h);
            for (const BoundaryEntry& b : boundary.face(h).boundary) {
                const auto& pair = ridge_to_facets.at(b.facet);
                const FaceKey& other = (pair[0] == h) ? pair[1] : pair[0];
                const int eps_other =
                    -eps_h * b.sign * facet_sign(other, b.facet);
                auto it = orientation.find(other);
                if (it == orientation.end()) {
                    orientation[other] = eps_other;
                    queue.push_back(other);
                } else if (it->second != eps_other) {
                    throw std::invalid_argument(
                        "collapse_star: orientation constraint unsatisfiable");
                }
            }
        }
        if (orientation.size() != sphere_facets.size()) {
            throw std::invalid_argument("collapse_star: boundary complex is not connected");
        }
    }

    ComplexBuilder builder(star.n(), star.variant());
    builder.merge(boundary);
    std::vector<Monomial> cell_vertices;
    for (const Monomial& v : star.vertex_labels()) {
        if (!(v == center)) cell_vertices.push_back(v);
    }
    std::vector<BoundaryEntry> cell_boundary;
    cell_boundary.reserve(orientation.size());
    for (const auto& [key, sign] : orientation) {
        cell_boundary.push_back({key, sign});
    }
    builder.add_face_signed(cell_vertices, top_dim, std::move(cell_boundary));
    return builder.finalize();
}

LabelledComplex shift_complex(const LabelledComplex& x, int k) {
    auto shift_key = [&](const FaceKey& key) {
        std::vector<Monomial> shifted;
        shifted.reserve(key.size());
        for (const Monomial& v : key) shifted.push_back(cyclic_shift(v, k));
        return canonical_key(std::move(shifted), x.n());
    };
    ComplexBuilder builder(x.n(), x.variant());
    for (const auto& [key, f] : x.faces()) {
        std::vector<FaceKey> facets;
        facets.reserve(f.boundary.size());
        for (const BoundaryEntry& b : f.boundary) facets.push_back(shift_key(b.facet));
        builder.add_face(shift_key(key), f.dim, std::move(facets));
    }
    return builder.finalize();
}

bool same_faces(const LabelledComplex& a, const LabelledComplex& b) {
    if (a.n() != b.n() || a.face_count() != b.face_count()) return false;
    auto ia = a.faces().begin();
    auto ib = b.faces().begin();
    for (; ia != a.faces().end(); ++ia, ++ib) {
        if (ia->first != ib->first || ia->second.dim != ib->second.dim) return false;
    }
    return true;
}

}  // namespace boxres

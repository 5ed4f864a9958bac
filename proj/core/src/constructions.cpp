#include "boxres/constructions.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "boxres/ideal.hpp"

namespace boxres {

namespace {

void require_n(int n, const char* who) {
    if (n < 2) {
        throw std::invalid_argument(std::string(who) + ": need n >= 2");
    }
}

// Vertex keys of a slotwise face of the star: one nonempty subset of
// {x_{j-1}, x_j} per slot j, choices multiplying out to monomials.
FaceKey slot_face_key(int n, const std::vector<int>& choice) {
    // choice[j]: 0 = {x_{j-1}}, 1 = {x_j}, 2 = both
    std::vector<std::vector<int>> factors(n);
    for (int j = 0; j < n; ++j) {
        const int prev = (j + n - 1) % n;
        switch (choice[j]) {
            case 0: factors[j] = {prev}; break;
            case 1: factors[j] = {j}; break;
            default: factors[j] = {std::min(prev, j), std::max(prev, j)}; break;
        }
    }
    BoxFace face;
    face.n = n;
    face.factors = std::move(factors);
    return face.vertex_labels();
}

bool slot_face_in_star(const std::vector<int>& choice) {
    for (std::size_t j = 0; j < choice.size(); ++j) {
        if (choice[j] == 1) return true;
    }
    return false;
}

LabelledComplex star_complex_direct(int n) {
    ComplexBuilder builder(n, "star");
    std::vector<int> choice(n, 0);
    while (true) {
        if (slot_face_in_star(choice)) {
            int dim = 0;
            for (int c : choice) {
                if (c == 2) ++dim;
            }
            std::vector<FaceKey> facets;
            for (int j = 0; j < n; ++j) {
                if (choice[j] != 2) continue;
                for (int down : {0, 1}) {
                    std::vector<int> sub = choice;
                    sub[j] = down;
                    if (slot_face_in_star(sub)) {
                        facets.push_back(slot_face_key(n, sub));
                    } else {
                        // Dropping to the wrong singleton in the only
                        // witnessing slot would leave the star; that face
                        // coincides with a kept one only through the
                        // center, so it cannot be a facet here.
                        throw std::logic_error("star_complex: facet left the star");
                    }
                }
            }
            builder.add_face(slot_face_key(n, choice), dim, std::move(facets));
        }
        int j = 0;
        while (j < n) {
            if (++choice[j] <= 2) break;
            choice[j] = 0;
            ++j;
        }
        if (j == n) break;
    }
    return builder.finalize();
}

}  // namespace

LabelledComplex summand_complex(int n, int start) {
    require_n(n, "summand_complex");
    if (start < 0 || start >= n) {
        throw std::invalid_argument("summand_complex: rotation out of range");
    }
    const MonomialIdeal ideal = borel_closure(n, {center_monomial(n)}, start);
    return box_complex(ideal, start);
}

LabelledComplex power_complex(int n) {
    require_n(n, "power_complex");
    ComplexBuilder builder(n, "power");
    for (int start = 0; start < n; ++start) {
        builder.merge(summand_complex(n, start));
    }
    return builder.finalize();
}

LabelledComplex star_complex(int n) {
    require_n(n, "star_complex");
    LabelledComplex direct = star_complex_direct(n);
    // Independent double construction: the same complex as the union of
    // the n rotated boxes of the center monomial.
    ComplexBuilder from_boxes(n, "star");
    for (int start = 0; start < n; ++start) {
        from_boxes.merge(generator_box(center_monomial(n), start));
    }
    if (!same_faces(direct, from_boxes.finalize())) {
        throw std::logic_error("star_complex: slotwise and box constructions disagree");
    }
    return direct;
}

LabelledComplex collapsed_star_complex(int n) {
    require_n(n, "collapsed_star_complex");
    LabelledComplex collapsed = collapse_star(star_complex(n), center_monomial(n));
    collapsed.set_variant("star-hat");
    return collapsed;
}

LabelledComplex pinched_complex(int n) {
    require_n(n, "pinched_complex");
    const Monomial center = center_monomial(n);
    ComplexBuilder builder(n, "pinched");
    builder.merge(collapsed_star_complex(n));
    for (int start = 0; start < n; ++start) {
        builder.merge(delete_star(summand_complex(n, start), center));
    }
    return builder.finalize();
}

LabelledComplex product_complex(int n, const std::vector<int>& starts) {
    require_n(n, "product_complex");
    if (starts.empty()) {
        throw std::invalid_argument("product_complex: need at least one rotation");
    }
    if (!std::is_sorted(starts.begin(), starts.end()) ||
        std::adjacent_find(starts.begin(), starts.end()) != starts.end()) {
        throw std::invalid_argument("product_complex: rotations must be sorted and distinct");
    }
    for (int s : starts) {
        if (s < 0 || s >= n) {
            throw std::invalid_argument("product_complex: rotation out of range");
        }
    }
    const std::size_t parts = starts.size();

    std::string variant = "product(";
    for (std::size_t j = 0; j < parts; ++j) {
        if (j) variant += ',';
        variant += std::to_string(starts[j] + 1);
    }
    variant += ')';

    // Factor complexes on the cyclic intervals between consecutive
    // rotations; their variable supports partition the ring.
    std::vector<LabelledComplex> factors;
    factors.reserve(parts);
    for (std::size_t j = 0; j < parts; ++j) {
        const int lo = starts[j];
        const int hi = (starts[(j + 1) % parts] + n - 1) % n;
        const CyclicInterval interval(n, lo, hi);
        factors.push_back(box_complex(borel_closure(n, {interval.monomial()}, lo), lo));
    }

    // Multiply a tuple of faces: every product of one vertex label per
    // factor.  Disjoint supports keep the products distinct.
    auto product_key = [&](const std::vector<const Face*>& tuple) {
        std::vector<Monomial> acc{Monomial::one(n)};
        for (const Face* f : tuple) {
            std::vector<Monomial> next;
            next.reserve(acc.size() * f->key.size());
            for (const Monomial& a : acc) {
                for (const Monomial& v : f->key) next.push_back(a.times(v));
            }
            acc = std::move(next);
        }
        std::sort(acc.begin(), acc.end());
        return acc;
    };

    ComplexBuilder builder(n, variant);
    std::vector<std::map<FaceKey, Face>::const_iterator> tuple;
    tuple.reserve(parts);
    for (const LabelledComplex& f : factors) tuple.push_back(f.faces().begin());
    while (true) {
        std::vector<const Face*> faces;
        faces.reserve(parts);
        int dim = 0;
        for (const auto& it : tuple) {
            faces.push_back(&it->second);
            dim += it->second.dim;
        }
        std::vector<FaceKey> facets;
        for (std::size_t j = 0; j < parts; ++j) {
            for (const BoundaryEntry& b : faces[j]->boundary) {
                std::vector<const Face*> sub = faces;
                const Face& facet_face = factors[j].face(b.facet);
                sub[j] = &facet_face;
                facets.push_back(product_key(sub));
            }
        }
        builder.add_face(product_key(faces), dim, std::move(facets));

        std::size_t j = 0;
        while (j < parts) {
            if (++tuple[j] != factors[j].faces().end()) break;
            tuple[j] = factors[j].faces().begin();
            ++j;
        }
        if (j == parts) break;
    }
    return builder.finalize();
}

BoxFace unique_center_facet(int n, const Monomial& alpha) {
    require_n(n, "unique_center_facet");
    if (alpha.n() != n) {
        throw std::invalid_argument("unique_center_facet: multidegree in wrong ring");
    }
    const Monomial center = center_monomial(n);
    const Monomial center_sq = center.times(center);
    if (!divides(center, alpha) || divides(center_sq, alpha)) {
        throw std::invalid_argument(
            "unique_center_facet: multidegree must be a multiple of the center "
            "but not of its square");
    }
    BoxFace face;
    face.n = n;
    face.factors.resize(n);
    face.origin_generator = center;
    face.origin_start = -1;
    for (int j = 0; j < n; ++j) {
        const int prev = (j + n - 1) % n;
        if (alpha.exponent(prev) >= 2) {
            face.factors[j] = {std::min(prev, j), std::max(prev, j)};
        } else {
            face.factors[j] = {j};
            if (face.origin_start < 0) face.origin_start = j;
        }
    }
    // Sanity: the face's label is the part of alpha visible below the
    // squared center, and in particular divides alpha.
    const std::vector<Monomial> verts = face.vertex_labels();
    Monomial label = verts.front();
    for (const Monomial& v : verts) label = lcm(label, v);
    if (!(label == gcd(alpha, center_sq))) {
        throw std::logic_error("unique_center_facet: label sanity check failed");
    }
    return face;
}

LabelledComplex build_complex(const ComplexRequest& request) {
    const int n = request.n;
    require_n(n, "build_complex");
    if (n > 8) {
        throw std::invalid_argument("build_complex: n > 8 is out of supported range");
    }
    if (request.object == "power") return power_complex(n);
    if (request.object == "pinched") return pinched_complex(n);
    if (request.object == "star") return star_complex(n);
    if (request.object == "star-hat") return collapsed_star_complex(n);
    if (request.object == "box-complex") {
        if (request.perm < 1 || request.perm > n) {
            throw std::invalid_argument("build_complex: --perm must be in 1..n");
        }
        return summand_complex(n, request.perm - 1);
    }
    if (request.object == "product") {
        if (request.indices.empty()) {
            throw std::invalid_argument("build_complex: product needs --indices");
        }
        std::vector<int> starts;
        starts.reserve(request.indices.size());
        for (int i : request.indices) {
            if (i < 1 || i > n) {
                throw std::invalid_argument("build_complex: --indices entries must be in 1..n");
            }
            starts.push_back(i - 1);
        }
        std::sort(starts.begin(), starts.end());
        starts.erase(std::unique(starts.begin(), starts.end()), starts.end());
        if (starts.size() != request.indices.size()) {
            throw std::invalid_argument("build_complex: --indices entries must be distinct");
        }
        return product_complex(n, starts);
    }
    throw std::invalid_argument("build_complex: unknown object '" + request.object + "'");
}

}  // namespace boxres

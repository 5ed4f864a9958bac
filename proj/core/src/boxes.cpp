#include "boxres/boxes.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace boxres {

namespace {

// All choice products of one index per factor subset.
void collect_vertices(const std::vector<std::vector<int>>& factors, int n,
                      std::vector<Monomial>& out) {
    std::vector<int> choice(factors.size(), 0);
    while (true) {
        std::vector<int> picked;
        picked.reserve(factors.size());
        for (std::size_t t = 0; t < factors.size(); ++t) {
            picked.push_back(factors[t][choice[t]]);
        }
        out.push_back(Monomial::from_indices(n, picked));
        std::size_t t = 0;
        while (t < factors.size()) {
            if (++choice[t] < static_cast<int>(factors[t].size())) break;
            choice[t] = 0;
            ++t;
        }
        if (t == factors.size()) break;
    }
    std::sort(out.begin(), out.end());
}

FaceKey subface_key(const std::vector<std::vector<int>>& factors, int n) {
    std::vector<Monomial> verts;
    collect_vertices(factors, n, verts);
    return verts;  // sorted; distinctness guaranteed by admissibility
}

}  // namespace

int BoxFace::dim() const {
    int d = 0;
    for (const auto& f : factors) d += static_cast<int>(f.size()) - 1;
    return d;
}

std::vector<Monomial> BoxFace::vertex_labels() const {
    std::vector<Monomial> out;
    collect_vertices(factors, n, out);
    return out;
}

bool BoxFace::admissible() const {
    const std::vector<Monomial> verts = vertex_labels();
    return std::adjacent_find(verts.begin(), verts.end()) == verts.end();
}

bool is_admissible(const BoxFace& box) { return box.admissible(); }

BoxFace generator_box_face(const Monomial& generator, int start) {
    const int n = generator.n();
    if (generator.degree() < 1) {
        throw std::invalid_argument("generator_box_face: constant monomial has no box");
    }
    // Factor the rotated monomial as x_{i_1} ... x_{i_d} with ascending
    // indices; the box factors are the intervals [0, i_1], [i_1, i_2], ...
    // in rotated coordinates, mapped back through the rotation.
    const std::vector<int> seq = cyclic_shift(generator, -start).index_sequence();
    BoxFace box;
    box.n = n;
    box.origin_generator = generator;
    box.origin_start = start;
    int prev = 0;
    for (int idx : seq) {
        std::vector<int> factor;
        factor.reserve(idx - prev + 1);
        for (int v = prev; v <= idx; ++v) {
            factor.push_back((v + start) % n);
        }
        std::sort(factor.begin(), factor.end());
        box.factors.push_back(std::move(factor));
        prev = idx;
    }
    return box;
}

LabelledComplex generator_box(const Monomial& generator, int start) {
    const BoxFace box = generator_box_face(generator, start);
    if (!box.admissible()) {
        throw std::logic_error("generator_box: inadmissible box for " + generator.str());
    }
    const int n = box.n;
    ComplexBuilder builder(n, "box");

    // Enumerate every face (one nonempty subset per factor) and register
    // it with its geometric facets (shrink one subset of size >= 2 by one
    // element).  Subset masks are iterated in a fixed order, but the
    // builder keys everything canonically so the order is immaterial.
    const std::size_t nf = box.factors.size();
    std::vector<std::vector<std::vector<int>>> subsets(nf);
    for (std::size_t t = 0; t < nf; ++t) {
        const auto& factor = box.factors[t];
        const int k = static_cast<int>(factor.size());
        for (int mask = 1; mask < (1 << k); ++mask) {
            std::vector<int> subset;
            for (int b = 0; b < k; ++b) {
                if (mask & (1 << b)) subset.push_back(factor[b]);
            }
            subsets[t].push_back(std::move(subset));
        }
    }

    std::vector<std::size_t> pick(nf, 0);
    while (true) {
        std::vector<std::vector<int>> face_factors(nf);
        int dim = 0;
        for (std::size_t t = 0; t < nf; ++t) {
            face_factors[t] = subsets[t][pick[t]];
            dim += static_cast<int>(face_factors[t].size()) - 1;
        }
        std::vector<FaceKey> facets;
        for (std::size_t t = 0; t < nf; ++t) {
            if (face_factors[t].size() < 2) continue;
            for (std::size_t drop = 0; drop < face_factors[t].size(); ++drop) {
                std::vector<std::vector<int>> sub = face_factors;
                sub[t].erase(sub[t].begin() + drop);
                facets.push_back(subface_key(sub, n));
            }
        }
        builder.add_face(subface_key(face_factors, n), dim, std::move(facets));

        std::size_t t = 0;
        while (t < nf) {
            if (++pick[t] < subsets[t].size()) break;
            pick[t] = 0;
            ++t;
        }
        if (t == nf) break;
    }
    return builder.finalize();
}

LabelledComplex box_complex(const MonomialIdeal& ideal, int start) {
    if (!ideal.equigenerated()) {
        throw std::invalid_argument("box_complex: ideal is not equigenerated");
    }
    if (!is_q_borel_closed(ideal, start)) {
        throw std::invalid_argument(
            "box_complex: ideal is not Borel-closed for the given cyclic order");
    }
    ComplexBuilder builder(ideal.n(), "box-complex(" + std::to_string(start + 1) + ")");
    for (const Monomial& g : ideal.generators()) {
        builder.merge(generator_box(g, start));
    }
    return builder.finalize();
}

}  // namespace boxres

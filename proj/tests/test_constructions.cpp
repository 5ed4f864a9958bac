#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "boxres/constructions.hpp"
#include "boxres/formulas.hpp"
#include "boxres/ideal.hpp"
#include "boxres/monomial.hpp"

using namespace boxres;

namespace {

Monomial M(std::vector<int> e) { return Monomial(std::move(e)); }

std::set<Monomial> vertex_set(const LabelledComplex& x) {
    const std::vector<Monomial> v = x.vertex_labels();
    return {v.begin(), v.end()};
}

// Sorted (dim, id) listing for face-for-face comparisons.
std::vector<std::pair<int, std::string>> face_list(const LabelledComplex& x) {
    std::vector<std::pair<int, std::string>> out;
    for (const auto& [key, f] : x.faces()) out.emplace_back(f.dim, face_id(key));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("summand complexes") {
    CHECK(summand_complex(3, 0).f_vector() == std::vector<long long>{5, 6, 2});
    CHECK(summand_complex(4, 0).f_vector()[0] == 14);
    // Vertices are exactly the generators of the rotated closure.
    for (int start = 0; start < 3; ++start) {
        const MonomialIdeal B = borel_closure(3, {center_monomial(3)}, start);
        CHECK(vertex_set(summand_complex(3, start)) ==
              std::set<Monomial>(B.generators().begin(), B.generators().end()));
    }
}

TEST_CASE("power complex") {
    CHECK(power_complex(2).f_vector() == std::vector<long long>{3, 2});
    CHECK(power_complex(3).f_vector() == std::vector<long long>{10, 15, 6});
    CHECK(power_complex(4).f_vector()[0] == 35);
    // Vertex set is all of degree n.
    for (int n : {2, 3, 4}) {
        const MonomialIdeal I = power_ideal(n, n);
        CHECK(vertex_set(power_complex(n)) ==
              std::set<Monomial>(I.generators().begin(), I.generators().end()));
    }
    CHECK(power_complex(3).d2_holds());
}

TEST_CASE("star complex f-vectors") {
    for (int n = 2; n <= 6; ++n) {
        const std::vector<long long> fv = star_complex(n).f_vector();
        REQUIRE(static_cast<int>(fv.size()) == n);
        for (int d = 0; d < n; ++d) {
            CHECK(fv[d] == binomial(n, d) * ((1LL << (n - d)) - 1));
        }
    }
}

TEST_CASE("star complex is the union of the center boxes") {
    // Vertices: all degree-n monomials with support on consecutive pairs,
    // i.e. the generators of the star ideal.
    for (int n : {2, 3, 4, 5}) {
        const MonomialIdeal J = star_ideal(n);
        CHECK(vertex_set(star_complex(n)) ==
              std::set<Monomial>(J.generators().begin(), J.generators().end()));
    }
    // Every maximal face of the star contains the center.
    const LabelledComplex y = star_complex(4);
    for (const FaceKey& key : y.maximal_faces()) {
        CHECK(std::find(key.begin(), key.end(), center_monomial(4)) != key.end());
    }
}

TEST_CASE("collapsed star f-vectors") {
    for (int n = 2; n <= 6; ++n) {
        const std::vector<long long> fv = collapsed_star_complex(n).f_vector();
        REQUIRE(static_cast<int>(fv.size()) == n);
        for (int d = 0; d + 1 < n; ++d) {
            CHECK(fv[d] == binomial(n, d) * ((1LL << (n - d)) - 2));
        }
        CHECK(fv[n - 1] == 1);
    }
}

TEST_CASE("pinched complex") {
    CHECK(pinched_complex(2).f_vector() == std::vector<long long>{2, 1});
    CHECK(pinched_complex(3).f_vector() == std::vector<long long>{9, 12, 4});
    CHECK(pinched_complex(4).f_vector() == std::vector<long long>{34, 80, 64, 17});
    // No face contains the center vertex.
    const LabelledComplex xhat = pinched_complex(3);
    for (const auto& [key, f] : xhat.faces()) {
        CHECK(std::find(key.begin(), key.end(), center_monomial(3)) == key.end());
    }
    CHECK(xhat.d2_holds());
}

TEST_CASE("pinched complex fixture table") {
    // The seven three-variable restrictions with m | alpha, m^2 !| alpha,
    // listed face for face.  a = x1, b = x2, c = x3.
    const LabelledComplex xhat = pinched_complex(3);
    using Faces = std::vector<std::pair<int, std::string>>;

    CHECK(restrict_leq(xhat, M({1, 1, 1})).empty());

    CHECK(face_list(restrict_leq(xhat, M({2, 1, 1}))) ==
          Faces{{0, "2 0 1"}, {0, "2 1 0"}, {1, "2 0 1;2 1 0"}});

    CHECK(face_list(restrict_leq(xhat, M({2, 2, 1}))) ==
          Faces{{0, "0 2 1"},
                {0, "1 2 0"},
                {0, "2 0 1"},
                {0, "2 1 0"},
                {1, "0 2 1;1 2 0"},
                {1, "1 2 0;2 1 0"},
                {1, "2 0 1;2 1 0"}});

    CHECK(face_list(restrict_leq(xhat, M({3, 1, 1}))) ==
          Faces{{0, "2 0 1"},
                {0, "2 1 0"},
                {0, "3 0 0"},
                {1, "2 0 1;2 1 0"},
                {1, "2 0 1;3 0 0"},
                {1, "2 1 0;3 0 0"},
                {2, "2 0 1;2 1 0;3 0 0"}});

    CHECK(face_list(restrict_leq(xhat, M({3, 2, 1}))) ==
          Faces{{0, "0 2 1"},
                {0, "1 2 0"},
                {0, "2 0 1"},
                {0, "2 1 0"},
                {0, "3 0 0"},
                {1, "0 2 1;1 2 0"},
                {1, "1 2 0;2 1 0"},
                {1, "2 0 1;2 1 0"},
                {1, "2 0 1;3 0 0"},
                {1, "2 1 0;3 0 0"},
                {2, "2 0 1;2 1 0;3 0 0"}});

    CHECK(face_list(restrict_leq(xhat, M({3, 1, 2}))) ==
          Faces{{0, "0 1 2"},
                {0, "1 0 2"},
                {0, "2 0 1"},
                {0, "2 1 0"},
                {0, "3 0 0"},
                {1, "0 1 2;1 0 2"},
                {1, "1 0 2;2 0 1"},
                {1, "2 0 1;2 1 0"},
                {1, "2 0 1;3 0 0"},
                {1, "2 1 0;3 0 0"},
                {2, "2 0 1;2 1 0;3 0 0"}});

    CHECK(face_list(restrict_leq(xhat, M({3, 3, 1}))) ==
          Faces{{0, "0 2 1"},
                {0, "0 3 0"},
                {0, "1 2 0"},
                {0, "2 0 1"},
                {0, "2 1 0"},
                {0, "3 0 0"},
                {1, "0 2 1;0 3 0"},
                {1, "0 2 1;1 2 0"},
                {1, "0 3 0;1 2 0"},
                {1, "1 2 0;2 1 0"},
                {1, "2 0 1;2 1 0"},
                {1, "2 0 1;3 0 0"},
                {1, "2 1 0;3 0 0"},
                {2, "0 2 1;0 3 0;1 2 0"},
                {2, "2 0 1;2 1 0;3 0 0"}});
}

TEST_CASE("product complexes agree with intersections of summands") {
    for (int n : {3, 4}) {
        std::vector<LabelledComplex> summand(n);
        for (int i = 0; i < n; ++i) summand[i] = summand_complex(n, i);
        for (int mask = 1; mask < (1 << n); ++mask) {
            std::vector<int> starts;
            for (int i = 0; i < n; ++i) {
                if (mask & (1 << i)) starts.push_back(i);
            }
            LabelledComplex lhs = summand[starts[0]];
            for (std::size_t j = 1; j < starts.size(); ++j) {
                lhs = complex_intersection(lhs, summand[starts[j]]);
            }
            const LabelledComplex rhs = product_complex(n, starts);
            CHECK(same_faces(lhs, rhs));
        }
    }
}

TEST_CASE("product complex examples") {
    // All three rotations in n = 3: the product of three vertex-rooted
    // segments, with vertex set the generators of p1 p2 p3.
    const LabelledComplex p123 = product_complex(3, {0, 1, 2});
    const MonomialIdeal expected = cyclic_prime_product(
        3, {CyclicInterval(3, 0, 0), CyclicInterval(3, 1, 1), CyclicInterval(3, 2, 2)});
    CHECK(vertex_set(p123) ==
          std::set<Monomial>(expected.generators().begin(), expected.generators().end()));

    // n = 4, rotations {1, 3} (1-based {1,3}; 0-based {0,2}): a square.
    const LabelledComplex p13 = product_complex(4, {0, 2});
    CHECK(p13.f_vector() == std::vector<long long>{4, 4, 1});
}

TEST_CASE("unique center facet formula") {
    // alpha = a b^2 c: the unique maximal center face of Y_{<= alpha} is
    // the edge from abc to ab^2.
    const BoxFace e = unique_center_facet(3, M({1, 2, 1}));
    const std::vector<Monomial> verts = e.vertex_labels();
    CHECK(std::set<Monomial>(verts.begin(), verts.end()) ==
          std::set<Monomial>{M({1, 1, 1}), M({1, 2, 0})});

    // alpha = m: only the center vertex itself.
    const BoxFace v = unique_center_facet(3, M({1, 1, 1}));
    CHECK(v.dim() == 0);
    CHECK(v.vertex_labels() == std::vector<Monomial>{M({1, 1, 1})});

    CHECK_THROWS_AS(unique_center_facet(3, M({2, 2, 2})), std::invalid_argument);
    CHECK_THROWS_AS(unique_center_facet(3, M({1, 1, 0})), std::invalid_argument);
}

TEST_CASE("unique center facet matches the star restriction exhaustively") {
    // For every alpha with m | alpha | m^2 and alpha != m^2, the
    // restriction of the star to alpha has exactly one maximal face
    // containing the center, and it is the predicted box face.
    for (int n : {3, 4}) {
        const LabelledComplex y = star_complex(n);
        const Monomial m = center_monomial(n);
        for (int mask = 0; mask + 1 < (1 << n); ++mask) {
            std::vector<int> exps(n, 1);
            for (int i = 0; i < n; ++i) {
                if (mask & (1 << i)) exps[i] = 2;
            }
            const Monomial alpha = M(exps);
            const LabelledComplex r = restrict_leq(y, alpha);
            std::vector<FaceKey> center_maximal;
            for (const FaceKey& key : r.maximal_faces()) {
                if (std::find(key.begin(), key.end(), m) != key.end()) {
                    center_maximal.push_back(key);
                }
            }
            REQUIRE(center_maximal.size() == 1);
            std::vector<Monomial> predicted = unique_center_facet(n, alpha).vertex_labels();
            std::sort(predicted.begin(), predicted.end());
            CHECK(center_maximal[0] == predicted);
            // Label of the unique face is gcd(alpha, m^2) = alpha here.
            CHECK(r.face(center_maximal[0]).label == alpha);
        }
    }
}

TEST_CASE("build_complex dispatch") {
    ComplexRequest req;
    req.n = 3;
    req.object = "box-complex";
    req.perm = 2;
    CHECK(same_faces(build_complex(req), summand_complex(3, 1)));
    req.object = "product";
    req.indices = {1, 3};
    CHECK(same_faces(build_complex(req), product_complex(3, {0, 2})));
    req.object = "power";
    CHECK(build_complex(req).variant() == "power");

    ComplexRequest bad;
    bad.n = 1;
    bad.object = "power";
    CHECK_THROWS_AS(build_complex(bad), std::invalid_argument);
    bad.n = 3;
    bad.object = "nope";
    CHECK_THROWS_AS(build_complex(bad), std::invalid_argument);
    bad.object = "box-complex";
    bad.perm = 5;
    CHECK_THROWS_AS(build_complex(bad), std::invalid_argument);
}

#include <doctest.h>

#include <set>
#include <stdexcept>
#include <vector>

#include "boxres/boxes.hpp"
#include "boxres/cellcomplex.hpp"
#include "boxres/complex_json.hpp"
#include "boxres/constructions.hpp"
#include "boxres/homology.hpp"
#include "boxres/ideal.hpp"
#include "boxres/monomial.hpp"

using namespace boxres;

namespace {

Monomial M(std::vector<int> e) { return Monomial(std::move(e)); }

// A filled triangle on three degree-d monomials, built facet by facet.
LabelledComplex triangle(const Monomial& a, const Monomial& b, const Monomial& c) {
    ComplexBuilder builder(a.n(), "test");
    builder.add_face({a}, 0, {});
    builder.add_face({b}, 0, {});
    builder.add_face({c}, 0, {});
    auto key = [](const Monomial& u, const Monomial& v) {
        FaceKey k = {u, v};
        if (k[1] < k[0]) std::swap(k[0], k[1]);
        return k;
    };
    builder.add_face({a, b}, 1, {{a}, {b}});
    builder.add_face({a, c}, 1, {{a}, {c}});
    builder.add_face({b, c}, 1, {{b}, {c}});
    builder.add_face({a, b, c}, 2, {key(a, b), key(a, c), key(b, c)});
    return builder.finalize();
}

}  // namespace

TEST_CASE("face ids and keys") {
    const FaceKey key = {M({1, 2, 0}), M({2, 1, 0})};
    CHECK(face_id(key) == "1 2 0;2 1 0");
}

TEST_CASE("builder produces labelled oriented complexes") {
    const LabelledComplex t = triangle(M({2, 0, 0}), M({1, 1, 0}), M({1, 0, 1}));
    CHECK(t.f_vector() == std::vector<long long>{3, 3, 1});
    CHECK(t.dim() == 2);
    CHECK(t.d2_holds());
    CHECK(t.label_lcm() == M({2, 1, 1}));
    CHECK(t.face({M({1, 1, 0}), M({2, 0, 0})}).label == M({2, 1, 0}));
    // The 2-cell's boundary carries one +1 and signs consistent with d^2=0.
    const Face& top = t.face({M({1, 0, 1}), M({1, 1, 0}), M({2, 0, 0})});
    CHECK(top.boundary.size() == 3);
    for (const BoundaryEntry& e : top.boundary) {
        CHECK((e.sign == 1 || e.sign == -1));
    }
}

TEST_CASE("builder rejects inconsistent data") {
    ComplexBuilder builder(2, "test");
    builder.add_face({M({2, 0})}, 0, {});
    // Same key, contradictory dimension.
    CHECK_THROWS_AS(builder.add_face({M({2, 0})}, 1, {}), std::logic_error);
    // Dangling facet reference surfaces at finalize.
    ComplexBuilder dangling(2, "test");
    dangling.add_face({M({2, 0})}, 0, {});
    dangling.add_face({M({1, 1})}, 0, {});
    dangling.add_face({M({2, 0}), M({1, 1})}, 1, {{M({2, 0})}, {M({0, 2})}});
    CHECK_THROWS_AS(dangling.finalize(), std::logic_error);
}

TEST_CASE("union and intersection") {
    const LabelledComplex t1 = triangle(M({3, 0, 0}), M({2, 1, 0}), M({2, 0, 1}));
    const LabelledComplex t2 = triangle(M({0, 3, 0}), M({0, 2, 1}), M({1, 2, 0}));
    const LabelledComplex u = complex_union(t1, t2);
    CHECK(u.f_vector() == std::vector<long long>{6, 6, 2});
    CHECK(u.d2_holds());
    CHECK(complex_intersection(u, t1) == t1);
    CHECK(complex_intersection(t1, t2).empty());

    // Shared faces of independently built complexes carry identical
    // orientation signs, so the union is well-defined.
    const LabelledComplex x1 = summand_complex(3, 0);
    const LabelledComplex x2 = summand_complex(3, 1);
    const LabelledComplex x12 = complex_union(x1, x2);
    CHECK(x12.d2_holds());
    const LabelledComplex overlap = complex_intersection(x1, x2);
    for (const auto& [key, f] : overlap.faces()) {
        CHECK(x1.face(key) == x2.face(key));
    }
}

TEST_CASE("restriction by divisibility") {
    const LabelledComplex x1 = summand_complex(3, 0);
    CHECK(restrict_leq(x1, x1.label_lcm()) == x1);
    CHECK(restrict_leq(x1, Monomial::one(3)).empty());
    // Restriction keeps closure: every facet of a kept face is kept.
    const LabelledComplex r = restrict_leq(x1, M({2, 1, 1}));
    r.check_closure();
    CHECK(r.face_count() < x1.face_count());
    // restrict_lt drops the faces whose label equals alpha exactly.
    const LabelledComplex lt = restrict_lt(x1, M({2, 1, 1}));
    for (const auto& [key, f] : lt.faces()) {
        CHECK(f.label != M({2, 1, 1}));
    }
}

TEST_CASE("delete_star removes the closed star of a vertex") {
    const LabelledComplex x1 = summand_complex(3, 0);
    const LabelledComplex xhat1 = delete_star(x1, center_monomial(3));
    CHECK(xhat1.f_vector() == std::vector<long long>{4, 4, 1});
    // The remaining 2-cell is the triangle {a^3, a^2b, a^2c}.
    bool found = false;
    for (const auto& [key, f] : xhat1.faces()) {
        if (f.dim == 2) {
            found = true;
            CHECK(key == FaceKey{M({2, 0, 1}), M({2, 1, 0}), M({3, 0, 0})});
        }
    }
    CHECK(found);
    CHECK_THROWS_AS(delete_star(x1, M({9, 9, 9})), std::invalid_argument);
}

TEST_CASE("collapse_star on the three-variable star") {
    const LabelledComplex y = star_complex(3);
    const LabelledComplex yhat = collapse_star(y, center_monomial(3));
    CHECK(yhat.f_vector() == std::vector<long long>{6, 6, 1});
    CHECK(yhat.d2_holds());
    // The new top cell has all six outer vertices and label m^2.
    const std::vector<FaceKey> maximal = yhat.maximal_faces();
    CHECK(maximal.size() == 1);
    const Face& top = yhat.face(maximal[0]);
    CHECK(top.dim == 2);
    CHECK(top.key.size() == 6);
    CHECK(top.label == M({2, 2, 2}));
    CHECK(top.boundary.size() == 6);
}

TEST_CASE("collapse_star preserves reduced homology") {
    // Both the star (a cone) and the collapsed polytope are acyclic balls.
    for (int n : {2, 3, 4, 5}) {
        const LabelledComplex y = star_complex(n);
        const LabelledComplex yhat = collapse_star(y, center_monomial(n));
        const FieldSpec k;
        const std::vector<long long> hy = reduced_homology(y, k);
        const std::vector<long long> hyhat = reduced_homology(yhat, k);
        for (long long h : hy) CHECK(h == 0);
        for (long long h : hyhat) CHECK(h == 0);
    }
}

TEST_CASE("collapse_star rejects non-star input") {
    const LabelledComplex t = triangle(M({2, 0, 0}), M({1, 1, 0}), M({1, 0, 1}));
    // The would-be center must be a vertex.
    CHECK_THROWS_AS(collapse_star(t, M({9, 9, 9})), std::invalid_argument);
    // A filled triangle is the cone over the opposite edge, but that edge
    // is a ball rather than a sphere, so the collapse is rejected.
    CHECK_THROWS_AS(collapse_star(t, M({2, 0, 0})), std::invalid_argument);
    // A path with a dangling extra vertex is not a star of its midpoint:
    // the isolated vertex is a maximal face missing the center.
    ComplexBuilder path(2, "test");
    path.add_face({M({2, 0})}, 0, {});
    path.add_face({M({1, 1})}, 0, {});
    path.add_face({M({0, 2})}, 0, {});
    path.add_face({M({2, 0}), M({1, 1})}, 1, {{M({2, 0})}, {M({1, 1})}});
    CHECK_THROWS_AS(collapse_star(path.finalize(), M({1, 1})), std::invalid_argument);
}

TEST_CASE("two-variable collapse") {
    // The star of x1x2 in two variables is the path x1^2 -- m -- x2^2; its
    // collapse is the single segment [x1^2, x2^2] labelled m^2.
    const LabelledComplex yhat = collapsed_star_complex(2);
    CHECK(yhat.f_vector() == std::vector<long long>{2, 1});
    const Face& top = yhat.face({M({0, 2}), M({2, 0})});
    CHECK(top.label == M({2, 2}));
    CHECK(top.boundary.size() == 2);
    CHECK(top.boundary[0].sign * top.boundary[1].sign == -1);
}

TEST_CASE("shift_complex relabels cyclically") {
    const LabelledComplex x1 = summand_complex(3, 0);
    const LabelledComplex x2 = summand_complex(3, 1);
    CHECK(same_faces(shift_complex(x1, 1), x2));
    CHECK(same_faces(shift_complex(x1, 3), x1));
}

TEST_CASE("json round trip") {
    for (const char* object : {"power", "pinched", "star", "star-hat"}) {
        ComplexRequest req;
        req.n = 3;
        req.object = object;
        const LabelledComplex x = build_complex(req);
        const std::string text = complex_to_json(x);
        const LabelledComplex y = complex_from_json(text);
        CHECK(x == y);
        // Serialization is deterministic byte for byte.
        CHECK(complex_to_json(y) == text);
    }
}

TEST_CASE("json rejects malformed input") {
    CHECK_THROWS_AS(complex_from_json("not json"), std::invalid_argument);
    CHECK_THROWS_AS(complex_from_json("{}"), std::invalid_argument);
    CHECK_THROWS_AS(complex_from_json(R"({"n":1,"variant":"x","faces":[]})"),
                    std::invalid_argument);
    // Mismatched id.
    CHECK_THROWS_AS(complex_from_json(R"({"n":2,"variant":"x","faces":[
        {"id":"0 2","dim":0,"vertices":[[2,0]],"label":[2,0],"boundary":[]}]})"),
                    std::invalid_argument);
    // Label is not the vertex lcm.
    CHECK_THROWS_AS(complex_from_json(R"({"n":2,"variant":"x","faces":[
        {"id":"2 0","dim":0,"vertices":[[2,0]],"label":[2,1],"boundary":[]}]})"),
                    std::invalid_argument);
    // Unknown facet reference.
    CHECK_THROWS_AS(complex_from_json(R"({"n":2,"variant":"x","faces":[
        {"id":"2 0","dim":0,"vertices":[[2,0]],"label":[2,0],
         "boundary":[{"id":"0 2","sign":1}]}]})"),
                    std::invalid_argument);
}

TEST_CASE("json loads structurally sound but uncertified complexes") {
    // Stripping the hexagon's top cell leaves a circle; the file is
    // structurally valid, loads fine, and only certification catches it.
    const LabelledComplex yhat = collapsed_star_complex(3);
    const LabelledComplex circle = yhat.subcomplex_if(
        [](const Face& f) { return f.dim < 2; }, "negative-control");
    const LabelledComplex loaded = complex_from_json(complex_to_json(circle));
    CHECK(loaded == circle);
    const std::vector<long long> h = reduced_homology(loaded, FieldSpec{});
    REQUIRE(h.size() == 3);
    CHECK(h[0] == 0);  // H~_{-1}
    CHECK(h[1] == 0);  // H~_0: connected
    CHECK(h[2] == 1);  // H~_1: one loop
}

#include <doctest.h>

#include <set>
#include <stdexcept>
#include <vector>

#include "boxres/boxes.hpp"
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

}  // namespace

TEST_CASE("generator box face structure") {
    // abc under the order starting at a factors as a * b * c with intervals
    // [a,a], [a,b], [b,c]: the square times a point.
    const BoxFace box = generator_box_face(M({1, 1, 1}), 0);
    CHECK(box.factors == std::vector<std::vector<int>>{{0}, {0, 1}, {1, 2}});
    CHECK(box.dim() == 2);
    CHECK(box.admissible());
    const std::vector<Monomial> verts = box.vertex_labels();
    CHECK(std::set<Monomial>(verts.begin(), verts.end()) ==
          std::set<Monomial>{M({2, 1, 0}), M({2, 0, 1}), M({1, 2, 0}), M({1, 1, 1})});

    // a^3: all three factors are the single interval [a,a].
    const BoxFace cube = generator_box_face(M({3, 0, 0}), 0);
    CHECK(cube.factors == std::vector<std::vector<int>>{{0}, {0}, {0}});
    CHECK(cube.dim() == 0);

    CHECK_THROWS_AS(generator_box_face(Monomial::one(3), 0), std::invalid_argument);
}

TEST_CASE("rotation moves the box") {
    // abc under the order starting at b: factors rotate accordingly and the
    // vertex set is the shift of the start-at-a square.
    const BoxFace box = generator_box_face(M({1, 1, 1}), 1);
    CHECK(box.dim() == 2);
    const BoxFace base = generator_box_face(M({1, 1, 1}), 0);
    std::set<Monomial> shifted;
    for (const Monomial& v : base.vertex_labels()) shifted.insert(cyclic_shift(v, 1));
    const std::vector<Monomial> verts = box.vertex_labels();
    CHECK(std::set<Monomial>(verts.begin(), verts.end()) == shifted);
}

TEST_CASE("inadmissible doubled simplex") {
    // Delta_{[a,b]} x Delta_{[a,b]} repeats the vertex product ab.
    BoxFace box;
    box.n = 2;
    box.factors = {{0, 1}, {0, 1}};
    CHECK_FALSE(box.admissible());
    CHECK_FALSE(is_admissible(box));
}

TEST_CASE("generator box complexes") {
    // The box of abc (start a) is a square: f-vector (4, 4, 1).
    const LabelledComplex square = generator_box(M({1, 1, 1}), 0);
    CHECK(square.f_vector() == std::vector<long long>{4, 4, 1});
    CHECK(vertex_set(square) ==
          std::set<Monomial>{M({2, 1, 0}), M({2, 0, 1}), M({1, 2, 0}), M({1, 1, 1})});
    CHECK(square.label_lcm() == M({2, 2, 1}));

    // A vertex-only box.
    CHECK(generator_box(M({3, 0, 0}), 0).f_vector() == std::vector<long long>{1});

    // Face count of a box is the product of (2^{k_t} - 1) over factor sizes.
    const LabelledComplex b = generator_box(M({1, 0, 1, 2}), 2);
    long long expected = 1;
    for (const std::vector<int>& f : generator_box_face(M({1, 0, 1, 2}), 2).factors) {
        expected *= (1LL << f.size()) - 1;
    }
    CHECK(b.face_count() == expected);
}

TEST_CASE("box complex of the principal closure") {
    const MonomialIdeal B = borel_closure(3, {center_monomial(3)}, 0);
    const LabelledComplex X1 = box_complex(B, 0);
    CHECK(X1.f_vector() == std::vector<long long>{5, 6, 2});
    CHECK(vertex_set(X1) == std::set<Monomial>(B.generators().begin(), B.generators().end()));

    const MonomialIdeal B4 = borel_closure(4, {center_monomial(4)}, 0);
    const LabelledComplex X14 = box_complex(B4, 0);
    CHECK(X14.f_vector()[0] == 14);
    // Contractible: Euler characteristic 1.
    long long euler = 0;
    const std::vector<long long> fv = X14.f_vector();
    for (std::size_t d = 0; d < fv.size(); ++d) euler += (d % 2 == 0) ? fv[d] : -fv[d];
    CHECK(euler == 1);
}

TEST_CASE("box complex rejects bad input") {
    // Not equigenerated.
    CHECK_THROWS_AS(box_complex(MonomialIdeal::from_generators(2, {M({1, 0}), M({0, 2})}), 0),
                    std::invalid_argument);
    // Equigenerated but not Borel-closed for the requested order.
    CHECK_THROWS_AS(box_complex(MonomialIdeal::from_generators(2, {M({1, 1})}), 0),
                    std::invalid_argument);
    CHECK_THROWS_AS(box_complex(borel_closure(3, {center_monomial(3)}, 1), 0),
                    std::invalid_argument);
}

TEST_CASE("box complex f-vector matches the closed-form Betti counts") {
    // For a Borel-closed ideal the box complex supports a minimal
    // resolution, so its face counts by dimension must equal the formula
    // totals.  Exercise all principal closures of degree <= 4 in n <= 4.
    for (int n : {2, 3, 4}) {
        for (int d = 1; d <= 4; ++d) {
            for (const Monomial& g : monomials_of_degree(n, d)) {
                const MonomialIdeal B = borel_closure(n, {g}, 0);
                const LabelledComplex x = box_complex(B, 0);
                const BettiTable expected = ek_betti(B).table;
                const std::vector<long long> fv = x.f_vector();
                for (std::size_t p = 0; p < fv.size(); ++p) {
                    CHECK(fv[p] == expected.total(static_cast<int>(p)));
                }
                CHECK(static_cast<int>(fv.size()) == expected.max_p() + 1);
            }
        }
    }
}

TEST_CASE("square power ideal box complex") {
    // (x_1..x_4)^2 is Borel for the standard order; its box complex is the
    // full Taylor-like polytopal structure with f-vector (10, 20, 15, 4).
    const LabelledComplex x = box_complex(power_ideal(4, 2), 0);
    CHECK(x.f_vector() == std::vector<long long>{10, 20, 15, 4});
}

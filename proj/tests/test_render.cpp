#include <doctest.h>

#include <stdexcept>
#include <string>

#include "boxres/cellcomplex.hpp"
#include "boxres/constructions.hpp"
#include "boxres/monomial.hpp"
#include "boxres/render.hpp"

using namespace boxres;

namespace {

std::size_t count_of(const std::string& hay, const std::string& needle) {
    std::size_t c = 0;
    for (std::size_t pos = hay.find(needle); pos != std::string::npos;
         pos = hay.find(needle, pos + needle.size())) {
        ++c;
    }
    return c;
}

}  // namespace

TEST_CASE("svg matches the complex combinatorially") {
    // The full power complex draws as the subdivided triangle: each face of
    // the f-vector (10, 15, 6) becomes exactly one SVG element.
    const std::string x = render_svg(power_complex(3));
    CHECK(count_of(x, "<circle") == 10);
    CHECK(count_of(x, "<text") == 10);
    CHECK(count_of(x, "<line") == 15);
    CHECK(count_of(x, "<polygon") == 6);

    // The pinched variant swaps the three center cells for the hexagon:
    // (9, 12, 4) with one six-vertex cell in the hexagon fill and the three
    // corner triangles in the triangle fill.
    const std::string xhat = render_svg(pinched_complex(3));
    CHECK(count_of(xhat, "<circle") == 9);
    CHECK(count_of(xhat, "<line") == 12);
    CHECK(count_of(xhat, "<polygon") == 4);
    CHECK(count_of(xhat, "#d9d9d9") == 1);
    CHECK(count_of(xhat, "#f2c4c4") == 3);
}

TEST_CASE("single vertex renders as one labelled dot") {
    ComplexBuilder b(3, "dot");
    b.add_face({Monomial({3, 0, 0})}, 0, {});
    const std::string svg = render_svg(b.finalize());
    CHECK(count_of(svg, "<circle") == 1);
    CHECK(count_of(svg, "<text") == 1);
    CHECK(svg.find(">a^3</text>") != std::string::npos);
    CHECK(count_of(svg, "<line") == 0);
    CHECK(count_of(svg, "<polygon") == 0);
}

TEST_CASE("rendering requires three variables") {
    CHECK_THROWS_AS(render_svg(power_complex(2)), std::invalid_argument);
    CHECK_THROWS_AS(render_svg(power_complex(4)), std::invalid_argument);
}

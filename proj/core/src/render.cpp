#include "boxres/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <vector>

namespace boxres {

namespace {

struct Point {
    double x = 0.0;
    double y = 0.0;
};

// Reference triangle for barycentric placement of exponent vectors.
constexpr Point kCornerA{60.0, 540.0};
constexpr Point kCornerB{540.0, 540.0};
constexpr Point kCornerC{300.0, 124.3};

Point position(const Monomial& m) {
    const double d = static_cast<double>(m.degree());
    const double a = m.exponent(0) / d;
    const double b = m.exponent(1) / d;
    const double c = m.exponent(2) / d;
    return {a * kCornerA.x + b * kCornerB.x + c * kCornerC.x,
            a * kCornerA.y + b * kCornerB.y + c * kCornerC.y};
}

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

const char* fill_for(std::size_t vertex_count) {
    switch (vertex_count) {
        case 3: return "#f2c4c4";
        case 4: return "#f5e6b2";
        case 6: return "#d9d9d9";
        default: return "#cfe2f3";
    }
}

}  // namespace

std::string render_svg(const LabelledComplex& x) {
    if (x.n() != 3) {
        throw std::invalid_argument("render_svg: only three-variable complexes are drawable");
    }

    std::vector<const Face*> cells2;
    std::vector<const Face*> edges;
    std::vector<const Face*> dots;
    for (const auto& [key, f] : x.faces()) {
        if (f.dim == 2) cells2.push_back(&f);
        else if (f.dim == 1) edges.push_back(&f);
        else if (f.dim == 0) dots.push_back(&f);
    }
    auto by_id = [](const Face* a, const Face* b) {
        return face_id(a->key) < face_id(b->key);
    };
    std::sort(cells2.begin(), cells2.end(), by_id);
    std::sort(edges.begin(), edges.end(), by_id);
    std::sort(dots.begin(), dots.end(), by_id);

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"600\" height=\"600\" "
           "viewBox=\"0 0 600 600\">\n";
    svg += "  <rect width=\"600\" height=\"600\" fill=\"#ffffff\"/>\n";

    for (const Face* f : cells2) {
        std::vector<Point> pts;
        pts.reserve(f->key.size());
        Point centroid{0.0, 0.0};
        for (const Monomial& v : f->key) {
            Point p = position(v);
            centroid.x += p.x;
            centroid.y += p.y;
            pts.push_back(p);
        }
        centroid.x /= static_cast<double>(pts.size());
        centroid.y /= static_cast<double>(pts.size());
        // Order the polygon outline by angle around the centroid; the faces
        // here are convex, so this recovers the boundary cycle.
        std::sort(pts.begin(), pts.end(), [&](const Point& p, const Point& q) {
            return std::atan2(p.y - centroid.y, p.x - centroid.x) <
                   std::atan2(q.y - centroid.y, q.x - centroid.x);
        });
        svg += "  <polygon points=\"";
        for (std::size_t i = 0; i < pts.size(); ++i) {
            if (i) svg += " ";
            svg += num(pts[i].x) + "," + num(pts[i].y);
        }
        svg += "\" fill=\"";
        svg += fill_for(f->key.size());
        svg += "\" stroke=\"none\"/>\n";
    }

    for (const Face* f : edges) {
        const Point p = position(f->key[0]);
        const Point q = position(f->key[1]);
        svg += "  <line x1=\"" + num(p.x) + "\" y1=\"" + num(p.y) +
               "\" x2=\"" + num(q.x) + "\" y2=\"" + num(q.y) +
               "\" stroke=\"#444444\" stroke-width=\"1.5\"/>\n";
    }

    for (const Face* f : dots) {
        const Point p = position(f->key[0]);
        svg += "  <circle cx=\"" + num(p.x) + "\" cy=\"" + num(p.y) +
               "\" r=\"4\" fill=\"#222222\"/>\n";
        svg += "  <text x=\"" + num(p.x + 7.0) + "\" y=\"" + num(p.y - 7.0) +
               "\" font-family=\"monospace\" font-size=\"14\">" +
               f->key[0].pretty() + "</text>\n";
    }

    svg += "</svg>\n";
    return svg;
}

}  // namespace boxres

#include "zgon/plot.hpp"

#include "zgon/enumerate.hpp"
#include "zgon/io.hpp"

#include <cmath>
#include <sstream>

namespace zgon {

namespace {

constexpr double kSize = 640.0;
constexpr double kRadius = 280.0;

struct Xy {
    double x, y;
};

double to_radians(const Rat& multiple_of_pi) {
    return 3.14159265358979323846 *
           (static_cast<double>(multiple_of_pi.numerator()) /
            static_cast<double>(multiple_of_pi.denominator()));
}

Xy on_circle(double radians, double radius = kRadius) {
    return {kSize / 2 + radius * std::cos(radians), kSize / 2 - radius * std::sin(radians)};
}

void chord(std::ostream& os, const Xy& a, const Xy& b, const std::string& style) {
    os << "  <line x1=\"" << a.x << "\" y1=\"" << a.y << "\" x2=\"" << b.x << "\" y2=\"" << b.y
       << "\" " << style << "/>\n";
}

// Region swept by all chords joining two disjoint circle arcs: boundary runs
// along one arc, jumps to the other along the outer chords.
void region(std::ostream& os, double a_lo, double a_hi, double b_lo, double b_hi,
            const std::string& css_class, const std::string& fill) {
    const Xy p1 = on_circle(a_lo), p2 = on_circle(a_hi);
    const Xy q1 = on_circle(b_lo), q2 = on_circle(b_hi);
    os << "  <path class=\"" << css_class << "\" d=\"M " << p1.x << " " << p1.y << " A " << kRadius
       << " " << kRadius << " 0 0 0 " << p2.x << " " << p2.y << " L " << q1.x << " " << q1.y
       << " A " << kRadius << " " << kRadius << " 0 0 1 " << q2.x << " " << q2.y << " Z\" fill=\""
       << fill << "\" stroke=\"none\" opacity=\"0.45\"/>\n";
}

}  // namespace

std::string render_svg(const PlotRequest& req) {
    req.gon.require_valid();
    const Embedding& e = req.embedding;
    auto angle_of = [&](const Point& z) { return to_radians(e.angle(req.gon, z)); };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kSize << "\" height=\"" << kSize
       << "\" viewBox=\"0 0 " << kSize << " " << kSize << "\">\n";
    os << "  <defs>\n"
          "    <pattern id=\"hatch\" width=\"8\" height=\"8\" patternTransform=\"rotate(45)\" "
          "patternUnits=\"userSpaceOnUse\">\n"
          "      <line x1=\"0\" y1=\"0\" x2=\"0\" y2=\"8\" stroke=\"#4466aa\" stroke-width=\"2\"/>\n"
          "    </pattern>\n"
          "  </defs>\n";
    os << "  <circle cx=\"" << kSize / 2 << "\" cy=\"" << kSize / 2 << "\" r=\"" << kRadius
       << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"/>\n";

    if (req.hammocks_of) {
        const Arc a = *req.hammocks_of;
        require_admissible(a);
        const Point window_floor{1, -req.window};
        const Point window_ceil{req.gon.m, req.window};
        // Forward region: one endpoint in [succ(lo), hi], the other below lo.
        region(os, angle_of(succ(a.lo)), angle_of(a.hi), angle_of(window_floor),
               angle_of(a.lo), "hammock-plus", "#88bb88");
        // Backward region, framed by the inverse shift.
        const Arc c = shift_arc(a, -1);
        region(os, angle_of(c.hi), angle_of(window_ceil), angle_of(c.lo),
               angle_of(Point{c.hi.copy, c.hi.index - 1}), "hammock-minus", "url(#hatch)");
    }

    for (int p = 1; p <= req.gon.m; ++p) {
        const Xy b = on_circle(to_radians(e.boundary_angle(req.gon, p)));
        os << "  <rect x=\"" << b.x - 4 << "\" y=\"" << b.y - 4
           << "\" width=\"8\" height=\"8\" fill=\"black\" transform=\"rotate(45 " << b.x << " "
           << b.y << ")\"/>\n";
    }
    for (const Point& z : enumerate_points(req.gon, req.window)) {
        const Xy p = on_circle(angle_of(z));
        os << "  <circle cx=\"" << p.x << "\" cy=\"" << p.y
           << "\" r=\"3\" fill=\"white\" stroke=\"black\"/>\n";
    }

    for (const Arc& a : req.arcs) {
        require_admissible(a);
        chord(os, on_circle(angle_of(a.hi)), on_circle(angle_of(a.lo)),
              "stroke=\"#aa3333\" stroke-width=\"2\"");
    }

    if (req.triangle_of) {
        const AlmostSplitTriangle t = almost_split_triangle(*req.triangle_of);
        chord(os, on_circle(angle_of(t.right.hi)), on_circle(angle_of(t.right.lo)),
              "stroke=\"#223388\" stroke-width=\"2.5\"");
        chord(os, on_circle(angle_of(t.left.hi)), on_circle(angle_of(t.left.lo)),
              "stroke=\"#223388\" stroke-width=\"2.5\"");
        for (const Arc& mid : t.middle)
            chord(os, on_circle(angle_of(mid.hi)), on_circle(angle_of(mid.lo)),
                  "stroke=\"#223388\" stroke-width=\"2\" stroke-dasharray=\"6 5\"");
    }

    os << "</svg>\n";
    return os.str();
}

}  // namespace zgon

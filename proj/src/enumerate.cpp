#include "zgon/enumerate.hpp"

#include <stdexcept>

namespace zgon {

std::vector<Point> enumerate_points(const GonConfig& g, long long window) {
    g.require_valid();
    if (window < 0) throw std::invalid_argument("enumerate: window must be nonnegative");
    std::vector<Point> pts;
    for (int p = 1; p <= g.m; ++p)
        for (long long n = -window; n <= window; ++n) pts.push_back(Point{p, n});
    return pts;
}

std::vector<Interval> enumerate_intervals(const GonConfig& g, long long window) {
    const std::vector<Point> pts = enumerate_points(g, window);
    std::vector<Interval> out;
    for (const Point& a : pts)
        for (const Point& b : pts)
            for (int h : {0, 1}) {
                const Interval u{a, b, h};
                if (in_interval_family(u)) out.push_back(u);
            }
    return out;
}

std::vector<Arc> enumerate_arcs(const GonConfig& g, long long window) {
    const std::vector<Point> pts = enumerate_points(g, window);
    std::vector<Arc> out;
    for (const Point& hi : pts)
        for (const Point& lo : pts) {
            const Arc a{hi, lo};
            if (is_admissible(a)) out.push_back(a);
        }
    return out;
}

}  // namespace zgon

#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>

namespace zgon {

/// A vertex of the cyclically ordered set underlying the model: one of m
/// copies of the integers, laid out around a circle and accumulating at m
/// boundary points. The boundary points themselves are *not* vertices; they
/// are implicit between copy m and copy 1, copy 1 and copy 2, and so on.
struct Point {
    int copy = 1;          // which copy of Z, in [1..m]
    long long index = 0;   // position inside that copy

    // Total order: copies first, then index. This is exactly the linear
    // order the circle induces once the first boundary point is pinned at 0.
    friend auto operator<=>(const Point&, const Point&) = default;
};

inline Point succ(Point z) { ++z.index; return z; }
inline Point pred(Point z) { --z.index; return z; }

/// Global configuration: the number of accumulation points / integer copies.
struct GonConfig {
    int m = 1;

    void require_valid() const {
        if (m < 1) throw std::invalid_argument("gon: m must be >= 1");
    }

    void require_point(const Point& z) const {
        require_valid();
        if (z.copy < 1 || z.copy > m)
            throw std::invalid_argument("gon: point copy out of range [1..m]");
    }
};

/// Three-way comparison that additionally validates both points against the
/// configuration. The bare operator<=> stays available for internal use.
inline std::strong_ordering compare(const GonConfig& g, const Point& a, const Point& b) {
    g.require_point(a);
    g.require_point(b);
    return a <=> b;
}

}  // namespace zgon

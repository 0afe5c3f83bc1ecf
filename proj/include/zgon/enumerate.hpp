#pragma once

#include "zgon/arc.hpp"
#include "zgon/gon.hpp"
#include "zgon/interval.hpp"

#include <vector>

namespace zgon {

/// All vertices with |index| <= window, in order.
std::vector<Point> enumerate_points(const GonConfig& g, long long window);

/// All admissible intervals with both endpoint indices bounded by window.
std::vector<Interval> enumerate_intervals(const GonConfig& g, long long window);

/// All admissible arcs with both endpoint indices bounded by window.
std::vector<Arc> enumerate_arcs(const GonConfig& g, long long window);

}  // namespace zgon

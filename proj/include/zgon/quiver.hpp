#pragma once

#include "zgon/arc.hpp"
#include "zgon/gon.hpp"

#include <string>
#include <utility>
#include <vector>

namespace zgon {

/// The Auslander-Reiten quiver restricted to an index window: vertices are
/// admissible arcs, edges the irreducible morphisms, components labelled by
/// (copy of hi, copy of lo, parity of hi's index).
struct ArQuiver {
    std::vector<Arc> vertices;
    std::vector<std::pair<int, int>> edges;     // indices into vertices
    std::vector<int> component;                 // component id per vertex
    int component_count = 0;
};

ArQuiver build_ar_quiver(const GonConfig& g, long long window);

/// DOT rendering: one digraph, weakly connected components as clusters,
/// translate orbits drawn as dashed back-edges.
std::string ar_quiver_to_dot(const ArQuiver& q);

}  // namespace zgon

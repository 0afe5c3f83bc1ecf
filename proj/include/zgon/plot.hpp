#pragma once

#include "zgon/arc.hpp"
#include "zgon/embedding.hpp"
#include "zgon/gon.hpp"

#include <optional>
#include <string>
#include <vector>

namespace zgon {

/// Figure of the circle model: boundary marks, embedded vertices up to the
/// window, chords for the requested arcs, shaded Hom regions for one arc
/// (solid for the forward region, hatched for the backward one) and, when
/// asked, the almost split triangle of an arc with dotted middle chords.
struct PlotRequest {
    GonConfig gon;
    long long window = 3;
    Embedding embedding{};
    std::vector<Arc> arcs;
    std::optional<Arc> hammocks_of;
    std::optional<Arc> triangle_of;
};

std::string render_svg(const PlotRequest& req);

}  // namespace zgon

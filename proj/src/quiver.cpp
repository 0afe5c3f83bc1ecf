#include "zgon/quiver.hpp"

#include "zgon/enumerate.hpp"
#include "zgon/io.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace zgon {

namespace {

int find_root(std::vector<int>& parent, int i) {
    while (parent[i] != i) {
        parent[i] = parent[parent[i]];
        i = parent[i];
    }
    return i;
}

}  // namespace

ArQuiver build_ar_quiver(const GonConfig& g, long long window) {
    ArQuiver q;
    q.vertices = enumerate_arcs(g, window);
    std::map<Arc, int> index;
    for (int i = 0; i < static_cast<int>(q.vertices.size()); ++i) index[q.vertices[i]] = i;

    std::vector<int> parent(q.vertices.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto unite = [&](int a, int b) { parent[find_root(parent, a)] = find_root(parent, b); };

    for (int i = 0; i < static_cast<int>(q.vertices.size()); ++i) {
        const Arc& a = q.vertices[i];
        const Arc targets[2] = {
            Arc{a.hi, Point{a.lo.copy, a.lo.index - 2}},
            Arc{Point{a.hi.copy, a.hi.index - 2}, a.lo},
        };
        for (const Arc& b : targets) {
            auto it = index.find(b);
            if (it != index.end()) {
                q.edges.emplace_back(i, it->second);
                unite(i, it->second);
            }
        }
    }

    q.component.assign(q.vertices.size(), -1);
    std::map<int, int> root_to_id;
    for (int i = 0; i < static_cast<int>(q.vertices.size()); ++i) {
        const int r = find_root(parent, i);
        auto [it, fresh] = root_to_id.try_emplace(r, q.component_count);
        if (fresh) ++q.component_count;
        q.component[i] = it->second;
    }
    return q;
}

std::string ar_quiver_to_dot(const ArQuiver& q) {
    std::ostringstream os;
    os << "digraph ar_quiver {\n  rankdir=LR;\n  node [shape=plaintext];\n";
    // Group vertices per component so the clusters match the coordinate
    // classes (copy of hi, copy of lo, parity).
    for (int c = 0; c < q.component_count; ++c) {
        os << "  subgraph cluster_" << c << " {\n";
        bool labelled = false;
        for (size_t i = 0; i < q.vertices.size(); ++i) {
            if (q.component[i] != c) continue;
            const Arc& a = q.vertices[i];
            if (!labelled) {
                os << "    label=\"component (" << a.hi.copy << "," << a.lo.copy << ","
                   << (((a.hi.index % 2) + 2) % 2) << ")\";\n";
                labelled = true;
            }
            os << "    \"" << format_arc(a) << "\";\n";
        }
        os << "  }\n";
    }
    for (const auto& [s, t] : q.edges)
        os << "  \"" << format_arc(q.vertices[s]) << "\" -> \"" << format_arc(q.vertices[t])
           << "\";\n";
    // Translate orbit annotations.
    std::map<Arc, bool> present;
    for (const Arc& a : q.vertices) present[a] = true;
    for (const Arc& a : q.vertices) {
        const Arc t = tau_arc(a);
        if (present.count(t))
            os << "  \"" << format_arc(a) << "\" -> \"" << format_arc(t)
               << "\" [style=dashed, constraint=false, color=gray];\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace zgon

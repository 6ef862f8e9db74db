#pragma once

#include <optional>

#include <mmp/diagram.hpp>
#include <mmp/girth.hpp>

namespace mmp {

struct DiagramStats {
    int a = 0;       // vertex count
    int b = 0;       // edge count
    int a_star = 0;  // vertices lying on >= 2 edges
    std::optional<int> girth;
    std::optional<int> n;  // edge size when regular

    // sum of edge sizes; equals n*b for regular diagrams
    int nb = 0;
};

inline DiagramStats stats(const Diagram& d) {
    DiagramStats s;
    s.a = d.vertex_count();
    s.b = d.edge_count();
    for (int deg : d.vertex_degrees())
        if (deg >= 2) ++s.a_star;
    s.girth = girth(d);
    s.n = d.uniform_edge_size();
    for (const Edge& e : d.edges()) s.nb += static_cast<int>(e.size());
    return s;
}

}  // namespace mmp

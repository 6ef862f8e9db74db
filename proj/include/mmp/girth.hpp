#pragma once

#include <optional>
#include <vector>

#include <mmp/diagram.hpp>

namespace mmp {

namespace detail {

struct EdgeGraph {
    // For each edge, (neighbour edge, shared vertex) pairs.  Only built when
    // no pair of edges shares >= 2 vertices (in that case the girth is 2).
    std::vector<std::vector<std::pair<int, Vertex>>> adj;
    bool has_2loop = false;

    explicit EdgeGraph(const Diagram& d) : adj(d.edge_count()) {
        int b = d.edge_count();
        for (int i = 0; i < b && !has_2loop; ++i)
            for (int j = i + 1; j < b; ++j) {
                Vertex shared = -1;
                int cnt = 0;
                for (Vertex v : d.edge(i))
                    for (Vertex w : d.edge(j))
                        if (v == w) {
                            ++cnt;
                            shared = v;
                        }
                if (cnt >= 2) {
                    has_2loop = true;
                    break;
                }
                if (cnt == 1) {
                    adj[i].push_back({j, shared});
                    adj[j].push_back({i, shared});
                }
            }
    }
};

// DFS for the shortest edge cycle through `anchor` using pairwise-distinct
// edges and pairwise-distinct connecting vertices.  `min_index` restricts the
// cycle to edges >= anchor (pass false when the anchor must merely lie on the
// cycle).  `depth` counts edges on the current path.  Updates `best` in place.
inline void shortest_loop_dfs(const EdgeGraph& g, int anchor, bool min_index,
                              int cur, int depth,
                              std::vector<bool>& edge_used,
                              std::vector<bool>& vert_used, int& best) {
    if (depth >= best) return;
    for (auto [next, via] : g.adj[cur]) {
        if (vert_used[via]) continue;
        if (next == anchor) {
            if (depth >= 3 && depth < best) best = depth;
            continue;
        }
        if (edge_used[next] || (min_index && next < anchor)) continue;
        edge_used[next] = true;
        vert_used[via] = true;
        shortest_loop_dfs(g, anchor, min_index, next, depth + 1, edge_used,
                          vert_used, best);
        edge_used[next] = false;
        vert_used[via] = false;
    }
}

}  // namespace detail

// Minimum loop size: 2 when two edges share >= 2 vertices, otherwise the
// shortest cyclic sequence of k >= 3 distinct edges joined by k distinct
// vertices.  nullopt for tree-like diagrams.
inline std::optional<int> girth(const Diagram& d) {
    detail::EdgeGraph g(d);
    if (g.has_2loop) return 2;
    int best = d.edge_count() + 1;
    std::vector<bool> edge_used(d.edge_count(), false);
    std::vector<bool> vert_used(d.vertex_count(), false);
    for (int s = 0; s + 2 < d.edge_count(); ++s) {
        edge_used[s] = true;
        detail::shortest_loop_dfs(g, s, true, s, 1, edge_used, vert_used,
                                  best);
        edge_used[s] = false;
    }
    if (best > d.edge_count()) return std::nullopt;
    return best;
}

// True when some loop of size < bound passes through the given edge.
// Used as the incremental girth check during generation: adding an edge can
// only create loops through it.
inline bool has_loop_shorter_than_through(const Diagram& d, int bound,
                                          int edge_index) {
    if (bound <= 2) return false;
    for (int j = 0; j < d.edge_count(); ++j)
        if (j != edge_index &&
            Diagram::intersection_size(d.edge(edge_index), d.edge(j)) >= 2)
            return true;
    detail::EdgeGraph g(d);
    if (g.has_2loop) return true;  // only via edge_index, per the check above
    int best = bound;
    std::vector<bool> edge_used(d.edge_count(), false);
    std::vector<bool> vert_used(d.vertex_count(), false);
    edge_used[edge_index] = true;
    detail::shortest_loop_dfs(g, edge_index, false, edge_index, 1,
                              edge_used, vert_used, best);
    return best < bound;
}

}  // namespace mmp

#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

#include <mmp/diagram.hpp>

namespace mmp {

namespace detail {

class SubdiagramSearch {
public:
    SubdiagramSearch(const Diagram& host, const Diagram& sub)
        : host_(host), sub_(sub) {
        host_sets_ = host.sorted_edge_sets();
        // order sub edges by connectivity: each next edge shares as many
        // vertices as possible with the ones already placed
        int b = sub.edge_count();
        std::vector<bool> used(b, false);
        std::set<Vertex> covered;
        for (int step = 0; step < b; ++step) {
            int pick = -1, best_overlap = -1;
            for (int e = 0; e < b; ++e) {
                if (used[e]) continue;
                int ov = 0;
                for (Vertex v : sub.edge(e))
                    if (covered.count(v)) ++ov;
                if (ov > best_overlap) {
                    best_overlap = ov;
                    pick = e;
                }
            }
            used[pick] = true;
            order_.push_back(pick);
            for (Vertex v : sub.edge(pick)) covered.insert(v);
        }
    }

    std::optional<std::vector<Vertex>> find() {
        map_.assign(sub_.vertex_count(), -1);
        used_host_.assign(host_.vertex_count(), false);
        if (place(0)) return map_;
        return std::nullopt;
    }

private:
    bool place(size_t step) {
        if (step == order_.size()) return true;
        const Edge& se = sub_.edge(order_[step]);
        for (const Edge& he : host_sets_) {
            if (he.size() != se.size()) continue;
            if (try_edge(se, he, 0, step)) return true;
        }
        return false;
    }

    // assign sub edge vertices to host edge vertices, extending map_
    bool try_edge(const Edge& se, const Edge& he, size_t i, size_t step) {
        if (i == se.size()) return place(step + 1);
        Vertex sv = se[i];
        if (map_[sv] != -1) {
            if (std::find(he.begin(), he.end(), map_[sv]) == he.end())
                return false;
            return try_edge(se, he, i + 1, step);
        }
        for (Vertex hv : he) {
            if (used_host_[hv]) continue;
            map_[sv] = hv;
            used_host_[hv] = true;
            if (try_edge(se, he, i + 1, step)) return true;
            map_[sv] = -1;
            used_host_[hv] = false;
        }
        return false;
    }

    const Diagram& host_;
    const Diagram& sub_;
    std::vector<Edge> host_sets_;
    std::vector<int> order_;
    std::vector<Vertex> map_;
    std::vector<bool> used_host_;
};

}  // namespace detail

// Injective vertex mapping taking every edge of sub onto an edge of host
// (as a set), or nullopt.
inline std::optional<std::vector<Vertex>> find_subdiagram(const Diagram& host,
                                                          const Diagram& sub) {
    detail::SubdiagramSearch s(host, sub);
    return s.find();
}

inline bool contains_subdiagram(const Diagram& host, const Diagram& sub) {
    return find_subdiagram(host, sub).has_value();
}

}  // namespace mmp

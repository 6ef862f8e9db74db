#pragma once

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <mmp/canonical.hpp>
#include <mmp/diagram.hpp>
#include <mmp/girth.hpp>

namespace mmp {

struct GenSpec {
    int n_per_edge = 3;
    int max_vertices = 0;
    int max_edges = std::numeric_limits<int>::max();
    // Loops smaller than this are forbidden; 2 (or nullopt) imposes nothing.
    std::optional<int> min_girth;
    bool connected_only = true;
    std::vector<std::string> filters;
    // When nonzero, a random member of each extension orbit is used instead
    // of the first-enumerated one.  The emitted census must not change.
    unsigned orbit_shuffle_seed = 0;

    void check() const {
        if (n_per_edge < 3)
            throw DiagramError("GenSpec: n_per_edge must be at least 3");
        if (min_girth && *min_girth < 2)
            throw DiagramError("GenSpec: min_girth must be at least 2");
        if (max_vertices < n_per_edge)
            throw DiagramError("GenSpec: max_vertices below edge size");
        if (max_edges < 1) throw DiagramError("GenSpec: max_edges below 1");
    }
};

// One way to attach a new edge: which existing vertices it reuses; the
// remaining n_per_edge - |reused| slots get fresh vertices.
struct ExtensionSite {
    std::vector<Vertex> reused_vertices;  // sorted
    int new_vertex_count = 0;
};

enum class FilterAction { Pass, PruneSubtree };

struct FilterVerdict {
    FilterAction action = FilterAction::Pass;
    std::string reason;

    static FilterVerdict pass() { return {}; }
    static FilterVerdict prune(std::string why) {
        return {FilterAction::PruneSubtree, std::move(why)};
    }
    bool passed() const { return action == FilterAction::Pass; }
};

// Hooks must be monotone: prune only when no descendant can recover.
using FilterHook = std::function<FilterVerdict(const Diagram&)>;
using FilterFactory = std::function<FilterHook(const std::string& params)>;

// Name -> factory.  A filter spec string "name" or "name:params" resolves
// through the factory registered under "name".
class FilterRegistry {
public:
    void register_filter(const std::string& name, FilterFactory factory) {
        factories_[name] = std::move(factory);
    }

    void register_filter(const std::string& name, FilterHook hook) {
        factories_[name] = [hook = std::move(hook)](const std::string&) {
            return hook;
        };
    }

    FilterHook make(const std::string& spec) const {
        auto colon = spec.find(':');
        std::string name = spec.substr(0, colon);
        std::string params =
            colon == std::string::npos ? "" : spec.substr(colon + 1);
        auto it = factories_.find(name);
        if (it == factories_.end())
            throw DiagramError("unknown filter: " + name);
        return it->second(params);
    }

private:
    std::map<std::string, FilterFactory> factories_;
};

namespace detail {

// Closure of a sorted vertex set under the given automorphism generators.
inline std::set<std::vector<Vertex>> set_orbit(
    const std::vector<Vertex>& s,
    const std::vector<std::vector<Vertex>>& gens) {
    std::set<std::vector<Vertex>> orbit{s};
    std::vector<std::vector<Vertex>> frontier{s};
    while (!frontier.empty()) {
        std::vector<std::vector<Vertex>> next;
        for (const auto& cur : frontier)
            for (const auto& g : gens) {
                std::vector<Vertex> img(cur.size());
                for (size_t i = 0; i < cur.size(); ++i) img[i] = g[cur[i]];
                std::sort(img.begin(), img.end());
                if (orbit.insert(img).second) next.push_back(img);
            }
        frontier = std::move(next);
    }
    return orbit;
}

// The diagram obtained by deleting one edge together with the vertices
// private to it, densely relabeled.
inline Diagram delete_edge(const Diagram& d, int ei) {
    std::vector<Edge> edges;
    for (int e = 0; e < d.edge_count(); ++e)
        if (e != ei) edges.push_back(d.edge(e));
    std::map<Vertex, Vertex> remap;
    for (auto& e : edges)
        for (auto& v : e) {
            auto [it, fresh] = remap.emplace(v, static_cast<Vertex>(remap.size()));
            v = it->second;
        }
    return Diagram(std::move(edges));
}

inline bool removal_keeps_connected(const Diagram& d, int ei) {
    if (d.edge_count() <= 1) return true;  // vacuous remainder is connected
    return delete_edge(d, ei).is_connected();
}

// Edge orbits of d under its automorphism group, as a partition id per edge.
inline std::vector<int> edge_orbit_ids(
    const Diagram& d, const std::vector<std::vector<Vertex>>& gens) {
    int b = d.edge_count();
    std::map<Edge, int> index;
    auto sets = d.sorted_edge_sets();
    for (int e = 0; e < b; ++e) index[sets[e]] = e;
    std::vector<int> parent(b);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& g : gens)
        for (int e = 0; e < b; ++e) {
            Edge img = sets[e];
            for (Vertex& v : img) v = g[v];
            std::sort(img.begin(), img.end());
            parent[find(e)] = find(index.at(img));
        }
    std::vector<int> ids(b);
    for (int e = 0; e < b; ++e) ids[e] = find(e);
    return ids;
}

}  // namespace detail

// One representative per Aut(d)-orbit of valid ways to attach a new edge.
inline std::vector<ExtensionSite> extension_orbits(const Diagram& d,
                                                   const GenSpec& spec) {
    spec.check();
    int n = spec.n_per_edge;
    int a = d.vertex_count();
    std::vector<ExtensionSite> out;
    if (d.edge_count() >= spec.max_edges) return out;
    if (d.empty()) {
        if (n <= spec.max_vertices) out.push_back({{}, n});
        return out;
    }

    std::vector<std::vector<Vertex>> gens =
        canonical_form(d).automorphism_generators;
    std::optional<std::mt19937> rng;
    if (spec.orbit_shuffle_seed) rng.emplace(spec.orbit_shuffle_seed);

    int min_reuse = spec.connected_only ? 1 : 0;
    min_reuse = std::max(min_reuse, n - (spec.max_vertices - a));
    int girth_bound = spec.min_girth.value_or(2);

    std::set<std::vector<Vertex>> seen;
    std::vector<Vertex> subset;
    auto consider = [&](const std::vector<Vertex>& s) {
        if (seen.count(s)) return;
        // condition 3 against every existing edge; duplicates fall out too
        for (const Edge& e : d.edges()) {
            int inter = 0;
            for (Vertex v : s)
                if (std::find(e.begin(), e.end(), v) != e.end()) ++inter;
            if (inter > static_cast<int>(std::min<size_t>(e.size(), n)) - 2)
                return;
            if (girth_bound >= 3 && inter >= 2) return;  // would close a 2-loop
        }
        auto orbit = detail::set_orbit(s, gens);
        bool ok = true;
        if (girth_bound >= 3) {
            std::vector<Edge> edges = d.edges();
            Edge added(s.begin(), s.end());
            for (int i = 0; i < n - static_cast<int>(s.size()); ++i)
                added.push_back(a + i);
            edges.push_back(std::move(added));
            Diagram child(std::move(edges));
            ok = !has_loop_shorter_than_through(child, girth_bound,
                                                child.edge_count() - 1);
        }
        if (ok) {
            const std::vector<Vertex>* rep = &s;
            if (rng) {
                auto it = orbit.begin();
                std::advance(it, std::uniform_int_distribution<size_t>(
                                     0, orbit.size() - 1)(*rng));
                rep = &*it;
            }
            out.push_back({*rep, n - static_cast<int>(s.size())});
        }
        for (const auto& member : orbit) seen.insert(member);
    };
    std::function<void(Vertex, int)> pick = [&](Vertex from, int want) {
        if (want == 0) {
            consider(subset);
            return;
        }
        for (Vertex v = from; v <= a - want; ++v) {
            subset.push_back(v);
            pick(v + 1, want - 1);
            subset.pop_back();
        }
    };
    for (int k = std::max(min_reuse, 0); k <= std::min(n, a); ++k)
        pick(0, k);
    return out;
}

// Build the child diagram for a site: reused vertices first, then fresh ones
// labeled after all existing vertices.
inline Diagram apply_extension(const Diagram& d, const ExtensionSite& site) {
    std::vector<Edge> edges = d.edges();
    Edge added = site.reused_vertices;
    for (int i = 0; i < site.new_vertex_count; ++i)
        added.push_back(d.vertex_count() + i);
    edges.push_back(std::move(added));
    return Diagram(std::move(edges));
}

// Canonical augmentation: accept the child only when the added edge lies in the
// major class — the Aut(d_new)-orbit of the designated edge.  The designated
// edge is the one last in canonical order; in connected mode, the last one
// whose removal keeps the diagram connected (so the canonical parent stays
// inside the connected search tree).
inline bool is_canonical_child(const Diagram& d_new, int added_edge_index,
                               bool connected_only = false) {
    int b = d_new.edge_count();
    if (b == 1) return true;
    CanonicalForm cf = canonical_form(d_new);
    auto orbit = detail::edge_orbit_ids(d_new, cf.automorphism_generators);
    int designated = -1;
    for (int pos = b - 1; pos >= 0; --pos) {
        int e = cf.canonical_edge_order[pos];
        if (!connected_only || detail::removal_keeps_connected(d_new, e)) {
            designated = e;
            break;
        }
    }
    return orbit[added_edge_index] == orbit[designated];
}

// Isomorph-free exhaustive generation, depth-first: all descendants of a
// child are produced before its next sibling.  Every accepted diagram
// (including intermediate ones) is emitted; emit returns false to stop.
inline void generate(const GenSpec& spec,
                     const std::function<bool(const Diagram&)>& emit,
                     const FilterRegistry& registry = {}) {
    spec.check();
    std::vector<FilterHook> hooks;
    for (const std::string& f : spec.filters) hooks.push_back(registry.make(f));

    bool stopped = false;
    std::function<void(const Diagram&)> descend = [&](const Diagram& d) {
        if (stopped) return;
        for (const ExtensionSite& site : extension_orbits(d, spec)) {
            Diagram child = apply_extension(d, site);
            if (!is_canonical_child(child, child.edge_count() - 1,
                                    spec.connected_only))
                continue;
            bool pruned = false;
            for (const FilterHook& h : hooks)
                if (!h(child).passed()) {
                    pruned = true;
                    break;
                }
            if (pruned) continue;
            if (!emit(child)) {
                stopped = true;
                return;
            }
            descend(child);
            if (stopped) return;
        }
    };
    descend(Diagram{});
}

}  // namespace mmp

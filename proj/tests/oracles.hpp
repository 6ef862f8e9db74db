#pragma once

// Independent brute-force oracles used to pin expected values.  These stay
// deliberately naive and share no code with the implementation paths they
// check.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <mmp/canonical.hpp>
#include <mmp/diagram.hpp>

namespace oracle {

inline std::set<std::vector<mmp::Vertex>> edge_set_of(const mmp::Diagram& d) {
    std::set<std::vector<mmp::Vertex>> s;
    for (auto e : d.edges()) {
        std::sort(e.begin(), e.end());
        s.insert(e);
    }
    return s;
}

// All vertex bijections, no pruning beyond vertex count.
inline bool is_isomorphic(const mmp::Diagram& d1, const mmp::Diagram& d2) {
    if (d1.vertex_count() != d2.vertex_count() ||
        d1.edge_count() != d2.edge_count())
        return false;
    auto target = edge_set_of(d2);
    std::vector<int> perm(d1.vertex_count());
    std::iota(perm.begin(), perm.end(), 0);
    do {
        if (edge_set_of(d1.relabeled(perm)) == target) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

inline long automorphism_count(const mmp::Diagram& d) {
    auto target = edge_set_of(d);
    std::vector<int> perm(d.vertex_count());
    std::iota(perm.begin(), perm.end(), 0);
    long count = 0;
    do {
        if (edge_set_of(d.relabeled(perm)) == target) ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

// Enumerate every cyclic edge sequence with distinct connecting vertices.
inline std::optional<int> girth(const mmp::Diagram& d) {
    int b = d.edge_count();
    for (int i = 0; i < b; ++i)
        for (int j = i + 1; j < b; ++j)
            if (mmp::Diagram::intersection_size(d.edge(i), d.edge(j)) >= 2)
                return 2;
    int best = b + 1;
    std::vector<int> path;
    std::vector<mmp::Vertex> verts;
    auto shared = [&](int e1, int e2) {
        std::vector<mmp::Vertex> out;
        for (mmp::Vertex v : d.edge(e1))
            for (mmp::Vertex w : d.edge(e2))
                if (v == w) out.push_back(v);
        return out;
    };
    // DFS over edge sequences e_0 < min of rest
    std::function<void()> extend = [&] {
        int cur = path.back();
        if (static_cast<int>(path.size()) >= 3) {
            for (mmp::Vertex v : shared(cur, path.front()))
                if (std::find(verts.begin(), verts.end(), v) == verts.end())
                    best = std::min(best, static_cast<int>(path.size()));
        }
        if (static_cast<int>(path.size()) + 1 >= best) return;
        for (int e = path.front() + 1; e < b; ++e) {
            if (std::find(path.begin(), path.end(), e) != path.end()) continue;
            for (mmp::Vertex v : shared(cur, e)) {
                if (std::find(verts.begin(), verts.end(), v) != verts.end())
                    continue;
                path.push_back(e);
                verts.push_back(v);
                extend();
                path.pop_back();
                verts.pop_back();
            }
        }
    };
    for (int s = 0; s < b; ++s) {
        path = {s};
        verts.clear();
        extend();
    }
    if (best > b) return std::nullopt;
    return best;
}

// All 2^a assignments.
inline bool has_01_state(const mmp::Diagram& d) {
    int a = d.vertex_count();
    for (long mask = 0; mask < (1L << a); ++mask) {
        bool ok = true;
        for (const auto& e : d.edges()) {
            int ones = 0;
            for (mmp::Vertex v : e)
                if (mask >> v & 1) ++ones;
            if (ones != 1) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
    }
    return false;
}

// Every vertex permutation preserving the edge set.
inline std::vector<std::vector<int>> automorphisms(const mmp::Diagram& d) {
    auto target = edge_set_of(d);
    std::vector<int> perm(d.vertex_count());
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<int>> out;
    do {
        if (edge_set_of(d.relabeled(perm)) == target) out.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

inline long count_01_states(const mmp::Diagram& d) {
    int a = d.vertex_count();
    long count = 0;
    for (long mask = 0; mask < (1L << a); ++mask) {
        bool ok = true;
        for (const auto& e : d.edges()) {
            int ones = 0;
            for (mmp::Vertex v : e)
                if (mask >> v & 1) ++ones;
            if (ones != 1) {
                ok = false;
                break;
            }
        }
        if (ok) ++count;
    }
    return count;
}

// Census by breadth-first edge addition with certificate deduplication.
// Tries every vertex subset as the reused part of a new edge — no orbit or
// canonical-parent reasoning involved.  Returns per-(a,b) class counts.
inline std::map<std::pair<int, int>, long> census(int n, int max_vertices,
                                                  int max_edges, int min_girth,
                                                  bool connected) {
    std::map<std::pair<int, int>, long> counts;
    std::set<std::string> seen;
    std::vector<mmp::Diagram> level;
    {
        std::vector<mmp::Vertex> first(n);
        std::iota(first.begin(), first.end(), 0);
        if (n <= max_vertices) level.push_back(mmp::Diagram{{first}});
    }
    while (!level.empty()) {
        std::vector<mmp::Diagram> next;
        for (const mmp::Diagram& d : level) {
            if (!seen.insert(mmp::certificate(d)).second) continue;
            counts[{d.vertex_count(), d.edge_count()}]++;
            if (d.edge_count() >= max_edges) continue;
            int a = d.vertex_count();
            for (long mask = 0; mask < (1L << a); ++mask) {
                std::vector<mmp::Vertex> s;
                for (int v = 0; v < a; ++v)
                    if (mask >> v & 1) s.push_back(v);
                int fresh = n - static_cast<int>(s.size());
                if (fresh < 0 || a + fresh > max_vertices) continue;
                if (connected && s.empty()) continue;
                bool ok = true;
                for (const auto& e : d.edges()) {
                    int inter = 0;
                    for (mmp::Vertex v : s)
                        if (std::find(e.begin(), e.end(), v) != e.end())
                            ++inter;
                    if (inter > n - 2) ok = false;
                }
                if (!ok) continue;
                auto edges = d.edges();
                auto added = s;
                for (int i = 0; i < fresh; ++i) added.push_back(a + i);
                edges.push_back(added);
                mmp::Diagram child(std::move(edges));
                if (min_girth > 2) {
                    auto g = oracle::girth(child);
                    if (g && *g < min_girth) continue;
                }
                next.push_back(std::move(child));
            }
        }
        level = std::move(next);
    }
    return counts;
}

// Plain backtracking in vertex-id order over all rays whose components come
// from `values`: rays are kept verbatim (no gcd reduction); two rays count
// as the same direction when they are proportional.
inline bool discrete_solvable(const mmp::Diagram& d, int n,
                              const std::vector<long long>& values) {
    std::vector<std::vector<long long>> rays;
    std::vector<long long> cur(n, 0);
    std::function<void(int)> gen = [&](int k) {
        if (k == n) {
            for (long long x : cur)
                if (x != 0) {
                    rays.push_back(cur);
                    return;
                }
            return;
        }
        for (long long v : values) {
            cur[k] = v;
            gen(k + 1);
        }
    };
    gen(0);
    auto proportional = [&](const std::vector<long long>& a,
                            const std::vector<long long>& b) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (a[i] * b[j] != a[j] * b[i]) return false;
        return true;
    };
    std::vector<int> pick(d.vertex_count(), -1);
    std::function<bool(int)> go = [&](int v) -> bool {
        if (v == d.vertex_count()) return true;
        for (int c = 0; c < static_cast<int>(rays.size()); ++c) {
            bool ok = true;
            for (int u = 0; u < v && ok; ++u)
                if (proportional(rays[c], rays[pick[u]])) ok = false;
            for (const auto& e : d.edges())
                for (size_t i = 0; i < e.size() && ok; ++i)
                    for (size_t j = i + 1; j < e.size() && ok; ++j) {
                        mmp::Vertex a = e[i], b = e[j];
                        if (a != v && b != v) continue;
                        mmp::Vertex o = a == v ? b : a;
                        if (o > v || pick[o] == -1) continue;
                        long long dot = 0;
                        for (int k = 0; k < n; ++k)
                            dot += rays[c][k] * rays[pick[o]][k];
                        if (dot != 0) ok = false;
                    }
            if (!ok) continue;
            pick[v] = c;
            if (go(v + 1)) return true;
            pick[v] = -1;
        }
        return false;
    };
    return go(0);
}

}  // namespace oracle

#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include <mmp/diagram.hpp>

namespace mmp {

struct CanonicalForm {
    std::vector<Vertex> relabeling;        // old vertex -> canonical vertex
    std::vector<int> canonical_edge_order; // i-th canonical edge = edges()[order[i]]
    std::vector<std::vector<Vertex>> automorphism_generators;
    std::string certificate;
};

namespace detail {

// Individualization-refinement canonical labeling of the vertex-edge
// incidence graph.  Diagram vertices and edge nodes are separate colour
// classes; edge nodes are further split by edge size up front.
class CanonicalSearch {
public:
    explicit CanonicalSearch(const Diagram& d) : d_(d) {
        a_ = d.vertex_count();
        b_ = d.edge_count();
        n_nodes_ = a_ + b_;
        adj_.resize(n_nodes_);
        for (int e = 0; e < b_; ++e)
            for (Vertex v : d.edge(e)) {
                adj_[v].push_back(a_ + e);
                adj_[a_ + e].push_back(v);
            }
        for (auto& l : adj_) std::sort(l.begin(), l.end());
    }

    CanonicalForm run() {
        std::vector<std::vector<int>> partition;
        if (a_ > 0) {
            std::vector<int> verts(a_);
            std::iota(verts.begin(), verts.end(), 0);
            partition.push_back(std::move(verts));
        }
        std::map<int, std::vector<int>> by_size;
        for (int e = 0; e < b_; ++e)
            by_size[static_cast<int>(d_.edge(e).size())].push_back(a_ + e);
        for (auto& [sz, cell] : by_size) partition.push_back(std::move(cell));

        refine(partition);
        search(partition, {});

        CanonicalForm cf;
        cf.relabeling.assign(best_label_.begin(), best_label_.begin() + a_);
        cf.certificate = best_cert_;
        for (const auto& g : automorphisms_)
            cf.automorphism_generators.emplace_back(g.begin(), g.begin() + a_);
        cf.canonical_edge_order = edge_order_for(cf.relabeling);
        return cf;
    }

    // Vertex permutations generating the full automorphism group.
    const std::vector<std::vector<int>>& raw_automorphisms() const {
        return automorphisms_;
    }

private:
    using Partition = std::vector<std::vector<int>>;

    // Equitable refinement: split cells by neighbour counts into splitter
    // cells until stable.  Deterministic: subcells ordered by count.
    void refine(Partition& p) const {
        std::vector<int> degree(n_nodes_);
        bool changed = true;
        while (changed) {
            changed = false;
            for (size_t si = 0; si < p.size(); ++si) {
                std::fill(degree.begin(), degree.end(), 0);
                for (int x : p[si])
                    for (int y : adj_[x]) degree[y]++;
                Partition next;
                next.reserve(p.size());
                for (auto& cell : p) {
                    if (cell.size() == 1) {
                        next.push_back(std::move(cell));
                        continue;
                    }
                    std::map<int, std::vector<int>> split;
                    for (int x : cell) split[degree[x]].push_back(x);
                    if (split.size() > 1) changed = true;
                    for (auto& [k, sub] : split) next.push_back(std::move(sub));
                }
                p = std::move(next);
                if (changed) break;  // restart with fresh splitter order
            }
        }
    }

    bool discrete(const Partition& p) const {
        for (const auto& c : p)
            if (c.size() > 1) return false;
        return true;
    }

    // Certificate of a discrete partition: canonical edge sets, sorted.
    std::string leaf_certificate(const std::vector<int>& label) const {
        std::vector<std::vector<int>> edges;
        edges.reserve(b_);
        for (int e = 0; e < b_; ++e) {
            std::vector<int> ce;
            ce.reserve(d_.edge(e).size());
            for (Vertex v : d_.edge(e)) ce.push_back(label[v]);
            std::sort(ce.begin(), ce.end());
            edges.push_back(std::move(ce));
        }
        std::sort(edges.begin(), edges.end());
        std::string cert;
        // two low bytes per id; '\xff' separates edges and cannot collide
        auto put = [&cert](int x) {
            cert.push_back(static_cast<char>(x >> 7));
            cert.push_back(static_cast<char>((x & 127) + 1));
        };
        put(a_);
        put(b_);
        for (const auto& e : edges) {
            cert.push_back(static_cast<char>(-1));
            for (int v : e) put(v);
        }
        return cert;
    }

    std::vector<int> edge_order_for(const std::vector<Vertex>& relab) const {
        std::vector<std::pair<std::vector<int>, int>> keyed;
        keyed.reserve(b_);
        for (int e = 0; e < b_; ++e) {
            std::vector<int> ce;
            for (Vertex v : d_.edge(e)) ce.push_back(relab[v]);
            std::sort(ce.begin(), ce.end());
            keyed.push_back({std::move(ce), e});
        }
        std::sort(keyed.begin(), keyed.end());
        std::vector<int> order;
        order.reserve(b_);
        for (auto& [k, e] : keyed) order.push_back(e);
        return order;
    }

    void handle_leaf(const Partition& p) {
        std::vector<int> label(n_nodes_);
        for (size_t i = 0; i < p.size(); ++i) label[p[i][0]] = static_cast<int>(i);
        std::string cert = leaf_certificate(label);
        if (best_cert_.empty() || cert < best_cert_) {
            best_cert_ = cert;
            best_label_ = label;
        } else if (cert == best_cert_) {
            // label and best_label_ agree on the canonical image: their
            // difference is an automorphism.
            std::vector<int> inv(n_nodes_);
            for (int x = 0; x < n_nodes_; ++x) inv[label[x]] = x;
            std::vector<int> aut(n_nodes_);
            for (int x = 0; x < n_nodes_; ++x) aut[x] = inv[best_label_[x]];
            bool identity = true;
            for (int x = 0; x < n_nodes_; ++x)
                if (aut[x] != x) identity = false;
            if (!identity) automorphisms_.push_back(aut);
        }
    }

    // Orbit representative check: nodes already merged by discovered
    // automorphisms that fix the current individualized prefix.
    std::vector<int> cell_orbits(const std::vector<int>& cell,
                                 const std::vector<int>& fixed) const {
        std::vector<const std::vector<int>*> gens;
        for (const auto& g : automorphisms_) {
            bool fixes = true;
            for (int f : fixed)
                if (g[f] != f) {
                    fixes = false;
                    break;
                }
            if (fixes) gens.push_back(&g);
        }
        std::vector<int> rep(n_nodes_);
        std::iota(rep.begin(), rep.end(), 0);
        auto find = [&](int x) {
            while (rep[x] != x) x = rep[x] = rep[rep[x]];
            return x;
        };
        for (const auto* g : gens)
            for (int x = 0; x < n_nodes_; ++x) {
                int rx = find(x), ry = find((*g)[x]);
                if (rx != ry) rep[std::max(rx, ry)] = std::min(rx, ry);
            }
        std::vector<int> out;
        for (int x : cell) out.push_back(find(x));
        return out;
    }

    void search(Partition p, std::vector<int> fixed) {
        refine(p);
        if (discrete(p)) {
            handle_leaf(p);
            return;
        }
        size_t ti = 0;
        while (p[ti].size() == 1) ++ti;
        std::vector<int> cell = p[ti];
        std::vector<size_t> tried;
        for (size_t xi = 0; xi < cell.size(); ++xi) {
            int x = cell[xi];
            // skip nodes equivalent to an earlier-tried branch; orbits are
            // recomputed because automorphisms accumulate during recursion
            std::vector<int> orb = cell_orbits(cell, fixed);
            bool dup = false;
            for (size_t pi : tried)
                if (orb[pi] == orb[xi]) {
                    dup = true;
                    break;
                }
            tried.push_back(xi);
            if (dup) continue;
            Partition q;
            q.reserve(p.size() + 1);
            for (size_t i = 0; i < p.size(); ++i) {
                if (i == ti) {
                    q.push_back({x});
                    std::vector<int> rest;
                    for (int y : p[i])
                        if (y != x) rest.push_back(y);
                    q.push_back(std::move(rest));
                } else {
                    q.push_back(p[i]);
                }
            }
            std::vector<int> f2 = fixed;
            f2.push_back(x);
            search(std::move(q), std::move(f2));
        }
    }

    const Diagram& d_;
    int a_ = 0, b_ = 0, n_nodes_ = 0;
    std::vector<std::vector<int>> adj_;
    std::string best_cert_;
    std::vector<int> best_label_;
    std::vector<std::vector<int>> automorphisms_;  // full node permutations
};

}  // namespace detail

inline CanonicalForm canonical_form(const Diagram& d) {
    detail::CanonicalSearch s(d);
    return s.run();
}

inline std::string certificate(const Diagram& d) {
    return canonical_form(d).certificate;
}

inline bool is_isomorphic(const Diagram& d1, const Diagram& d2) {
    return certificate(d1) == certificate(d2);
}

// Orbit partition of the vertices under the automorphism group.
inline std::vector<int> vertex_orbits(const Diagram& d, const CanonicalForm& cf) {
    int a = d.vertex_count();
    std::vector<int> rep(a);
    std::iota(rep.begin(), rep.end(), 0);
    auto find = [&](int x) {
        while (rep[x] != x) x = rep[x] = rep[rep[x]];
        return x;
    };
    for (const auto& g : cf.automorphism_generators)
        for (int x = 0; x < a; ++x) {
            int rx = find(x), ry = find(g[x]);
            if (rx != ry) rep[std::max(rx, ry)] = std::min(rx, ry);
        }
    std::vector<int> out(a);
    for (int x = 0; x < a; ++x) out[x] = find(x);
    return out;
}

}  // namespace mmp

#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace mmp {

using Vertex = int;
using Edge = std::vector<Vertex>;  // ordered; no duplicate vertices

struct DiagramError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The 61-symbol native label alphabet, in collation order.
inline constexpr const char* kLabelAlphabet =
    "123456789"
    "ABCDEFGHIJKLMNOPQRSTUVWXYZ"
    "abcdefghijklmnopqrstuvwxyz";
inline constexpr int kMaxNativeLabels = 61;

inline char vertex_label(Vertex v) {
    if (v < 0 || v >= kMaxNativeLabels)
        throw DiagramError("vertex " + std::to_string(v) +
                           " has no native label: alphabet exhausted");
    return kLabelAlphabet[v];
}

inline std::optional<Vertex> label_to_vertex(char c) {
    if (c >= '1' && c <= '9') return c - '1';
    if (c >= 'A' && c <= 'Z') return 9 + (c - 'A');
    if (c >= 'a' && c <= 'z') return 35 + (c - 'a');
    return std::nullopt;
}

struct ValidationOptions {
    // Permit edges with fewer than 3 vertices (the "reduced" systems),
    // and skip intersection checks involving them.
    bool allow_short_edges = false;
    // Skip MMP conditions entirely (raw edge lists for solver tests).
    bool structural_only = false;
};

// A hypergraph of vertices (rays) and edges (mutually orthogonal n-tuples).
// Vertices are dense integers 0..a-1; labels come from kLabelAlphabet.
class Diagram {
public:
    Diagram() = default;
    explicit Diagram(std::vector<Edge> edges) : edges_(std::move(edges)) {
        recount();
    }

    int vertex_count() const { return vertex_count_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int i) const { return edges_[i]; }
    bool empty() const { return edges_.empty(); }

    // Edge size when all edges are the same size.
    std::optional<int> uniform_edge_size() const {
        if (edges_.empty()) return std::nullopt;
        int n = static_cast<int>(edges_[0].size());
        for (const Edge& e : edges_)
            if (static_cast<int>(e.size()) != n) return std::nullopt;
        return n;
    }

    std::vector<int> vertex_degrees() const {
        std::vector<int> deg(vertex_count_, 0);
        for (const Edge& e : edges_)
            for (Vertex v : e) deg[v]++;
        return deg;
    }

    // Edges incident to each vertex, in edge order.
    std::vector<std::vector<int>> incidence() const {
        std::vector<std::vector<int>> inc(vertex_count_);
        for (int i = 0; i < edge_count(); ++i)
            for (Vertex v : edges_[i]) inc[v].push_back(i);
        return inc;
    }

    bool is_connected() const {
        if (vertex_count_ == 0) return true;
        auto inc = incidence();
        std::vector<bool> seen(vertex_count_, false);
        std::vector<Vertex> stack{0};
        seen[0] = true;
        int reached = 1;
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            for (int ei : inc[v])
                for (Vertex w : edges_[ei])
                    if (!seen[w]) {
                        seen[w] = true;
                        ++reached;
                        stack.push_back(w);
                    }
        }
        return reached == vertex_count_;
    }

    static int intersection_size(const Edge& a, const Edge& b) {
        int k = 0;
        for (Vertex v : a)
            if (std::find(b.begin(), b.end(), v) != b.end()) ++k;
        return k;
    }

    // MMP conditions:
    //   1. every vertex belongs to at least one edge (holds by construction),
    //   2. every edge contains at least 3 vertices,
    //   3. two edges may share at most min(|e1|,|e2|)-2 vertices.
    // Throws DiagramError naming the edge index and condition on violation.
    void validate(const ValidationOptions& opt = {}) const {
        for (int i = 0; i < edge_count(); ++i) {
            const Edge& e = edges_[i];
            std::set<Vertex> s(e.begin(), e.end());
            if (s.size() != e.size())
                throw DiagramError("edge " + std::to_string(i) +
                                   ": duplicate vertex within edge");
        }
        for (int i = 0; i < edge_count(); ++i)
            for (int j = i + 1; j < edge_count(); ++j) {
                std::set<Vertex> a(edges_[i].begin(), edges_[i].end());
                std::set<Vertex> b(edges_[j].begin(), edges_[j].end());
                if (a == b)
                    throw DiagramError("edges " + std::to_string(i) + " and " +
                                       std::to_string(j) + " are equal as sets");
            }
        if (opt.structural_only) return;
        for (int i = 0; i < edge_count(); ++i) {
            if (static_cast<int>(edges_[i].size()) < 3 && !opt.allow_short_edges)
                throw DiagramError("edge " + std::to_string(i) +
                                   " violates MMP condition 2: fewer than 3 vertices");
        }
        for (int i = 0; i < edge_count(); ++i)
            for (int j = i + 1; j < edge_count(); ++j) {
                int mn = static_cast<int>(
                    std::min(edges_[i].size(), edges_[j].size()));
                if (opt.allow_short_edges) {
                    // with mixed edge sizes only containment is ruled out
                    if (intersection_size(edges_[i], edges_[j]) >= mn)
                        throw DiagramError(
                            "edges " + std::to_string(i) + " and " +
                            std::to_string(j) + ": one contains the other");
                    continue;
                }
                if (intersection_size(edges_[i], edges_[j]) > mn - 2)
                    throw DiagramError("edges " + std::to_string(i) + " and " +
                                       std::to_string(j) +
                                       " violate MMP condition 3: they share more than " +
                                       std::to_string(mn - 2) + " vertices");
            }
    }

    bool is_valid(const ValidationOptions& opt = {}) const {
        try {
            validate(opt);
            return true;
        } catch (const DiagramError&) {
            return false;
        }
    }

    // Apply a vertex permutation: vertex v becomes perm[v].  Edge order and
    // the positions of vertices within edges are preserved.
    Diagram relabeled(const std::vector<Vertex>& perm) const {
        std::vector<Edge> es = edges_;
        for (Edge& e : es)
            for (Vertex& v : e) v = perm[v];
        return Diagram(std::move(es));
    }

    // Edges as sorted vertex sets, for set-wise comparisons.
    std::vector<Edge> sorted_edge_sets() const {
        std::vector<Edge> es = edges_;
        for (Edge& e : es) std::sort(e.begin(), e.end());
        return es;
    }

private:
    void recount() {
        vertex_count_ = 0;
        for (const Edge& e : edges_)
            for (Vertex v : e) {
                if (v < 0) throw DiagramError("negative vertex id");
                vertex_count_ = std::max(vertex_count_, v + 1);
            }
        // condition 1: every vertex on some edge, i.e. ids are dense
        std::vector<bool> seen(vertex_count_, false);
        for (const Edge& e : edges_)
            for (Vertex v : e) seen[v] = true;
        for (int v = 0; v < vertex_count_; ++v)
            if (!seen[v])
                throw DiagramError("vertex ids not dense: " + std::to_string(v) +
                                   " unused (MMP condition 1)");
    }

    std::vector<Edge> edges_;
    int vertex_count_ = 0;
};

}  // namespace mmp

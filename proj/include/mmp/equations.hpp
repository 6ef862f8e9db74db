#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include <mmp/diagram.hpp>
#include <mmp/poly.hpp>

namespace mmp {

enum class ZeroState : uint8_t { Unknown, KnownZero, KnownNonzero };

// Per-(vertex, coordinate) knowledge about vanishing components.  Entries
// only ever strengthen; conflicting strengthening is a contradiction the
// caller must surface.
class ZeroTable {
public:
    ZeroTable() = default;
    ZeroTable(int vertices, int n) : n_(n), t_(vertices * n, ZeroState::Unknown) {}

    ZeroState get(Vertex v, int k) const { return t_[v * n_ + k]; }

    // Returns false on a zero/nonzero clash (the caller reports rule R4).
    bool set_zero(Vertex v, int k) {
        ZeroState& s = t_[v * n_ + k];
        if (s == ZeroState::KnownNonzero) return false;
        s = ZeroState::KnownZero;
        return true;
    }
    bool set_nonzero(Vertex v, int k) {
        ZeroState& s = t_[v * n_ + k];
        if (s == ZeroState::KnownZero) return false;
        s = ZeroState::KnownNonzero;
        return true;
    }

    int zero_count(Vertex v) const {
        int c = 0;
        for (int k = 0; k < n_; ++k)
            if (get(v, k) == ZeroState::KnownZero) ++c;
        return c;
    }

    // The single coordinate not known zero, when exactly n-1 are.
    int sole_free_coordinate(Vertex v) const {
        int free = -1;
        for (int k = 0; k < n_; ++k)
            if (get(v, k) != ZeroState::KnownZero) {
                if (free != -1) return -1;
                free = k;
            }
        return free;
    }

private:
    int n_ = 0;
    std::vector<ZeroState> t_;
};

struct Equation {
    Poly poly;        // constraint poly == 0
    std::string tag;  // diagnostic origin, e.g. "orth 0:2,3" or "unit 5"
};

// The algebraic model of a diagram in R^n: one symbol per coordinate of each
// non-basis vertex, orthogonality equations pairwise within edges, and unit
// equations per vertex.  Coordinates are kept as polynomials so propagation
// can substitute into them.
struct EquationSystem {
    int n = 0;
    Diagram diagram;
    int basis_edge = 0;
    std::vector<std::vector<Poly>> coord;  // [vertex][k]
    ZeroTable zero_table;
    std::vector<Equation> equations;
    // Symbols proven nonzero (monotone; used to justify divisions).
    std::set<int> nonzero_symbols;
    // Vertices pinned to a coordinate axis (value +1 there), axis index per
    // vertex or -1.  Two distinct vertices on the same axis are collinear.
    std::vector<int> axis;

    int sym(Vertex v, int k) const { return v * n + k; }
    Vertex sym_vertex(int s) const { return s / n; }
    int sym_coord(int s) const { return s % n; }

    std::string sym_name(int s) const {
        Vertex v = sym_vertex(s);
        std::string vn = v < kMaxNativeLabels
                             ? std::string(1, vertex_label(v))
                             : std::to_string(v + 1);
        return "a_" + vn + std::to_string(sym_coord(s) + 1);
    }

    // Rebuild every equation from the current coordinate polynomials.
    void rebuild_equations() {
        equations.clear();
        const Diagram& d = diagram;
        for (int e = 0; e < d.edge_count(); ++e) {
            const Edge& edge = d.edge(e);
            for (size_t i = 0; i < edge.size(); ++i)
                for (size_t j = i + 1; j < edge.size(); ++j) {
                    Poly dot;
                    for (int k = 0; k < n; ++k)
                        dot = dot + coord[edge[i]][k] * coord[edge[j]][k];
                    if (!dot.is_zero())
                        equations.push_back(
                            {std::move(dot),
                             "orth " + std::to_string(e) + ":" +
                                 std::to_string(edge[i]) + "," +
                                 std::to_string(edge[j])});
                }
        }
        for (Vertex v = 0; v < d.vertex_count(); ++v) {
            Poly norm = Poly::constant(Rational(-1));
            for (int k = 0; k < n; ++k)
                norm = norm + coord[v][k] * coord[v][k];
            if (!norm.is_zero())
                equations.push_back(
                    {std::move(norm), "unit " + std::to_string(v)});
        }
    }
};

// Remove every vertex lying on a single edge and compact the ids; edges
// left with fewer than two vertices disappear.  The surviving constraints
// are a subset of the original ones, so infeasibility of the result implies
// infeasibility of the input — while the search loses three unknowns per
// dropped vertex.
inline Diagram drop_single_edge_vertices(const Diagram& d) {
    auto deg = d.vertex_degrees();
    std::vector<Vertex> remap(d.vertex_count(), -1);
    Vertex next = 0;
    for (Vertex v = 0; v < d.vertex_count(); ++v)
        if (deg[v] >= 2) remap[v] = next++;
    std::vector<Edge> edges;
    for (const Edge& e : d.edges()) {
        Edge kept;
        for (Vertex v : e)
            if (remap[v] != -1) kept.push_back(remap[v]);
        if (kept.size() >= 2) edges.push_back(std::move(kept));
    }
    if (edges.empty())
        throw DiagramError("drop_single_edge_vertices: nothing left");
    return Diagram(std::move(edges));
}

// Fix basis_edge to the standard basis (its i-th vertex gets the unit vector
// with 1 in coordinate n+1-i, 1-based), give every other coordinate its own
// symbol, seed the 0-table from orthogonality with the basis vectors, and
// emit the full equation list.  With allow_short, edges may hold fewer than
// n vertices (partial orthogonality blocks); the basis edge must be full.
inline EquationSystem build_equations(const Diagram& d, int n,
                                      int basis_edge = 0,
                                      bool allow_short = false) {
    for (const Edge& e : d.edges()) {
        int sz = static_cast<int>(e.size());
        if (sz == n) continue;
        if (allow_short && sz >= 2 && sz < n) continue;
        throw DiagramError("build_equations: edge size differs from n");
    }
    if (basis_edge < 0 || basis_edge >= d.edge_count())
        throw DiagramError("build_equations: no such basis edge");
    if (static_cast<int>(d.edge(basis_edge).size()) != n)
        throw DiagramError("build_equations: basis edge must have n vertices");

    EquationSystem sys;
    sys.n = n;
    sys.diagram = d;
    sys.basis_edge = basis_edge;
    sys.zero_table = ZeroTable(d.vertex_count(), n);
    sys.axis.assign(d.vertex_count(), -1);
    sys.coord.assign(d.vertex_count(), std::vector<Poly>(n));

    for (Vertex v = 0; v < d.vertex_count(); ++v)
        for (int k = 0; k < n; ++k) sys.coord[v][k] = Poly::symbol(sys.sym(v, k));

    const Edge& basis = d.edge(basis_edge);
    for (int i = 0; i < n; ++i) {
        Vertex v = basis[i];
        int one_at = n - 1 - i;  // i-th vertex -> coordinate n+1-i, 1-based
        sys.axis[v] = one_at;
        for (int k = 0; k < n; ++k) {
            sys.coord[v][k] =
                Poly::constant(Rational(k == one_at ? 1 : 0));
            if (k == one_at) {
                sys.zero_table.set_nonzero(v, k);
                sys.nonzero_symbols.insert(sys.sym(v, k));
            } else {
                sys.zero_table.set_zero(v, k);
            }
        }
    }

    // a vertex sharing an edge with basis vertex j is orthogonal to that
    // axis: the corresponding coordinate is zero
    auto inc = d.incidence();
    for (int i = 0; i < n; ++i) {
        Vertex bv = basis[i];
        int one_at = n - 1 - i;
        for (int e : inc[bv])
            for (Vertex u : d.edge(e))
                if (u != bv && sys.axis[u] == -1) {
                    sys.zero_table.set_zero(u, one_at);
                    sys.coord[u][one_at] = Poly();
                }
    }

    sys.rebuild_equations();
    return sys;
}

}  // namespace mmp

#pragma once

#include <array>
#include <cmath>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <mmp/equations.hpp>
#include <mmp/interval.hpp>

namespace mmp {

struct InfeasibleReason {
    std::string rule;    // "collinearity", "zero_vector", "contradiction"
    std::string detail;
};

struct PassResult {
    bool feasible = true;
    InfeasibleReason reason;
};

// The 0-table fixpoint.  Restarted after every new fact:
//  - a vertex with all coordinates zero is impossible (zero_vector),
//  - n-1 zeros pin a vertex to a coordinate axis (sign normalized to +1),
//  - two vertices on the same axis are collinear (collinearity) — vertices
//    of a diagram must map to pairwise distinct rays,
//  - an orthogonality equation surviving as a single product with one factor
//    known nonzero forces the other factor to zero,
//  - forcing a known-nonzero entry to zero is a contradiction.
inline PassResult preliminary_pass(EquationSystem& sys) {
    const Diagram& d = sys.diagram;
    int n = sys.n;
    auto vname = [&](Vertex v) {
        return v < kMaxNativeLabels ? std::string(1, vertex_label(v))
                                    : std::to_string(v + 1);
    };
    bool changed = true;
    while (changed) {
        changed = false;
        for (Vertex v = 0; v < d.vertex_count(); ++v) {
            int zc = sys.zero_table.zero_count(v);
            if (zc == n)
                return {false,
                        {"zero_vector",
                         "vertex " + vname(v) + " forced to the zero vector"}};
            if (zc == n - 1 && sys.axis[v] == -1) {
                int k = sys.zero_table.sole_free_coordinate(v);
                if (!sys.zero_table.set_nonzero(v, k))
                    return {false,
                            {"contradiction", "coordinate " + vname(v) + "," +
                                                  std::to_string(k + 1) +
                                                  " both zero and nonzero"}};
                sys.axis[v] = k;
                sys.nonzero_symbols.insert(sys.sym(v, k));
                for (int kk = 0; kk < n; ++kk)
                    sys.coord[v][kk] = Poly::constant(Rational(kk == k ? 1 : 0));
                changed = true;
            }
        }
        std::map<int, Vertex> axis_owner;
        for (Vertex v = 0; v < d.vertex_count(); ++v)
            if (sys.axis[v] != -1) {
                auto [it, fresh] = axis_owner.emplace(sys.axis[v], v);
                if (!fresh)
                    return {false,
                            {"collinearity", "vertices " + vname(it->second) +
                                                 " and " + vname(v) +
                                                 " are both on axis " +
                                                 std::to_string(sys.axis[v] + 1)}};
            }
        for (const Edge& e : d.edges())
            for (size_t i = 0; i < e.size(); ++i)
                for (size_t j = i + 1; j < e.size(); ++j) {
                    Vertex u = e[i], v = e[j];
                    int survivor = -1, count = 0;
                    for (int k = 0; k < n; ++k)
                        if (sys.zero_table.get(u, k) != ZeroState::KnownZero &&
                            sys.zero_table.get(v, k) != ZeroState::KnownZero) {
                            survivor = k;
                            ++count;
                        }
                    if (count != 1) continue;
                    int k = survivor;
                    auto force = [&](Vertex nz, Vertex tgt) -> std::optional<PassResult> {
                        if (sys.zero_table.get(nz, k) != ZeroState::KnownNonzero)
                            return std::nullopt;
                        if (sys.zero_table.get(tgt, k) == ZeroState::KnownZero)
                            return std::nullopt;
                        if (!sys.zero_table.set_zero(tgt, k))
                            return PassResult{
                                false,
                                {"contradiction",
                                 "vertices " + vname(u) + "," + vname(v) +
                                     " orthogonal through a single nonzero product"}};
                        sys.coord[tgt][k] = Poly();
                        changed = true;
                        return std::nullopt;
                    };
                    if (auto r = force(u, v)) return *r;
                    if (auto r = force(v, u)) return *r;
                }
    }
    return {};
}

struct PropagateResult {
    bool feasible = true;
    InfeasibleReason reason;
    // symbol -> proven value of its square (also kept in residual)
    std::map<int, Rational> square_values;
    // eliminated symbol -> expression over the remaining ones
    std::map<int, Poly> assignments;
    std::vector<Equation> residual;
};

namespace detail {

// Decompose p = A*x + B for a symbol occurring linearly; A must be a single
// term over known-nonzero symbols for the division to be legal.
struct LinearSplit {
    Poly a, b;
};

inline std::optional<LinearSplit> linear_in(const Poly& p, int sym) {
    LinearSplit out;
    for (const auto& [m, c] : p.terms()) {
        int e = 0;
        Monomial rest;
        for (auto [s, x] : m) {
            if (s == sym)
                e = x;
            else
                rest.push_back({s, x});
        }
        if (e == 0) {
            out.b.add_term(m, c);
        } else if (e == 1) {
            out.a.add_term(rest, c);
        } else {
            return std::nullopt;
        }
    }
    if (out.a.is_zero()) return std::nullopt;
    return out;
}

}  // namespace detail

// Symbolic simplification to fixpoint: restart the preliminary pass after
// every new fact, rebuild the equations from the coordinate polynomials, and
// extract facts from each equation —
//  * constant nonzero            -> contradiction
//  * known-nonzero common factor -> divided out (also clears denominators)
//  * all-even same-sign terms    -> contradiction (positive total) or forced
//                                   zeros (single-symbol terms summing to 0)
//  * c*x^2 + d = 0               -> square value of x recorded, x nonzero
//  * A*x + B = 0, A invertible   -> x eliminated as -B/A
// Exact-arithmetic overflow abandons the offending step, never the verdict.
inline PropagateResult propagate_solve(EquationSystem& sys) {
    PropagateResult res;
    auto fail = [&](std::string rule, std::string detail) {
        res.feasible = false;
        res.reason = {std::move(rule), std::move(detail)};
        return res;
    };
    auto set_symbol_zero = [&](int s) -> bool {
        Vertex v = sys.sym_vertex(s);
        int k = sys.sym_coord(s);
        if (!sys.zero_table.set_zero(v, k)) return false;
        sys.coord[v][k] = Poly();
        return true;
    };
    std::set<int> no_eliminate;  // symbols whose elimination overflowed

    for (int round = 0; round < 2000; ++round) {
        PassResult pre = preliminary_pass(sys);
        if (!pre.feasible) {
            res.feasible = false;
            res.reason = pre.reason;
            return res;
        }
        sys.rebuild_equations();

        bool changed = false;
        std::vector<Equation> kept;
        for (Equation& eq : sys.equations) {
            Poly p = eq.poly;
            try {
                for (const auto& [s, sq] : res.square_values)
                    p = p.squares_substituted(s, sq);
                Monomial factor;
                for (auto [s, e] : p.common_monomial())
                    if (e < 0 || sys.nonzero_symbols.count(s))
                        factor.push_back({s, e});
                if (!factor.empty()) p = p.divided_by_monomial(factor);
            } catch (const ArithmeticOverflow&) {
                kept.push_back({eq.poly, eq.tag});
                continue;
            }
            if (p.is_zero()) continue;
            if (p.is_constant())
                return fail("contradiction",
                            eq.tag + " reduces to " +
                                p.constant_value().to_string() + " = 0");

            // a lone product with one undetermined factor forces it to zero
            if (p.term_count() == 1) {
                const auto& [m, c] = *p.terms().begin();
                int unknown = -1, unknowns = 0;
                bool odd_ok = true;
                for (auto [s, x] : m)
                    if (!sys.nonzero_symbols.count(s)) {
                        unknown = s;
                        ++unknowns;
                        if (x < 0) odd_ok = false;
                    }
                if (unknowns == 1 && odd_ok) {
                    if (!set_symbol_zero(unknown))
                        return fail("contradiction",
                                    sys.sym_name(unknown) +
                                        " both zero and nonzero");
                    changed = true;
                    continue;
                }
            }

            // sign-definite analysis over all-even monomials
            bool all_even = true;
            for (const auto& [m, c] : p.terms())
                for (auto [s, e] : m)
                    if (e % 2 != 0) all_even = false;
            if (all_even) {
                bool all_pos = true, all_neg = true;
                for (const auto& [m, c] : p.terms())
                    (c.is_negative() ? all_pos : all_neg) = false;
                if (all_pos || all_neg) {
                    Rational cst = p.terms().count(Monomial{})
                                       ? p.terms().at(Monomial{})
                                       : Rational(0);
                    if (!cst.is_zero())
                        return fail("contradiction",
                                    eq.tag + " is a sign-definite sum with "
                                             "nonzero constant term");
                    // sum of same-sign terms equals zero: each term vanishes
                    bool resolved = true;
                    for (const auto& [m, c] : p.terms()) {
                        if (m.size() == 1) {
                            int s = m[0].first;
                            if (sys.nonzero_symbols.count(s))
                                return fail("contradiction",
                                            eq.tag +
                                                ": nonzero square summed to 0");
                            if (!set_symbol_zero(s))
                                return fail("contradiction",
                                            sys.sym_name(s) +
                                                " both zero and nonzero");
                            changed = true;
                        } else {
                            resolved = false;
                        }
                    }
                    if (resolved) continue;
                }
            }

            // c*x^2 + d = 0
            if (p.term_count() <= 2) {
                const auto& t0 = *p.terms().begin();
                if (t0.first.size() == 1 && t0.first[0].second == 2 &&
                    (p.term_count() == 1 ||
                     std::next(p.terms().begin())->first.empty())) {
                    int s = t0.first[0].first;
                    Rational c = t0.second;
                    Rational d = p.term_count() == 2
                                     ? std::next(p.terms().begin())->second
                                     : Rational(0);
                    Rational val = -d / c;
                    if (val.is_negative())
                        return fail("contradiction",
                                    eq.tag + ": " + sys.sym_name(s) +
                                        "^2 = " + val.to_string());
                    if (val.is_zero()) {
                        if (sys.nonzero_symbols.count(s) || !set_symbol_zero(s))
                            return fail("contradiction",
                                        sys.sym_name(s) +
                                            " both zero and nonzero");
                        changed = true;
                        continue;
                    }
                    if (!res.square_values.count(s)) {
                        res.square_values[s] = val;
                        Vertex v = sys.sym_vertex(s);
                        if (!sys.zero_table.set_nonzero(v, sys.sym_coord(s)))
                            return fail("contradiction",
                                        sys.sym_name(s) +
                                            " both zero and nonzero");
                        sys.nonzero_symbols.insert(s);
                        changed = true;
                    } else if (res.square_values[s] != val) {
                        return fail("contradiction",
                                    sys.sym_name(s) + "^2 = " +
                                        res.square_values[s].to_string() +
                                        " and " + val.to_string());
                    }
                    kept.push_back({p, eq.tag});
                    continue;
                }
            }

            kept.push_back({p, eq.tag});
        }

        // nonzero probing: if tentatively zeroing an unknown entry already
        // breaks the preliminary pass, the entry cannot be zero
        if (!changed) {
            for (Vertex v = 0; v < sys.diagram.vertex_count() && !changed; ++v)
                for (int k = 0; k < sys.n; ++k) {
                    if (sys.zero_table.get(v, k) != ZeroState::Unknown) continue;
                    EquationSystem probe = sys;
                    probe.equations.clear();
                    probe.zero_table.set_zero(v, k);
                    probe.coord[v][k] = Poly();
                    if (!preliminary_pass(probe).feasible) {
                        sys.zero_table.set_nonzero(v, k);
                        sys.nonzero_symbols.insert(sys.sym(v, k));
                        changed = true;
                    }
                }
        }

        // one linear elimination per round; two-term equations first — their
        // replacements are single terms and keep the system compact
        if (!changed) {
            std::vector<const Equation*> by_size;
            for (const Equation& eq : kept) by_size.push_back(&eq);
            std::stable_sort(by_size.begin(), by_size.end(),
                             [](const Equation* a, const Equation* b) {
                                 return a->poly.term_count() <
                                        b->poly.term_count();
                             });
            for (const Equation* eqp : by_size) {
                const Equation& eq = *eqp;
                bool done = false;
                for (int s : eq.poly.symbols()) {
                    if (no_eliminate.count(s) || res.square_values.count(s))
                        continue;
                    auto split = detail::linear_in(eq.poly, s);
                    if (!split) continue;
                    if (split->a.term_count() != 1) continue;
                    const auto& [am, ac] = *split->a.terms().begin();
                    bool invertible = true;
                    for (auto [as, ae] : am)
                        if (!sys.nonzero_symbols.count(as)) invertible = false;
                    if (!invertible) continue;
                    try {
                        Rational inv_c = Rational(-1) / ac;
                        Poly repl;
                        for (const auto& [bm, bc] : split->b.terms())
                            repl.add_term(monomial_mul(bm, monomial_pow(am, -1)),
                                          bc * inv_c);
                        // substitute everywhere the symbol lives
                        std::vector<std::vector<Poly>> new_coord = sys.coord;
                        for (auto& row : new_coord)
                            for (Poly& cp : row) {
                                auto sub = cp.substituted(s, repl);
                                if (!sub) throw ArithmeticOverflow("blocked");
                                cp = *sub;
                            }
                        std::map<int, Poly> new_assign = res.assignments;
                        for (auto& [as2, ap] : new_assign) {
                            auto sub = ap.substituted(s, repl);
                            if (sub) ap = *sub;
                        }
                        sys.coord = std::move(new_coord);
                        res.assignments = std::move(new_assign);
                        res.assignments[s] = repl;
                        // -B/A with B a nonzero-only term makes x nonzero too
                        if (split->b.term_count() == 1) {
                            bool bnz = true;
                            for (auto [bs, be] :
                                 split->b.terms().begin()->first)
                                if (!sys.nonzero_symbols.count(bs)) bnz = false;
                            if (bnz) {
                                Vertex v = sys.sym_vertex(s);
                                if (!sys.zero_table.set_nonzero(
                                        v, sys.sym_coord(s)))
                                    return fail("contradiction",
                                                sys.sym_name(s) +
                                                    " both zero and nonzero");
                                sys.nonzero_symbols.insert(s);
                            }
                        }
                        changed = true;
                        done = true;
                    } catch (const ArithmeticOverflow&) {
                        no_eliminate.insert(s);
                    }
                    if (done) break;
                }
                if (done) break;
            }
        }

        if (!changed) {
            res.residual = std::move(kept);
            return res;
        }
    }
    sys.rebuild_equations();
    res.residual = sys.equations;
    return res;
}

enum class SolveStatus { Infeasible, FeasibleCandidate, Undetermined };

struct SolveOutcome {
    SolveStatus status = SolveStatus::Undetermined;
    long bisections = 0;
    long boxes_processed = 0;
    int max_depth = 0;
    std::map<int, Interval> candidate;  // box over free symbols
    double max_residual = 0;
    InfeasibleReason reason;
};

namespace detail {

// Cross-product constraints for triples in R^3: for an edge {u,v,w}, each
// squared component of w equals the squared component of u x v.
inline std::vector<Equation> cross_product_equations(const EquationSystem& sys) {
    std::vector<Equation> out;
    if (sys.n != 3) return out;
    for (int e = 0; e < sys.diagram.edge_count(); ++e) {
        const Edge& edge = sys.diagram.edge(e);
        if (edge.size() != 3) continue;
        for (int rot = 0; rot < 3; ++rot) {
            Vertex u = edge[rot], v = edge[(rot + 1) % 3],
                   w = edge[(rot + 2) % 3];
            const auto& cu = sys.coord[u];
            const auto& cv = sys.coord[v];
            Poly cross[3] = {cu[1] * cv[2] - cu[2] * cv[1],
                             cu[2] * cv[0] - cu[0] * cv[2],
                             cu[0] * cv[1] - cu[1] * cv[0]};
            for (int k = 0; k < 3; ++k) {
                Poly diff = sys.coord[w][k] * sys.coord[w][k] -
                            cross[k] * cross[k];
                if (!diff.is_zero())
                    out.push_back({std::move(diff),
                                   "cross " + std::to_string(e) + ":" +
                                       std::to_string(w) + "," +
                                       std::to_string(k)});
            }
        }
    }
    return out;
}

// True when substituting s -> -s flips each vertex vector to itself or its
// negative; such a symbol may be restricted to [0,1] (ray sign freedom).
inline bool sign_symmetric(const EquationSystem& sys, int s) {
    for (Vertex v = 0; v < sys.diagram.vertex_count(); ++v) {
        bool any = false;
        for (int k = 0; k < sys.n; ++k)
            if (sys.coord[v][k].contains(s)) any = true;
        if (!any) continue;
        bool all_flip = true, none_flip = true;
        for (int k = 0; k < sys.n; ++k) {
            const Poly& p = sys.coord[v][k];
            if (p.is_zero()) continue;
            auto flipped = p.substituted(s, -Poly::symbol(s));
            if (!flipped) return false;
            if (*flipped == p)
                all_flip = false;  // a nonzero coordinate that stays put
            else if (*flipped == -p)
                none_flip = false;
            else
                return false;
        }
        if (!all_flip && !none_flip) return false;
    }
    return true;
}

}  // namespace detail

// Interval branch-and-prune over the residual of a propagated system.
// Returns Infeasible only when every box was eliminated by an interval
// evaluation excluding zero.
inline SolveOutcome branch_and_prune(const EquationSystem& sys,
                                     const PropagateResult& prop, double eps,
                                     std::optional<long> budget,
                                     SolveOutcome& stats) {
    std::vector<Equation> eqs = prop.residual;
    for (Equation& e : detail::cross_product_equations(sys)) {
        try {
            Poly p = e.poly;
            for (const auto& [s, sq] : prop.square_values)
                p = p.squares_substituted(s, sq);
            if (!p.is_zero()) eqs.push_back({std::move(p), e.tag});
        } catch (const ArithmeticOverflow&) {
            eqs.push_back(e);
        }
    }

    // square values were lifted out of the residual; their defining
    // equations still constrain the boxes
    for (const auto& [s, q] : prop.square_values)
        eqs.push_back({Poly::symbol(s) * Poly::symbol(s) - Poly(q),
                       "square " + sys.sym_name(s)});

    std::set<int> free_syms;
    for (const Equation& e : eqs)
        for (int s : e.poly.symbols()) free_syms.insert(s);
    for (const auto& row : sys.coord)
        for (const Poly& p : row)
            for (int s : p.symbols()) free_syms.insert(s);

    const int nsym = sys.diagram.vertex_count() * sys.n;
    std::vector<int> frees(free_syms.begin(), free_syms.end());

    struct DBox {
        std::vector<Interval> r;
        int depth = 0;
    };
    DBox root;
    root.r.assign(nsym, Interval::exact(0));
    for (int s : frees) {
        bool nonneg = detail::sign_symmetric(sys, s);
        root.r[s] = nonneg ? Interval(0, 1) : Interval(-1, 1);
    }
    auto box_width = [&](const DBox& b) {
        double w = 0;
        for (int s : frees) w = std::max(w, b.r[s].width());
        return w;
    };

    // a width-eps box whose midpoint fails to satisfy the equations is
    // neither a usable candidate nor provably empty
    bool unresolved = false;

    std::vector<std::vector<int>> eq_of_sym(nsym);
    for (size_t i = 0; i < eqs.size(); ++i)
        for (int s : eqs[i].poly.symbols())
            eq_of_sym[s].push_back(static_cast<int>(i));

    std::vector<DBox> work{std::move(root)};
    while (!work.empty()) {
        DBox box = std::move(work.back());
        work.pop_back();
        ++stats.boxes_processed;
        stats.max_depth = std::max(stats.max_depth, box.depth);

        bool dead = false;
        for (const Equation& e : eqs)
            if (!interval_eval(e.poly, box.r).contains_zero()) {
                dead = true;
                break;
            }
        if (!dead) {
            // shave: discard outer slices of a variable's range whenever an
            // equation containing it excludes zero on the slice
            auto slice_dead = [&](int s, const Interval& slice) {
                Interval saved = box.r[s];
                box.r[s] = slice;
                bool bad = false;
                for (int ei : eq_of_sym[s])
                    if (!interval_eval(eqs[ei].poly, box.r).contains_zero()) {
                        bad = true;
                        break;
                    }
                box.r[s] = saved;
                return bad;
            };
            for (int sweep = 0; sweep < 2 && !dead; ++sweep) {
                bool shrunk = false;
                for (int s : frees) {
                    for (int left = 1; left >= 0; --left) {
                        for (;;) {
                            Interval r = box.r[s];
                            double w = r.width();
                            if (w <= eps) break;
                            bool cut = false;
                            double frac = 0.5;
                            for (int t = 0; t < 3; ++t, frac /= 2) {
                                double split = left ? r.lo + w * frac
                                                    : r.hi - w * frac;
                                if (split <= r.lo || split >= r.hi)
                                    break;  // no representable progress
                                Interval slice = left
                                                     ? Interval(r.lo, split)
                                                     : Interval(split, r.hi);
                                if (slice_dead(s, slice)) {
                                    if (left)
                                        box.r[s].lo = split;
                                    else
                                        box.r[s].hi = split;
                                    cut = shrunk = true;
                                    break;
                                }
                            }
                            if (!cut) break;
                        }
                    }
                }
                if (!shrunk) break;
                for (const Equation& e : eqs)
                    if (!interval_eval(e.poly, box.r).contains_zero()) {
                        dead = true;
                        break;
                    }
            }
        }
        if (!dead) {
            // every coordinate of a unit vector stays within [-1,1]
            for (const auto& row : sys.coord) {
                for (const Poly& p : row) {
                    Interval r = interval_eval(p, box.r);
                    if (r.lo > 1 || r.hi < -1) {
                        dead = true;
                        break;
                    }
                }
                if (dead) break;
            }
        }
        if (dead) continue;

        if (box_width(box) < eps) {
            std::vector<Interval> mid(nsym, Interval::exact(0));
            for (int s : frees) mid[s] = Interval::exact(box.r[s].mid());
            double worst = 0;
            for (const Equation& e : eqs) {
                Interval r = interval_eval(e.poly, mid);
                worst = std::max(worst,
                                 std::max(std::abs(r.lo), std::abs(r.hi)));
            }
            if (worst < 1e-3) {
                SolveOutcome out = stats;
                out.status = SolveStatus::FeasibleCandidate;
                for (int s : frees) out.candidate[s] = box.r[s];
                out.max_residual = worst;
                return out;
            }
            unresolved = true;
            continue;
        }

        if (budget && stats.bisections >= *budget) {
            SolveOutcome out = stats;
            out.status = SolveStatus::Undetermined;
            return out;
        }
        ++stats.bisections;

        int widest = -1;
        double w = -1;
        for (int s : frees)
            if (box.r[s].width() > w) {
                w = box.r[s].width();
                widest = s;
            }
        double m = box.r[widest].mid();
        DBox left = box, right = std::move(box);
        left.r[widest].hi = m;
        right.r[widest].lo = m;
        left.depth = right.depth = left.depth + 1;
        work.push_back(std::move(right));
        work.push_back(std::move(left));
    }
    SolveOutcome out = stats;
    out.status = unresolved ? SolveStatus::Undetermined : SolveStatus::Infeasible;
    return out;
}

namespace detail {

// --- 3-dim cross-product realization ------------------------------------
// In R^3 the third vertex of an edge is the cross product of the other two
// up to scale, so most vertices need no box variables of their own.  The
// few parametrized vertices carry three variables each, pinned to the unit
// sphere, which rules out the zero vector by construction and keeps the
// search dimension small.
struct Realize3Plan {
    struct Step {
        int kind;               // 0 axis, 1 cross product, 2 parametrized
        Vertex v;
        Vertex a = -1, b = -1;  // cross factors
        int axis = -1;
        int base = -1;          // first of three box variables
    };
    std::vector<Step> steps;  // dependency order
    int n_vars = 0;
    std::vector<std::pair<Vertex, Vertex>> dots;  // required dot = 0 pairs
    std::vector<Vertex> spheres;                  // ||v||^2 = 1
};

inline Realize3Plan make_realize3_plan(const EquationSystem& sys) {
    const Diagram& d = sys.diagram;
    Realize3Plan plan;
    int a = d.vertex_count();
    std::vector<bool> det(a, false);
    // DAG depth of each determined vertex: deeper cross chains evaluate to
    // wider intervals, so factors are chosen as shallow as possible
    std::vector<int> depth(a, 0);
    std::set<std::pair<Vertex, Vertex>> implied;
    auto pair_of = [](Vertex x, Vertex y) {
        return std::pair<Vertex, Vertex>(std::min(x, y), std::max(x, y));
    };

    // any within-edge pair is an orthogonality; a vertex orthogonal to two
    // determined vertices that are also orthogonal to each other is their
    // cross product up to scale, whichever edges those pairs came from.
    // The factors' mutual orthogonality is essential: it makes every
    // derived vector provably nonzero (a cross of orthogonal nonzero
    // vectors cannot vanish), so no box can satisfy the constraints
    // through a degenerate all-parallel collapse.
    std::vector<std::set<Vertex>> orth(a);
    for (const Edge& ed : d.edges())
        for (size_t i = 0; i < ed.size(); ++i)
            for (size_t j = i + 1; j < ed.size(); ++j) {
                orth[ed[i]].insert(ed[j]);
                orth[ed[j]].insert(ed[i]);
            }

    // basis edge: i-th vertex on axis n-1-i, matching build_equations
    const Edge& be = d.edge(sys.basis_edge);
    for (int i = 0; i < 3; ++i) {
        plan.steps.push_back({0, be[i], -1, -1, 2 - i, -1});
        det[be[i]] = true;
    }
    for (size_t i = 0; i < be.size(); ++i)
        for (size_t j = i + 1; j < be.size(); ++j)
            implied.insert(pair_of(be[i], be[j]));

    auto derive_round = [&]() {
        bool progress = false;
        for (Vertex v = 0; v < a; ++v) {
            if (det[v]) continue;
            std::vector<Vertex> cand;
            for (Vertex u : orth[v])
                if (det[u]) cand.push_back(u);
            std::sort(cand.begin(), cand.end(),
                      [&](Vertex x, Vertex y) { return depth[x] < depth[y]; });
            Vertex fa = -1, fb = -1;
            for (size_t i = 0; i < cand.size() && fb == -1; ++i)
                for (size_t j = i + 1; j < cand.size() && fb == -1; ++j)
                    if (orth[cand[i]].count(cand[j])) {
                        fa = cand[i];
                        fb = cand[j];
                    }
            if (fb == -1) continue;
            plan.steps.push_back({1, v, fa, fb, -1, -1});
            implied.insert(pair_of(v, fa));
            implied.insert(pair_of(v, fb));
            det[v] = true;
            depth[v] = std::max(depth[fa], depth[fb]) + 1;
            progress = true;
        }
        return progress;
    };

    int remaining = a - 3;
    auto count_det = [&] {
        int c = 0;
        for (Vertex v = 0; v < a; ++v)
            if (det[v]) ++c;
        return c;
    };
    while (remaining > 0) {
        if (derive_round()) {
            remaining = a - count_det();
            continue;
        }
        // stuck: parametrize the vertex whose determination cascades
        // furthest through the orthogonality graph
        Vertex pick = -1;
        int best = -1;
        for (Vertex v = 0; v < a; ++v) {
            if (det[v]) continue;
            std::vector<bool> sim = det;
            sim[v] = true;
            bool prog = true;
            int size = count_det() + 1;
            while (prog) {
                prog = false;
                for (Vertex u = 0; u < a; ++u) {
                    if (sim[u]) continue;
                    bool can = false;
                    std::vector<Vertex> have;
                    for (Vertex w : orth[u])
                        if (sim[w]) have.push_back(w);
                    for (size_t i = 0; i < have.size() && !can; ++i)
                        for (size_t j = i + 1; j < have.size() && !can; ++j)
                            if (orth[have[i]].count(have[j])) can = true;
                    if (can) {
                        sim[u] = true;
                        ++size;
                        prog = true;
                    }
                }
            }
            if (size > best) {
                best = size;
                pick = v;
            }
        }
        plan.steps.push_back({2, pick, -1, -1, -1, plan.n_vars});
        plan.n_vars += 3;
        plan.spheres.push_back(pick);
        det[pick] = true;
        --remaining;
    }
    for (const Edge& ed : d.edges())
        for (size_t i = 0; i < ed.size(); ++i)
            for (size_t j = i + 1; j < ed.size(); ++j)
                if (!implied.count(pair_of(ed[i], ed[j])))
                    plan.dots.push_back({ed[i], ed[j]});
    return plan;
}

inline SolveOutcome realize3_solve(const EquationSystem& sys, double eps,
                                   std::optional<long> budget,
                                   SolveOutcome& stats) {
    const Diagram& d = sys.diagram;
    Realize3Plan plan = make_realize3_plan(sys);

    // coordinates of every vertex over a box of parameter values
    std::vector<std::array<Interval, 3>> vec(d.vertex_count());
    auto evaluate = [&](const std::vector<Interval>& vars) {
        for (const auto& st : plan.steps) {
            auto& w = vec[st.v];
            if (st.kind == 0) {
                for (int k = 0; k < 3; ++k)
                    w[k] = Interval::exact(k == st.axis ? 1 : 0);
            } else if (st.kind == 1) {
                const auto& u = vec[st.a];
                const auto& v = vec[st.b];
                w[0] = u[1] * v[2] - u[2] * v[1];
                w[1] = u[2] * v[0] - u[0] * v[2];
                w[2] = u[0] * v[1] - u[1] * v[0];
            } else {
                for (int k = 0; k < 3; ++k) w[k] = vars[st.base + k];
            }
        }
    };
    // zero-table facts about derived vertices become extra constraints
    std::vector<std::pair<Vertex, int>> zero_coords;
    std::vector<int> var_vertex(plan.n_vars, -1), var_coord(plan.n_vars, -1);
    for (const auto& st : plan.steps)
        if (st.kind == 2)
            for (int k = 0; k < 3; ++k) {
                var_vertex[st.base + k] = st.v;
                var_coord[st.base + k] = k;
            }
    for (Vertex v = 0; v < d.vertex_count(); ++v)
        for (int k = 0; k < 3; ++k)
            if (sys.zero_table.get(v, k) == ZeroState::KnownZero)
                zero_coords.push_back({v, k});

    auto alive = [&](const std::vector<Interval>& vars) {
        evaluate(vars);
        for (auto [u, v] : plan.dots) {
            Interval dot = vec[u][0] * vec[v][0] + vec[u][1] * vec[v][1] +
                           vec[u][2] * vec[v][2];
            if (!dot.contains_zero()) return false;
        }
        for (Vertex v : plan.spheres) {
            Interval n2 = vec[v][0] * vec[v][0] + vec[v][1] * vec[v][1] +
                          vec[v][2] * vec[v][2];
            if (!n2.contains(1)) return false;
        }
        for (auto [v, k] : zero_coords)
            if (!vec[v][k].contains_zero()) return false;
        return true;
    };

    struct PBox {
        std::vector<Interval> r;
        int depth = 0;
    };
    PBox root;
    root.r.assign(plan.n_vars, Interval(-1, 1));
    for (int s = 0; s < plan.n_vars; ++s)
        if (sys.zero_table.get(var_vertex[s], var_coord[s]) ==
            ZeroState::KnownZero)
            root.r[s] = Interval::exact(0);
    // each parametrized vertex may flip sign freely: restrict its first
    // unpinned variable to [0,1]
    for (const auto& st : plan.steps)
        if (st.kind == 2)
            for (int k = 0; k < 3; ++k) {
                Interval& r = root.r[st.base + k];
                if (r.lo == 0 && r.hi == 0) continue;
                r.lo = 0;
                break;
            }

    bool unresolved = false;
    std::vector<PBox> work{std::move(root)};
    while (!work.empty()) {
        PBox box = std::move(work.back());
        work.pop_back();
        ++stats.boxes_processed;
        stats.max_depth = std::max(stats.max_depth, box.depth);

        if (!alive(box.r)) continue;

        // shave outer slices that some constraint refutes
        bool dead = false;
        for (int sweep = 0; sweep < 2 && !dead; ++sweep) {
            bool shrunk = false;
            for (int s = 0; s < plan.n_vars; ++s) {
                for (int left = 1; left >= 0; --left) {
                    for (;;) {
                        Interval r = box.r[s];
                        double w = r.width();
                        if (w <= eps) break;
                        bool cut = false;
                        double frac = 0.5;
                        for (int t = 0; t < 3; ++t, frac /= 2) {
                            double split =
                                left ? r.lo + w * frac : r.hi - w * frac;
                            if (split <= r.lo || split >= r.hi) break;
                            Interval slice = left ? Interval(r.lo, split)
                                                  : Interval(split, r.hi);
                            Interval saved = box.r[s];
                            box.r[s] = slice;
                            bool bad = !alive(box.r);
                            box.r[s] = saved;
                            if (bad) {
                                if (left)
                                    box.r[s].lo = split;
                                else
                                    box.r[s].hi = split;
                                cut = shrunk = true;
                                break;
                            }
                        }
                        if (!cut) break;
                    }
                }
            }
            if (!shrunk) break;
            if (!alive(box.r)) dead = true;
        }
        if (dead) continue;

        double width = 0;
        for (const Interval& r : box.r) width = std::max(width, r.width());
        if (width < eps) {
            std::vector<Interval> mid(plan.n_vars);
            for (int s = 0; s < plan.n_vars; ++s)
                mid[s] = Interval::exact(box.r[s].mid());
            evaluate(mid);
            double worst = 0;
            for (auto [u, v] : plan.dots) {
                Interval dot = vec[u][0] * vec[v][0] + vec[u][1] * vec[v][1] +
                               vec[u][2] * vec[v][2];
                worst = std::max(worst, std::max(std::abs(dot.lo),
                                                 std::abs(dot.hi)));
            }
            for (Vertex v : plan.spheres) {
                Interval n2 = vec[v][0] * vec[v][0] + vec[v][1] * vec[v][1] +
                              vec[v][2] * vec[v][2];
                worst = std::max(worst, std::max(std::abs(n2.lo - 1),
                                                 std::abs(n2.hi - 1)));
            }
            if (worst < 1e-3) {
                SolveOutcome out = stats;
                out.status = SolveStatus::FeasibleCandidate;
                // report every coordinate so the caller can reconstruct the
                // vectors straight from the original coordinate symbols
                for (Vertex v = 0; v < d.vertex_count(); ++v)
                    for (int k = 0; k < 3; ++k)
                        out.candidate[sys.sym(v, k)] = vec[v][k];
                out.max_residual = worst;
                return out;
            }
            unresolved = true;
            continue;
        }

        if (budget && stats.bisections >= *budget) {
            SolveOutcome out = stats;
            out.status = SolveStatus::Undetermined;
            return out;
        }
        ++stats.bisections;

        int widest = 0;
        double w = -1;
        for (int s = 0; s < plan.n_vars; ++s)
            if (box.r[s].width() > w) {
                w = box.r[s].width();
                widest = s;
            }
        double m = box.r[widest].mid();
        PBox left = box, right = std::move(box);
        left.r[widest].hi = m;
        right.r[widest].lo = m;
        left.depth = right.depth = left.depth + 1;
        work.push_back(std::move(right));
        work.push_back(std::move(left));
    }
    SolveOutcome out = stats;
    out.status =
        unresolved ? SolveStatus::Undetermined : SolveStatus::Infeasible;
    return out;
}

inline SolveOutcome interval_solve_rec(EquationSystem sys, double eps,
                                       std::optional<long> budget,
                                       SolveOutcome& stats, int depth) {
    PropagateResult prop = propagate_solve(sys);
    if (!prop.feasible) {
        SolveOutcome out = stats;
        out.status = SolveStatus::Infeasible;
        out.reason = prop.reason;
        return out;
    }

    // disjunction on a surviving pure product: some factor must vanish
    if (depth < 256) {
        for (const Equation& e : prop.residual) {
            if (e.poly.term_count() != 1) continue;
            const auto& [m, c] = *e.poly.terms().begin();
            int target = -1;
            for (auto [s, x] : m)
                if (x > 0 && !sys.nonzero_symbols.count(s)) target = s;
            if (target == -1) continue;
            SolveOutcome verdicts[2];
            for (int side = 0; side < 2; ++side) {
                EquationSystem sub = sys;
                Vertex v = sub.sym_vertex(target);
                int k = sub.sym_coord(target);
                bool consistent = side == 0 ? sub.zero_table.set_zero(v, k)
                                            : sub.zero_table.set_nonzero(v, k);
                if (!consistent) {
                    verdicts[side].status = SolveStatus::Infeasible;
                    continue;
                }
                if (side == 0)
                    sub.coord[v][k] = Poly();
                else
                    sub.nonzero_symbols.insert(target);
                verdicts[side] =
                    interval_solve_rec(std::move(sub), eps, budget, stats,
                                       depth + 1);
                if (verdicts[side].status == SolveStatus::FeasibleCandidate)
                    return verdicts[side];
            }
            SolveOutcome out = stats;
            out.status = (verdicts[0].status == SolveStatus::Infeasible &&
                          verdicts[1].status == SolveStatus::Infeasible)
                             ? SolveStatus::Infeasible
                             : SolveStatus::Undetermined;
            return out;
        }
    }

    if (sys.n == 3) return realize3_solve(sys, eps, budget, stats);

    // hand the interval phase the original equations restricted by the
    // learned zero table: symbolic eliminations divide by nonzero symbols,
    // and the cleared denominators would admit a spurious all-zero manifold
    // that no interval evaluation can exclude
    EquationSystem base =
        build_equations(sys.diagram, sys.n, sys.basis_edge, true);
    auto infeasible_now = [&] {
        SolveOutcome out = stats;
        out.status = SolveStatus::Infeasible;
        out.reason = {"contradiction", "zero table import clash"};
        return out;
    };
    for (Vertex v = 0; v < sys.diagram.vertex_count(); ++v)
        for (int k = 0; k < sys.n; ++k) {
            ZeroState st = sys.zero_table.get(v, k);
            if (st == ZeroState::KnownZero) {
                if (!base.zero_table.set_zero(v, k))
                    return infeasible_now();
                base.coord[v][k] = Poly();
            } else if (st == ZeroState::KnownNonzero) {
                if (!base.zero_table.set_nonzero(v, k))
                    return infeasible_now();
                base.nonzero_symbols.insert(base.sym(v, k));
            }
        }
    PassResult pr = preliminary_pass(base);
    if (!pr.feasible) {
        SolveOutcome out = stats;
        out.status = SolveStatus::Infeasible;
        out.reason = pr.reason;
        return out;
    }
    base.rebuild_equations();
    PropagateResult flat;
    flat.residual = base.equations;
    return branch_and_prune(base, flat, eps, budget, stats);
}

}  // namespace detail

// Decide realizability: symbolic propagation with case analysis on
// zero/nonzero coordinate status, then interval branch-and-prune on what is
// left.  `budget` caps the total number of bisections (Undetermined when
// exhausted); no budget means run to completion.
inline SolveOutcome interval_solve(const EquationSystem& sys,
                                   double eps = 1e-6,
                                   std::optional<long> budget = std::nullopt) {
    SolveOutcome stats;
    return detail::interval_solve_rec(sys, eps, budget, stats, 0);
}

// interval_solve on the diagram with its single-edge vertices dropped (a
// relaxation, so Infeasible transfers to the full diagram), falling back to
// the full diagram when the reduction leaves no size-n edge to fix as the
// basis.  The basis is the first full edge.
inline SolveOutcome interval_solve_reduced(
    const Diagram& d, int n, double eps = 1e-6,
    std::optional<long> budget = std::nullopt) {
    auto full_edge = [n](const Diagram& x) {
        for (int e = 0; e < x.edge_count(); ++e)
            if (static_cast<int>(x.edge(e).size()) == n) return e;
        return -1;
    };
    Diagram work = d;
    int basis = -1;
    try {
        Diagram red = drop_single_edge_vertices(d);
        basis = full_edge(red);
        if (basis >= 0) work = std::move(red);
    } catch (const DiagramError&) {
    }
    if (basis < 0) basis = full_edge(work);
    if (basis < 0)
        throw DiagramError("interval_solve_reduced: no size-n edge");
    return interval_solve(build_equations(work, n, basis, true), eps, budget);
}

// Numeric vectors at the midpoint of a candidate box (zero coordinates and
// eliminated symbols resolved through the coordinate polynomials).
inline std::vector<std::vector<double>> candidate_vectors(
    const EquationSystem& sys, const std::map<int, Interval>& box) {
    std::map<int, Interval> mid;
    for (const auto& [s, r] : box) mid[s] = Interval::exact(r.mid());
    std::vector<std::vector<double>> out(sys.diagram.vertex_count(),
                                         std::vector<double>(sys.n, 0.0));
    for (Vertex v = 0; v < sys.diagram.vertex_count(); ++v)
        for (int k = 0; k < sys.n; ++k) {
            std::map<int, Interval> needed = mid;
            for (int s : sys.coord[v][k].symbols())
                if (!needed.count(s)) needed[s] = Interval::exact(0);
            out[v][k] = interval_eval(sys.coord[v][k], needed).mid();
        }
    return out;
}

}  // namespace mmp

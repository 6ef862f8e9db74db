#pragma once

#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <mmp/equations.hpp>
#include <mmp/generate.hpp>
#include <mmp/solve.hpp>
#include <mmp/stats.hpp>
#include <mmp/states01.hpp>

namespace mmp {

namespace detail {

inline std::map<std::string, std::string> parse_params(
    const std::string& params) {
    std::map<std::string, std::string> kv;
    std::istringstream in(params);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty()) continue;
        auto eq = item.find('=');
        if (eq == std::string::npos)
            kv[item] = "";
        else
            kv[item.substr(0, eq)] = item.substr(eq + 1);
    }
    return kv;
}

}  // namespace detail

// Register the built-in generation filters.
//
// "prelim": run the preliminary pass on the node's equation system and
// prune on structural infeasibility.  Monotone: descendants only add
// constraints, so an infeasible node has no feasible descendant.
//
// "probe:base=B,max_edges=M[,eps=E]": interval branch-and-prune with an
// adaptive bisection budget B * 2^(M - b) — generous on small subgraphs,
// tight near the target size.  Prunes only on a proof of infeasibility;
// base 0 (the default) passes everything, so the probe never changes the
// census, only the cost of reaching it.
inline void register_pipeline_filters(FilterRegistry& reg) {
    reg.register_filter("prelim", [](const std::string&) -> FilterHook {
        return [](const Diagram& d) {
            int n = static_cast<int>(d.edge(0).size());
            try {
                EquationSystem sys = build_equations(d, n, 0);
                if (!preliminary_pass(sys).feasible)
                    return FilterVerdict::prune("preliminary pass");
            } catch (const DiagramError&) {
                // non-uniform or otherwise unmodelable: leave it alone
            }
            return FilterVerdict::pass();
        };
    });
    reg.register_filter("probe", [](const std::string& params) -> FilterHook {
        auto kv = detail::parse_params(params);
        long base = kv.count("base") ? std::stol(kv["base"]) : 0;
        int max_edges =
            kv.count("max_edges") ? std::stoi(kv["max_edges"]) : 0;
        double eps = kv.count("eps") ? std::stod(kv["eps"]) : 1e-3;
        return [base, max_edges, eps](const Diagram& d) {
            if (base <= 0) return FilterVerdict::pass();
            int n = static_cast<int>(d.edge(0).size());
            int shift = std::max(0, max_edges - d.edge_count());
            long budget =
                shift >= 40 ? std::numeric_limits<long>::max() / 2
                            : base << shift;
            try {
                SolveOutcome out = interval_solve_reduced(d, n, eps, budget);
                if (out.status == SolveStatus::Infeasible)
                    return FilterVerdict::prune("interval probe");
            } catch (const DiagramError&) {
            }
            return FilterVerdict::pass();
        };
    });
}

// Diagram counts per pipeline stage.  Later stages only ever see survivors
// of earlier ones, so the four numbers are non-increasing left to right.
struct StageCounts {
    long generated = 0;
    long post_prelim = 0;
    long post_states01 = 0;
    long post_solver = 0;
};

// A diagram that survived every stage, with the solver's verdict on it.
struct PipelineHit {
    Diagram diagram;
    SolveOutcome outcome;
};

struct PipelineConfig {
    bool prelim = true;       // preliminary-pass generation filter
    long probe_base = 0;      // adaptive probe budget base; 0 disables
    double probe_eps = 1e-3;
    bool solve = true;        // final interval-solver stage
    double solve_eps = 1e-4;
    std::optional<long> solve_budget = 20000;
    size_t max_hits = 100000;  // hits stored in the report (all are counted)
};

struct RunReport {
    // key: (vertex count, edge count)
    std::map<std::pair<int, int>, StageCounts> by_size;
    StageCounts total;
    double seconds = 0;
    std::vector<PipelineHit> hits;

    // Comma-separated table, one row per (a,b).  Columns:
    //   a            vertices
    //   b            edges
    //   generated    isomorph-free diagrams of this size visited
    //   post_prelim  survivors of the preliminary-pass filter
    //   post_states01  survivors with no 0-1 state
    //   post_solver  survivors the solver could not refute
    std::string csv() const {
        std::ostringstream out;
        out << "a,b,generated,post_prelim,post_states01,post_solver\n";
        for (const auto& [key, c] : by_size)
            out << key.first << ',' << key.second << ',' << c.generated
                << ',' << c.post_prelim << ',' << c.post_states01 << ','
                << c.post_solver << '\n';
        return out.str();
    }

    std::string text() const {
        std::ostringstream out;
        out << "generated " << total.generated << ", post-prelim "
            << total.post_prelim << ", post-states01 " << total.post_states01
            << ", post-solver " << total.post_solver << " (in " << seconds
            << " s)\n";
        return out.str();
    }
};

// Generation with the prelim (and optional probe) filters, then the 0-1
// state filter, then the interval solver; each surviving diagram is passed
// to on_hit (when given) and counted in the report.  Intermediate diagrams
// of every size are processed, so the report doubles as a census.
inline RunReport run_pipeline(
    GenSpec spec, const PipelineConfig& cfg = {},
    const std::function<void(const PipelineHit&)>& on_hit = {},
    const FilterRegistry& user_registry = {}) {
    auto t0 = std::chrono::steady_clock::now();
    RunReport report;

    FilterRegistry reg = user_registry;
    register_pipeline_filters(reg);

    // the counter sits before every pruning filter so that "generated"
    // records each isomorph-free node visited
    std::vector<std::string> filters;
    filters.push_back("__count");
    reg.register_filter("__count", FilterHook([&report](const Diagram& d) {
        auto& c = report.by_size[{d.vertex_count(), d.edge_count()}];
        ++c.generated;
        ++report.total.generated;
        return FilterVerdict::pass();
    }));
    for (const std::string& f : spec.filters) filters.push_back(f);
    if (cfg.prelim) filters.push_back("prelim");
    if (cfg.probe_base > 0)
        filters.push_back("probe:base=" + std::to_string(cfg.probe_base) +
                          ",max_edges=" + std::to_string(spec.max_edges) +
                          ",eps=" + std::to_string(cfg.probe_eps));
    spec.filters = std::move(filters);

    generate(
        spec,
        [&](const Diagram& d) {
            auto& c = report.by_size[{d.vertex_count(), d.edge_count()}];
            ++c.post_prelim;
            ++report.total.post_prelim;
            if (has_01_state(d)) return true;
            ++c.post_states01;
            ++report.total.post_states01;

            SolveOutcome out;
            if (cfg.solve) {
                int n = static_cast<int>(d.edge(0).size());
                try {
                    out = interval_solve_reduced(d, n, cfg.solve_eps,
                                                 cfg.solve_budget);
                } catch (const DiagramError&) {
                }
                if (out.status == SolveStatus::Infeasible) return true;
            }
            ++c.post_solver;
            ++report.total.post_solver;
            PipelineHit hit{d, out};
            if (on_hit) on_hit(hit);
            if (report.hits.size() < cfg.max_hits)
                report.hits.push_back(std::move(hit));
            return true;
        },
        reg);

    report.seconds = std::chrono::duration<double>(
                         std::chrono::steady_clock::now() - t0)
                         .count();
    return report;
}

// One row of the diagram statistics table.
struct StatsRow {
    int a = 0;
    int b = 0;
    int a_star = 0;
    std::optional<int> girth;
    int nb = 0;
    int nb_2astar = 0;  // nb - 2 a*
    int nb_2a = 0;      // nb - 2 a
};

struct StatsReport {
    std::vector<StatsRow> rows;
    std::optional<int> min_nb_2astar;
    std::optional<int> min_nb_2a;

    // Comma-separated table.  Columns:
    //   a       vertices
    //   b       edges
    //   a_star  vertices on at least two edges
    //   girth   smallest loop size (empty when loop-free)
    //   nb      total edge slots (n*b for uniform diagrams)
    //   nb_2astar  nb - 2*a_star (nonnegative for realizable KS sets)
    //   nb_2a      nb - 2*a
    std::string csv() const {
        std::ostringstream out;
        out << "a,b,a_star,girth,nb,nb_2astar,nb_2a\n";
        for (const StatsRow& r : rows) {
            out << r.a << ',' << r.b << ',' << r.a_star << ',';
            if (r.girth) out << *r.girth;
            out << ',' << r.nb << ',' << r.nb_2astar << ',' << r.nb_2a
                << '\n';
        }
        return out.str();
    }
};

inline StatsReport stats_report(const std::vector<Diagram>& diagrams) {
    StatsReport rep;
    for (const Diagram& d : diagrams) {
        DiagramStats s = stats(d);
        StatsRow r;
        r.a = s.a;
        r.b = s.b;
        r.a_star = s.a_star;
        r.girth = s.girth;
        r.nb = s.nb;
        r.nb_2astar = s.nb - 2 * s.a_star;
        r.nb_2a = s.nb - 2 * s.a;
        if (!rep.min_nb_2astar || r.nb_2astar < *rep.min_nb_2astar)
            rep.min_nb_2astar = r.nb_2astar;
        if (!rep.min_nb_2a || r.nb_2a < *rep.min_nb_2a)
            rep.min_nb_2a = r.nb_2a;
        rep.rows.push_back(std::move(r));
    }
    return rep;
}

}  // namespace mmp

// Command-line front end for the MMP diagram toolchain.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <mmp/canonical.hpp>
#include <mmp/catalog.hpp>
#include <mmp/diagram.hpp>
#include <mmp/discrete.hpp>
#include <mmp/format.hpp>
#include <mmp/pipeline.hpp>
#include <mmp/solve.hpp>
#include <mmp/states01.hpp>
#include <mmp/stats.hpp>
#include <mmp/subdiagram.hpp>
#include <mmp/vectors.hpp>

namespace {

std::string read_all(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw CLI::ValidationError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<mmp::Diagram> load_diagrams(const std::string& path,
                                        bool allow_short = false) {
    mmp::ParseOptions opt;
    opt.validation.allow_short_edges = allow_short;
    return mmp::parse_file(read_all(path), opt);
}

std::ostream& open_out(std::ofstream& file, const std::string& path) {
    if (path.empty() || path == "-") return std::cout;
    file.open(path);
    if (!file) throw CLI::ValidationError("cannot write " + path);
    return file;
}

std::string diagram_text(const mmp::Diagram& d) {
    return d.vertex_count() <= mmp::kMaxNativeLabels
               ? mmp::serialize(d)
               : mmp::serialize_numeric(d);
}

std::vector<long long> parse_values(const std::string& csv) {
    std::vector<long long> values;
    std::istringstream in(csv);
    std::string tok;
    while (std::getline(in, tok, ',')) values.push_back(std::stoll(tok));
    return values;
}

const char* status_name(mmp::SolveStatus s) {
    switch (s) {
        case mmp::SolveStatus::Infeasible: return "infeasible";
        case mmp::SolveStatus::FeasibleCandidate: return "feasible-candidate";
        default: return "undetermined";
    }
}

int solve_one(const mmp::Diagram& d, int n, const std::string& mode,
              double eps, std::optional<long> budget,
              const std::string& values, bool reduce) {
    using namespace mmp;
    if (mode == "discrete") {
        auto sol = discrete_check(d, n, parse_values(values));
        if (!sol) {
            std::cout << "no solution over {" << values << "}\n";
            return 1;
        }
        std::cout << serialize_solution(d, *sol);
        return 0;
    }
    SolveOutcome out;
    if (reduce) {
        out = interval_solve_reduced(d, n, eps, budget);
    } else {
        int basis = -1;
        for (int e = 0; e < d.edge_count(); ++e)
            if (static_cast<int>(d.edge(e).size()) == n) {
                basis = e;
                break;
            }
        if (basis == -1) throw DiagramError("no full edge to fix as basis");
        out = interval_solve(build_equations(d, n, basis, true), eps, budget);
    }
    std::cout << status_name(out.status) << "  bisections=" << out.bisections
              << " boxes=" << out.boxes_processed
              << " max-depth=" << out.max_depth;
    if (out.status == SolveStatus::FeasibleCandidate)
        std::cout << " max-residual=" << out.max_residual;
    std::cout << "\n";
    if (out.status == SolveStatus::FeasibleCandidate)
        for (const auto& [sym, iv] : out.candidate)
            std::cout << "  box " << sym << " = [" << iv.lo << ", " << iv.hi
                      << "]\n";
    return out.status == SolveStatus::Undetermined ? 2 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"MMP orthogonality-diagram toolchain"};
    app.require_subcommand(1);

    // ---- generate ----
    auto* gen = app.add_subcommand("generate",
                                   "isomorph-free exhaustive generation");
    int g_n = 3, g_maxv = 0, g_maxe = 1 << 20;
    std::optional<int> g_girth;
    bool g_disconnected = false, g_all_sizes = false;
    std::vector<std::string> g_filters;
    std::string g_out;
    gen->add_option("--n", g_n, "vectors per edge")->required();
    gen->add_option("--max-vertices", g_maxv)->required();
    gen->add_option("--max-edges", g_maxe);
    gen->add_option("--min-girth", g_girth, "forbid loops smaller than this");
    gen->add_option("--filter", g_filters,
                    "prelim | probe:base=B,max_edges=M[,eps=E]");
    gen->add_flag("--disconnected", g_disconnected,
                  "also emit disconnected diagrams");
    gen->add_flag("--all-sizes", g_all_sizes,
                  "emit intermediate sizes too (default: only max edges or "
                  "vertices reached)");
    gen->add_option("--out", g_out, "output file (default stdout)");

    // ---- states01 ----
    auto* st = app.add_subcommand("states01", "0-1 state detection");
    std::string st_file;
    bool st_filter = false, st_relaxed = false;
    std::optional<int> st_enumerate;
    st->add_option("file", st_file, "diagram file (- for stdin)")->required();
    st->add_flag("--filter-no01", st_filter,
                 "print only the diagrams without 0-1 states");
    st->add_flag("--relaxed", st_relaxed, "allow short edges");
    st->add_option("--enumerate", st_enumerate,
                   "list up to this many states per diagram");

    // ---- solve ----
    auto* so = app.add_subcommand("solve", "realizability solving");
    std::string so_file, so_mode = "interval", so_values = "-1,0,1";
    int so_n = 0;
    double so_eps = 1e-6;
    std::optional<long> so_budget;
    bool so_noreduce = false, so_relaxed = false;
    so->add_option("file", so_file)->required();
    so->add_option("--mode", so_mode, "interval | discrete")
        ->check(CLI::IsMember({"interval", "discrete"}));
    so->add_option("--n", so_n, "dimension (default: edge size)");
    so->add_option("--eps", so_eps, "box width threshold");
    so->add_option("--budget", so_budget, "max bisections");
    so->add_option("--values", so_values, "discrete value set");
    so->add_flag("--no-reduce", so_noreduce,
                 "keep single-edge vertices in the system");
    so->add_flag("--relaxed", so_relaxed, "allow short edges");

    // ---- verify ----
    auto* ve = app.add_subcommand("verify", "check a solution file");
    std::string ve_diagram, ve_solution;
    double ve_tol = 1e-9;
    bool ve_relaxed = false;
    ve->add_option("--diagram", ve_diagram)->required();
    ve->add_option("--solution", ve_solution)->required();
    ve->add_option("--tol", ve_tol, "tolerance (0 forces exact arithmetic)");
    ve->add_flag("--relaxed", ve_relaxed, "allow short edges");

    // ---- stats ----
    auto* sa = app.add_subcommand("stats", "diagram statistics table");
    std::string sa_file;
    bool sa_relaxed = false;
    sa->add_option("file", sa_file)->required();
    sa->add_flag("--relaxed", sa_relaxed, "allow short edges");

    // ---- contains ----
    auto* co = app.add_subcommand("contains", "subdiagram search");
    std::string co_host, co_sub;
    co->add_option("host", co_host)->required();
    co->add_option("sub", co_sub)->required();

    // ---- catalog ----
    auto* ca = app.add_subcommand("catalog", "named reference systems");
    ca->require_subcommand(1);
    auto* ca_list = ca->add_subcommand("list", "all entry names");
    auto* ca_show = ca->add_subcommand("show", "print one entry");
    auto* ca_check = ca->add_subcommand("check", "run the entry's claims");
    std::string ca_name;
    std::optional<long> ca_budget;
    ca_show->add_option("name", ca_name)->required();
    ca_check->add_option("name", ca_name)->required();
    ca_check->add_option("--budget", ca_budget,
                         "bisection budget for infeasibility claims");

    // ---- pipeline ----
    auto* pi = app.add_subcommand("pipeline", "end-to-end search");
    pi->require_subcommand(1);
    auto* pr = pi->add_subcommand("run",
                                  "generate -> prelim -> states01 -> solve");
    int p_n = 3, p_maxv = 0, p_maxe = 1 << 20;
    std::optional<int> p_girth;
    bool p_noprelim = false, p_nosolve = false;
    long p_probe = 0;
    double p_eps = 1e-4;
    std::optional<long> p_budget;
    std::string p_csv, p_out;
    pr->add_option("--n", p_n)->required();
    pr->add_option("--max-vertices", p_maxv)->required();
    pr->add_option("--max-edges", p_maxe);
    pr->add_option("--min-girth", p_girth);
    pr->add_flag("--no-prelim", p_noprelim,
                 "disable the preliminary-pass filter");
    pr->add_option("--probe-base", p_probe,
                   "adaptive probe budget base (0 = off)");
    pr->add_flag("--no-solve", p_nosolve, "skip the final solver stage");
    pr->add_option("--eps", p_eps, "solver box width");
    pr->add_option("--budget", p_budget, "solver bisection budget");
    pr->add_option("--csv", p_csv, "write the stage-count table here");
    pr->add_option("--out", p_out, "write surviving diagrams here");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*gen) {
            mmp::GenSpec spec;
            spec.n_per_edge = g_n;
            spec.max_vertices = g_maxv;
            spec.max_edges = g_maxe;
            spec.min_girth = g_girth;
            spec.connected_only = !g_disconnected;
            spec.filters = g_filters;
            mmp::FilterRegistry reg;
            mmp::register_pipeline_filters(reg);
            std::ofstream file;
            std::ostream& out = open_out(file, g_out);
            std::map<std::pair<int, int>, long> census;
            mmp::generate(
                spec,
                [&](const mmp::Diagram& d) {
                    bool complete = d.edge_count() == spec.max_edges ||
                                    d.vertex_count() + g_n >
                                        spec.max_vertices;
                    if (g_all_sizes || complete)
                        out << diagram_text(d) << "\n";
                    ++census[{d.vertex_count(), d.edge_count()}];
                    return true;
                },
                reg);
            for (const auto& [key, count] : census)
                out << "# a=" << key.first << " b=" << key.second
                    << " count=" << count << "\n";
        } else if (*st) {
            auto diagrams = load_diagrams(st_file, st_relaxed);
            for (const auto& d : diagrams) {
                bool has = mmp::has_01_state(d);
                if (st_filter) {
                    if (!has) std::cout << diagram_text(d) << "\n";
                    continue;
                }
                std::cout << diagram_text(d) << "  "
                          << (has ? "has-01-state" : "no-01-state") << "\n";
                if (st_enumerate && has)
                    for (const auto& s :
                         mmp::enumerate_01_states(d, *st_enumerate))
                        std::cout << "  " << s.to_string() << "\n";
            }
        } else if (*so) {
            auto diagrams = load_diagrams(so_file, so_relaxed);
            int rc = 0;
            for (const auto& d : diagrams) {
                int n = so_n ? so_n : static_cast<int>(d.edge(0).size());
                rc = std::max(rc, solve_one(d, n, so_mode, so_eps, so_budget,
                                            so_values, !so_noreduce));
            }
            return rc;
        } else if (*ve) {
            mmp::ParseOptions opt;
            opt.validation.allow_short_edges = ve_relaxed;
            mmp::Diagram d = mmp::parse_file(read_all(ve_diagram), opt).at(0);
            mmp::VectorSystem vs =
                mmp::parse_solution(read_all(ve_solution), d);
            mmp::VerifyReport rep = mmp::verify_solution(d, vs, ve_tol);
            for (const auto& v : rep.violations) std::cout << v << "\n";
            std::cout << (rep.pass ? "PASS" : "FAIL") << "\n";
            return rep.pass ? 0 : 1;
        } else if (*sa) {
            std::cout << mmp::stats_report(load_diagrams(sa_file, sa_relaxed))
                             .csv();
        } else if (*co) {
            mmp::Diagram host = load_diagrams(co_host).at(0);
            mmp::Diagram sub = load_diagrams(co_sub).at(0);
            auto match = mmp::find_subdiagram(host, sub);
            if (!match) {
                std::cout << "not-contained\n";
                return 1;
            }
            std::cout << "contained:";
            for (mmp::Vertex v : *match) std::cout << " " << v + 1;
            std::cout << "\n";
        } else if (*ca) {
            if (*ca_list) {
                for (const auto& n : mmp::catalog_names())
                    std::cout << n << "\n";
            } else if (*ca_show) {
                const auto& e = mmp::catalog_get(ca_name);
                std::cout << "name: " << e.name << "\nn: " << e.n
                          << "\nmmp: " << e.mmp << "\n";
                mmp::DiagramStats s = mmp::stats(e.diagram());
                std::cout << "a: " << s.a << "\nb: " << s.b << "\n";
                for (const auto& c : e.claims)
                    std::cout << "claim: " << c << "\n";
                if (!e.note.empty()) std::cout << "note: " << e.note << "\n";
                if (!e.known_solution.empty())
                    std::cout << "solution:\n" << e.known_solution;
            } else {
                const auto& e = mmp::catalog_get(ca_name);
                bool all = true;
                for (const auto& r : mmp::check_claims(e, ca_budget)) {
                    std::cout << (r.pass ? "PASS" : "FAIL") << " " << r.claim;
                    if (!r.detail.empty()) std::cout << "  (" << r.detail << ")";
                    std::cout << "\n";
                    all = all && r.pass;
                }
                return all ? 0 : 1;
            }
        } else if (*pi) {
            mmp::GenSpec spec;
            spec.n_per_edge = p_n;
            spec.max_vertices = p_maxv;
            spec.max_edges = p_maxe;
            spec.min_girth = p_girth;
            mmp::PipelineConfig cfg;
            cfg.prelim = !p_noprelim;
            cfg.probe_base = p_probe;
            cfg.solve = !p_nosolve;
            cfg.solve_eps = p_eps;
            cfg.solve_budget = p_budget;
            std::ofstream hits_file;
            std::ostream* hits = nullptr;
            if (!p_out.empty()) hits = &open_out(hits_file, p_out);
            mmp::RunReport rep = mmp::run_pipeline(
                spec, cfg, [&](const mmp::PipelineHit& h) {
                    std::ostream& o = hits ? *hits : std::cout;
                    o << diagram_text(h.diagram) << "  # "
                      << status_name(h.outcome.status) << "\n";
                });
            std::cout << rep.text();
            if (!p_csv.empty()) {
                std::ofstream csv_file;
                open_out(csv_file, p_csv) << rep.csv();
            } else {
                std::cout << rep.csv();
            }
        }
    } catch (const mmp::DiagramError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}

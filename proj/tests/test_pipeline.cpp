#include <catch2/catch_amalgamated.hpp>

#include <mmp/canonical.hpp>
#include <mmp/catalog.hpp>
#include <mmp/format.hpp>
#include <mmp/pipeline.hpp>

using namespace mmp;

namespace {

void check_monotone(const RunReport& rep) {
    for (const auto& [key, c] : rep.by_size) {
        CHECK(c.generated >= c.post_prelim);
        CHECK(c.post_prelim >= c.post_states01);
        CHECK(c.post_states01 >= c.post_solver);
    }
    CHECK(rep.total.generated >= rep.total.post_prelim);
    CHECK(rep.total.post_prelim >= rep.total.post_states01);
    CHECK(rep.total.post_states01 >= rep.total.post_solver);
}

}  // namespace

TEST_CASE("pipeline finds the unique small triangle system and refutes it") {
    GenSpec spec;
    spec.n_per_edge = 3;
    spec.max_vertices = 7;
    spec.max_edges = 6;
    spec.min_girth = 3;

    PipelineConfig no_solve;
    no_solve.prelim = false;  // censuses must see infeasible diagrams too
    no_solve.solve = false;
    RunReport rep = run_pipeline(spec, no_solve);
    check_monotone(rep);
    CHECK(rep.total.post_states01 == 1);
    REQUIRE(rep.hits.size() == 1);
    CHECK(certificate(rep.hits[0].diagram) ==
          certificate(parse_mmp("123,345,561,275,476")));

    PipelineConfig with_solve;
    with_solve.prelim = false;
    with_solve.solve_budget = 5000;
    RunReport rep2 = run_pipeline(spec, with_solve);
    check_monotone(rep2);
    CHECK(rep2.total.post_states01 == 1);
    CHECK(rep2.total.post_solver == 0);  // the 7-5 system is unrealizable
    CHECK(rep2.hits.empty());
}

TEST_CASE("minimal generation range yields no KS candidates") {
    GenSpec spec;
    spec.n_per_edge = 3;
    spec.max_vertices = 3;
    RunReport rep = run_pipeline(spec, {});
    check_monotone(rep);
    CHECK(rep.total.generated == 1);  // just the single triple
    CHECK(rep.total.post_states01 == 0);
    CHECK(rep.hits.empty());
}

TEST_CASE("prelim filter never prunes a solvable system") {
    FilterRegistry reg;
    register_pipeline_filters(reg);
    FilterHook prelim = reg.make("prelim");
    for (const char* name :
         {"cabello-18-9", "peres-19-10", "fig4a-20-11", "fig4c-22-13",
          "ck-51-37", "peres-24-24"}) {
        INFO(name);
        CHECK(prelim(catalog_get(name).diagram()).passed());
    }
}

TEST_CASE("probe with zero budget never changes the census") {
    GenSpec spec;
    spec.n_per_edge = 3;
    spec.max_vertices = 8;
    spec.max_edges = 4;

    PipelineConfig plain;
    plain.prelim = false;
    plain.solve = false;
    PipelineConfig probed = plain;
    probed.probe_base = 0;

    RunReport a = run_pipeline(spec, plain);
    RunReport b = run_pipeline(spec, probed);
    CHECK(a.by_size.size() == b.by_size.size());
    for (const auto& [key, c] : a.by_size) {
        auto it = b.by_size.find(key);
        REQUIRE(it != b.by_size.end());
        CHECK(it->second.generated == c.generated);
        CHECK(it->second.post_prelim == c.post_prelim);
    }
}

TEST_CASE("probe with a real budget only removes refutable subtrees") {
    GenSpec spec;
    spec.n_per_edge = 3;
    spec.max_vertices = 8;
    spec.max_edges = 4;
    spec.min_girth = 3;

    PipelineConfig plain;
    plain.prelim = false;
    plain.solve = false;
    PipelineConfig probed = plain;
    probed.probe_base = 50;

    RunReport a = run_pipeline(spec, plain);
    RunReport b = run_pipeline(spec, probed);
    check_monotone(b);
    for (const auto& [key, c] : b.by_size) {
        auto it = a.by_size.find(key);
        REQUIRE(it != a.by_size.end());
        CHECK(c.post_prelim <= it->second.post_prelim);
    }
    // 0-1-state-free survivors are the same: the probe only cuts diagrams
    // (and descendants) that interval arithmetic refuted, and none of the
    // no-0-1-state diagrams at this size are realizable anyway, so equality
    // here just checks the probe did not cut a feasible branch by accident
    CHECK(b.total.post_states01 <= a.total.post_states01);
}

TEST_CASE("stats report reproduces the published arithmetic") {
    std::vector<Diagram> ds = {catalog_get("cabello-18-9").diagram()};
    StatsReport rep = stats_report(ds);
    REQUIRE(rep.rows.size() == 1);
    CHECK(rep.rows[0].a == 18);
    CHECK(rep.rows[0].b == 9);
    CHECK(rep.rows[0].nb_2a == 0);  // 4*9 - 2*18
    CHECK(rep.rows[0].nb_2astar == 0);
    CHECK(rep.min_nb_2a == 0);

    StatsReport empty = stats_report({});
    CHECK(empty.rows.empty());
    CHECK_FALSE(empty.min_nb_2a.has_value());
    CHECK_FALSE(empty.min_nb_2astar.has_value());
}

TEST_CASE("no-0-1-state reference diagrams satisfy the counting bound") {
    // nb >= 2 a*: fewer equations than unknowns rules a KS set out
    for (const char* name :
         {"smallest-7-5", "smallest-15-11-hexagon", "smallest-15-11-heptagon",
          "smallest-19-13a", "smallest-19-13b", "smallest-6-3",
          "smallest-10-5", "smallest-22-11a", "smallest-22-11b",
          "smallest-38-19"}) {
        INFO(name);
        StatsReport rep = stats_report({catalog_get(name).diagram()});
        CHECK(rep.rows[0].nb_2astar >= 0);
    }
}

TEST_CASE("report tables carry their documented headers") {
    RunReport rep;
    rep.by_size[{7, 5}] = {4, 3, 2, 1};
    std::string csv = rep.csv();
    CHECK(csv.rfind("a,b,generated,post_prelim,post_states01,post_solver\n",
                    0) == 0);
    CHECK(csv.find("7,5,4,3,2,1\n") != std::string::npos);
    CHECK(stats_report({}).csv() ==
          "a,b,a_star,girth,nb,nb_2astar,nb_2a\n");
}

#include <catch2/catch_amalgamated.hpp>

#include <mmp/format.hpp>
#include <mmp/generate.hpp>
#include <mmp/girth.hpp>

#include "oracles.hpp"

using namespace mmp;

namespace {

// Collect (a,b) class counts plus the certificate set for a run.
struct RunResult {
    std::map<std::pair<int, int>, long> counts;
    std::multiset<std::string> certs;
};

RunResult run(const GenSpec& spec, const FilterRegistry& reg = {}) {
    RunResult r;
    generate(spec, [&](const Diagram& d) {
        r.counts[{d.vertex_count(), d.edge_count()}]++;
        r.certs.insert(certificate(d));
        return true;
    }, reg);
    return r;
}

// Orbit count of valid reused-vertex sets computed the slow way: enumerate
// every subset passing the same admissibility rules, then group under the
// full brute-force automorphism list.
long slow_orbit_count(const Diagram& d, const GenSpec& spec) {
    auto auts = oracle::automorphisms(d);
    int n = spec.n_per_edge;
    int a = d.vertex_count();
    std::set<std::set<std::vector<Vertex>>> orbits;
    for (long mask = 0; mask < (1L << a); ++mask) {
        std::vector<Vertex> s;
        for (int v = 0; v < a; ++v)
            if (mask >> v & 1) s.push_back(v);
        int fresh = n - static_cast<int>(s.size());
        if (fresh < 0 || a + fresh > spec.max_vertices) continue;
        if (spec.connected_only && s.empty() && !d.empty()) continue;
        bool ok = true;
        for (const auto& e : d.edges()) {
            int inter = 0;
            for (Vertex v : s)
                if (std::find(e.begin(), e.end(), v) != e.end()) ++inter;
            if (inter > n - 2) ok = false;
        }
        if (!ok) continue;
        if (spec.min_girth && *spec.min_girth > 2) {
            auto edges = d.edges();
            auto added = s;
            for (int i = 0; i < fresh; ++i) added.push_back(a + i);
            edges.push_back(added);
            auto g = oracle::girth(Diagram(std::move(edges)));
            if (g && *g < *spec.min_girth) continue;
        }
        std::set<std::vector<Vertex>> orbit;
        for (const auto& p : auts) {
            auto img = s;
            for (Vertex& v : img) v = p[v];
            std::sort(img.begin(), img.end());
            orbit.insert(img);
        }
        orbits.insert(orbit);
    }
    return static_cast<long>(orbits.size());
}

}  // namespace

TEST_CASE("extension orbits of small diagrams") {
    GenSpec spec;
    spec.n_per_edge = 3;
    spec.max_vertices = 12;
    spec.min_girth = 5;
    spec.connected_only = false;

    auto root = extension_orbits(Diagram{}, spec);
    REQUIRE(root.size() == 1);
    CHECK(root[0].reused_vertices.empty());
    CHECK(root[0].new_vertex_count == 3);

    // one triple: the three reuse-1 sites are equivalent, reuse-2 closes a
    // 2-loop, so only reuse-1 and reuse-0 remain
    Diagram one = parse_mmp("123");
    auto sites = extension_orbits(one, spec);
    REQUIRE(sites.size() == 2);
    CHECK(sites[0].reused_vertices.empty());
    CHECK(sites[1].reused_vertices.size() == 1);

    spec.connected_only = true;
    CHECK(extension_orbits(one, spec).size() == 1);
}

TEST_CASE("extension orbit counts match the brute-force grouping") {
    GenSpec spec;
    spec.n_per_edge = 3;
    spec.max_vertices = 11;
    for (auto girth : std::vector<std::optional<int>>{std::nullopt, 3, 5}) {
        spec.min_girth = girth;
        for (bool conn : {true, false}) {
            spec.connected_only = conn;
            for (const char* text :
                 {"123", "123,345", "123,345,567", "123,145,167"}) {
                Diagram d = parse_mmp(text);
                INFO(text << " girth>=" << girth.value_or(2) << " conn=" << conn);
                CHECK(static_cast<long>(extension_orbits(d, spec).size()) ==
                      slow_orbit_count(d, spec));
            }
        }
    }
    spec.n_per_edge = 4;
    spec.min_girth = std::nullopt;
    spec.connected_only = true;
    for (const char* text : {"1234", "1234,4567", "1234,2356"}) {
        Diagram d = parse_mmp(text);
        INFO(text);
        CHECK(static_cast<long>(extension_orbits(d, spec).size()) ==
              slow_orbit_count(d, spec));
    }
}

TEST_CASE("is_canonical_child accepts the trivial cases") {
    CHECK(is_canonical_child(parse_mmp("123"), 0));
    CHECK(is_canonical_child(parse_mmp("123,345"), 1));
    CHECK(is_canonical_child(parse_mmp("123,345"), 1, true));
}

TEST_CASE("generation base cases") {
    GenSpec spec;
    spec.n_per_edge = 3;
    spec.max_vertices = 3;
    auto r = run(spec);
    REQUIRE(r.certs.size() == 1);
    CHECK(*r.certs.begin() == certificate(parse_mmp("123")));

    spec.n_per_edge = 4;
    spec.max_vertices = 6;
    std::vector<Diagram> six_three;
    generate(spec, [&](const Diagram& d) {
        if (d.vertex_count() == 6 && d.edge_count() == 3)
            six_three.push_back(d);
        return true;
    });
    REQUIRE(six_three.size() == 1);
    CHECK(is_isomorphic(six_three[0], parse_mmp("1234,2356,1456")));
    CHECK(girth(six_three[0]) == 2);
}

TEST_CASE("census matches the breadth-first oracle") {
    struct Case {
        int n, max_a, max_b, min_girth;
        bool connected;
    };
    for (Case c : {Case{3, 8, 9, 2, true}, Case{3, 7, 9, 2, false},
                   Case{4, 9, 9, 2, true}, Case{3, 8, 9, 3, true},
                   Case{4, 8, 9, 4, true}}) {
        GenSpec spec;
        spec.n_per_edge = c.n;
        spec.max_vertices = c.max_a;
        spec.max_edges = c.max_b;
        if (c.min_girth > 2) spec.min_girth = c.min_girth;
        spec.connected_only = c.connected;
        auto r = run(spec);
        INFO("n=" << c.n << " a<=" << c.max_a << " girth>=" << c.min_girth
                  << " conn=" << c.connected);
        CHECK(r.counts ==
              oracle::census(c.n, c.max_a, c.max_b, c.min_girth, c.connected));
        // isomorph-freeness: no certificate twice
        CHECK(std::adjacent_find(r.certs.begin(), r.certs.end()) ==
              r.certs.end());
    }
}

TEST_CASE("census is independent of orbit representative choice") {
    GenSpec spec;
    spec.n_per_edge = 3;
    spec.max_vertices = 8;
    spec.max_edges = 9;
    auto base = run(spec);
    for (unsigned seed : {1u, 2u, 77u}) {
        spec.orbit_shuffle_seed = seed;
        auto shuffled = run(spec);
        CHECK(shuffled.certs == base.certs);
    }
}

TEST_CASE("girth-5 generation tree up to 10 vertices") {
    GenSpec spec;
    spec.n_per_edge = 3;
    spec.min_girth = 5;
    spec.connected_only = true;
    spec.max_vertices = 9;
    spec.max_edges = 9;
    auto nine = run(spec);
    CHECK(nine.counts ==
          oracle::census(3, 9, 9, 5, true));
    // with at most 9 vertices no loop of size >= 5 can close yet
    generate(spec, [&](const Diagram& d) {
        CHECK_FALSE(girth(d).has_value());
        return true;
    });
    // the first loop appears with 10 vertices: the pentagon
    spec.max_vertices = 10;
    bool found_pentagon = false;
    Diagram pentagon = parse_mmp("123,345,567,789,9A1");
    generate(spec, [&](const Diagram& d) {
        if (girth(d).has_value()) {
            CHECK(girth(d) == 5);
            if (is_isomorphic(d, pentagon)) found_pentagon = true;
        }
        return true;
    });
    CHECK(found_pentagon);
}

TEST_CASE("filters prune subtrees but never add diagrams") {
    FilterRegistry reg;
    // monotone: vertex count only grows along a branch
    reg.register_filter("cap", [](const std::string& params) {
        int cap = std::stoi(params);
        return [cap](const Diagram& d) {
            return d.vertex_count() <= cap
                       ? FilterVerdict::pass()
                       : FilterVerdict::prune("vertex cap");
        };
    });
    GenSpec spec;
    spec.n_per_edge = 3;
    spec.max_vertices = 8;
    spec.max_edges = 9;
    auto unfiltered = run(spec);
    spec.filters = {"cap:6"};
    auto filtered = run(spec, reg);
    CHECK(std::includes(unfiltered.certs.begin(), unfiltered.certs.end(),
                        filtered.certs.begin(), filtered.certs.end()));
    // equivalent to simply lowering the bound
    GenSpec direct = spec;
    direct.filters.clear();
    direct.max_vertices = 6;
    CHECK(run(direct).certs == filtered.certs);

    CHECK_THROWS_AS(
        [&] {
            GenSpec bad = spec;
            bad.filters = {"nonexistent"};
            generate(bad, [](const Diagram&) { return true; }, reg);
        }(),
        DiagramError);
}

TEST_CASE("generation stops when the sink declines") {
    GenSpec spec;
    spec.n_per_edge = 3;
    spec.max_vertices = 9;
    spec.max_edges = 9;
    int seen = 0;
    generate(spec, [&](const Diagram&) { return ++seen < 5; });
    CHECK(seen == 5);
}

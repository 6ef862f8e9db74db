#include <catch2/catch_amalgamated.hpp>

#include <set>

#include <mmp/catalog.hpp>
#include <mmp/stats.hpp>

using namespace mmp;

TEST_CASE("catalog names are unique and resolvable") {
    auto names = catalog_names();
    std::set<std::string> uniq(names.begin(), names.end());
    CHECK(uniq.size() == names.size());
    CHECK(names.size() == catalog().size());
    for (const auto& n : names) CHECK(catalog_get(n).name == n);
    CHECK_THROWS_AS(catalog_get("no-such-system"), DiagramError);
}

TEST_CASE("every catalog entry parses and validates") {
    for (const auto& e : catalog()) {
        INFO(e.name);
        Diagram d = e.diagram();
        CHECK(d.vertex_count() > 0);
        ValidationOptions v;
        v.allow_short_edges = e.relaxed;
        CHECK_NOTHROW(d.validate(v));
        for (const Edge& edge : d.edges()) {
            CHECK(static_cast<int>(edge.size()) <= e.n);
            if (!e.relaxed) CHECK(static_cast<int>(edge.size()) == e.n);
        }
    }
}

TEST_CASE("native catalog texts round-trip byte-identically") {
    for (const auto& e : catalog()) {
        if (e.numeric_format || e.relaxed) continue;
        INFO(e.name);
        CHECK(serialize(e.diagram()) == e.mmp);
    }
}

TEST_CASE("relaxed and numeric texts reach a parse-serialize fixed point") {
    for (const auto& e : catalog()) {
        INFO(e.name);
        ParseOptions opt;
        opt.validation.allow_short_edges = e.relaxed;
        if (e.numeric_format) {
            std::string once = serialize_numeric(e.diagram());
            CHECK(serialize_numeric(parse_numeric(once, opt)) == once);
        } else {
            std::string once = serialize(e.diagram());
            CHECK(serialize(parse_mmp(once, opt)) == once);
        }
    }
}

TEST_CASE("known solutions verify exactly") {
    int with_solution = 0;
    for (const auto& e : catalog()) {
        if (e.known_solution.empty()) continue;
        ++with_solution;
        INFO(e.name);
        Diagram d = e.diagram();
        VectorSystem vs = parse_solution(e.known_solution, d);
        REQUIRE(vs.exact);
        VerifyReport rep = verify_solution(d, vs, 0);
        if (!rep.pass) INFO(rep.violations.front());
        CHECK(rep.pass);
    }
    CHECK(with_solution == 8);
}

TEST_CASE("state and containment claims hold") {
    for (const auto& e : catalog()) {
        for (const auto& claim : e.claims) {
            if (claim == "infeasible") continue;  // solver claims below
            INFO(e.name << ": " << claim);
            Diagram d = e.diagram();
            if (claim == "no_01_state")
                CHECK_FALSE(has_01_state(d));
            else if (claim == "has_01_state")
                CHECK(has_01_state(d));
            else if (claim.rfind("contains:", 0) == 0)
                CHECK(contains_subdiagram(
                    d, catalog_get(claim.substr(9)).diagram()));
            else if (claim.rfind("discrete_solvable:", 0) == 0)
                CHECK(discrete_check(d, e.n, {-1, 0, 1}).has_value());
            else
                FAIL("unknown claim tag " << claim);
        }
    }
}

TEST_CASE("fast infeasibility claims hold") {
    for (const char* name : {"smallest-6-3", "smallest-7-5", "smallest-10-5",
                             "smallest-15-11-hexagon",
                             "smallest-15-11-heptagon"}) {
        const CatalogEntry& e = catalog_get(name);
        INFO(e.name);
        auto results = check_claims(e, 50000);
        for (const auto& r : results) {
            INFO(r.claim << " " << r.detail);
            CHECK(r.pass);
        }
    }
}

TEST_CASE("assembled 24-24 system has the right shape") {
    const CatalogEntry& e = catalog_get("peres-24-24");
    Diagram d = e.diagram();
    DiagramStats s = stats(d);
    CHECK(s.a == 24);
    CHECK(s.b == 24);
    auto deg = d.vertex_degrees();
    for (Vertex v = 0; v < d.vertex_count(); ++v) CHECK(deg[v] == 4);
}

TEST_CASE("assembled 192-118 system has the historical counts") {
    const CatalogEntry& e = catalog_get("ks-192");
    Diagram d = e.diagram();
    DiagramStats s = stats(d);
    CHECK(s.a == 192);
    CHECK(s.b == 118);
    CHECK(3 * s.b - 2 * s.a == -30);  // fewer equations than unknowns
    for (const Edge& edge : d.edges()) CHECK(edge.size() == 3);
    auto deg = d.vertex_degrees();
    int shared = 0;
    for (Vertex v = 0; v < d.vertex_count(); ++v)
        if (deg[v] >= 3) ++shared;
    CHECK(shared >= 3);  // the three block-fusing vertices
}

TEST_CASE("rebuilt drop-K system supports its printed solution") {
    const CatalogEntry& e = catalog_get("fig5b-minus-K");
    Diagram d = e.diagram();
    CHECK(d.vertex_count() == 19);
    int full = 0, shortened = 0;
    for (const Edge& edge : d.edges())
        (edge.size() == 4 ? full : shortened)++;
    CHECK(full == 9);
    CHECK(shortened == 2);
}

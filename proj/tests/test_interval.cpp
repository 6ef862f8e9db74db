#include <catch2/catch_amalgamated.hpp>

#include <random>

#include <mmp/interval.hpp>

using namespace mmp;

TEST_CASE("interval arithmetic endpoints") {
    Interval a(1, 2), b(-3, 4);
    Interval s = a + b;
    CHECK(s.lo <= -2);
    CHECK(s.hi >= 6);
    CHECK(s.lo == Catch::Approx(-2));
    CHECK(s.hi == Catch::Approx(6));
    Interval m = a * b;
    CHECK(m.lo == Catch::Approx(-6));
    CHECK(m.hi == Catch::Approx(8));
    Interval d = a - b;
    CHECK(d.lo == Catch::Approx(-3));
    CHECK(d.hi == Catch::Approx(5));
    CHECK(b.contains_zero());
    CHECK_FALSE(a.contains_zero());
    CHECK(Interval(-1, 1).mid() == 0);
}

TEST_CASE("even powers tighten across zero") {
    Interval x(-2, 1);
    Interval sq = interval_pow(x, 2);
    CHECK(sq.lo <= 0);
    CHECK(sq.lo >= -1e-12);
    CHECK(sq.hi == Catch::Approx(4));
    Interval cube = interval_pow(x, 3);
    CHECK(cube.lo == Catch::Approx(-8));
    CHECK(cube.hi == Catch::Approx(4).margin(1e-9));
    Interval pos(0.5, 2);
    Interval p4 = interval_pow(pos, 4);
    CHECK(p4.lo == Catch::Approx(0.0625));
    CHECK(p4.hi == Catch::Approx(16));
}

TEST_CASE("reciprocal") {
    Interval r = interval_reciprocal(Interval(2, 4));
    CHECK(r.lo == Catch::Approx(0.25));
    CHECK(r.hi == Catch::Approx(0.5));
    Interval n = interval_reciprocal(Interval(-4, -2));
    CHECK(n.lo == Catch::Approx(-0.5));
    CHECK(n.hi == Catch::Approx(-0.25));
    Interval w = interval_reciprocal(Interval(-1, 1));
    CHECK(std::isinf(w.lo));
    CHECK(std::isinf(w.hi));
}

TEST_CASE("polynomial enclosure") {
    // x^2 + y over x in [-1,1], y in [0,0.2]
    Poly p = Poly::symbol(0) * Poly::symbol(0) + Poly::symbol(1);
    std::map<int, Interval> box{{0, Interval(-1, 1)}, {1, Interval(0, 0.2)}};
    Interval r = interval_eval(p, box);
    CHECK(r.lo <= 0);
    CHECK(r.lo >= -1e-12);
    CHECK(r.hi == Catch::Approx(1.2));
}

TEST_CASE("dense and sparse box evaluation agree") {
    Poly p = Poly::symbol(0) * Poly::symbol(2) -
             Poly::constant(Rational(3, 2)) * Poly::symbol(1);
    std::map<int, Interval> sparse{
        {0, Interval(-1, 0.5)}, {1, Interval(0, 1)}, {2, Interval(0.25, 2)}};
    std::vector<Interval> dense{Interval(-1, 0.5), Interval(0, 1),
                                Interval(0.25, 2)};
    Interval a = interval_eval(p, sparse);
    Interval b = interval_eval(p, dense);
    CHECK(a.lo == b.lo);
    CHECK(a.hi == b.hi);
}

TEST_CASE("random sampling never escapes the enclosure") {
    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> coef(-5, 5), expo(0, 3), nsym(1, 3);
    std::uniform_real_distribution<double> pnt(0, 1);
    for (int trial = 0; trial < 400; ++trial) {
        // random polynomial over up to 3 symbols
        Poly p;
        int terms = 1 + trial % 4;
        for (int t = 0; t < terms; ++t) {
            Poly term = Poly::constant(Rational(coef(rng)));
            for (int s = 0; s < nsym(rng); ++s)
                term = term * Poly::symbol(s).pow(expo(rng));
            p = p + term;
        }
        std::map<int, Interval> box;
        for (int s = 0; s < 3; ++s) {
            double a = -2 + 4 * pnt(rng), b = -2 + 4 * pnt(rng);
            box[s] = Interval(std::min(a, b), std::max(a, b));
        }
        Interval enc = interval_eval(p, box);
        for (int probe = 0; probe < 20; ++probe) {
            std::map<int, Rational> at;
            for (int s = 0; s < 3; ++s) {
                // rational point inside the range (coarse 1/16 lattice)
                long long num = static_cast<long long>(std::ceil(
                    (box[s].lo + pnt(rng) * box[s].width()) * 16));
                Rational q(num, 16);
                if (q.to_double() < box[s].lo || q.to_double() > box[s].hi)
                    break;
                at[s] = q;
            }
            if (at.size() != 3) continue;
            double val = p.eval(at).to_double();
            CHECK(val >= enc.lo - 1e-9);
            CHECK(val <= enc.hi + 1e-9);
        }
    }
}

#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <vector>

#include <mmp/poly.hpp>

namespace mmp {

// Closed interval with outward-safe arithmetic: every operation widens the
// result by one ulp in each direction, a conservative stand-in for directed
// rounding.  Infinite endpoints appear only through division by intervals
// containing zero.
struct Interval {
    double lo = 0;
    double hi = 0;

    Interval() = default;
    Interval(double x) : lo(x), hi(x) {}
    Interval(double l, double h) : lo(l), hi(h) {}

    static Interval whole() {
        double inf = std::numeric_limits<double>::infinity();
        return {-inf, inf};
    }
    static Interval exact(double x) { return {x, x}; }

    bool contains(double x) const { return lo <= x && x <= hi; }
    bool contains_zero() const { return lo <= 0 && 0 <= hi; }
    double width() const { return hi - lo; }
    double mid() const {
        if (!std::isfinite(lo) || !std::isfinite(hi)) return 0;
        return lo + (hi - lo) / 2;
    }
};

namespace detail {

inline double down(double x) {
    if (!std::isfinite(x)) return x;
    return std::nextafter(x, -std::numeric_limits<double>::infinity());
}
inline double up(double x) {
    if (!std::isfinite(x)) return x;
    return std::nextafter(x, std::numeric_limits<double>::infinity());
}
inline Interval outward(double lo, double hi) { return {down(lo), up(hi)}; }

}  // namespace detail

inline Interval operator+(const Interval& a, const Interval& b) {
    return detail::outward(a.lo + b.lo, a.hi + b.hi);
}
inline Interval operator-(const Interval& a, const Interval& b) {
    return detail::outward(a.lo - b.hi, a.hi - b.lo);
}
inline Interval operator*(const Interval& a, const Interval& b) {
    double p[] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
    double lo = p[0], hi = p[0];
    for (double x : p) {
        if (std::isnan(x)) x = 0;  // 0 * inf corner; 0 is always attained
        lo = std::min(lo, x);
        hi = std::max(hi, x);
    }
    return detail::outward(lo, hi);
}

inline Interval interval_reciprocal(const Interval& a) {
    if (a.contains_zero()) return Interval::whole();
    return detail::outward(1.0 / a.hi, 1.0 / a.lo);
}

// Integer power with even-exponent tightening; negative exponents go through
// the reciprocal (whole line when the base straddles zero).
inline Interval interval_pow(const Interval& a, int e) {
    if (e == 0) return Interval::exact(1);
    if (e < 0) return interval_pow(interval_reciprocal(a), -e);
    if (e % 2 == 0) {
        double alo = std::abs(a.lo), ahi = std::abs(a.hi);
        double mx = std::max(alo, ahi);
        double mn = a.contains_zero() ? 0 : std::min(alo, ahi);
        Interval base = detail::outward(mn, mx);  // |a|
        Interval out = Interval::exact(1);
        for (int i = 0; i < e / 2; ++i) out = out * (base * base);
        return out;
    }
    Interval out = a;
    for (int i = 1; i < e; ++i) out = out * a;
    return out;
}

// Enclosure of a polynomial over a box; every symbol of the polynomial must
// have a range in the box.
inline Interval interval_eval(const Poly& p,
                              const std::map<int, Interval>& box) {
    Interval sum = Interval::exact(0);
    for (const auto& [m, c] : p.terms()) {
        double cd = c.to_double();
        Interval term = detail::outward(cd, cd);  // absorb conversion error
        for (auto [s, e] : m) term = term * interval_pow(box.at(s), e);
        sum = sum + term;
    }
    return sum;
}

// Same over a dense box indexed by symbol id (faster in inner loops).
inline Interval interval_eval(const Poly& p, const std::vector<Interval>& box) {
    Interval sum = Interval::exact(0);
    for (const auto& [m, c] : p.terms()) {
        double cd = c.to_double();
        Interval term = detail::outward(cd, cd);
        for (auto [s, e] : m) term = term * interval_pow(box[s], e);
        sum = sum + term;
    }
    return sum;
}

}  // namespace mmp

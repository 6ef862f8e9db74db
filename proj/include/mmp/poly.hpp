#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <mmp/rational.hpp>

namespace mmp {

// Product of symbol powers; sorted by symbol, exponents nonzero.  Negative
// exponents are allowed and only ever attached to symbols known to be
// nonzero (division happens exclusively by such symbols).
using Monomial = std::vector<std::pair<int, int>>;

inline Monomial monomial_mul(const Monomial& a, const Monomial& b) {
    Monomial out;
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.push_back(b[j++]);
        } else {
            int e = a[i].second + b[j].second;
            if (e != 0) out.push_back({a[i].first, e});
            ++i;
            ++j;
        }
    }
    return out;
}

inline Monomial monomial_pow(const Monomial& m, int e) {
    Monomial out;
    for (auto [s, x] : m) out.push_back({s, x * e});
    return out;
}

// Sparse multivariate polynomial with exact rational coefficients.
class Poly {
public:
    Poly() = default;
    explicit Poly(Rational c) {
        if (!c.is_zero()) terms_[{}] = c;
    }
    static Poly constant(Rational c) { return Poly(std::move(c)); }
    static Poly symbol(int s) {
        Poly p;
        p.terms_[{{s, 1}}] = Rational(1);
        return p;
    }

    const std::map<Monomial, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
    }
    Rational constant_value() const {
        if (terms_.empty()) return Rational(0);
        return terms_.begin()->second;
    }
    size_t term_count() const { return terms_.size(); }

    void add_term(Monomial m, const Rational& c) {
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            if (!c.is_zero()) terms_.emplace(std::move(m), c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        Poly out = a;
        for (const auto& [m, c] : b.terms_) out.add_term(m, c);
        return out;
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        Poly out = a;
        for (const auto& [m, c] : b.terms_) out.add_term(m, -c);
        return out;
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        Poly out;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_)
                out.add_term(monomial_mul(ma, mb), ca * cb);
        return out;
    }
    Poly operator-() const {
        Poly out;
        for (const auto& [m, c] : terms_) out.terms_[m] = -c;
        return out;
    }
    friend Poly operator*(const Poly& a, const Rational& c) {
        Poly out;
        if (c.is_zero()) return out;
        for (const auto& [m, k] : a.terms_) out.terms_[m] = k * c;
        return out;
    }

    Poly pow(int e) const {
        Poly out = Poly::constant(Rational(1));
        for (int i = 0; i < e; ++i) out = out * *this;
        return out;
    }

    std::set<int> symbols() const {
        std::set<int> out;
        for (const auto& [m, c] : terms_)
            for (auto [s, e] : m) out.insert(s);
        return out;
    }

    bool contains(int sym) const {
        for (const auto& [m, c] : terms_)
            for (auto [s, e] : m)
                if (s == sym) return true;
        return false;
    }

    // smallest exponent sym takes over the terms (0 when absent somewhere)
    int min_exponent(int sym) const {
        int mn = 0;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            int e = 0;
            for (auto [s, x] : m)
                if (s == sym) e = x;
            if (first) {
                mn = e;
                first = false;
            } else {
                mn = std::min(mn, e);
            }
        }
        return mn;
    }

    // Replace sym by a polynomial.  Negative powers of sym require the
    // replacement to be a single (invertible) monomial term; returns nullopt
    // when that fails.
    std::optional<Poly> substituted(int sym, const Poly& repl) const {
        Poly out;
        for (const auto& [m, c] : terms_) {
            int e = 0;
            Monomial rest;
            for (auto [s, x] : m) {
                if (s == sym)
                    e = x;
                else
                    rest.push_back({s, x});
            }
            Poly term;
            term.terms_[rest] = c;
            if (e > 0) {
                term = term * repl.pow(e);
            } else if (e < 0) {
                if (repl.terms_.size() != 1) return std::nullopt;
                const auto& [rm, rc] = *repl.terms_.begin();
                if (rc.is_zero()) return std::nullopt;
                Rational rcpow(1);
                for (int i = 0; i < -e; ++i) rcpow /= rc;
                Poly inv;
                inv.terms_[monomial_pow(rm, e)] = rcpow;
                term = term * inv;
            }
            out = out + term;
        }
        return out;
    }

    // Replace even powers of sym by powers of its known square value.
    Poly squares_substituted(int sym, const Rational& sq) const {
        Poly out;
        for (const auto& [m, c] : terms_) {
            Monomial rest;
            int e = 0;
            for (auto [s, x] : m) {
                if (s == sym)
                    e = x;
                else
                    rest.push_back({s, x});
            }
            // e = 2q + r with r in {0,1}
            int r = ((e % 2) + 2) % 2;
            int q = (e - r) / 2;
            Rational coeff = c;
            if (q >= 0)
                for (int i = 0; i < q; ++i) coeff *= sq;
            else
                for (int i = 0; i < -q; ++i) coeff /= sq;
            Monomial mm = rest;
            if (r != 0) {
                mm.push_back({sym, r});
                std::sort(mm.begin(), mm.end());
            }
            out.add_term(std::move(mm), coeff);
        }
        return out;
    }

    // Largest monomial dividing every term (per-symbol minimum exponent,
    // including negative ones, so it also clears denominators).
    Monomial common_monomial() const {
        if (terms_.empty()) return {};
        Monomial out;
        bool first = true;
        std::map<int, int> mins;
        for (const auto& [m, c] : terms_) {
            std::map<int, int> cur;
            for (auto [s, e] : m) cur[s] = e;
            if (first) {
                mins = cur;
                first = false;
            } else {
                for (auto& [s, mn] : mins) {
                    auto f = cur.find(s);
                    mn = std::min(mn, f == cur.end() ? 0 : f->second);
                }
                for (auto [s, e] : cur)
                    if (e < 0 && !mins.count(s)) mins[s] = std::min(0, e);
            }
        }
        for (auto [s, e] : mins)
            if (e != 0) out.push_back({s, e});
        return out;
    }

    Poly divided_by_monomial(const Monomial& m) const {
        Poly out;
        Monomial inv = monomial_pow(m, -1);
        for (const auto& [mm, c] : terms_) out.terms_[monomial_mul(mm, inv)] = c;
        return out;
    }

    // Exact evaluation; every symbol must be present in vals.
    Rational eval(const std::map<int, Rational>& vals) const {
        Rational out(0);
        for (const auto& [m, c] : terms_) {
            Rational t = c;
            for (auto [s, e] : m) {
                const Rational& v = vals.at(s);
                if (e > 0)
                    for (int i = 0; i < e; ++i) t *= v;
                else
                    for (int i = 0; i < -e; ++i) t /= v;
            }
            out += t;
        }
        return out;
    }

    std::string to_string(
        const std::function<std::string(int)>& namer = {}) const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [m, c] : terms_) {
            if (!out.empty()) out += " + ";
            out += c.to_string();
            for (auto [s, e] : m) {
                out += "*" + (namer ? namer(s) : "x" + std::to_string(s));
                if (e != 1) out += "^" + std::to_string(e);
            }
        }
        return out;
    }

    friend bool operator==(const Poly& a, const Poly& b) {
        return a.terms_ == b.terms_;
    }

private:
    std::map<Monomial, Rational> terms_;
};

}  // namespace mmp

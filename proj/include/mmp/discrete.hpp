#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include <mmp/diagram.hpp>
#include <mmp/vectors.hpp>

namespace mmp {

namespace detail {

// Candidate rays over a value set, one representative per scalar-multiple
// class: first nonzero component positive, components gcd-reduced.
inline std::vector<std::vector<long long>> discrete_candidates(
    int n, const std::vector<long long>& values) {
    std::set<std::vector<long long>> reps;
    std::vector<long long> cur(n, 0);
    std::function<void(int)> walk = [&](int k) {
        if (k == n) {
            long long g = 0;
            for (long long x : cur) g = std::gcd(g, x < 0 ? -x : x);
            if (g == 0) return;  // zero vector
            auto r = cur;
            for (long long& x : r) x /= g;
            for (long long x : r) {
                if (x > 0) break;
                if (x < 0) {
                    for (long long& y : r) y = -y;
                    break;
                }
            }
            reps.insert(r);
            return;
        }
        for (long long v : values) {
            cur[k] = v;
            walk(k + 1);
        }
    };
    walk(0);
    return {reps.begin(), reps.end()};
}

class DiscreteSearch {
public:
    DiscreteSearch(const Diagram& d, int n,
                   const std::vector<long long>& values)
        : d_(d), inc_(d.incidence()), cands_(discrete_candidates(n, values)) {
        int c = static_cast<int>(cands_.size());
        ortho_.assign(c, std::vector<bool>(c, false));
        for (int i = 0; i < c; ++i)
            for (int j = 0; j < c; ++j) {
                long long dot = 0;
                for (size_t k = 0; k < cands_[i].size(); ++k)
                    dot += cands_[i][k] * cands_[j][k];
                ortho_[i][j] = dot == 0;
            }
        choice_.assign(d.vertex_count(), -1);
        used_.assign(c, false);
    }

    std::optional<std::vector<std::vector<long long>>> run() {
        if (search(0)) {
            std::vector<std::vector<long long>> out;
            for (int c : choice_) out.push_back(cands_[c]);
            return out;
        }
        return std::nullopt;
    }

private:
    // next vertex: the one sharing the most edges with assigned vertices
    // (most tightly coupled), ties to the lowest id
    Vertex pick() const {
        Vertex best = -1;
        int best_score = -1;
        for (Vertex v = 0; v < d_.vertex_count(); ++v) {
            if (choice_[v] != -1) continue;
            int score = 0;
            for (int e : inc_[v])
                for (Vertex w : d_.edge(e))
                    if (w != v && choice_[w] != -1) ++score;
            if (score > best_score) {
                best_score = score;
                best = v;
            }
        }
        return best;
    }

    bool search(int assigned) {
        if (assigned == d_.vertex_count()) return true;
        Vertex v = pick();
        for (int c = 0; c < static_cast<int>(cands_.size()); ++c) {
            if (used_[c]) continue;  // distinct representatives = no collinearity
            bool ok = true;
            for (int e : inc_[v]) {
                for (Vertex w : d_.edge(e))
                    if (w != v && choice_[w] != -1 && !ortho_[c][choice_[w]]) {
                        ok = false;
                        break;
                    }
                if (!ok) break;
            }
            if (!ok) continue;
            choice_[v] = c;
            used_[c] = true;
            if (search(assigned + 1)) return true;
            choice_[v] = -1;
            used_[c] = false;
        }
        return false;
    }

    const Diagram& d_;
    std::vector<std::vector<int>> inc_;
    std::vector<std::vector<long long>> cands_;
    std::vector<std::vector<bool>> ortho_;
    std::vector<int> choice_;
    std::vector<bool> used_;
};

}  // namespace detail

// Exact solutions with every component drawn from a finite integer value
// set (up to scalar multiples).  Returns the first solution found or none.
inline std::optional<VectorSystem> discrete_check(
    const Diagram& d, int n, const std::vector<long long>& values) {
    bool any_nonzero = false;
    for (long long v : values)
        if (v != 0) any_nonzero = true;
    if (!any_nonzero)
        throw DiagramError("discrete_check: value set has no nonzero element");
    detail::DiscreteSearch search(d, n, values);
    auto sol = search.run();
    if (!sol) return std::nullopt;
    return VectorSystem::from_integers(std::move(*sol));
}

}  // namespace mmp

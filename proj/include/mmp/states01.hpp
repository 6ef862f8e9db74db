#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include <mmp/diagram.hpp>

namespace mmp {

enum class Value01 : uint8_t { Unassigned, Zero, One };

// A partial/total vertex -> {0,1} mapping under the exactly-one-1-per-edge
// contract.
struct Assignment01 {
    std::vector<Value01> values;

    bool total() const {
        for (Value01 v : values)
            if (v == Value01::Unassigned) return false;
        return true;
    }

    // 0/1 characters in vertex order, '?' when unassigned
    std::string to_string() const {
        std::string s;
        for (Value01 v : values)
            s += v == Value01::One ? '1' : v == Value01::Zero ? '0' : '?';
        return s;
    }
};

namespace detail {

// Backtracking with unit propagation.  Assigning 1 forces all co-edge
// vertices to 0; an edge with all-but-one vertex 0 forces the last to 1;
// an all-0 edge or a second 1 on an edge backtracks.
class States01Search {
public:
    explicit States01Search(const Diagram& d)
        : d_(d), inc_(d.incidence()), values_(d.vertex_count(), Value01::Unassigned),
          edge_zeros_(d.edge_count(), 0), edge_has_one_(d.edge_count(), false) {}

    // invoke `emit` for every total valid state; emit returns false to stop
    bool enumerate(const std::function<bool(const Assignment01&)>& emit) {
        emit_ = emit;
        stopped_ = false;
        search();
        return !stopped_;
    }

private:
    bool assign(Value01 val, Vertex v, std::vector<Vertex>& trail) {
        if (values_[v] != Value01::Unassigned) return values_[v] == val;
        if (val == Value01::One)
            for (int ei : inc_[v])
                if (edge_has_one_[ei]) return false;  // two 1s
        values_[v] = val;
        trail.push_back(v);
        if (val == Value01::Zero) {
            // bump every counter before any propagation so that undo stays
            // symmetric even when a forced assignment fails midway
            for (int ei : inc_[v]) ++edge_zeros_[ei];
            for (int ei : inc_[v]) {
                int sz = static_cast<int>(d_.edge(ei).size());
                if (edge_zeros_[ei] == sz && !edge_has_one_[ei])
                    return false;  // all-0 edge
                if (edge_zeros_[ei] == sz - 1 && !edge_has_one_[ei]) {
                    for (Vertex w : d_.edge(ei))
                        if (values_[w] == Value01::Unassigned &&
                            !assign(Value01::One, w, trail))
                            return false;
                }
            }
        } else {
            // all edges were free of 1s (checked above); claim them before
            // propagating so undo can clear exactly the marks owned by v
            for (int ei : inc_[v]) edge_has_one_[ei] = true;
            for (int ei : inc_[v])
                for (Vertex w : d_.edge(ei))
                    if (w != v && !assign(Value01::Zero, w, trail))
                        return false;
        }
        return true;
    }

    void undo(std::vector<Vertex>& trail) {
        for (auto it = trail.rbegin(); it != trail.rend(); ++it) {
            Vertex v = *it;
            if (values_[v] == Value01::Zero) {
                for (int ei : inc_[v]) --edge_zeros_[ei];
            } else {
                for (int ei : inc_[v]) edge_has_one_[ei] = false;
            }
            values_[v] = Value01::Unassigned;
        }
        trail.clear();
    }

    // most-constrained vertex: on the edge closest to saturation, lowest id
    Vertex pick() const {
        Vertex best = -1;
        int best_score = -1;
        for (Vertex v = 0; v < d_.vertex_count(); ++v) {
            if (values_[v] != Value01::Unassigned) continue;
            int score = 0;
            for (int ei : inc_[v]) {
                int assigned = edge_zeros_[ei] + (edge_has_one_[ei] ? 1 : 0);
                score = std::max(score, 1 + assigned * 8 +
                                            static_cast<int>(inc_[v].size()));
            }
            if (score > best_score) {
                best_score = score;
                best = v;
            }
        }
        return best;
    }

    void search() {
        if (stopped_) return;
        Vertex v = pick();
        if (v == -1) {
            Assignment01 a{values_};
            if (!emit_(a)) stopped_ = true;
            return;
        }
        for (Value01 val : {Value01::Zero, Value01::One}) {
            std::vector<Vertex> trail;
            if (assign(val, v, trail)) search();
            undo(trail);
            if (stopped_) return;
        }
    }

    const Diagram& d_;
    std::vector<std::vector<int>> inc_;
    std::vector<Value01> values_;
    std::vector<int> edge_zeros_;
    std::vector<bool> edge_has_one_;
    std::function<bool(const Assignment01&)> emit_;
    bool stopped_ = false;
};

}  // namespace detail

inline bool has_01_state(const Diagram& d) {
    detail::States01Search s(d);
    return !s.enumerate([](const Assignment01&) { return false; });
}

inline std::vector<Assignment01> enumerate_01_states(
    const Diagram& d, std::optional<long> limit = std::nullopt) {
    std::vector<Assignment01> out;
    detail::States01Search s(d);
    s.enumerate([&](const Assignment01& a) {
        out.push_back(a);
        return !limit || static_cast<long>(out.size()) < *limit;
    });
    return out;
}

// Passes through exactly the diagrams without any 0-1 state.
inline std::vector<Diagram> filter_no01(const std::vector<Diagram>& in) {
    std::vector<Diagram> out;
    for (const Diagram& d : in)
        if (!has_01_state(d)) out.push_back(d);
    return out;
}

}  // namespace mmp

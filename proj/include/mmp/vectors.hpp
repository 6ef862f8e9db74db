#pragma once

#include <cmath>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include <mmp/diagram.hpp>

namespace mmp {

// An assignment of one n-vector per vertex.  Integer entries are kept when
// the whole system is integral so orthogonality can be checked exactly.
struct VectorSystem {
    int n = 0;
    std::vector<std::vector<double>> vectors;       // per vertex
    bool exact = false;
    std::vector<std::vector<long long>> ivectors;   // valid when exact

    static VectorSystem from_integers(std::vector<std::vector<long long>> iv) {
        VectorSystem vs;
        vs.n = iv.empty() ? 0 : static_cast<int>(iv[0].size());
        vs.exact = true;
        for (const auto& v : iv)
            vs.vectors.emplace_back(v.begin(), v.end());
        vs.ivectors = std::move(iv);
        return vs;
    }
};

struct VerifyReport {
    bool pass = true;
    std::vector<std::string> violations;

    void flag(std::string what) {
        pass = false;
        violations.push_back(std::move(what));
    }
};

// Check the full vector-system contract against a diagram: every vertex
// assigned a nonzero vector, all within-edge pairs orthogonal, and no two
// vertices on collinear vectors.  Exact for integer systems, within tol
// otherwise (tolerances scale with the vector norms involved).
inline VerifyReport verify_solution(const Diagram& d, const VectorSystem& vs,
                                    double tol = 1e-9) {
    if (static_cast<int>(vs.vectors.size()) != d.vertex_count())
        throw DiagramError("verify_solution: vector count differs from vertex count");
    for (const auto& v : vs.vectors)
        if (static_cast<int>(v.size()) != vs.n)
            throw DiagramError("verify_solution: ragged vector system");

    auto vname = [&](Vertex v) {
        return v < kMaxNativeLabels ? std::string(1, vertex_label(v))
                                    : std::to_string(v + 1);
    };
    VerifyReport rep;

    if (vs.exact) {
        auto dot = [&](Vertex a, Vertex b) {
            long long s = 0;
            for (int k = 0; k < vs.n; ++k)
                s += vs.ivectors[a][k] * vs.ivectors[b][k];
            return s;
        };
        auto collinear = [&](Vertex a, Vertex b) {
            for (int i = 0; i < vs.n; ++i)
                for (int j = i + 1; j < vs.n; ++j)
                    if (vs.ivectors[a][i] * vs.ivectors[b][j] !=
                        vs.ivectors[a][j] * vs.ivectors[b][i])
                        return false;
            return true;
        };
        for (Vertex v = 0; v < d.vertex_count(); ++v)
            if (dot(v, v) == 0) rep.flag("vertex " + vname(v) + " is the zero vector");
        for (int e = 0; e < d.edge_count(); ++e) {
            const Edge& edge = d.edge(e);
            for (size_t i = 0; i < edge.size(); ++i)
                for (size_t j = i + 1; j < edge.size(); ++j)
                    if (dot(edge[i], edge[j]) != 0)
                        rep.flag("edge " + std::to_string(e) + ": vertices " +
                                 vname(edge[i]) + "," + vname(edge[j]) +
                                 " not orthogonal");
        }
        for (Vertex a = 0; a < d.vertex_count(); ++a)
            for (Vertex b = a + 1; b < d.vertex_count(); ++b)
                if (dot(a, a) != 0 && dot(b, b) != 0 && collinear(a, b))
                    rep.flag("vertices " + vname(a) + " and " + vname(b) +
                             " are collinear");
        return rep;
    }

    auto dot = [&](Vertex a, Vertex b) {
        double s = 0;
        for (int k = 0; k < vs.n; ++k) s += vs.vectors[a][k] * vs.vectors[b][k];
        return s;
    };
    for (Vertex v = 0; v < d.vertex_count(); ++v)
        if (std::sqrt(dot(v, v)) <= tol)
            rep.flag("vertex " + vname(v) + " is (numerically) the zero vector");
    for (int e = 0; e < d.edge_count(); ++e) {
        const Edge& edge = d.edge(e);
        for (size_t i = 0; i < edge.size(); ++i)
            for (size_t j = i + 1; j < edge.size(); ++j) {
                Vertex a = edge[i], b = edge[j];
                double scale = std::sqrt(dot(a, a) * dot(b, b));
                if (std::abs(dot(a, b)) > tol * std::max(1.0, scale))
                    rep.flag("edge " + std::to_string(e) + ": vertices " +
                             vname(a) + "," + vname(b) + " not orthogonal");
            }
    }
    for (Vertex a = 0; a < d.vertex_count(); ++a)
        for (Vertex b = a + 1; b < d.vertex_count(); ++b) {
            double na = dot(a, a), nb = dot(b, b), ab = dot(a, b);
            if (na <= tol * tol || nb <= tol * tol) continue;
            if (na * nb - ab * ab <= tol * std::max(1.0, na * nb))
                rep.flag("vertices " + vname(a) + " and " + vname(b) +
                         " are collinear");
        }
    return rep;
}

// Solution file format: one `label: c1 c2 ... cn` line per vertex, `#`
// starts a comment.  Labels are the native alphabet up to 61 vertices and
// 1-based decimal numbers beyond.
inline std::string serialize_solution(const Diagram& d, const VectorSystem& vs) {
    std::ostringstream out;
    for (Vertex v = 0; v < d.vertex_count(); ++v) {
        if (d.vertex_count() <= kMaxNativeLabels)
            out << vertex_label(v);
        else
            out << v + 1;
        out << ":";
        for (int k = 0; k < vs.n; ++k) {
            out << ' ';
            if (vs.exact)
                out << vs.ivectors[v][k];
            else
                out << vs.vectors[v][k];
        }
        out << '\n';
    }
    return out.str();
}

inline VectorSystem parse_solution(const std::string& text, const Diagram& d) {
    std::vector<std::vector<double>> vecs(d.vertex_count());
    std::vector<std::vector<long long>> ivecs(d.vertex_count());
    bool exact = true;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto colon = line.find(':');
        if (colon == std::string::npos) {
            bool blank = line.find_first_not_of(" \t\r") == std::string::npos;
            if (!blank) throw DiagramError("solution line without ':': " + line);
            continue;
        }
        std::string label = line.substr(0, colon);
        label.erase(std::remove_if(label.begin(), label.end(), ::isspace),
                    label.end());
        Vertex v;
        if (d.vertex_count() <= kMaxNativeLabels && label.size() == 1) {
            auto lv = label_to_vertex(label[0]);
            if (!lv) throw DiagramError("bad vertex label: " + label);
            v = *lv;
        } else {
            v = std::stoi(label) - 1;
        }
        if (v < 0 || v >= d.vertex_count())
            throw DiagramError("solution references unknown vertex: " + label);
        std::istringstream rest(line.substr(colon + 1));
        double x;
        while (rest >> x) {
            vecs[v].push_back(x);
            long long i = static_cast<long long>(std::llround(x));
            if (static_cast<double>(i) != x) exact = false;
            ivecs[v].push_back(i);
        }
    }
    VectorSystem vs;
    for (Vertex v = 0; v < d.vertex_count(); ++v) {
        if (vecs[v].empty())
            throw DiagramError("no vector for vertex " + std::to_string(v + 1));
        if (vs.n == 0) vs.n = static_cast<int>(vecs[v].size());
        if (static_cast<int>(vecs[v].size()) != vs.n)
            throw DiagramError("inconsistent vector lengths in solution");
    }
    vs.vectors = std::move(vecs);
    vs.exact = exact;
    if (exact) vs.ivectors = std::move(ivecs);
    return vs;
}

}  // namespace mmp

#pragma once

#include <cctype>
#include <istream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <mmp/diagram.hpp>

namespace mmp {

struct ParseError : DiagramError {
    using DiagramError::DiagramError;
};

struct ParseOptions {
    ValidationOptions validation;
};

// Native MMP text format: edges separated by commas, optional trailing
// period, labels from the 61-symbol alphabet, whitespace ignored.
// Vertices are numbered by the collation rank of their label among the
// labels actually used, so '1' < ... < '9' < 'A' < ... < 'z' regardless of
// the order in which labels first appear; solution files key vertices the
// same way.  Texts whose labels skip part of the alphabet (reduced systems)
// are compacted, so serialize may emit different labels for them.
inline Diagram parse_mmp(const std::string& text, const ParseOptions& opt = {}) {
    std::vector<std::vector<char>> label_edges;
    std::vector<char> cur;
    std::set<char> used;
    bool ended = false;
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        if (ended)
            throw ParseError("text continues after trailing period");
        if (c == ',') {
            if (cur.empty()) throw ParseError("empty edge");
            label_edges.push_back(cur);
            cur.clear();
            continue;
        }
        if (c == '.') {
            ended = true;
            continue;
        }
        if (!label_to_vertex(c))
            throw ParseError(std::string("unknown symbol '") + c + "'");
        used.insert(c);
        cur.push_back(c);
    }
    if (!cur.empty()) label_edges.push_back(cur);
    if (label_edges.empty()) throw ParseError("no edges");
    std::map<char, Vertex> rank;
    std::vector<char> order(used.begin(), used.end());
    std::sort(order.begin(), order.end(), [](char x, char y) {
        return *label_to_vertex(x) < *label_to_vertex(y);
    });
    for (char c : order) rank[c] = static_cast<Vertex>(rank.size());
    std::vector<Edge> edges;
    for (const auto& le : label_edges) {
        Edge e;
        for (char c : le) e.push_back(rank[c]);
        edges.push_back(std::move(e));
    }
    Diagram d(std::move(edges));
    d.validate(opt.validation);
    return d;
}

// Numeric format: space-separated decimal vertex ids starting at 1,
// edges separated by commas.  Ids are compacted by rank, as in parse_mmp.
inline Diagram parse_numeric(const std::string& text, const ParseOptions& opt = {}) {
    std::vector<std::vector<long>> id_edges;
    std::vector<long> cur;
    std::set<long> used;
    std::string tok;
    auto flush_tok = [&] {
        if (tok.empty()) return;
        long id = std::stol(tok);
        if (id < 1) throw ParseError("vertex ids start at 1");
        used.insert(id);
        cur.push_back(id);
        tok.clear();
    };
    for (char c : text) {
        if (std::isdigit(static_cast<unsigned char>(c))) {
            tok.push_back(c);
        } else if (std::isspace(static_cast<unsigned char>(c))) {
            flush_tok();
        } else if (c == ',') {
            flush_tok();
            if (cur.empty()) throw ParseError("empty edge");
            id_edges.push_back(cur);
            cur.clear();
        } else if (c == '.') {
            break;
        } else {
            throw ParseError(std::string("unknown symbol '") + c + "'");
        }
    }
    flush_tok();
    if (!cur.empty()) id_edges.push_back(cur);
    if (id_edges.empty()) throw ParseError("no edges");
    std::map<long, Vertex> rank;
    for (long id : used) rank[id] = static_cast<Vertex>(rank.size());
    std::vector<Edge> edges;
    for (const auto& ie : id_edges) {
        Edge e;
        for (long id : ie) e.push_back(rank[id]);
        edges.push_back(std::move(e));
    }
    Diagram d(std::move(edges));
    d.validate(opt.validation);
    return d;
}

inline std::string serialize(const Diagram& d) {
    if (d.vertex_count() > kMaxNativeLabels)
        throw DiagramError("alphabet exhausted: " +
                           std::to_string(d.vertex_count()) +
                           " vertices need the numeric format");
    std::string out;
    for (int i = 0; i < d.edge_count(); ++i) {
        if (i) out.push_back(',');
        for (Vertex v : d.edge(i)) out.push_back(vertex_label(v));
    }
    return out;
}

inline std::string serialize_numeric(const Diagram& d) {
    std::string out;
    for (int i = 0; i < d.edge_count(); ++i) {
        if (i) out.push_back(',');
        const Edge& e = d.edge(i);
        for (size_t j = 0; j < e.size(); ++j) {
            if (j) out.push_back(' ');
            out += std::to_string(e[j] + 1);
        }
    }
    return out;
}

// One diagram per line; '#' starts a comment; blank lines ignored.
// Lines containing a space between digits are read as numeric format.
inline std::vector<Diagram> parse_file(std::istream& in, const ParseOptions& opt = {}) {
    std::vector<Diagram> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        bool blank = true, numeric = false;
        for (size_t i = 0; i < line.size(); ++i) {
            if (!std::isspace(static_cast<unsigned char>(line[i]))) blank = false;
            if (i + 2 < line.size() &&
                std::isdigit(static_cast<unsigned char>(line[i])) &&
                line[i + 1] == ' ' &&
                std::isdigit(static_cast<unsigned char>(line[i + 2])))
                numeric = true;
        }
        if (blank) continue;
        try {
            out.push_back(numeric ? parse_numeric(line, opt)
                                  : parse_mmp(line, opt));
        } catch (const DiagramError& e) {
            throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return out;
}

inline std::vector<Diagram> parse_file(const std::string& text,
                                       const ParseOptions& opt = {}) {
    std::istringstream in(text);
    return parse_file(in, opt);
}

}  // namespace mmp

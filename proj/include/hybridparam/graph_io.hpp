#ifndef HYBRIDPARAM_GRAPH_IO_HPP
#define HYBRIDPARAM_GRAPH_IO_HPP

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "hybridparam/graph.hpp"

namespace hybridparam {

// Graph text format, optionally carrying instance annotations:
//   c <comment>
//   p gr <n> <m>
//   e <u> <v>        (one per edge, 1-indexed)
//   blue <v...>      (blue-white dominating set instances)
//   dom <v...>       (annotated dominating set instances)
struct AnnotatedGraphFile {
    Graph graph;
    VertexSet blue;
    VertexSet dominated;
};

inline AnnotatedGraphFile read_annotated_graph(std::istream& in) {
    std::string line;
    int n = -1;
    long long m = -1;
    AnnotatedGraphFile out;
    long long seen = 0;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        if (tok == "c") continue;
        if (tok == "p") {
            std::string fmt;
            if (!(ls >> fmt >> n >> m) || fmt != "gr" || n < 0)
                throw input_error("graph file: bad problem line: " + line);
            out.graph = Graph(n);
            continue;
        }
        if (tok == "e") {
            if (n < 0) throw input_error("graph file: edge before problem line");
            Vertex u, v;
            if (!(ls >> u >> v)) throw input_error("graph file: bad edge line: " + line);
            out.graph.add_edge_internal(u, v);
            ++seen;
            continue;
        }
        if (tok == "blue" || tok == "dom") {
            std::vector<Vertex> vs;
            Vertex v;
            while (ls >> v) vs.push_back(v);
            (tok == "blue" ? out.blue : out.dominated) = make_set(std::move(vs));
            continue;
        }
        throw input_error("graph file: unknown line: " + line);
    }
    if (n < 0) throw input_error("graph file: missing problem line");
    if (m >= 0 && seen != m)
        throw input_error("graph file: header announces " + std::to_string(m) + " edges, found " +
                          std::to_string(seen));
    out.graph.finalize();
    return out;
}

inline Graph read_graph(std::istream& in) { return read_annotated_graph(in).graph; }

inline AnnotatedGraphFile read_annotated_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open graph file: " + path);
    return read_annotated_graph(in);
}

inline void write_graph(std::ostream& out, const Graph& g) {
    out << "p gr " << g.num_vertices() << ' ' << g.num_edges() << '\n';
    for (auto [u, v] : g.edges()) out << "e " << u << ' ' << v << '\n';
}

inline Graph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open graph file: " + path);
    return read_graph(in);
}

inline void write_graph_file(const std::string& path, const Graph& g) {
    std::ofstream out(path);
    if (!out) throw input_error("cannot open for writing: " + path);
    write_graph(out, g);
}

// Vertex set file: whitespace-separated labels, `c` comment lines allowed.
inline VertexSet read_vertex_set(std::istream& in) {
    std::vector<Vertex> v;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string tok;
        while (ls >> tok) {
            if (tok == "c") break;
            v.push_back(std::stoi(tok));
        }
    }
    return make_set(std::move(v));
}

inline VertexSet read_vertex_set_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open vertex set file: " + path);
    return read_vertex_set(in);
}

inline void write_vertex_set_file(const std::string& path, const VertexSet& s) {
    std::ofstream out(path);
    if (!out) throw input_error("cannot open for writing: " + path);
    for (size_t i = 0; i < s.size(); ++i) out << s[i] << (i + 1 == s.size() ? "" : " ");
    out << '\n';
}

// Comma- or space-separated labels given inline on a command line.
inline VertexSet parse_vertex_list(const std::string& text) {
    std::vector<Vertex> v;
    std::string cur;
    for (char ch : text) {
        if (ch == ',' || ch == ' ') {
            if (!cur.empty()) v.push_back(std::stoi(cur));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    if (!cur.empty()) v.push_back(std::stoi(cur));
    return make_set(std::move(v));
}

// Pattern file: a sequence of graph blocks, each with its own `p gr` header.
inline std::vector<Graph> read_graph_list(std::istream& in) {
    std::vector<Graph> out;
    std::string line;
    Graph cur;
    bool open = false;
    auto flush = [&] {
        if (open) {
            cur.finalize();
            out.push_back(cur);
            open = false;
        }
    };
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        if (tok == "c") continue;
        if (tok == "p") {
            flush();
            std::string fmt;
            int n;
            long long m;
            if (!(ls >> fmt >> n >> m) || fmt != "gr")
                throw input_error("pattern file: bad problem line: " + line);
            cur = Graph(n);
            open = true;
        } else if (tok == "e") {
            if (!open) throw input_error("pattern file: edge before problem line");
            Vertex u, v;
            ls >> u >> v;
            cur.add_edge_internal(u, v);
        } else {
            throw input_error("pattern file: unknown line: " + line);
        }
    }
    flush();
    return out;
}

inline std::vector<Graph> read_graph_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open pattern file: " + path);
    return read_graph_list(in);
}

}  // namespace hybridparam

#endif

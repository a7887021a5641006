#include "w4/io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace w4 {

namespace {

// next non-comment, non-blank line; false at EOF
bool next_data_line(std::istream& in, std::string& line, int& lineno) {
    while (std::getline(in, line)) {
        ++lineno;
        size_t i = line.find_first_not_of(" \t\r");
        if (i == std::string::npos) continue;
        if (line[i] == '#') continue;
        return true;
    }
    return false;
}

bool parse_two_ints(const std::string& line, long& a, long& b) {
    std::istringstream ss(line);
    if (!(ss >> a >> b)) return false;
    std::string rest;
    if (ss >> rest) return false;
    return true;
}

} // namespace

Multigraph read_graph(std::istream& in) {
    std::string line;
    int lineno = 0;
    if (!next_data_line(in, line, lineno))
        throw ParseError("empty input: missing header line");
    long n, m;
    if (!parse_two_ints(line, n, m))
        throw ParseError("line " + std::to_string(lineno) + ": expected \"n m\"");
    if (n < 0 || m < 0 || n > 1'000'000 || m > 10'000'000)
        throw ParseError("line " + std::to_string(lineno) + ": n or m out of range");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(m);
    for (long i = 0; i < m; ++i) {
        if (!next_data_line(in, line, lineno))
            throw ParseError("unexpected end of input: expected " +
                             std::to_string(m) + " edges, got " + std::to_string(i));
        long u, v;
        if (!parse_two_ints(line, u, v))
            throw ParseError("line " + std::to_string(lineno) + ": expected \"u v\"");
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw ParseError("line " + std::to_string(lineno) + ": endpoint out of range");
        if (u == v)
            throw ParseError("line " + std::to_string(lineno) + ": self-loop rejected");
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    if (next_data_line(in, line, lineno))
        throw ParseError("line " + std::to_string(lineno) + ": trailing data after edge list");
    return Multigraph(static_cast<int>(n), std::move(edges));
}

Multigraph read_graph_string(const std::string& text) {
    std::istringstream ss(text);
    return read_graph(ss);
}

Multigraph read_graph_file(const std::string& path) {
    if (path == "-") return read_graph(std::cin);
    std::ifstream f(path);
    if (!f) throw ParseError("cannot open file: " + path);
    return read_graph(f);
}

void write_graph(std::ostream& out, const Multigraph& g) {
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

std::string write_graph_string(const Multigraph& g) {
    std::ostringstream ss;
    write_graph(ss, g);
    return ss.str();
}

void write_graph_file(const std::string& path, const Multigraph& g) {
    if (path == "-") {
        write_graph(std::cout, g);
        return;
    }
    std::ofstream f(path);
    if (!f) throw ParseError("cannot open file for writing: " + path);
    write_graph(f, g);
}

} // namespace w4

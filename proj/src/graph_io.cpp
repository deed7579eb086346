#include "pathfactor/graph_io.hpp"

#include <fstream>
#include <istream>
#include <sstream>

namespace pathfactor {

namespace {

bool significant(const std::string& line) {
    for (char c : line) {
        if (c == '#') return false;
        if (!std::isspace(static_cast<unsigned char>(c))) return true;
    }
    return false;
}

}  // namespace

Graph read_graph(std::istream& in) {
    std::string line;
    int lineno = 0;
    int n = -1;
    std::vector<Edge> edges;
    std::vector<std::vector<bool>> seen;  // upper-triangular dup check
    while (std::getline(in, line)) {
        ++lineno;
        if (!significant(line)) continue;
        std::istringstream ss(line);
        if (n < 0) {
            std::string tag;
            ss >> tag >> n;
            if (tag != "n" || ss.fail() || n < 0)
                throw ParseError(lineno, "expected header 'n <count>'");
            std::string rest;
            if (ss >> rest) throw ParseError(lineno, "trailing tokens after header");
            continue;
        }
        int u, v;
        ss >> u >> v;
        if (ss.fail()) throw ParseError(lineno, "expected edge '<u> <v>'");
        std::string rest;
        if (ss >> rest) throw ParseError(lineno, "trailing tokens after edge");
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ParseError(lineno, "vertex index out of range [0, " + std::to_string(n) + ")");
        if (u == v) throw ParseError(lineno, "loop edge");
        auto [a, b] = make_edge(u, v);
        if (seen.empty()) seen.assign(n, std::vector<bool>(n, false));
        if (seen[a][b]) throw ParseError(lineno, "duplicate edge");
        seen[a][b] = true;
        edges.emplace_back(a, b);
    }
    if (n < 0) throw ParseError(lineno + 1, "missing header 'n <count>'");
    return Graph(n, std::move(edges));
}

Graph read_graph_text(const std::string& text) {
    std::istringstream ss(text);
    return read_graph(ss);
}

Graph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    return read_graph(in);
}

std::string write_graph(const Graph& g) {
    std::ostringstream out;
    out << "n " << g.order() << "\n";
    for (const auto& [u, v] : g.edges()) out << u << " " << v << "\n";
    return out.str();
}

void write_graph_file(const Graph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << write_graph(g);
}

}  // namespace pathfactor

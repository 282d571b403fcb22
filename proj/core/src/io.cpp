#include "treepack/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace treepack {

namespace {

std::string strip_comment(const std::string& line) {
    auto pos = line.find('#');
    return pos == std::string::npos ? line : line.substr(0, pos);
}

bool blank(const std::string& line) {
    return line.find_first_not_of(" \t\r\n") == std::string::npos;
}

[[noreturn]] void parse_fail(int line_number, const std::string& what) {
    throw std::runtime_error("parse error at line " + std::to_string(line_number) + ": " +
                             what);
}

}  // namespace

Graph parse_graph(std::istream& in, std::vector<std::string>* warnings) {
    std::string line;
    int line_number = 0;
    long n = -1, m = -1;
    std::vector<Edge> edges;
    std::vector<std::vector<char>> seen;

    while (std::getline(in, line)) {
        ++line_number;
        std::string body = strip_comment(line);
        if (blank(body)) continue;
        std::istringstream fields(body);
        if (n < 0) {
            if (!(fields >> n >> m) || n < 0 || m < 0) {
                parse_fail(line_number, "expected header \"n m\"");
            }
            std::string extra;
            if (fields >> extra) parse_fail(line_number, "trailing tokens after header");
            seen.assign(n, std::vector<char>(n, 0));
            continue;
        }
        long u, v;
        if (!(fields >> u >> v)) parse_fail(line_number, "expected edge \"u v\"");
        std::string extra;
        if (fields >> extra) parse_fail(line_number, "trailing tokens after edge");
        if (u < 0 || v < 0 || u >= n || v >= n) {
            parse_fail(line_number, "edge endpoint out of range: " + std::to_string(u) +
                                        " " + std::to_string(v));
        }
        if (u == v) parse_fail(line_number, "self-loop " + std::to_string(u));
        if (static_cast<long>(edges.size()) == m) {
            parse_fail(line_number, "more than the declared " + std::to_string(m) + " edges");
        }
        if (seen[u][v]) {
            if (warnings) {
                warnings->push_back("line " + std::to_string(line_number) +
                                    ": duplicate edge " + std::to_string(u) + " " +
                                    std::to_string(v));
            }
        } else {
            seen[u][v] = seen[v][u] = 1;
            edges.push_back({static_cast<VertexId>(u), static_cast<VertexId>(v)});
        }
    }
    if (n < 0) parse_fail(line_number, "missing header");
    if (static_cast<long>(edges.size()) < m && warnings) {
        warnings->push_back("header declares " + std::to_string(m) + " edges, found " +
                            std::to_string(edges.size()));
    }
    return Graph::from_edge_list(static_cast<int>(n), edges);
}

Graph load_graph(const std::string& path, std::vector<std::string>* warnings) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return parse_graph(in, warnings);
}

std::string format_graph(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << " " << g.edge_count() << "\n";
    for (const auto& [u, v] : g.edges()) out << u << " " << v << "\n";
    return out.str();
}

void save_graph(const Graph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << format_graph(g);
}

std::string format_packing(const PackingSolution& solution, const ValidationReport& report) {
    std::ostringstream out;
    out << "size: " << solution.size << "\n";
    out << "valid: " << (report.packing_embeddings_valid && report.packing_disjoint ? "yes" : "no")
        << "\n";
    for (const auto& e : solution.embeddings) {
        out << "embedding:";
        for (VertexId v : e.vertices) out << " " << v;
        out << "\n";
    }
    return out.str();
}

std::string format_cover(const CoverSolution& solution, const ValidationReport& report) {
    std::ostringstream out;
    out << "size: " << solution.size << "\n";
    out << "valid: " << (report.cover_valid ? "yes" : "no") << "\n";
    out << "cover:";
    for (VertexId v : solution.vertices) out << " " << v;
    out << "\n";
    return out.str();
}

}  // namespace treepack

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "treepack/graph.hpp"
#include "treepack/oracle.hpp"

namespace treepack {

// Text format: first non-comment line "n m", then m lines "u v" in ASCII
// decimal; '#' starts a comment. Saved files are normalized: u < v on every
// line and edges ascending, so save(load(f)) is byte-identical for
// normalized files.
Graph parse_graph(std::istream& in, std::vector<std::string>* warnings = nullptr);
Graph load_graph(const std::string& path, std::vector<std::string>* warnings = nullptr);

std::string format_graph(const Graph& g);
void save_graph(const Graph& g, const std::string& path);

std::string format_packing(const PackingSolution& solution, const ValidationReport& report);
std::string format_cover(const CoverSolution& solution, const ValidationReport& report);

}  // namespace treepack

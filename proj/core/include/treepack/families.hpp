#pragma once

#include <string>
#include <vector>

#include "treepack/graph.hpp"

namespace treepack {

// A path attached to two positions of the base cycle. `length` counts edges;
// the generator creates length-1 fresh internal vertices. Lengths must be
// positive multiples of three.
struct ChordSpec {
    int start_index = 0;
    int end_index = 0;
    int length = 3;
};

enum class FamilyTag { path, cycle, chorded_cycle, erdos_posa, g3, h_chain };

struct FamilySpec {
    FamilyTag family = FamilyTag::cycle;
    int r = 1;
    std::vector<ChordSpec> chords;
    int h = 0;
    int attach_index = 0;
};

// Path with 3r+1 vertices in path order.
Graph path_family(int r);

// Cycle a_0 ... a_{3r-1} a_0; vertex id equals cycle position.
Graph cycle_family(int r);

// Cycle of length 3r plus chord paths. Every chord must keep the base cycle
// the longest cycle of the result: the generator rejects a chord whose
// length plus either arc between its endpoints exceeds 3r, and additionally
// verifies the assembled graph by exact longest-cycle search (several chords
// can combine into a long cycle that the per-chord arithmetic misses).
Graph chorded_cycle_family(int r, const std::vector<ChordSpec>& chords);

// Cycle of length 3r plus h internally disjoint 3-edge paths between
// positions 3i+1 and 3i+4. n = 3r+2h, m = 3r+3h.
Graph erdos_posa_family(int r, int h, int i);

// The fixed 7-vertex, 12-edge elementary structure obtained from K^4 by
// three vertex splits: 3-connected, K^4 minor, minimum degree 3.
Graph canonical_g3();

// r copies of canonical_g3 chained by perfect matchings between consecutive
// copies. n = 7r, m = 12r + 7(r-1).
Graph h_chain(int r);

Graph build_family(const FamilySpec& spec);

std::string family_tag_name(FamilyTag tag);

}  // namespace treepack

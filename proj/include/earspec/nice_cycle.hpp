#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "earspec/graph.hpp"
#include "earspec/matching.hpp"

namespace earspec {

// A cycle as its vertex sequence in canonical rotation: starts at the
// smallest vertex and proceeds toward its smaller cycle-neighbor.
struct Cycle {
    std::vector<int> vertices;

    std::size_t length() const { return vertices.size(); }
    std::vector<std::pair<int, int>> edge_list() const;
};

struct CycleEnumeration {
    std::vector<Cycle> cycles;
    bool truncated = false;
};

// All simple cycles, each once, in a deterministic order. Stops early and
// sets `truncated` once max_count cycles have been collected.
CycleEnumeration enumerate_cycles(const Graph& g, std::size_t max_count = 1000000);

// A subgraph H is nice when g minus V(H) has a perfect matching.
bool is_nice(const Graph& g, const std::vector<int>& sub_vertices);

// Edges of g joining two non-consecutive vertices of c.
std::vector<std::pair<int, int>> chords(const Graph& g, const Cycle& c);

// For bipartite matching covered g: minimal iff no nice cycle has a chord.
// Negative certificate carries the offending cycle and chord.
Certificate minimality_via_nice_cycles(const Graph& g, std::size_t max_cycles = 1000000);

}  // namespace earspec

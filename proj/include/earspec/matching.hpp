#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "earspec/graph.hpp"

namespace earspec {

struct Matching {
    std::vector<std::pair<int, int>> edges;  // each pair u < v, lexicographic
};

// Witness attached to a negative (or occasionally positive) certificate.
struct CycleChordWitness {
    std::vector<int> cycle;      // cyclic vertex order
    std::pair<int, int> chord;
};

using Witness = std::variant<std::monostate, std::pair<int, int>, int, Matching, CycleChordWitness>;

struct Certificate {
    std::string property;
    bool verdict = false;
    Witness witness;
    std::string note;
};

// Maximum matching via Edmonds' blossom contraction, O(V^3).
Matching maximum_matching(const Graph& g);

// Augmenting-path matching for bipartite graphs; throws if g is not bipartite.
// Same cardinality as maximum_matching, usually faster.
Matching bipartite_maximum_matching(const Graph& g);

bool has_perfect_matching(const Graph& g);

// Edges that lie in at least one perfect matching.
std::vector<std::pair<int, int>> allowed_edges(const Graph& g);

Certificate is_matching_covered(const Graph& g);
Certificate is_minimal_matching_covered(const Graph& g);
Certificate is_factor_critical(const Graph& g);
Certificate is_minimal_factor_critical(const Graph& g);

}  // namespace earspec

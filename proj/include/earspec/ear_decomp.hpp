#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "earspec/graph.hpp"
#include "earspec/matching.hpp"

namespace earspec {

enum class EarKind { bipartite, odd };

// An ear: odd-length path whose two (distinct) end vertices lie in the
// current prefix and whose internal vertices are new.
struct Ear {
    std::vector<int> path;

    int length() const { return static_cast<int>(path.size()) - 1; }
    bool trivial() const { return path.size() == 2; }
    std::pair<int, int> ends() const { return {path.front(), path.back()}; }
};

// Elements are indexed 0 = base, k = k-th ear; `grades` is aligned with that
// indexing. The base is either a single edge {u, v} (bipartite kind; the
// first ear then closes it into the 0-grade cycle) or a cycle in cyclic
// vertex order (even for bipartite, odd for odd kind).
struct EarDecomposition {
    EarKind kind = EarKind::bipartite;
    std::vector<int> base;
    std::vector<Ear> ears;
    std::vector<int> grades;
};

struct GradeInfo {
    std::vector<int> grades;
    int grade_number = 0;  // max grade over all elements
};

// Ears whose two ends both lie on a host element, grouped by end pair.
struct ParallelFamily {
    std::pair<int, int> ends;  // normalized u < v
    std::vector<int> members;  // element indices, ascending
};

struct EarAddition {
    Graph graph;
    EarDecomposition decomposition;
};

// Checks base shape, ear parity, attachment, freshness of internals and
// edges, exact coverage of g, and (when present) the stored grades.
Certificate validate(const Graph& g, const EarDecomposition& d);

// Reverse-deletion search. Succeeds exactly on connected bipartite matching
// covered graphs; deterministic output.
std::optional<EarDecomposition> find_bipartite_ear_decomposition(const Graph& g);

// Succeeds exactly on factor-critical graphs that contain an odd cycle and
// have no cut vertex (throws on a cut vertex; K1 yields nullopt).
std::optional<EarDecomposition> find_odd_ear_decomposition(const Graph& g);

// Grade recurrence: base is grade 0 (a K2 base and the ear closing it into
// the first cycle are both grade 0); every other ear gets 1 + the larger
// grade of the two elements where its ends first appeared.
GradeInfo ear_grades(const EarDecomposition& d);

std::vector<ParallelFamily> parallel_families(const EarDecomposition& d, int host);

// Two families on the same host are compatible when their end segments along
// the host do not interleave (sharing a boundary vertex is fine).
bool compatible(const EarDecomposition& d, int host, const ParallelFamily& f1, const ParallelFamily& f2);

// Appends an ear: internals must be the fresh vertices g.n .. g.n+t-1.
EarAddition add_ear(const Graph& g, const EarDecomposition& d, const Ear& ear);

// G + all absent T-S1 edges - all present T-S2 edges. Requires T, S1, S2
// nonempty and pairwise disjoint, no T-S1 edge present, every T-S2 edge
// present.
Graph edge_exchange(const Graph& g, const std::vector<int>& t, const std::vector<int>& s1,
                    const std::vector<int>& s2);

}  // namespace earspec

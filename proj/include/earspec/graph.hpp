#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace earspec {

// Undirected simple graph on vertices 0..n-1, adjacency lists kept sorted.
struct Graph {
    int n = 0;
    std::vector<std::vector<int>> adj;

    Graph() = default;
    explicit Graph(int order) : n(order), adj(order) {}

    static Graph from_edges(int order, const std::vector<std::pair<int, int>>& es);

    bool has_edge(int u, int v) const;
    void add_edge(int u, int v);
    void remove_edge(int u, int v);
    int degree(int v) const { return static_cast<int>(adj[v].size()); }
    int edge_count() const;
    std::vector<std::pair<int, int>> edges() const;  // each pair u < v, lexicographic

    bool operator==(const Graph&) const = default;
};

struct Bipartition {
    std::vector<int> color_a;  // holds the lowest-indexed vertex of every component
    std::vector<int> color_b;
};

// Induced subgraph plus the map back to the host labeling: orig[i] is the
// host vertex that became vertex i.
struct InducedSubgraph {
    Graph graph;
    std::vector<int> orig;
};

// graph6 codec, single-byte order header only (n <= 62).
Graph parse_graph6(const std::string& text);
std::string to_graph6(const Graph& g);

bool is_connected(const Graph& g);
std::vector<std::vector<int>> connected_components(const Graph& g);

// Two-coloring if one exists (graph need not be connected).
std::optional<Bipartition> bipartition(const Graph& g);

// Lexicographically smallest graph6 string over all vertex orderings.
// Exact search, intended for small graphs (n <= 14 or so).
std::string canonical_form(const Graph& g);

InducedSubgraph without_vertices(const Graph& g, const std::vector<int>& drop);
Graph without_edges(const Graph& g, const std::vector<std::pair<int, int>>& es);
Graph with_edges(const Graph& g, const std::vector<std::pair<int, int>>& es);

// Relabel: vertex v of g becomes perm[v].
Graph permuted(const Graph& g, const std::vector<int>& perm);

std::vector<int> cut_vertices(const Graph& g);
// Biconnected components as sorted vertex sets; isolated vertices form
// singleton blocks, bridges form two-vertex blocks.
std::vector<std::vector<int>> blocks(const Graph& g);

namespace detail {
// True iff some automorphism of g maps u to w. Backtracking search; cheap on
// the sparse graphs this project works with.
bool exists_automorphism(const Graph& g, int u, int w);
}  // namespace detail

}  // namespace earspec

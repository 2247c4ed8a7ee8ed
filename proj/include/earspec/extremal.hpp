#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "earspec/graph.hpp"

namespace earspec {

// Two paths of length 3 joined at both endpoints, plus (n - 4) / 2 more such
// paths sharing the same two hubs: the balanced theta-like family P*_3(n).
// Hubs are 0 and 1; n even, n >= 6.
Graph gen_p3star(int n);

// (n - 1) / 2 triangles sharing vertex 0; n odd, n >= 3.
Graph gen_friendship(int n);

Graph gen_cycle(int n);  // n >= 3

// Canonical graph6 strings (sorted) of all minimal matching covered
// bipartite graphs of order n. Ear-growth search; n even, 2 <= n <= 12.
std::vector<std::string> enumerate_minimal_mc_bipartite(int n, int jobs = 1);

// Independent oracle: labeled brute-force scan, n even, 2 <= n <= 8.
std::vector<std::string> brute_minimal_mc_bipartite(int n);

// Canonical graph6 strings (sorted) of all minimal factor critical graphs of
// order n: 2-connected ones by odd-ear growth, the rest by gluing blocks at
// cut vertices. n odd, 3 <= n <= 11.
std::vector<std::string> enumerate_minimal_factor_critical(int n, int jobs = 1);

// Independent oracle: labeled brute-force scan, n odd, 3 <= n <= 7.
std::vector<std::string> brute_minimal_factor_critical(int n);

// Every state visited by the bipartite ear-growth search up to order max_n:
// matching covered graphs, not necessarily minimal. Sorted by canonical form.
std::vector<Graph> mc_bipartite_growth_corpus(int max_n, int jobs = 1);

struct EnumerationReport {
    int n = 0;
    std::string class_name;
    std::size_t count = 0;
    double max_rho = 0.0;
    std::vector<std::string> argmax;  // canonical graph6 of the maximizers
    double bound = 0.0;
    bool bound_met = false;
    bool extremal_match = false;
};

// Spectral bound check over all minimal matching covered bipartite graphs of
// order n (n even, 2 <= n <= 12): max rho against 2 for n <= 4, else against
// (1 + sqrt(2n - 3)) / 2, with the unique maximizer identified.
EnumerationReport verify_theorem_1(int n, int jobs = 1);

// Same over all minimal factor critical graphs of order n (n odd,
// 3 <= n <= 11), against (1 + sqrt(4n - 3)) / 2 and the friendship graph.
EnumerationReport verify_theorem_2(int n, int jobs = 1);

}  // namespace earspec

#pragma once

#include <cstdint>
#include <vector>

#include "earspec/graph.hpp"

namespace earspec {

struct SpectralResult {
    double rho = 0.0;
    std::vector<double> perron;  // unit vector, all entries positive
    std::uint64_t iterations = 0;
    double residual = 0.0;       // max_v |sum_{u~v} x_u - rho * x_v|
};

// Adjacency spectral radius of a connected graph by shifted power iteration
// on A + I (the shift defeats the sign-flipping of bipartite spectra).
// Throws on an empty or disconnected graph, and if the residual fails to
// reach tol * max(1, rho) within max_iter sweeps.
SpectralResult spectral_radius(const Graph& g, double tol = 1e-12,
                               std::uint64_t max_iter = 1000000);

// Largest spectral radius over the connected components of g; tolerates
// disconnected input (used on graphs produced by edge surgery). Isolated
// vertices contribute rho = 0.
double spectral_radius_any(const Graph& g, double tol = 1e-12);

// Closed forms for the two extremal families.
double rho_p3star(int n);      // n even, n >= 6: (1 + sqrt(2n - 3)) / 2
double rho_friendship(int n);  // n odd,  n >= 3: (1 + sqrt(4n - 3)) / 2

// Vertex orbits under the full automorphism group, as sorted orbit lists in
// sorted order. Exact (exhaustive mapping search); guarded to n <= 12.
std::vector<std::vector<int>> automorphism_orbits(const Graph& g);

struct DominanceResult {
    double rho_sub = 0.0;
    double rho_super = 0.0;
    bool holds = false;   // rho_sub <= rho_super + slack
    bool strict = false;  // rho_super - rho_sub > 1e-9
};

// Spectral monotonicity check for h a spanning subgraph of g (same vertex
// set, E(h) subset of E(g)); g must be connected.
DominanceResult dominance_check(const Graph& h, const Graph& g);

}  // namespace earspec

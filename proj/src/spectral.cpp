#include "earspec/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>

namespace earspec {

namespace {

double rayleigh(const Graph& g, const std::vector<double>& x) {
    double num = 0.0;
    for (int v = 0; v < g.n; ++v)
        for (int u : g.adj[v]) num += x[v] * x[u];
    return num;  // x is kept unit-norm, so <x, Ax> is the quotient
}

double residual_of(const Graph& g, const std::vector<double>& x, double rho) {
    double worst = 0.0;
    for (int v = 0; v < g.n; ++v) {
        double row = 0.0;
        for (int u : g.adj[v]) row += x[u];
        worst = std::max(worst, std::abs(row - rho * x[v]));
    }
    return worst;
}

}  // namespace

SpectralResult spectral_radius(const Graph& g, double tol, std::uint64_t max_iter) {
    if (g.n == 0) throw std::invalid_argument("spectral_radius: empty graph");
    if (!is_connected(g)) throw std::invalid_argument("spectral_radius: graph is disconnected");
    SpectralResult r;
    std::vector<double> x(g.n, 1.0 / std::sqrt(static_cast<double>(g.n)));
    std::vector<double> y(g.n);
    if (g.edge_count() == 0) {  // K1: adjacency matrix is the 1x1 zero matrix
        r.rho = 0.0;
        r.perron = x;
        return r;
    }
    for (std::uint64_t it = 0;; ++it) {
        r.rho = rayleigh(g, x);
        r.residual = residual_of(g, x, r.rho);
        r.iterations = it;
        if (r.residual <= tol * std::max(1.0, r.rho)) break;
        if (it >= max_iter)
            throw std::runtime_error("spectral_radius: no convergence after " +
                                     std::to_string(max_iter) +
                                     " iterations, residual " + std::to_string(r.residual));
        for (int v = 0; v < g.n; ++v) {
            double s = x[v];  // power step on A + I keeps the iterate positive
            for (int u : g.adj[v]) s += x[u];
            y[v] = s;
        }
        double norm = std::sqrt(std::inner_product(y.begin(), y.end(), y.begin(), 0.0));
        for (int v = 0; v < g.n; ++v) x[v] = y[v] / norm;
    }
    r.perron = x;
    return r;
}

double spectral_radius_any(const Graph& g, double tol) {
    double best = 0.0;
    for (const auto& comp : connected_components(g)) {
        std::vector<char> keep(g.n, 0);
        for (int v : comp) keep[v] = 1;
        std::vector<int> drop;
        for (int v = 0; v < g.n; ++v)
            if (!keep[v]) drop.push_back(v);
        InducedSubgraph sub = without_vertices(g, drop);
        if (sub.graph.edge_count() == 0) continue;
        best = std::max(best, spectral_radius(sub.graph, tol).rho);
    }
    return best;
}

double rho_p3star(int n) {
    if (n < 6 || n % 2) throw std::invalid_argument("rho_p3star: order must be even and at least 6");
    return (1.0 + std::sqrt(2.0 * n - 3.0)) / 2.0;
}

double rho_friendship(int n) {
    if (n < 3 || n % 2 == 0)
        throw std::invalid_argument("rho_friendship: order must be odd and at least 3");
    return (1.0 + std::sqrt(4.0 * n - 3.0)) / 2.0;
}

std::vector<std::vector<int>> automorphism_orbits(const Graph& g) {
    if (g.n > 12) throw std::invalid_argument("automorphism_orbits: graph too large");
    std::vector<int> parent(g.n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (int u = 0; u < g.n; ++u)
        for (int w = u + 1; w < g.n; ++w) {
            if (find(u) == find(w)) continue;
            if (g.degree(u) != g.degree(w)) continue;
            if (detail::exists_automorphism(g, u, w)) parent[find(w)] = find(u);
        }
    std::vector<std::vector<int>> orbits(g.n);
    for (int v = 0; v < g.n; ++v) orbits[find(v)].push_back(v);
    std::vector<std::vector<int>> out;
    for (auto& o : orbits)
        if (!o.empty()) out.push_back(std::move(o));
    std::sort(out.begin(), out.end());
    return out;
}

DominanceResult dominance_check(const Graph& h, const Graph& g) {
    if (h.n != g.n) throw std::invalid_argument("dominance_check: vertex sets differ");
    for (auto [u, v] : h.edges())
        if (!g.has_edge(u, v))
            throw std::invalid_argument("dominance_check: not a spanning subgraph");
    DominanceResult r;
    r.rho_sub = spectral_radius_any(h);
    r.rho_super = spectral_radius(g).rho;
    r.holds = r.rho_sub <= r.rho_super + 1e-12;
    r.strict = r.rho_super - r.rho_sub > 1e-9;
    return r;
}

}  // namespace earspec

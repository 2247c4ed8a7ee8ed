#include "earspec/extremal.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>

#include "earspec/matching.hpp"
#include "earspec/parallel.hpp"
#include "earspec/spectral.hpp"

namespace earspec {

Graph gen_p3star(int n) {
    if (n < 6 || n % 2)
        throw std::invalid_argument("gen_p3star: order must be even and at least 6");
    Graph g(n);
    for (int i = 0; i < (n - 2) / 2; ++i) {
        int a = 2 + 2 * i, b = 3 + 2 * i;
        g.add_edge(0, a);
        g.add_edge(a, b);
        g.add_edge(b, 1);
    }
    return g;
}

Graph gen_friendship(int n) {
    if (n < 3 || n % 2 == 0)
        throw std::invalid_argument("gen_friendship: order must be odd and at least 3");
    Graph g(n);
    for (int i = 0; i < (n - 1) / 2; ++i) {
        int a = 1 + 2 * i, b = 2 + 2 * i;
        g.add_edge(0, a);
        g.add_edge(0, b);
        g.add_edge(a, b);
    }
    return g;
}

Graph gen_cycle(int n) {
    if (n < 3) throw std::invalid_argument("gen_cycle: order must be at least 3");
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

namespace {

Graph with_chain(const Graph& g, int u, int v, int internals) {
    Graph child(g.n + internals);
    for (auto [a, b] : g.edges()) child.add_edge(a, b);
    int prev = u;
    for (int i = 0; i < internals; ++i) {
        child.add_edge(prev, g.n + i);
        prev = g.n + i;
    }
    child.add_edge(prev, v);
    return child;
}

// Bipartite growth step: odd-length ears (even internal count >= 2) between
// nonadjacent vertices in different color classes. Adding such an ear to a
// matching covered graph keeps it matching covered.
std::vector<Graph> bipartite_ear_children(const Graph& g, int max_n) {
    std::vector<Graph> kids;
    auto parts = bipartition(g);
    std::vector<char> side(g.n, 0);
    for (int v : parts->color_b) side[v] = 1;
    for (int t = 2; g.n + t <= max_n; t += 2)
        for (int u = 0; u < g.n; ++u) {
            if (side[u]) continue;
            for (int v = 0; v < g.n; ++v) {
                if (!side[v] || g.has_edge(u, v)) continue;
                kids.push_back(with_chain(g, u, v, t));
            }
        }
    return kids;
}

// Odd-ear growth step for 2-connected factor critical graphs: odd-length
// nontrivial ears between any two distinct vertices (adjacent allowed).
std::vector<Graph> odd_ear_children(const Graph& g, int max_n) {
    std::vector<Graph> kids;
    for (int t = 2; g.n + t <= max_n; t += 2)
        for (int u = 0; u < g.n; ++u)
            for (int v = u + 1; v < g.n; ++v) kids.push_back(with_chain(g, u, v, t));
    return kids;
}

template <typename ChildFn>
std::map<std::string, Graph> grow(const std::vector<Graph>& seeds, int max_n, int jobs,
                                  ChildFn children) {
    std::map<std::string, Graph> states;
    std::vector<Graph> frontier;
    for (const auto& s : seeds)
        if (states.emplace(canonical_form(s), s).second) frontier.push_back(s);
    while (!frontier.empty()) {
        std::vector<std::vector<std::pair<std::string, Graph>>> batches(frontier.size());
        parallel_for(frontier.size(), jobs, [&](std::size_t i) {
            for (Graph& c : children(frontier[i], max_n)) {
                std::string key = canonical_form(c);
                batches[i].emplace_back(std::move(key), std::move(c));
            }
        });
        std::vector<Graph> next;
        for (auto& batch : batches)
            for (auto& [key, graph] : batch)
                if (states.emplace(key, graph).second) next.push_back(graph);
        frontier = std::move(next);
    }
    return states;
}

std::vector<Graph> mc_seeds(int max_n) {
    std::vector<Graph> seeds;
    seeds.push_back(Graph::from_edges(2, {{0, 1}}));
    for (int k = 4; k <= max_n; k += 2) seeds.push_back(gen_cycle(k));
    return seeds;
}

Graph glue_at(const Graph& g, int v, const Graph& b, int w) {
    Graph out(g.n + b.n - 1);
    for (auto [x, y] : g.edges()) out.add_edge(x, y);
    auto relabel = [&](int x) { return x == w ? v : g.n + (x < w ? x : x - 1); };
    for (auto [x, y] : b.edges()) out.add_edge(relabel(x), relabel(y));
    return out;
}

}  // namespace

std::vector<std::string> enumerate_minimal_mc_bipartite(int n, int jobs) {
    if (n < 2 || n % 2)
        throw std::invalid_argument(
            "enumerate_minimal_mc_bipartite: order must be even and at least 2");
    if (n > 12) throw std::invalid_argument("enumerate_minimal_mc_bipartite: size limit exceeded");
    auto states = grow(mc_seeds(n), n, jobs, bipartite_ear_children);
    std::vector<std::string> keys;
    std::vector<const Graph*> at_n;
    for (const auto& [key, g] : states)
        if (g.n == n) {
            keys.push_back(key);
            at_n.push_back(&g);
        }
    std::vector<char> keep(at_n.size(), 0);
    parallel_for(at_n.size(), jobs,
                 [&](std::size_t i) { keep[i] = is_minimal_matching_covered(*at_n[i]).verdict; });
    std::vector<std::string> out;
    for (std::size_t i = 0; i < keys.size(); ++i)
        if (keep[i]) out.push_back(keys[i]);
    return out;
}

std::vector<Graph> mc_bipartite_growth_corpus(int max_n, int jobs) {
    if (max_n < 2) throw std::invalid_argument("mc_bipartite_growth_corpus: order too small");
    if (max_n > 12) throw std::invalid_argument("mc_bipartite_growth_corpus: size limit exceeded");
    auto states = grow(mc_seeds(max_n), max_n, jobs, bipartite_ear_children);
    std::vector<Graph> out;
    out.reserve(states.size());
    for (auto& [key, g] : states) out.push_back(std::move(g));
    return out;
}

std::vector<std::string> enumerate_minimal_factor_critical(int n, int jobs) {
    if (n < 3 || n % 2 == 0)
        throw std::invalid_argument(
            "enumerate_minimal_factor_critical: order must be odd and at least 3");
    if (n > 11)
        throw std::invalid_argument("enumerate_minimal_factor_critical: size limit exceeded");
    std::vector<Graph> seeds;
    for (int k = 3; k <= n; k += 2) seeds.push_back(gen_cycle(k));
    auto block_states = grow(seeds, n, jobs, odd_ear_children);

    std::vector<Graph> candidates;
    candidates.reserve(block_states.size());
    for (auto& [key, g] : block_states) candidates.push_back(std::move(g));
    std::vector<char> keep(candidates.size(), 0);
    parallel_for(candidates.size(), jobs, [&](std::size_t i) {
        keep[i] = is_minimal_factor_critical(candidates[i]).verdict;
    });
    std::vector<Graph> blocks;
    for (std::size_t i = 0; i < candidates.size(); ++i)
        if (keep[i]) blocks.push_back(std::move(candidates[i]));

    // Close under gluing a block onto any vertex; block trees of minimal
    // factor critical blocks stay factor critical and minimal.
    std::map<std::string, Graph> glued;
    std::vector<Graph> frontier;
    for (const auto& b : blocks)
        if (glued.emplace(canonical_form(b), b).second) frontier.push_back(b);
    while (!frontier.empty()) {
        std::vector<std::vector<std::pair<std::string, Graph>>> batches(frontier.size());
        parallel_for(frontier.size(), jobs, [&](std::size_t i) {
            const Graph& host = frontier[i];
            for (const Graph& b : blocks) {
                if (host.n + b.n - 1 > n) continue;
                for (int v = 0; v < host.n; ++v)
                    for (int w = 0; w < b.n; ++w) {
                        Graph merged = glue_at(host, v, b, w);
                        std::string key = canonical_form(merged);
                        batches[i].emplace_back(std::move(key), std::move(merged));
                    }
            }
        });
        std::vector<Graph> next;
        for (auto& batch : batches)
            for (auto& [key, graph] : batch)
                if (glued.emplace(key, graph).second) next.push_back(graph);
        frontier = std::move(next);
    }

    std::vector<std::string> keys;
    std::vector<const Graph*> at_n;
    for (const auto& [key, g] : glued)
        if (g.n == n) {
            keys.push_back(key);
            at_n.push_back(&g);
        }
    std::vector<char> final_keep(at_n.size(), 0);
    parallel_for(at_n.size(), jobs, [&](std::size_t i) {
        final_keep[i] = is_minimal_factor_critical(*at_n[i]).verdict;
    });
    std::vector<std::string> out;
    for (std::size_t i = 0; i < keys.size(); ++i)
        if (final_keep[i]) out.push_back(keys[i]);
    return out;
}

// ---------------------------------------------------------------------------
// Brute-force oracles: labeled scans with a from-scratch bitmask matching DP,
// sharing nothing with the predicates above except graph6 canonicalization.

namespace {

constexpr int kBruteMax = 8;

struct MaskGraph {
    int n = 0;
    std::array<std::uint32_t, kBruteMax> nb{};
};

bool mask_connected(const MaskGraph& g) {
    if (g.n == 0) return false;
    std::uint32_t full = (1u << g.n) - 1;
    std::uint32_t seen = 1u, frontier = 1u;
    while (frontier) {
        std::uint32_t nxt = 0;
        for (std::uint32_t f = frontier; f; f &= f - 1) nxt |= g.nb[std::countr_zero(f)];
        frontier = nxt & ~seen;
        seen |= frontier;
    }
    return seen == full;
}

struct PmMemo {
    const MaskGraph* g;
    std::array<std::int8_t, 1u << kBruteMax> memo;
    explicit PmMemo(const MaskGraph& graph) : g(&graph) {
        std::fill_n(memo.begin(), std::size_t{1} << g->n, std::int8_t{-1});
    }
    bool matchable(std::uint32_t mask) {
        if (!mask) return true;
        std::int8_t& slot = memo[mask];
        if (slot >= 0) return slot != 0;
        int v = std::countr_zero(mask);
        std::uint32_t rest = mask & ~(1u << v);
        bool ok = false;
        for (std::uint32_t cand = g->nb[v] & rest; cand && !ok; cand &= cand - 1)
            ok = matchable(rest & ~(1u << std::countr_zero(cand)));
        slot = ok ? 1 : 0;
        return ok;
    }
};

bool mask_matching_covered(const MaskGraph& g) {
    if (g.n < 2 || g.n % 2) return false;
    if (!mask_connected(g)) return false;
    PmMemo pm(g);
    std::uint32_t full = (1u << g.n) - 1;
    if (!pm.matchable(full)) return false;
    for (int u = 0; u < g.n; ++u)
        for (std::uint32_t hi = g.nb[u] >> (u + 1); hi; hi &= hi - 1) {
            int v = u + 1 + std::countr_zero(hi);
            if (!pm.matchable(full & ~(1u << u) & ~(1u << v))) return false;
        }
    return true;
}

bool mask_minimal_mc(const MaskGraph& g) {
    if (!mask_matching_covered(g)) return false;
    for (int u = 0; u < g.n; ++u)
        for (std::uint32_t hi = g.nb[u] >> (u + 1); hi; hi &= hi - 1) {
            int v = u + 1 + std::countr_zero(hi);
            MaskGraph cut = g;
            cut.nb[u] &= ~(1u << v);
            cut.nb[v] &= ~(1u << u);
            if (mask_matching_covered(cut)) return false;
        }
    return true;
}

bool mask_factor_critical(const MaskGraph& g) {
    if (g.n % 2 == 0) return false;
    if (!mask_connected(g)) return false;
    PmMemo pm(g);
    std::uint32_t full = (1u << g.n) - 1;
    for (int v = 0; v < g.n; ++v)
        if (!pm.matchable(full & ~(1u << v))) return false;
    return true;
}

bool mask_minimal_fc(const MaskGraph& g) {
    if (!mask_factor_critical(g)) return false;
    for (int u = 0; u < g.n; ++u)
        for (std::uint32_t hi = g.nb[u] >> (u + 1); hi; hi &= hi - 1) {
            int v = u + 1 + std::countr_zero(hi);
            MaskGraph cut = g;
            cut.nb[u] &= ~(1u << v);
            cut.nb[v] &= ~(1u << u);
            if (mask_factor_critical(cut)) return false;
        }
    return true;
}

Graph mask_to_graph(const MaskGraph& g) {
    Graph out(g.n);
    for (int u = 0; u < g.n; ++u)
        for (std::uint32_t hi = g.nb[u] >> (u + 1); hi; hi &= hi - 1)
            out.add_edge(u, u + 1 + std::countr_zero(hi));
    return out;
}

}  // namespace

std::vector<std::string> brute_minimal_mc_bipartite(int n) {
    if (n < 2 || n % 2)
        throw std::invalid_argument("brute_minimal_mc_bipartite: order must be even and at least 2");
    if (n > kBruteMax)
        throw std::invalid_argument("brute_minimal_mc_bipartite: size limit exceeded");
    std::set<std::string> out;
    // A connected matching covered graph has a perfect matching, which forces
    // equal color classes, so unbalanced bipartitions cannot contribute.
    for (std::uint32_t amask = 1; amask < (1u << n); ++amask) {
        if (!(amask & 1u) || std::popcount(amask) != n / 2) continue;
        std::vector<std::pair<int, int>> slots;
        for (int u = 0; u < n; ++u) {
            if (!(amask & (1u << u))) continue;
            for (int v = 0; v < n; ++v)
                if (!(amask & (1u << v))) slots.emplace_back(u, v);
        }
        for (std::uint32_t emask = 0; emask < (1u << slots.size()); ++emask) {
            MaskGraph g;
            g.n = n;
            for (std::uint32_t e = emask; e; e &= e - 1) {
                auto [u, v] = slots[std::countr_zero(e)];
                g.nb[u] |= 1u << v;
                g.nb[v] |= 1u << u;
            }
            // A degree-1 vertex forces its edge into every perfect matching,
            // killing its neighbor's other edges; beyond K2 that means not
            // matching covered, so minimum degree 2 can be required for n > 2.
            bool ok = true;
            for (int v = 0; v < n && ok; ++v) {
                int d = std::popcount(g.nb[v]);
                ok = d >= (n > 2 ? 2 : 1);
            }
            if (!ok) continue;
            if (!mask_minimal_mc(g)) continue;
            out.insert(canonical_form(mask_to_graph(g)));
        }
    }
    return {out.begin(), out.end()};
}

std::vector<std::string> brute_minimal_factor_critical(int n) {
    if (n < 3 || n % 2 == 0)
        throw std::invalid_argument(
            "brute_minimal_factor_critical: order must be odd and at least 3");
    if (n > 7) throw std::invalid_argument("brute_minimal_factor_critical: size limit exceeded");
    std::vector<std::pair<int, int>> slots;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
    std::set<std::string> out;
    for (std::uint32_t emask = 0; emask < (1u << slots.size()); ++emask) {
        MaskGraph g;
        g.n = n;
        for (std::uint32_t e = emask; e; e &= e - 1) {
            auto [u, v] = slots[std::countr_zero(e)];
            g.nb[u] |= 1u << v;
            g.nb[v] |= 1u << u;
        }
        // Factor critical needs minimum degree 2: deleting the neighbor of a
        // degree-1 vertex leaves that vertex isolated.
        bool ok = true;
        for (int v = 0; v < n && ok; ++v) ok = std::popcount(g.nb[v]) >= 2;
        if (!ok) continue;
        if (!mask_minimal_fc(g)) continue;
        out.insert(canonical_form(mask_to_graph(g)));
    }
    return {out.begin(), out.end()};
}

// ---------------------------------------------------------------------------

namespace {

EnumerationReport spectral_sweep(int n, const std::string& class_name,
                                 const std::vector<std::string>& members, double bound,
                                 const Graph& expected_extremal, int jobs) {
    EnumerationReport r;
    r.n = n;
    r.class_name = class_name;
    r.count = members.size();
    r.bound = bound;
    std::vector<double> rho(members.size(), 0.0);
    parallel_for(members.size(), jobs, [&](std::size_t i) {
        rho[i] = spectral_radius(parse_graph6(members[i])).rho;
    });
    for (double v : rho) r.max_rho = std::max(r.max_rho, v);
    for (std::size_t i = 0; i < members.size(); ++i)
        if (rho[i] > r.max_rho - 1e-9) r.argmax.push_back(members[i]);
    r.bound_met = r.max_rho <= r.bound + 1e-9;
    r.extremal_match =
        r.argmax == std::vector<std::string>{canonical_form(expected_extremal)};
    return r;
}

}  // namespace

EnumerationReport verify_theorem_1(int n, int jobs) {
    if (n < 2 || n > 12 || n % 2)
        throw std::invalid_argument("verify_theorem_1: order must be even, between 2 and 12");
    auto members = enumerate_minimal_mc_bipartite(n, jobs);
    double bound = n <= 4 ? 2.0 : rho_p3star(n);
    Graph extremal = n == 2   ? Graph::from_edges(2, {{0, 1}})
                     : n == 4 ? gen_cycle(4)
                              : gen_p3star(n);
    return spectral_sweep(n, "minimal-mc-bipartite", members, bound, extremal, jobs);
}

EnumerationReport verify_theorem_2(int n, int jobs) {
    if (n < 3 || n > 11 || n % 2 == 0)
        throw std::invalid_argument("verify_theorem_2: order must be odd, between 3 and 11");
    auto members = enumerate_minimal_factor_critical(n, jobs);
    return spectral_sweep(n, "minimal-factor-critical", members, rho_friendship(n),
                          gen_friendship(n), jobs);
}

}  // namespace earspec

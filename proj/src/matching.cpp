#include "earspec/matching.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace earspec {

// ---------------------------------------------------------------------------
// Edmonds' blossom algorithm, array flavor: per-root BFS builds an alternating
// tree, odd cycles are contracted by rebasing every vertex of the flower onto
// the cycle's base vertex.

namespace {

struct Blossom {
    const Graph& g;
    int n;
    std::vector<int> match, p, base;
    std::vector<char> used, flower;

    explicit Blossom(const Graph& g_)
        : g(g_), n(g_.n), match(n, -1), p(n, -1), base(n), used(n, 0), flower(n, 0) {}

    int lca(int a, int b) {
        std::vector<char> seen(n, 0);
        for (;;) {
            a = base[a];
            seen[a] = 1;
            if (match[a] == -1) break;
            a = p[match[a]];
        }
        for (;;) {
            b = base[b];
            if (seen[b]) return b;
            b = p[match[b]];
        }
    }

    void mark_path(int v, int b, int child) {
        while (base[v] != b) {
            flower[base[v]] = 1;
            flower[base[match[v]]] = 1;
            p[v] = child;
            child = match[v];
            v = p[match[v]];
        }
    }

    int find_path(int root) {
        std::fill(used.begin(), used.end(), 0);
        std::fill(p.begin(), p.end(), -1);
        std::iota(base.begin(), base.end(), 0);
        used[root] = 1;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int to : g.adj[v]) {
                if (base[v] == base[to] || match[v] == to) continue;
                if (to == root || (match[to] != -1 && p[match[to]] != -1)) {
                    // odd cycle: contract the flower onto the lca base
                    int curbase = lca(v, to);
                    std::fill(flower.begin(), flower.end(), 0);
                    mark_path(v, curbase, to);
                    mark_path(to, curbase, v);
                    for (int i = 0; i < n; ++i)
                        if (flower[base[i]]) {
                            base[i] = curbase;
                            if (!used[i]) {
                                used[i] = 1;
                                q.push(i);
                            }
                        }
                } else if (p[to] == -1) {
                    p[to] = v;
                    if (match[to] == -1) return to;  // augmenting path ends here
                    used[match[to]] = 1;
                    q.push(match[to]);
                }
            }
        }
        return -1;
    }

    void solve() {
        for (int v = 0; v < n; ++v)  // greedy warm start
            if (match[v] == -1)
                for (int w : g.adj[v])
                    if (match[w] == -1) {
                        match[v] = w;
                        match[w] = v;
                        break;
                    }
        for (int v = 0; v < n; ++v)
            if (match[v] == -1) {
                int u = find_path(v);
                while (u != -1) {
                    int pv = p[u], ppv = match[pv];
                    match[u] = pv;
                    match[pv] = u;
                    u = ppv;
                }
            }
    }
};

}  // namespace

Matching maximum_matching(const Graph& g) {
    Blossom b(g);
    b.solve();
    Matching m;
    for (int v = 0; v < g.n; ++v)
        if (b.match[v] > v) m.edges.emplace_back(v, b.match[v]);
    return m;
}

Matching bipartite_maximum_matching(const Graph& g) {
    auto parts = bipartition(g);
    if (!parts) throw std::invalid_argument("bipartite_maximum_matching: graph is not bipartite");
    std::vector<int> match_of(g.n, -1);  // indexed by color_b vertices
    std::vector<char> used(g.n, 0);
    std::function<bool(int)> try_augment = [&](int v) -> bool {
        for (int to : g.adj[v]) {
            if (used[to]) continue;
            used[to] = 1;
            if (match_of[to] == -1 || try_augment(match_of[to])) {
                match_of[to] = v;
                return true;
            }
        }
        return false;
    };
    for (int v : parts->color_a) {
        std::fill(used.begin(), used.end(), 0);
        try_augment(v);
    }
    Matching m;
    for (int to = 0; to < g.n; ++to)
        if (match_of[to] != -1)
            m.edges.emplace_back(std::min(to, match_of[to]), std::max(to, match_of[to]));
    std::sort(m.edges.begin(), m.edges.end());
    return m;
}

bool has_perfect_matching(const Graph& g) {
    if (g.n % 2) return false;
    return static_cast<int>(maximum_matching(g).edges.size()) * 2 == g.n;
}

std::vector<std::pair<int, int>> allowed_edges(const Graph& g) {
    if (!has_perfect_matching(g)) return {};
    std::vector<std::pair<int, int>> out;
    for (auto [u, v] : g.edges())
        if (has_perfect_matching(without_vertices(g, {u, v}).graph)) out.emplace_back(u, v);
    return out;
}

Certificate is_matching_covered(const Graph& g) {
    Certificate c{.property = "matching-covered", .verdict = false, .witness = {}, .note = ""};
    if (g.n < 2) {
        c.note = "trivial";
        return c;
    }
    if (!is_connected(g)) {
        c.note = "disconnected";
        return c;
    }
    Matching m = maximum_matching(g);
    if (static_cast<int>(m.edges.size()) * 2 != g.n) {
        c.note = "no-perfect-matching";
        return c;
    }
    for (auto [u, v] : g.edges())
        if (!has_perfect_matching(without_vertices(g, {u, v}).graph)) {
            c.witness = std::pair{u, v};
            c.note = "edge-in-no-perfect-matching";
            return c;
        }
    c.verdict = true;
    c.witness = m;
    c.note = "ok";
    return c;
}

Certificate is_minimal_matching_covered(const Graph& g) {
    Certificate c{.property = "minimal-matching-covered", .verdict = false, .witness = {}, .note = ""};
    Certificate whole = is_matching_covered(g);
    if (!whole.verdict) {
        c.witness = whole.witness;
        c.note = "not-matching-covered:" + whole.note;
        return c;
    }
    for (auto e : g.edges())
        if (is_matching_covered(without_edges(g, {e})).verdict) {
            c.witness = e;
            c.note = "removable-edge";
            return c;
        }
    c.verdict = true;
    c.note = "ok";
    return c;
}

Certificate is_factor_critical(const Graph& g) {
    Certificate c{.property = "factor-critical", .verdict = false, .witness = {}, .note = ""};
    if (g.n % 2 == 0) {
        c.note = "even-order";
        return c;
    }
    if (!is_connected(g)) {
        c.note = "disconnected";
        return c;
    }
    for (int v = 0; v < g.n; ++v)
        if (!has_perfect_matching(without_vertices(g, {v}).graph)) {
            c.witness = v;
            c.note = "deletion-unmatchable";
            return c;
        }
    c.verdict = true;
    c.note = "ok";
    return c;
}

Certificate is_minimal_factor_critical(const Graph& g) {
    Certificate c{.property = "minimal-factor-critical", .verdict = false, .witness = {}, .note = ""};
    Certificate whole = is_factor_critical(g);
    if (!whole.verdict) {
        c.witness = whole.witness;
        c.note = "not-factor-critical:" + whole.note;
        return c;
    }
    for (auto e : g.edges())
        if (is_factor_critical(without_edges(g, {e})).verdict) {
            c.witness = e;
            c.note = "removable-edge";
            return c;
        }
    c.verdict = true;
    c.note = "ok";
    return c;
}

}  // namespace earspec

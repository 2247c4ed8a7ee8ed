#include "earspec/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <queue>
#include <stdexcept>

namespace earspec {

Graph Graph::from_edges(int order, const std::vector<std::pair<int, int>>& es) {
    Graph g(order);
    for (auto [u, v] : es) g.add_edge(u, v);
    return g;
}

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || u >= n || v < 0 || v >= n) return false;
    return std::binary_search(adj[u].begin(), adj[u].end(), v);
}

void Graph::add_edge(int u, int v) {
    if (u < 0 || u >= n || v < 0 || v >= n) throw std::invalid_argument("add_edge: vertex out of range");
    if (u == v) throw std::invalid_argument("add_edge: loop");
    if (has_edge(u, v)) throw std::invalid_argument("add_edge: edge already present");
    adj[u].insert(std::lower_bound(adj[u].begin(), adj[u].end(), v), v);
    adj[v].insert(std::lower_bound(adj[v].begin(), adj[v].end(), u), u);
}

void Graph::remove_edge(int u, int v) {
    if (!has_edge(u, v)) throw std::invalid_argument("remove_edge: edge not present");
    adj[u].erase(std::lower_bound(adj[u].begin(), adj[u].end(), v));
    adj[v].erase(std::lower_bound(adj[v].begin(), adj[v].end(), u));
}

int Graph::edge_count() const {
    std::size_t twice = 0;
    for (const auto& nb : adj) twice += nb.size();
    return static_cast<int>(twice / 2);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n; ++u)
        for (int v : adj[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

// ---------------------------------------------------------------------------
// graph6: order byte n+63, then the upper triangle read column by column
// ((0,1),(0,2),(1,2),(0,3),...) packed big-endian into 6-bit groups, each +63.

Graph parse_graph6(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("graph6: empty input");
    unsigned char c0 = static_cast<unsigned char>(text[0]);
    if (c0 == 126) throw std::invalid_argument("graph6: multi-byte order header not supported");
    if (c0 < 63 || c0 > 125) throw std::invalid_argument("graph6: bad order byte");
    int n = c0 - 63;
    std::size_t nbits = static_cast<std::size_t>(n) * (n - 1) / 2;
    std::size_t ngroups = (nbits + 5) / 6;
    if (text.size() != 1 + ngroups) throw std::invalid_argument("graph6: wrong length");

    Graph g(n);
    std::size_t bit = 0;
    for (std::size_t k = 0; k < ngroups; ++k) {
        unsigned char c = static_cast<unsigned char>(text[1 + k]);
        if (c < 63 || c > 126) throw std::invalid_argument("graph6: bad data byte");
        int group = c - 63;
        for (int b = 5; b >= 0; --b, ++bit) {
            int val = (group >> b) & 1;
            if (bit >= nbits) {
                if (val) throw std::invalid_argument("graph6: nonzero padding");
                continue;
            }
            if (val) {
                // invert bit index -> (i, j): columns j = 1..n-1 of length j
                std::size_t t = bit;
                int j = 1;
                while (t >= static_cast<std::size_t>(j)) t -= j++;
                g.add_edge(static_cast<int>(t), j);
            }
        }
    }
    return g;
}

std::string to_graph6(const Graph& g) {
    if (g.n > 62) throw std::invalid_argument("graph6: order above 62 not supported");
    std::string out(1, static_cast<char>(g.n + 63));
    int group = 0, fill = 0;
    for (int j = 1; j < g.n; ++j) {
        for (int i = 0; i < j; ++i) {
            group = group << 1 | (g.has_edge(i, j) ? 1 : 0);
            if (++fill == 6) {
                out.push_back(static_cast<char>(group + 63));
                group = fill = 0;
            }
        }
    }
    if (fill) out.push_back(static_cast<char>((group << (6 - fill)) + 63));
    return out;
}

// ---------------------------------------------------------------------------

std::vector<std::vector<int>> connected_components(const Graph& g) {
    std::vector<std::vector<int>> comps;
    std::vector<char> seen(g.n, 0);
    for (int s = 0; s < g.n; ++s) {
        if (seen[s]) continue;
        std::vector<int> comp{s};
        seen[s] = 1;
        for (std::size_t head = 0; head < comp.size(); ++head)
            for (int w : g.adj[comp[head]])
                if (!seen[w]) {
                    seen[w] = 1;
                    comp.push_back(w);
                }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

bool is_connected(const Graph& g) {
    return g.n <= 1 || connected_components(g).size() == 1;
}

std::optional<Bipartition> bipartition(const Graph& g) {
    std::vector<int> color(g.n, -1);
    for (int s = 0; s < g.n; ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : g.adj[v]) {
                if (color[w] == -1) {
                    color[w] = color[v] ^ 1;
                    q.push(w);
                } else if (color[w] == color[v]) {
                    return std::nullopt;
                }
            }
        }
    }
    Bipartition parts;
    for (int v = 0; v < g.n; ++v) (color[v] == 0 ? parts.color_a : parts.color_b).push_back(v);
    return parts;
}

InducedSubgraph without_vertices(const Graph& g, const std::vector<int>& drop) {
    std::vector<char> gone(g.n, 0);
    for (int v : drop) {
        if (v < 0 || v >= g.n) throw std::invalid_argument("without_vertices: vertex out of range");
        gone[v] = 1;
    }
    InducedSubgraph sub;
    std::vector<int> newid(g.n, -1);
    for (int v = 0; v < g.n; ++v)
        if (!gone[v]) {
            newid[v] = static_cast<int>(sub.orig.size());
            sub.orig.push_back(v);
        }
    sub.graph = Graph(static_cast<int>(sub.orig.size()));
    for (int v = 0; v < g.n; ++v)
        if (!gone[v])
            for (int w : g.adj[v])
                if (v < w && !gone[w]) sub.graph.add_edge(newid[v], newid[w]);
    return sub;
}

Graph without_edges(const Graph& g, const std::vector<std::pair<int, int>>& es) {
    Graph out = g;
    for (auto [u, v] : es) out.remove_edge(u, v);
    return out;
}

Graph with_edges(const Graph& g, const std::vector<std::pair<int, int>>& es) {
    Graph out = g;
    for (auto [u, v] : es) out.add_edge(u, v);
    return out;
}

Graph permuted(const Graph& g, const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != g.n) throw std::invalid_argument("permuted: size mismatch");
    std::vector<char> hit(g.n, 0);
    for (int p : perm) {
        if (p < 0 || p >= g.n || hit[p]) throw std::invalid_argument("permuted: not a permutation");
        hit[p] = 1;
    }
    Graph out(g.n);
    for (auto [u, v] : g.edges()) out.add_edge(perm[u], perm[v]);
    return out;
}

// ---------------------------------------------------------------------------
// Canonical form: branch and bound over vertex orderings. Key fact: the
// graph6 bit string is compared column by column, and the column produced at
// position j depends only on the j vertices already placed, so at every node
// only candidates realizing the lexicographically smallest next column can
// lead to the minimum. Ties still branch; interchangeable (twin) candidates
// are branched once.

namespace {

struct CanonSearch {
    int n;
    std::vector<uint32_t> nb;       // neighbor bitmask per vertex
    std::vector<int> placed;
    std::vector<uint8_t> bits;      // partial column bits, length placed-choose-2
    std::vector<uint8_t> best;
    bool have_best = false;

    explicit CanonSearch(const Graph& g) : n(g.n), nb(g.n, 0) {
        for (int v = 0; v < n; ++v)
            for (int w : g.adj[v]) nb[v] |= uint32_t{1} << w;
    }

    bool twin(int u, int v) const {
        return nb[u] == nb[v] || (nb[u] | uint32_t{1} << u) == (nb[v] | uint32_t{1} << v);
    }

    // Column of candidate v at the current depth: adjacency to placed[0..j).
    std::vector<uint8_t> column(int v) const {
        std::vector<uint8_t> col(placed.size());
        for (std::size_t i = 0; i < placed.size(); ++i) col[i] = (nb[v] >> placed[i]) & 1;
        return col;
    }

    void dfs(uint32_t used, bool tied) {
        std::size_t j = placed.size();
        if (j == static_cast<std::size_t>(n)) {
            if (!have_best || (tied ? false : bits < best)) {
                best = bits;
                have_best = true;
            }
            return;
        }
        std::vector<std::pair<std::vector<uint8_t>, int>> cands;
        for (int v = 0; v < n; ++v)
            if (!(used >> v & 1)) cands.emplace_back(column(v), v);
        const std::vector<uint8_t>* low = &cands[0].first;
        for (const auto& c : cands)
            if (c.first < *low) low = &c.first;
        if (tied && have_best) {
            // compare the forced column against the incumbent's column here
            std::size_t off = j * (j - 1) / 2;
            for (std::size_t i = 0; i < j; ++i) {
                if ((*low)[i] < best[off + i]) { tied = false; break; }
                if ((*low)[i] > best[off + i]) return;  // prune: worse than incumbent
            }
        }
        std::vector<int> tried;
        for (const auto& [col, v] : cands) {
            if (col != *low) continue;
            bool dup = false;
            for (int u : tried)
                if (twin(u, v)) { dup = true; break; }
            if (dup) continue;
            tried.push_back(v);
            placed.push_back(v);
            bits.insert(bits.end(), col.begin(), col.end());
            dfs(used | uint32_t{1} << v, tied);
            bits.resize(bits.size() - col.size());
            placed.pop_back();
        }
    }
};

}  // namespace

std::string canonical_form(const Graph& g) {
    if (g.n > 14) throw std::invalid_argument("canonical_form: graph too large");
    if (g.n <= 1) return to_graph6(g);
    CanonSearch search(g);
    search.dfs(0, true);
    Graph canon(g.n);
    std::size_t bit = 0;
    for (int j = 1; j < g.n; ++j)
        for (int i = 0; i < j; ++i, ++bit)
            if (search.best[bit]) canon.add_edge(i, j);
    return to_graph6(canon);
}

// ---------------------------------------------------------------------------
// Cut vertices and biconnected components (Tarjan, iterative-enough for our
// sizes as plain recursion via std::function).

namespace {

struct BlockState {
    const Graph& g;
    std::vector<int> disc, low;
    std::vector<std::pair<int, int>> stack;
    std::vector<std::vector<int>> comps;
    std::vector<char> cut;
    int timer = 0;

    explicit BlockState(const Graph& g_) : g(g_), disc(g_.n, -1), low(g_.n, 0), cut(g_.n, 0) {}

    void pop_component(std::pair<int, int> until) {
        std::vector<int> verts;
        while (true) {
            auto e = stack.back();
            stack.pop_back();
            verts.push_back(e.first);
            verts.push_back(e.second);
            if (e == until) break;
        }
        std::sort(verts.begin(), verts.end());
        verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
        comps.push_back(std::move(verts));
    }

    void dfs(int v, int parent) {
        disc[v] = low[v] = timer++;
        int children = 0;
        for (int w : g.adj[v]) {
            if (w == parent) {
                parent = -2;  // skip the tree edge once; parallel edges don't exist
                continue;
            }
            if (disc[w] == -1) {
                ++children;
                stack.push_back({v, w});
                dfs(w, v);
                low[v] = std::min(low[v], low[w]);
                if (low[w] >= disc[v]) {
                    if (disc[v] > 0 || children > 1) cut[v] = 1;
                    pop_component({v, w});
                }
            } else if (disc[w] < disc[v]) {
                stack.push_back({v, w});
                low[v] = std::min(low[v], disc[w]);
            }
        }
    }
};

}  // namespace

std::vector<int> cut_vertices(const Graph& g) {
    BlockState st(g);
    for (int v = 0; v < g.n; ++v)
        if (st.disc[v] == -1) {
            st.timer = 0;
            st.dfs(v, -1);
        }
    std::vector<int> out;
    for (int v = 0; v < g.n; ++v)
        if (st.cut[v]) out.push_back(v);
    return out;
}

std::vector<std::vector<int>> blocks(const Graph& g) {
    BlockState st(g);
    for (int v = 0; v < g.n; ++v)
        if (st.disc[v] == -1) {
            st.timer = 0;
            st.dfs(v, -1);
            if (g.adj[v].empty()) st.comps.push_back({v});
        }
    std::sort(st.comps.begin(), st.comps.end());
    return st.comps;
}

// ---------------------------------------------------------------------------

namespace detail {

namespace {

bool extend(const Graph& g, std::vector<int>& img, std::vector<char>& used, int next, int forced_src, int forced_dst) {
    int n = g.n;
    if (next == n) return true;
    // map forced_src first, then the remaining vertices in index order
    int v = next == 0 ? forced_src : (next <= forced_src ? next - 1 : next);
    for (int w = 0; w < n; ++w) {
        if (used[w]) continue;
        if (next == 0 && w != forced_dst) continue;
        if (g.degree(v) != g.degree(w)) continue;
        bool fits = true;
        for (int x : g.adj[v])
            if (img[x] != -1 && !g.has_edge(w, img[x])) { fits = false; break; }
        for (int x = 0; x < n && fits; ++x)
            if (x != v && img[x] != -1 && !g.has_edge(v, x) && g.has_edge(w, img[x])) fits = false;
        if (!fits) continue;
        img[v] = w;
        used[w] = 1;
        if (extend(g, img, used, next + 1, forced_src, forced_dst)) return true;
        img[v] = -1;
        used[w] = 0;
    }
    return false;
}

}  // namespace

bool exists_automorphism(const Graph& g, int u, int w) {
    if (u == w) return true;
    if (g.degree(u) != g.degree(w)) return false;
    std::vector<int> img(g.n, -1);
    std::vector<char> used(g.n, 0);
    return extend(g, img, used, 0, u, w);
}

}  // namespace detail

}  // namespace earspec

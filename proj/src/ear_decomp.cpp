#include "earspec/ear_decomp.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>

namespace earspec {

GradeInfo ear_grades(const EarDecomposition& d) {
    std::map<int, int> first_elem;  // vertex -> element where it first appeared
    for (int v : d.base) first_elem.emplace(v, 0);
    std::vector<int> grades{0};
    for (std::size_t k = 0; k < d.ears.size(); ++k) {
        const Ear& e = d.ears[k];
        if (e.path.size() < 2) throw std::invalid_argument("ear_grades: degenerate ear");
        auto host_grade = [&](int v) {
            auto it = first_elem.find(v);
            if (it == first_elem.end())
                throw std::invalid_argument("ear_grades: ear end not in earlier elements");
            return grades[it->second];
        };
        int ga = host_grade(e.path.front()), gb = host_grade(e.path.back());
        bool closes_base = d.kind == EarKind::bipartite && d.base.size() == 2 && k == 0;
        grades.push_back(closes_base ? 0 : 1 + std::max(ga, gb));
        for (std::size_t i = 1; i + 1 < e.path.size(); ++i)
            first_elem.emplace(e.path[i], static_cast<int>(k) + 1);
    }
    return {grades, *std::max_element(grades.begin(), grades.end())};
}

Certificate validate(const Graph& g, const EarDecomposition& d) {
    Certificate c{.property = "ear-decomposition", .verdict = false, .witness = {}, .note = ""};
    auto fail = [&c](std::string note) {
        c.note = std::move(note);
        return c;
    };
    auto in_range = [&g](int v) { return 0 <= v && v < g.n; };

    for (int v : d.base)
        if (!in_range(v)) return fail("base:vertex-out-of-range");
    {
        std::set<int> uniq(d.base.begin(), d.base.end());
        if (uniq.size() != d.base.size()) return fail("base:repeated-vertex");
    }
    Graph prefix(g.n);
    std::vector<char> inpre(g.n, 0);
    if (d.kind == EarKind::bipartite && d.base.size() == 2) {
        if (!g.has_edge(d.base[0], d.base[1])) return fail("base:not-an-edge");
        prefix.add_edge(d.base[0], d.base[1]);
        inpre[d.base[0]] = inpre[d.base[1]] = 1;
    } else {
        std::size_t k = d.base.size();
        if (k < 3) return fail("base:too-short");
        bool want_odd = d.kind == EarKind::odd;
        if ((k % 2 == 1) != want_odd) return fail("base:parity");
        for (std::size_t i = 0; i < k; ++i) {
            int a = d.base[i], b = d.base[(i + 1) % k];
            if (!g.has_edge(a, b)) return fail("base:not-a-cycle");
            prefix.add_edge(a, b);
            inpre[a] = 1;
        }
    }

    // 2-coloring of the running prefix, refreshed as ears arrive
    auto prefix_colors = [&]() {
        std::vector<int> color(g.n, -1);
        std::queue<int> q;
        color[d.base[0]] = 0;
        q.push(d.base[0]);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : prefix.adj[v])
                if (color[w] == -1) {
                    color[w] = color[v] ^ 1;
                    q.push(w);
                }
        }
        return color;
    };

    for (std::size_t k = 0; k < d.ears.size(); ++k) {
        std::string tag = "ear-" + std::to_string(k + 1);
        const auto& p = d.ears[k].path;
        if (p.size() < 2) return fail(tag + ":too-short");
        for (int v : p)
            if (!in_range(v)) return fail(tag + ":vertex-out-of-range");
        if (p.size() % 2) return fail(tag + ":even-length");
        int u = p.front(), v = p.back();
        if (u == v) return fail(tag + ":ends-equal");
        if (!inpre[u] || !inpre[v]) return fail(tag + ":end-not-in-prefix");
        if (d.kind == EarKind::bipartite) {
            auto color = prefix_colors();
            if (color[u] == color[v]) return fail(tag + ":ends-same-part");
        }
        for (std::size_t i = 1; i + 1 < p.size(); ++i)
            if (inpre[p[i]]) return fail(tag + ":internal-not-new");
        {
            std::set<int> uniq(p.begin() + 1, p.end() - 1);
            if (uniq.size() + 2 != p.size()) return fail(tag + ":internal-not-new");
        }
        for (std::size_t i = 0; i + 1 < p.size(); ++i) {
            if (!g.has_edge(p[i], p[i + 1])) return fail(tag + ":not-an-edge");
            if (prefix.has_edge(p[i], p[i + 1])) return fail(tag + ":edge-reused");
        }
        for (std::size_t i = 0; i + 1 < p.size(); ++i) prefix.add_edge(p[i], p[i + 1]);
        for (int w : p) inpre[w] = 1;
    }

    for (int v = 0; v < g.n; ++v)
        if (!inpre[v]) return fail("vertices-not-covered");
    if (prefix.edge_count() != g.edge_count()) return fail("edges-not-covered");
    if (!d.grades.empty() && ear_grades(d).grades != d.grades) return fail("grades-mismatch");
    c.verdict = true;
    c.note = "ok";
    return c;
}

// ---------------------------------------------------------------------------
// Reverse-deletion search shared by both decomposition kinds. The working
// graph keeps the original labels; dead vertices just lose all their edges.

namespace {

struct Work {
    Graph g;
    std::vector<char> alive;
    int alive_count;

    explicit Work(const Graph& g_) : g(g_), alive(g_.n, 1), alive_count(g_.n) {}

    InducedSubgraph compact() const {
        std::vector<int> drop;
        for (int v = 0; v < g.n; ++v)
            if (!alive[v]) drop.push_back(v);
        return without_vertices(g, drop);
    }

    void remove_ear(const Ear& e) {
        for (std::size_t i = 0; i + 1 < e.path.size(); ++i) g.remove_edge(e.path[i], e.path[i + 1]);
        for (std::size_t i = 1; i + 1 < e.path.size(); ++i) {
            alive[e.path[i]] = 0;
            --alive_count;
        }
    }

    bool all_degree_two() const {
        for (int v = 0; v < g.n; ++v)
            if (alive[v] && g.degree(v) != 2) return false;
        return true;
    }

    // Cycle in canonical rotation; valid when all alive degrees are 2 and the
    // alive part is connected.
    std::vector<int> cycle_order() const {
        int s = 0;
        while (!alive[s]) ++s;
        std::vector<int> cyc{s, std::min(g.adj[s][0], g.adj[s][1])};
        while (true) {
            int cur = cyc.back(), prev = cyc[cyc.size() - 2];
            int nxt = g.adj[cur][0] == prev ? g.adj[cur][1] : g.adj[cur][0];
            if (nxt == s) break;
            cyc.push_back(nxt);
        }
        return cyc;
    }
};

// Possible last ears: maximal chains of degree-2 vertices with even interior
// count between two distinct anchors, plus single edges joining two vertices
// of degree >= 3.
std::vector<Ear> last_ear_candidates(const Work& w) {
    std::vector<Ear> cands;
    for (int a = 0; a < w.g.n; ++a) {
        if (!w.alive[a] || w.g.degree(a) == 2) continue;
        for (int x : w.g.adj[a]) {
            if (w.g.degree(x) != 2) continue;
            std::vector<int> path{a, x};
            while (w.g.degree(path.back()) == 2) {
                int cur = path.back(), prev = path[path.size() - 2];
                path.push_back(w.g.adj[cur][0] == prev ? w.g.adj[cur][1] : w.g.adj[cur][0]);
            }
            int b = path.back();
            if (b == a || b < a) continue;  // closed walk, or found from the other anchor
            if (path.size() % 2 == 0) cands.push_back({path});
        }
    }
    for (auto [u, v] : w.g.edges())
        if (w.g.degree(u) >= 3 && w.g.degree(v) >= 3) cands.push_back({{u, v}});
    std::sort(cands.begin(), cands.end(), [](const Ear& x, const Ear& y) {
        if (x.path.size() != y.path.size()) return x.path.size() > y.path.size();
        return x.path < y.path;
    });
    return cands;
}

// prefix_ok decides whether a peeled-down graph may appear as a decomposition
// prefix; base_case handles the innermost cycle.
template <class PrefixOk>
bool peel(const Work& w, const PrefixOk& prefix_ok, bool k2_base, std::vector<Ear>& ears_rev,
          std::vector<int>& base_out) {
    if (k2_base && w.alive_count == 2) {
        base_out.clear();
        for (int v = 0; v < w.g.n; ++v)
            if (w.alive[v]) base_out.push_back(v);
        return true;
    }
    if (w.all_degree_two()) {
        std::vector<int> cyc = w.cycle_order();
        if (!k2_base) {
            base_out = cyc;
            return true;
        }
        // peel the cycle itself into K2 + one ear, ear oriented from the
        // smaller end
        base_out = {cyc[0], cyc[1]};
        Ear e;
        e.path.push_back(cyc[0]);
        for (std::size_t i = cyc.size() - 1; i >= 1; --i) e.path.push_back(cyc[i]);
        ears_rev.push_back(e);
        return true;
    }
    for (const Ear& cand : last_ear_candidates(w)) {
        Work w2 = w;
        w2.remove_ear(cand);
        if (!prefix_ok(w2.compact().graph)) continue;
        if (peel(w2, prefix_ok, k2_base, ears_rev, base_out)) {
            ears_rev.push_back(cand);
            return true;
        }
    }
    return false;
}

}  // namespace

std::optional<EarDecomposition> find_bipartite_ear_decomposition(const Graph& g) {
    if (!bipartition(g) || !is_matching_covered(g).verdict) return std::nullopt;
    Work w(g);
    std::vector<Ear> ears;  // peel pushes bottom-up, so this is already in order
    std::vector<int> base;
    auto ok = [](const Graph& h) { return is_matching_covered(h).verdict; };
    if (!peel(w, ok, true, ears, base)) return std::nullopt;
    EarDecomposition d{EarKind::bipartite, base, std::move(ears), {}};
    d.grades = ear_grades(d).grades;
    return d;
}

std::optional<EarDecomposition> find_odd_ear_decomposition(const Graph& g) {
    if (!is_connected(g)) throw std::invalid_argument("find_odd_ear_decomposition: disconnected input");
    if (!cut_vertices(g).empty()) throw std::invalid_argument("find_odd_ear_decomposition: input has a cut vertex");
    if (!is_factor_critical(g).verdict) return std::nullopt;
    if (g.n < 3) return std::nullopt;  // K1 is factor-critical but holds no odd cycle
    Work w(g);
    std::vector<Ear> ears;  // peel pushes bottom-up, so this is already in order
    std::vector<int> base;
    auto ok = [](const Graph& h) {
        return cut_vertices(h).empty() && is_factor_critical(h).verdict;
    };
    if (!peel(w, ok, false, ears, base)) return std::nullopt;
    EarDecomposition d{EarKind::odd, base, std::move(ears), {}};
    d.grades = ear_grades(d).grades;
    return d;
}

// ---------------------------------------------------------------------------

namespace {

const std::vector<int>& element_vertices(const EarDecomposition& d, int elem) {
    int nelem = 1 + static_cast<int>(d.ears.size());
    if (elem < 0 || elem >= nelem) throw std::invalid_argument("host element out of range");
    return elem == 0 ? d.base : d.ears[elem - 1].path;
}

}  // namespace

std::vector<ParallelFamily> parallel_families(const EarDecomposition& d, int host) {
    const std::vector<int>& seq = element_vertices(d, host);
    std::set<int> on(seq.begin(), seq.end());
    std::map<std::pair<int, int>, std::vector<int>> fam;
    for (int e = host + 1; e <= static_cast<int>(d.ears.size()); ++e) {
        auto [a, b] = d.ears[e - 1].ends();
        if (a > b) std::swap(a, b);
        if (on.count(a) && on.count(b)) fam[{a, b}].push_back(e);
    }
    std::vector<ParallelFamily> out;
    for (auto& [ends, members] : fam) out.push_back({ends, std::move(members)});
    return out;
}

bool compatible(const EarDecomposition& d, int host, const ParallelFamily& f1, const ParallelFamily& f2) {
    const std::vector<int>& seq = element_vertices(d, host);
    std::map<int, int> pos;
    for (std::size_t i = 0; i < seq.size(); ++i) pos.emplace(seq[i], static_cast<int>(i));
    auto positions = [&](const ParallelFamily& f) {
        std::vector<int> ps;
        for (int v : {f.ends.first, f.ends.second}) {
            auto it = pos.find(v);
            if (it != pos.end()) ps.push_back(it->second);
        }
        if (ps.empty()) throw std::invalid_argument("compatible: family has no end on host");
        std::sort(ps.begin(), ps.end());
        return ps;
    };
    std::vector<int> a = positions(f1), b = positions(f2);
    bool cyclic = host == 0 && d.base.size() > 2;
    if (!cyclic) {
        auto inside = [](const std::vector<int>& seg, int x) { return seg.front() < x && x < seg.back(); };
        for (int x : b)
            if (inside(a, x)) return false;
        for (int x : a)
            if (inside(b, x)) return false;
        return true;
    }
    // cycle host: the two position pairs must not cross as chords
    if (a.size() < 2 || b.size() < 2) return true;
    auto strictly_within = [&](int x, int lo, int hi) {
        return lo <= hi ? (lo < x && x < hi) : (x > lo || x < hi);
    };
    bool in1 = strictly_within(b[0], a[0], a[1]) || strictly_within(b[1], a[0], a[1]);
    bool in2 = strictly_within(b[0], a[1], a[0]) || strictly_within(b[1], a[1], a[0]);
    return !(in1 && in2);
}

EarAddition add_ear(const Graph& g, const EarDecomposition& d, const Ear& ear) {
    const auto& p = ear.path;
    if (p.size() < 2) throw std::invalid_argument("add_ear: ear too short");
    if (ear.length() % 2 == 0) throw std::invalid_argument("add_ear: even-length ear");
    int u = p.front(), v = p.back();
    if (u < 0 || u >= g.n || v < 0 || v >= g.n) throw std::invalid_argument("add_ear: end not in graph");
    if (u == v) throw std::invalid_argument("add_ear: ends equal");
    int t = static_cast<int>(p.size()) - 2;
    std::vector<char> seen(t, 0);
    for (std::size_t i = 1; i + 1 < p.size(); ++i) {
        int w = p[i];
        if (w < g.n || w >= g.n + t || seen[w - g.n])
            throw std::invalid_argument("add_ear: internals must be the fresh vertices");
        seen[w - g.n] = 1;
    }
    if (d.kind == EarKind::bipartite) {
        auto parts = bipartition(g);
        if (!parts) throw std::invalid_argument("add_ear: graph not bipartite");
        std::vector<char> in_a(g.n, 0);
        for (int w : parts->color_a) in_a[w] = 1;
        if (in_a[u] == in_a[v]) throw std::invalid_argument("add_ear: ends in the same part");
        if (ear.trivial()) throw std::invalid_argument("add_ear: trivial ear for bipartite kind");
        if (g.has_edge(u, v)) throw std::invalid_argument("add_ear: ends adjacent");
    }
    if (ear.trivial() && g.has_edge(u, v)) throw std::invalid_argument("add_ear: edge already present");
    Graph out(g.n + t);
    for (auto [x, y] : g.edges()) out.add_edge(x, y);
    for (std::size_t i = 0; i + 1 < p.size(); ++i) out.add_edge(p[i], p[i + 1]);
    EarAddition result{std::move(out), d};
    result.decomposition.ears.push_back(ear);
    result.decomposition.grades = ear_grades(result.decomposition).grades;
    return result;
}

Graph edge_exchange(const Graph& g, const std::vector<int>& t, const std::vector<int>& s1,
                    const std::vector<int>& s2) {
    if (t.empty() || s1.empty() || s2.empty())
        throw std::invalid_argument("edge_exchange: sets must be nonempty");
    std::vector<int> tag(g.n, 0);
    auto mark = [&](const std::vector<int>& set, int label) {
        for (int v : set) {
            if (v < 0 || v >= g.n) throw std::invalid_argument("edge_exchange: vertex out of range");
            if (tag[v]) throw std::invalid_argument("edge_exchange: sets must be disjoint");
            tag[v] = label;
        }
    };
    mark(t, 1);
    mark(s1, 2);
    mark(s2, 3);
    for (int a : t)
        for (int b : s1)
            if (g.has_edge(a, b)) throw std::invalid_argument("edge_exchange: T-S1 edge already present");
    for (int a : t)
        for (int b : s2)
            if (!g.has_edge(a, b)) throw std::invalid_argument("edge_exchange: T-S2 edge missing");
    Graph out = g;
    for (int a : t)
        for (int b : s1) out.add_edge(a, b);
    for (int a : t)
        for (int b : s2) out.remove_edge(a, b);
    return out;
}

}  // namespace earspec

// Acceptance gate: one line per criterion, exit code = number of failures.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <exception>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <variant>
#include <vector>

#include "earspec/ear_decomp.hpp"
#include "earspec/extremal.hpp"
#include "earspec/graph.hpp"
#include "earspec/matching.hpp"
#include "earspec/nice_cycle.hpp"
#include "earspec/spectral.hpp"
#include "oracles.hpp"

namespace {

using namespace earspec;

int jobs() {
    unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(std::min(hc, 8u));
}

[[noreturn]] void fail(const std::string& detail) { throw std::runtime_error(detail); }

std::string fmt(double x) {
    std::ostringstream os;
    os << std::setprecision(2) << std::scientific << x;
    return os.str();
}

int pick(std::mt19937& rng, int bound) {
    return std::uniform_int_distribution<int>(0, bound - 1)(rng);
}

// --- criterion 1: theorem sweep over minimal matching covered bipartite graphs

std::string criterion_mc_sweep() {
    struct Case {
        int n;
        double rho;
        Graph extremal;
    };
    const std::vector<Case> cases = {
        {2, 1.0, Graph::from_edges(2, {{0, 1}})},
        {4, 2.0, gen_cycle(4)},
        {6, 2.0, gen_cycle(6)},
        {8, (1.0 + std::sqrt(13.0)) / 2.0, gen_p3star(8)},
        {10, (1.0 + std::sqrt(17.0)) / 2.0, gen_p3star(10)},
    };
    double worst = 0.0;
    for (const auto& c : cases) {
        EnumerationReport r = verify_theorem_1(c.n, jobs());
        std::string tag = "n=" + std::to_string(c.n);
        if (!r.bound_met) fail(tag + ": bound exceeded, max rho " + fmt(r.max_rho));
        if (!r.extremal_match) fail(tag + ": maximizer is not the expected extremal graph");
        double gap = std::abs(r.max_rho - c.rho);
        if (gap > 1e-9) fail(tag + ": max rho off the closed form by " + fmt(gap));
        worst = std::max(worst, gap);
        if (r.argmax != std::vector<std::string>{canonical_form(c.extremal)})
            fail(tag + ": argmax set differs from the expected graph");
    }
    return "orders {2,4,6,8,10}: unique maximizers as predicted, radii within " + fmt(worst) +
           " of the closed forms";
}

// --- criterion 2: theorem sweep over minimal factor critical graphs

std::string criterion_fc_sweep() {
    struct Case {
        int n;
        double rho;
    };
    const std::vector<Case> cases = {
        {3, 2.0},
        {5, (1.0 + std::sqrt(17.0)) / 2.0},
        {7, 3.0},
        {9, (1.0 + std::sqrt(33.0)) / 2.0},
    };
    double worst = 0.0;
    for (const auto& c : cases) {
        EnumerationReport r = verify_theorem_2(c.n, jobs());
        std::string tag = "n=" + std::to_string(c.n);
        if (!r.bound_met) fail(tag + ": bound exceeded, max rho " + fmt(r.max_rho));
        if (!r.extremal_match) fail(tag + ": maximizer is not the friendship graph");
        double gap = std::abs(r.max_rho - c.rho);
        if (gap > 1e-9) fail(tag + ": max rho off the closed form by " + fmt(gap));
        if (r.argmax != std::vector<std::string>{canonical_form(gen_friendship(c.n))})
            fail(tag + ": argmax set differs from the friendship graph");
        for (const std::string& s : r.argmax) {
            double cross = oracles::jacobi_rho(parse_graph6(s));
            double jgap = std::abs(cross - r.max_rho);
            if (jgap > 1e-9) fail(tag + ": dense eigensolver disagrees by " + fmt(jgap));
            worst = std::max(worst, std::max(gap, jgap));
        }
    }
    return "orders {3,5,7,9}: friendship graphs are the unique maximizers; dense eigensolver "
           "agrees within " + fmt(worst);
}

// --- criterion 3: growth enumeration against labeled brute force

std::string criterion_enumeration_oracle() {
    std::size_t graphs = 0;
    for (int n : {2, 4, 6, 8}) {
        auto grown = enumerate_minimal_mc_bipartite(n, jobs());
        auto brute = brute_minimal_mc_bipartite(n);
        if (grown != brute)
            fail("matching covered n=" + std::to_string(n) + ": growth found " +
                 std::to_string(grown.size()) + " classes, brute force " + std::to_string(brute.size()));
        graphs += grown.size();
    }
    for (int n : {3, 5, 7}) {
        auto grown = enumerate_minimal_factor_critical(n, jobs());
        auto brute = brute_minimal_factor_critical(n);
        if (grown != brute)
            fail("factor critical n=" + std::to_string(n) + ": growth found " +
                 std::to_string(grown.size()) + " classes, brute force " + std::to_string(brute.size()));
        graphs += grown.size();
    }
    return "ear growth equals brute force on 7 class lists (" + std::to_string(graphs) +
           " graphs: covered orders 2..8, critical orders 3..7)";
}

// --- criterion 4: nice-cycle minimality versus edge deletion

std::string criterion_nice_cycles() {
    std::size_t minimal = 0, composite = 0;
    for (const Graph& g : mc_bipartite_growth_corpus(10, jobs())) {
        std::string s = to_graph6(g);
        Certificate direct = is_minimal_matching_covered(g);
        Certificate nice = minimality_via_nice_cycles(g);
        if (direct.verdict != nice.verdict)
            fail(s + ": nice-cycle verdict " + (nice.verdict ? "yes" : "no") +
                 " contradicts edge deletion");
        if (nice.verdict) {
            ++minimal;
            continue;
        }
        ++composite;
        const auto* w = std::get_if<CycleChordWitness>(&nice.witness);
        if (!w) fail(s + ": negative certificate lacks a cycle-chord witness");
        if (!is_nice(g, w->cycle)) fail(s + ": witness cycle is not nice");
        if (!g.has_edge(w->chord.first, w->chord.second)) fail(s + ": witness chord is not an edge");
        int len = static_cast<int>(w->cycle.size()), iu = -1, iv = -1;
        for (int i = 0; i < len; ++i) {
            if (w->cycle[i] == w->chord.first) iu = i;
            if (w->cycle[i] == w->chord.second) iv = i;
        }
        int dist = std::abs(iu - iv);
        if (iu < 0 || iv < 0 || dist == 0 || dist == 1 || dist == len - 1)
            fail(s + ": witness chord does not join two non-consecutive cycle vertices");
    }
    return std::to_string(minimal + composite) +
           " corpus graphs up to order 10: chord-free nice cycles coincide with deletion "
           "minimality (" + std::to_string(minimal) + " minimal, " + std::to_string(composite) +
           " not)";
}

// --- criterion 5: closed form for the double-hub family

std::string criterion_closed_form() {
    double worst_quad = 0.0, worst_gap = 0.0;
    for (int n = 6; n <= 64; n += 2) {
        double r = rho_p3star(n);
        double quad = std::abs(r * r - r - (n - 2) / 2.0);
        if (quad > 1e-9)
            fail("n=" + std::to_string(n) + ": rho^2 - rho - (n-2)/2 = " + fmt(quad));
        worst_quad = std::max(worst_quad, quad);
        double gap = std::abs(spectral_radius(gen_p3star(n)).rho - r);
        if (gap > 1e-9)
            fail("n=" + std::to_string(n) + ": power iteration is " + fmt(gap) +
                 " from the closed form");
        worst_gap = std::max(worst_gap, gap);
    }
    return "even orders 6..64: quadratic identity holds within " + fmt(worst_quad) +
           ", power iteration within " + fmt(worst_gap);
}

// --- criterion 6: edge exchanges, valid and malformed

struct ExchangeHost {
    Graph g;
    std::vector<int> a, b;
    SpectralResult spec;
};

std::string criterion_edge_exchange() {
    std::vector<ExchangeHost> hosts;
    for (const Graph& g : mc_bipartite_growth_corpus(10, jobs())) {
        if (g.n < 6) continue;
        auto sides = bipartition(g);
        if (!sides) continue;
        hosts.push_back({g, sides->color_a, sides->color_b, spectral_radius(g)});
    }
    if (hosts.empty()) fail("no exchange hosts available");

    std::mt19937 rng(20260819u);
    int done = 0;
    std::uint64_t attempts = 0;
    double min_gain = 1e300;
    while (done < 100) {
        if (++attempts > 200000) fail("could not assemble 100 valid exchanges");
        const ExchangeHost& h = hosts[pick(rng, static_cast<int>(hosts.size()))];
        const std::vector<int>& from = pick(rng, 2) ? h.a : h.b;
        const std::vector<int>& into = (&from == &h.a) ? h.b : h.a;
        int t = from[pick(rng, static_cast<int>(from.size()))];
        if (h.g.degree(t) == 0) continue;
        int s2 = h.g.adj[t][pick(rng, h.g.degree(t))];
        std::vector<int> cand;
        for (int v : into)
            if (v != s2 && !h.g.has_edge(t, v)) cand.push_back(v);
        if (cand.empty()) continue;
        std::shuffle(cand.begin(), cand.end(), rng);
        cand.resize(std::min<std::size_t>(cand.size(), 1 + pick(rng, 2)));
        double sum1 = 0.0;
        for (int v : cand) sum1 += h.spec.perron[v];
        if (sum1 < h.spec.perron[s2]) continue;  // needs the heavier side
        Graph swapped = edge_exchange(h.g, {t}, cand, {s2});
        double gain = spectral_radius_any(swapped) - h.spec.rho;
        if (gain <= 1e-9)
            fail("exchange on " + to_graph6(h.g) + " raised rho by only " + fmt(gain));
        min_gain = std::min(min_gain, gain);
        ++done;
    }

    const char* messages[5] = {
        "edge_exchange: sets must be nonempty",
        "edge_exchange: vertex out of range",
        "edge_exchange: sets must be disjoint",
        "edge_exchange: T-S1 edge already present",
        "edge_exchange: T-S2 edge missing",
    };
    int rejected = 0;
    for (int cls = 0; cls < 5; ++cls) {
        for (int i = 0; i < 20; ++i) {
            const ExchangeHost& h = hosts[(cls * 20 + i) % hosts.size()];
            int a0 = h.a[i % h.a.size()], b0 = h.b[0], b1 = h.b[1 % h.b.size()];
            std::vector<int> t{a0}, s1{b0}, s2{b1};
            if (cls == 0) {
                (i % 3 == 0 ? t : i % 3 == 1 ? s1 : s2).clear();
            } else if (cls == 1) {
                int bad = (i % 2 == 0) ? h.g.n + i : -1 - i;
                (i % 3 == 0 ? t : i % 3 == 1 ? s1 : s2) = {bad};
            } else if (cls == 2) {
                if (i % 2 == 0)
                    s2 = s1;
                else
                    s1 = {a0, b0};
            } else if (cls == 3) {
                int t0 = h.a[i % h.a.size()];
                t = {t0};
                s1 = {h.g.adj[t0][0]};
                s2 = {h.g.adj[t0][1 % h.g.adj[t0].size()]};
                if (s1 == s2) s2 = {h.g.adj[t0][0]};  // degenerate host; still T-S1
            } else {
                bool built = false;
                for (std::size_t off = 0; off < hosts.size() && !built; ++off) {
                    const ExchangeHost& hh = hosts[(cls * 20 + i + off) % hosts.size()];
                    for (int t0 : hh.a) {
                        std::vector<int> nn;
                        for (int v : hh.b)
                            if (!hh.g.has_edge(t0, v)) nn.push_back(v);
                        if (nn.size() < 2) continue;
                        t = {t0};
                        s1 = {nn[i % nn.size()]};
                        s2 = {nn[(i + 1) % nn.size()]};
                        if (s1 == s2) s2 = {nn[(i + 2) % nn.size()]};
                        Graph probe = hh.g;
                        try {
                            edge_exchange(probe, t, s1, s2);
                            fail("edge_exchange accepted a request with a missing T-S2 edge");
                        } catch (const std::invalid_argument& e) {
                            if (std::string(e.what()) != messages[4])
                                fail(std::string("wrong diagnostic: got \"") + e.what() + "\"");
                        }
                        built = true;
                        break;
                    }
                }
                if (!built) fail("no host offers two absent edges for the missing-edge class");
                ++rejected;
                continue;
            }
            try {
                edge_exchange(h.g, t, s1, s2);
                fail(std::string("edge_exchange accepted a request that should trip \"") +
                     messages[cls] + "\"");
            } catch (const std::invalid_argument& e) {
                if (std::string(e.what()) != messages[cls])
                    fail(std::string("wrong diagnostic: got \"") + e.what() + "\", wanted \"" +
                         messages[cls] + "\"");
            }
            ++rejected;
        }
    }
    return "100 admissible exchanges each raised rho (smallest gain " + fmt(min_gain) + "); " +
           std::to_string(rejected) + " malformed requests rejected with exact diagnostics";
}

// --- criterion 7: structural consequences of minimality

std::string criterion_structure() {
    std::size_t mc_members = 0, fc_members = 0, fc_blocks = 0;
    for (int n : {4, 6, 8, 10}) {
        for (const std::string& s : enumerate_minimal_mc_bipartite(n, jobs())) {
            Graph g = parse_graph6(s);
            int dmin = g.n, dmax = 0;
            for (int v = 0; v < g.n; ++v) {
                dmin = std::min(dmin, g.degree(v));
                dmax = std::max(dmax, g.degree(v));
            }
            if (dmin < 2 || dmin > 3)
                fail(s + ": minimum degree " + std::to_string(dmin) + " outside {2,3}");
            if (s != canonical_form(gen_cycle(4))) {
                for (int u = 0; u < g.n; ++u)
                    for (int v = u + 1; v < g.n; ++v) {
                        int common = 0;
                        for (int w : g.adj[u]) common += g.has_edge(v, w) ? 1 : 0;
                        if (common > 1)
                            fail(s + ": vertices " + std::to_string(u) + "," + std::to_string(v) +
                                 " share " + std::to_string(common) + " neighbors");
                    }
            }
            auto d = find_bipartite_ear_decomposition(g);
            if (!d) fail(s + ": no ear decomposition found");
            for (const Ear& e : d->ears)
                if (e.trivial()) fail(s + ": decomposition of a minimal graph uses a trivial ear");
            ++mc_members;
        }
    }
    for (int n : {3, 5, 7, 9}) {
        for (const std::string& s : enumerate_minimal_factor_critical(n, jobs())) {
            Graph g = parse_graph6(s);
            for (const auto& blk : blocks(g)) {
                std::vector<char> keep(g.n, 0);
                for (int v : blk) keep[v] = 1;
                std::vector<int> drop;
                for (int v = 0; v < g.n; ++v)
                    if (!keep[v]) drop.push_back(v);
                InducedSubgraph sub = without_vertices(g, drop);
                if (!is_minimal_factor_critical(sub.graph).verdict)
                    fail(s + ": a block of size " + std::to_string(blk.size()) +
                         " is not minimal factor critical");
                ++fc_blocks;
            }
            if (cut_vertices(g).empty()) {
                auto d = find_odd_ear_decomposition(g);
                if (!d) fail(s + ": no odd ear decomposition found");
                for (const Ear& e : d->ears)
                    if (e.trivial())
                        fail(s + ": decomposition of a minimal graph uses a trivial ear");
            }
            ++fc_members;
        }
    }
    return std::to_string(mc_members) + " minimal covered graphs are square-free with degrees "
           "in {2,3}; all " + std::to_string(fc_blocks) + " blocks of " +
           std::to_string(fc_members) + " minimal critical graphs are minimal critical; no "
           "decomposition uses a trivial ear";
}

// --- criterion 8: perron weight respects the automorphism orbits

std::string criterion_orbits() {
    std::vector<Graph> family;
    for (int n : {6, 8, 10, 12}) family.push_back(gen_p3star(n));
    for (int n : {3, 5, 7, 9, 11}) family.push_back(gen_friendship(n));
    for (int n = 3; n <= 12; ++n) family.push_back(gen_cycle(n));
    double worst = 0.0;
    for (const Graph& g : family) {
        SpectralResult s = spectral_radius(g);
        for (const auto& orbit : automorphism_orbits(g)) {
            double lo = 1e300, hi = -1e300;
            for (int v : orbit) {
                lo = std::min(lo, s.perron[v]);
                hi = std::max(hi, s.perron[v]);
            }
            if (hi - lo > 1e-8)
                fail(to_graph6(g) + ": perron weight varies by " + fmt(hi - lo) +
                     " within one orbit");
            worst = std::max(worst, hi - lo);
        }
    }
    return "perron weight constant on every orbit of " + std::to_string(family.size()) +
           " symmetric graphs (max spread " + fmt(worst) + ")";
}

int run_criterion(int index, const std::function<std::string()>& body) {
    try {
        std::cout << "criterion " << index << ": PASS — " << body() << "\n";
        return 0;
    } catch (const std::exception& e) {
        std::cout << "criterion " << index << ": FAIL — " << e.what() << "\n";
        return 1;
    }
}

}  // namespace

int main() {
    int failures = 0;
    failures += run_criterion(1, criterion_mc_sweep);
    failures += run_criterion(2, criterion_fc_sweep);
    failures += run_criterion(3, criterion_enumeration_oracle);
    failures += run_criterion(4, criterion_nice_cycles);
    failures += run_criterion(5, criterion_closed_form);
    failures += run_criterion(6, criterion_edge_exchange);
    failures += run_criterion(7, criterion_structure);
    failures += run_criterion(8, criterion_orbits);
    if (failures == 0)
        std::cout << "all 8 criteria passed\n";
    else
        std::cout << failures << " of 8 criteria failed\n";
    return failures;
}

#include "girthbound/bound_check.hpp"

#include <algorithm>
#include <map>
#include <ostream>

#include "girthbound/distance.hpp"
#include "girthbound/families.hpp"
#include "girthbound/sp.hpp"

namespace girthbound {

namespace {

long long g_realization_checks = 0;

// Triples containing weight w, in sorted-triple order, as the (q,r) pattern
// the witnesses must take.
struct TriplePattern {
    GoodTriple triple;
    int q, r;  // q <= r
};

std::vector<std::vector<TriplePattern>> patterns_by_weight(int k) {
    std::vector<std::vector<TriplePattern>> by_weight(k + 1);
    for (const auto& t : enumerate_k_good(k)) {
        auto add = [&](int w, int q, int r) {
            by_weight[w].push_back({t, std::min(q, r), std::max(q, r)});
        };
        add(t.p, t.q, t.r);
        if (t.q != t.p) add(t.q, t.p, t.r);
        if (t.r != t.q && t.r != t.p) add(t.r, t.p, t.q);
    }
    return by_weight;
}

// Both witness pairs must be current pdg edges: one vertex joined to x at
// weight q and to y at weight r, and one the other way around.
bool realized_in_pdg(const PdgNeighbours& nbr, int x, int y, int q, int r) {
    ++g_realization_checks;
    if (!nbr.at(x, q).intersects(nbr.at(y, r))) return false;
    if (q == r) return true;
    return nbr.at(x, r).intersects(nbr.at(y, q));
}

}  // namespace

long long realization_check_count() { return g_realization_checks; }
void reset_realization_check_count() { g_realization_checks = 0; }

std::optional<AllGoodFailure> all_k_good_check([[maybe_unused]] const Graph& b,
                                               const PartialDistanceGraph& pdg, int k) {
    if (pdg.wedges.empty()) return AllGoodFailure{-1, -1, 0, {0, 0, 0}};
    PdgNeighbours nbr(pdg);
    auto by_weight = patterns_by_weight(k);
    for (const auto& e : pdg.wedges)
        for (const auto& pat : by_weight[e.w])
            if (!realized_in_pdg(nbr, e.u, e.v, pat.q, pat.r))
                return AllGoodFailure{e.u, e.v, e.w, pat.triple};
    return std::nullopt;
}

namespace {

BoundVerdict check_bound_impl(Graph b, int k, std::vector<DeletionEvent>& trace) {
    BoundVerdict verdict;
    if (odd_girth(b) != 2 * k + 1) {
        verdict.yes = false;
        verdict.reason = NoReason::odd_girth_mismatch;
        verdict.residual = std::move(b);
        verdict.trace = trace;
        return verdict;
    }
    auto d = all_pairs_distances(b);
    PartialDistanceGraph pdg = full_partial_distance_graph(b, k, d);
    if (pdg.wedges.empty()) {
        verdict.yes = false;
        verdict.reason = NoReason::empty;
        verdict.residual = std::move(b);
        verdict.trace = trace;
        return verdict;
    }
    PdgNeighbours nbr(pdg);
    auto by_weight = patterns_by_weight(k);
    std::vector<char> alive(pdg.wedges.size(), 1);

    bool restart = true;
    while (restart) {
        restart = false;
        for (std::size_t i = 0; i < pdg.wedges.size(); ++i) {
            if (!alive[i]) continue;
            const auto& e = pdg.wedges[i];
            for (const auto& pat : by_weight[e.w]) {
                if (realized_in_pdg(nbr, e.u, e.v, pat.q, pat.r)) continue;
                trace.push_back({e.u, e.v, e.w, pat.triple});
                if (e.w >= 2) {
                    alive[i] = 0;
                    nbr.erase(e.u, e.v, e.w);
                    restart = true;
                } else {
                    // a base edge of B fails: recurse on the smaller graph
                    return check_bound_impl(b.minus_edge(e.u, e.v), k, trace);
                }
                break;
            }
            if (restart) break;
        }
    }

    verdict.yes = true;
    verdict.certificate.n = pdg.n;
    verdict.certificate.k = k;
    for (std::size_t i = 0; i < pdg.wedges.size(); ++i)
        if (alive[i]) verdict.certificate.wedges.push_back(pdg.wedges[i]);
    verdict.residual = std::move(b);
    verdict.trace = trace;
    return verdict;
}

}  // namespace

BoundVerdict check_bound(const Graph& b, int k) {
    if (k < 1) throw std::invalid_argument("check_bound: k >= 1");
    std::vector<DeletionEvent> trace;
    return check_bound_impl(b, k, trace);
}

bool verify_certificate(const Graph& b, const PartialDistanceGraph& pdg, int k) {
    if (pdg.n != b.n() || pdg.k != k) return false;
    if (odd_girth(b) != 2 * k + 1) return false;
    auto d = all_pairs_distances(b);
    for (const auto& e : pdg.wedges) {
        if (e.w < 1 || e.w > k) return false;
        if (d(e.u, e.v) != e.w) return false;
    }
    return !all_k_good_check(b, pdg, k).has_value();
}

namespace {

// Weighted graph under construction for the NO-certificate. Edges carry
// exact distances of the weight-1 carrier; gluing keeps that invariant.
struct WeightedAccumulator {
    int n = 0;
    std::vector<WeightedEdge> edges;

    void add(int u, int v, int w) {
        if (u > v) std::swap(u, v);
        edges.push_back({u, v, w});
    }
};

// 2-tree completion of `g` weighted by exact g-distances.
WeightedAccumulator weighted_completion(const Graph& g) {
    WeightedAccumulator acc;
    acc.n = g.n();
    auto d = all_pairs_distances(g);
    auto dec = two_tree_completion(g);
    for (auto [u, v] : dec.completion_edges(g)) acc.add(u, v, d(u, v));
    return acc;
}

}  // namespace

std::optional<Graph> no_certificate([[maybe_unused]] const Graph& b, int k,
                                    const BoundVerdict& verdict, int vertex_cap) {
    if (verdict.yes) throw PreconditionViolated("no_certificate: verdict is YES");
    int residual_og = odd_girth(verdict.residual);
    if (residual_og <= 2 * k) {
        // the gate fired on an odd-girth below 2k+1: C_{2k+1} need not be a
        // counterexample, the input was simply outside the problem's domain
        throw PreconditionViolated("no_certificate: residual odd-girth below 2k+1");
    }

    WeightedAccumulator acc = weighted_completion(cycle(2 * k + 1));
    if (acc.n > vertex_cap) return std::nullopt;

    for (auto it = verdict.trace.rbegin(); it != verdict.trace.rend(); ++it) {
        const auto& ev = *it;
        int p = ev.weight;
        // the failing triple minus one occurrence of the edge weight
        int q, r;
        if (ev.triple.p == p) {
            q = ev.triple.q;
            r = ev.triple.r;
        } else if (ev.triple.q == p) {
            q = ev.triple.p;
            r = ev.triple.r;
        } else {
            q = ev.triple.p;
            r = ev.triple.q;
        }
        GadgetGraph t = gadget(k, p, q, r);
        WeightedAccumulator hat = weighted_completion(t.graph);

        // glue two oriented copies of the completed gadget on every edge of
        // weight p, fresh vertices for everything except the glued pair
        std::vector<WeightedEdge> targets;
        for (const auto& e : acc.edges)
            if (e.w == p) targets.push_back(e);
        for (const auto& tgt : targets) {
            for (int orientation = 0; orientation < 2; ++orientation) {
                int glue_u = orientation == 0 ? tgt.u : tgt.v;
                int glue_v = orientation == 0 ? tgt.v : tgt.u;
                std::vector<int> relabel(hat.n, -1);
                relabel[t.u] = glue_u;
                relabel[t.v] = glue_v;
                for (int x = 0; x < hat.n; ++x) {
                    if (relabel[x] >= 0) continue;
                    relabel[x] = acc.n++;
                    if (acc.n > vertex_cap) return std::nullopt;
                }
                for (const auto& e : hat.edges) {
                    int a = relabel[e.u], bb = relabel[e.v];
                    if ((a == glue_u && bb == glue_v) || (a == glue_v && bb == glue_u))
                        continue;  // the shared edge already exists
                    acc.add(a, bb, e.w);
                }
            }
        }
    }

    std::vector<Edge> carrier;
    for (const auto& e : acc.edges)
        if (e.w == 1) carrier.emplace_back(e.u, e.v);
    return Graph(acc.n, std::move(carrier));
}

namespace {

// All 6-cycles, each listed once as a canonical vertex sequence.
std::vector<std::vector<int>> six_cycles(const Graph& g) {
    std::vector<std::vector<int>> cycles;
    std::vector<int> path;
    std::vector<char> used(g.n(), 0);
    auto dfs = [&](auto&& self, int start, int cur, int depth) -> void {
        if (depth == 5) {
            if (g.has_edge(cur, start) && path[1] < path.back()) cycles.push_back(path);
            return;
        }
        for (int nb : g.neighbours(cur)) {
            if (nb <= start || used[nb]) continue;
            if (depth == 4 && !g.has_edge(nb, start)) continue;
            used[nb] = 1;
            path.push_back(nb);
            self(self, start, nb, depth + 1);
            path.pop_back();
            used[nb] = 0;
        }
    };
    for (int s = 0; s < g.n(); ++s) {
        path = {s};
        std::fill(used.begin(), used.end(), 0);
        used[s] = 1;
        dfs(dfs, s, s, 0);
    }
    return cycles;
}

}  // namespace

LintReport minimality_lint(const Graph& b, int k) {
    if (k < 2) throw std::invalid_argument("minimality_lint: k >= 2");
    LintReport report;
    std::vector<int> deg2;
    for (int v = 0; v < b.n(); ++v)
        if (b.degree(v) == 2) deg2.push_back(v);

    auto cycles = six_cycles(b);
    std::vector<char> on_six(b.n(), 0);
    for (const auto& c : cycles)
        for (int v : c) on_six[v] = 1;

    for (int v : deg2)
        if (!on_six[v])
            report.violations.push_back({LintRule::degree2_not_on_6cycle, {v}});

    for (int v : deg2)
        for (int w : b.neighbours(v))
            if (w > v && b.degree(w) == 2)
                report.violations.push_back({LintRule::adjacent_degree2_pair, {v, w}});

    auto d = all_pairs_distances(b);
    for (const auto& c : cycles) {
        std::vector<int> low;
        for (int i = 0; i < 6; ++i)
            if (b.degree(c[i]) == 2) low.push_back(i);
        bool bad = low.size() > 2;
        if (low.size() == 2) {
            int cyc_dist = std::abs(low[0] - low[1]);
            cyc_dist = std::min(cyc_dist, 6 - cyc_dist);
            if (cyc_dist != 3 || d(c[low[0]], c[low[1]]) != 3) bad = true;
        }
        if (bad) report.violations.push_back({LintRule::crowded_6cycle, c});
    }
    return report;
}

void write_no_verdict(std::ostream& out, const BoundVerdict& v) {
    out << "no " << (v.reason == NoReason::empty ? "empty" : "odd_girth_mismatch") << "\n";
    for (const auto& ev : v.trace)
        out << "del " << ev.u << " " << ev.v << " " << ev.weight << " " << ev.triple.p
            << " " << ev.triple.q << " " << ev.triple.r << "\n";
}

}  // namespace girthbound

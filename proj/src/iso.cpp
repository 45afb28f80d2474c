#include "girthbound/iso.hpp"

#include <algorithm>
#include <numeric>

namespace girthbound {

namespace {

std::vector<std::vector<int>> neighbour_degree_profiles(const Graph& g) {
    std::vector<std::vector<int>> prof(g.n());
    for (int v = 0; v < g.n(); ++v) {
        for (int w : g.neighbours(v)) prof[v].push_back(g.degree(w));
        std::sort(prof[v].begin(), prof[v].end());
    }
    return prof;
}

struct IsoSearch {
    const Graph& g;
    const Graph& h;
    std::vector<int> order;        // g-vertices, most-constrained first
    std::vector<int> map;          // g -> h, -1 unassigned
    std::vector<char> used;        // h-vertex taken
    std::vector<std::vector<int>> prof_g, prof_h;
    long long budget;

    bool extend(std::size_t idx) {
        if (idx == order.size()) return true;
        int v = order[idx];
        for (int cand = 0; cand < h.n(); ++cand) {
            if (--budget < 0) throw BudgetExceeded("iso_check budget");
            if (used[cand]) continue;
            if (g.degree(v) != h.degree(cand)) continue;
            if (prof_g[v] != prof_h[cand]) continue;
            bool ok = true;
            for (int w : g.neighbours(v)) {
                if (map[w] >= 0 && !h.has_edge(cand, map[w])) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                // non-edges must map to non-edges as well
                for (std::size_t j = 0; j < idx && ok; ++j) {
                    int w = order[j];
                    if (!g.has_edge(v, w) && h.has_edge(cand, map[w])) ok = false;
                }
            }
            if (!ok) continue;
            map[v] = cand;
            used[cand] = 1;
            if (extend(idx + 1)) return true;
            map[v] = -1;
            used[cand] = 0;
        }
        return false;
    }
};

}  // namespace

bool iso_check(const Graph& g, const Graph& h, long long budget) {
    if (g.n() != h.n() || g.m() != h.m()) return false;
    auto deg_seq = [](const Graph& x) {
        std::vector<int> d;
        for (int v = 0; v < x.n(); ++v) d.push_back(x.degree(v));
        std::sort(d.begin(), d.end());
        return d;
    };
    if (deg_seq(g) != deg_seq(h)) return false;

    IsoSearch s{g, h, {}, std::vector<int>(g.n(), -1), std::vector<char>(h.n(), 0),
                neighbour_degree_profiles(g), neighbour_degree_profiles(h), budget};
    {
        auto ph = neighbour_degree_profiles(h);
        auto sorted_prof = [](std::vector<std::vector<int>> p) {
            std::sort(p.begin(), p.end());
            return p;
        };
        if (sorted_prof(s.prof_g) != sorted_prof(ph)) return false;
    }

    // order: highest degree first, then connected to already-ordered vertices
    s.order.resize(g.n());
    std::iota(s.order.begin(), s.order.end(), 0);
    std::vector<char> placed(g.n(), 0);
    std::vector<int> order;
    order.reserve(g.n());
    for (int step = 0; step < g.n(); ++step) {
        int best = -1, best_links = -1, best_deg = -1;
        for (int v = 0; v < g.n(); ++v) {
            if (placed[v]) continue;
            int links = 0;
            for (int w : g.neighbours(v)) links += placed[w];
            if (links > best_links || (links == best_links && g.degree(v) > best_deg)) {
                best = v;
                best_links = links;
                best_deg = g.degree(v);
            }
        }
        placed[best] = 1;
        order.push_back(best);
    }
    s.order = std::move(order);
    return s.extend(0);
}

}  // namespace girthbound

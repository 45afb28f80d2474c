#pragma once

// Test-only brute-force oracles, kept independent of the library code paths
// they cross-check.

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "girthbound/graph.hpp"

namespace oracles {

using girthbound::Edge;
using girthbound::Graph;

// Every simple cycle of length exactly len, one canonical listing each:
// smallest vertex first, smaller second-vertex direction.
inline std::vector<std::vector<int>> cycles_of_length(const Graph& g, int len) {
    std::vector<std::vector<int>> out;
    std::vector<int> path;
    std::vector<char> used(g.n(), 0);
    auto dfs = [&](auto&& self, int start, int cur) -> void {
        if (int(path.size()) == len) {
            if (g.has_edge(cur, start) && path[1] < path.back()) out.push_back(path);
            return;
        }
        for (int nb : g.neighbours(cur)) {
            if (nb <= start || used[nb]) continue;
            if (int(path.size()) == len - 1 && !g.has_edge(nb, start)) continue;
            used[nb] = 1;
            path.push_back(nb);
            self(self, start, nb);
            path.pop_back();
            used[nb] = 0;
        }
    };
    for (int s = 0; s < g.n(); ++s) {
        path = {s};
        std::fill(used.begin(), used.end(), 0);
        used[s] = 1;
        dfs(dfs, s, s);
    }
    return out;
}

// Shortest odd cycle by direct enumeration; 0 means none.
inline int odd_girth_bruteforce(const Graph& g) {
    for (int len = 3; len <= g.n(); len += 2)
        if (!cycles_of_length(g, len).empty()) return len;
    return 0;
}

// K4 minor via partitions: four disjoint connected branch sets, pairwise
// joined by an edge. Feasible up to ~8 vertices.
inline bool has_k4_minor_bruteforce(const Graph& g) {
    int n = g.n();
    std::vector<int> part(n, -1);
    auto connected_part = [&](int label) {
        std::vector<int> verts;
        for (int v = 0; v < n; ++v)
            if (part[v] == label) verts.push_back(v);
        if (verts.empty()) return false;
        std::vector<char> seen(n, 0);
        std::vector<int> stack{verts[0]};
        seen[verts[0]] = 1;
        int reached = 0;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            ++reached;
            for (int w : g.neighbours(v))
                if (part[w] == label && !seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
        return reached == int(verts.size());
    };
    auto parts_adjacent = [&](int a, int b) {
        for (auto [u, v] : g.edges())
            if ((part[u] == a && part[v] == b) || (part[u] == b && part[v] == a)) return true;
        return false;
    };
    long long total = 1;
    for (int i = 0; i < n; ++i) total *= 5;
    for (long long code = 0; code < total; ++code) {
        long long c = code;
        for (int v = 0; v < n; ++v) {
            part[v] = int(c % 5) - 1;  // -1 = unused
            c /= 5;
        }
        bool ok = true;
        for (int label = 0; label < 4 && ok; ++label) ok = connected_part(label);
        for (int a = 0; a < 4 && ok; ++a)
            for (int b = a + 1; b < 4 && ok; ++b) ok = parts_adjacent(a, b);
        if (ok) return true;
    }
    return false;
}

inline Graph er_random_graph(int n, double p, std::mt19937_64& rng) {
    std::vector<Edge> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (double(rng() % 1000000) / 1000000.0 < p) es.emplace_back(u, v);
    return Graph(n, std::move(es));
}

}  // namespace oracles

#pragma once

#include <limits>
#include <optional>
#include <vector>

#include "girthbound/graph.hpp"

namespace girthbound {

inline constexpr int kInfiniteDistance = std::numeric_limits<int>::max();

struct DistanceMatrix {
    int n = 0;
    std::vector<std::vector<int>> d;  // kInfiniteDistance across components

    int operator()(int u, int v) const { return d[u][v]; }
};

// level[v][dist] = vertices at distance exactly dist from v, up to ecc(v).
struct DistanceLevels {
    int n = 0;
    std::vector<std::vector<Bitset>> level;

    int eccentricity(int v) const { return int(level[v].size()) - 1; }

    const Bitset& at(int v, int dist) const {
        if (dist < 0 || dist >= int(level[v].size())) return empty_;
        return level[v][dist];
    }

    Bitset empty_;  // shared empty set for out-of-range queries
};

std::vector<int> bfs_distances(const Graph& g, int source);
DistanceMatrix all_pairs_distances(const Graph& g);
DistanceLevels distance_levels(const Graph& g);

// Length of a shortest odd cycle, kInfiniteDistance when bipartite.
int odd_girth(const Graph& g);

// A shortest odd cycle as a vertex sequence, nullopt when bipartite.
std::optional<std::vector<int>> odd_girth_cycle(const Graph& g);

// Length of a shortest cycle, kInfiniteDistance when acyclic.
int girth(const Graph& g);

// True iff some cycle of length exactly len passes through both u and v.
// Depth-bounded two-path search; throws BudgetExceeded past `budget` expansions.
bool exists_cycle_through_pair(const Graph& g, int u, int v, int len,
                               long long budget = 10'000'000);

}  // namespace girthbound

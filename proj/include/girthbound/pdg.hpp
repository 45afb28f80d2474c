#pragma once

#include <iosfwd>
#include <vector>

#include "girthbound/distance.hpp"
#include "girthbound/graph.hpp"

namespace girthbound {

struct WeightedEdge {
    int u, v, w;  // u < v, 1 <= w <= k, w = d_B(u,v)
    auto operator<=>(const WeightedEdge&) const = default;
};

// k-partial distance graph of a base graph B: weighted pairs carrying exact
// B-distances, all at most k.
struct PartialDistanceGraph {
    int n = 0;
    int k = 0;
    std::vector<WeightedEdge> wedges;  // sorted lexicographically
};

// All pairs at distance 1..k with their exact distances.
PartialDistanceGraph full_partial_distance_graph(const Graph& b, int k,
                                                 const DistanceMatrix& d);

// Per-vertex, per-weight neighbour sets of a pdg; weight index 1..k.
class PdgNeighbours {
public:
    explicit PdgNeighbours(const PartialDistanceGraph& pdg);
    const Bitset& at(int v, int w) const { return sets_[v][w]; }
    void erase(int u, int v, int w);

private:
    std::vector<std::vector<Bitset>> sets_;
};

// Certificate text format: "cert <n> <k>", "w <u> <v> <d>" lines, then the
// base graph as "base <m>" and "e <u> <v>" lines.
struct Certificate {
    PartialDistanceGraph pdg;
    Graph base;
};

void write_certificate(std::ostream& out, const Certificate& c);
Certificate read_certificate(std::istream& in);

}  // namespace girthbound

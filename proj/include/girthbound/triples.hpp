#pragma once

#include <vector>

#include "girthbound/distance.hpp"

namespace girthbound {

// Unordered triple {p,q,r} over [1,k], stored sorted.
struct GoodTriple {
    int p, q, r;
    auto operator<=>(const GoodTriple&) const = default;
};

// p+q+r odd: k-good iff the sum is at least 2k+1.
// p+q+r even: k-good iff the triangular inequalities hold.
bool is_k_good(int p, int q, int r, int k);

// All k-good triples p <= q <= r, lexicographic.
std::vector<GoodTriple> enumerate_k_good(int k);

// Two-witness realization on an edge (x,y): a vertex at the (q,r) distance
// pattern and one at (r,q). With q = r a single witness serves both roles.
bool realized_on_edge(const DistanceLevels& levels, int x, int y, int q, int r);

}  // namespace girthbound

#pragma once

#include <iosfwd>
#include <optional>
#include <utility>
#include <vector>

#include "girthbound/graph.hpp"
#include "girthbound/sp.hpp"

namespace girthbound {

// colour[i] colours the i-th edge of the owning graph's sorted edge list.
struct EdgeColouring {
    int colour_count = 0;
    std::vector<int> colour;

    int of(const Graph& g, int u, int v) const { return colour[g.edge_index(u, v)]; }
};

// Cyclic order of incident neighbours per vertex.
struct RotationSystem {
    std::vector<std::vector<int>> order;
};

// The canonical Cayley colouring of PC(2k): an edge gets the generator index
// of the XOR of its endpoints, e_1..e_{2k} -> 0..2k-1 and J -> 2k. Proper.
EdgeColouring cayley_edge_labels(int k);

// Pull the Cayley colouring of PC(2k) back along an injective edge-preserving
// map of g into it. Throws PreconditionViolated when emb is not an embedding.
EdgeColouring induced_colouring(const Graph& g, int k, const Homomorphism& emb);

enum class ColouringStatus { found, unsat, budget_exceeded };

struct ColouringResult {
    ColouringStatus status;
    EdgeColouring colouring;  // valid when found
    long long nodes = 0;
};

// Proper 5-edge-colouring such that at every vertex no two rotation-consecutive
// edges (wrap-around included) carry the two colours of a forbidden pair.
ColouringResult super_proper_search(const Graph& g, const RotationSystem& rot,
                                    const std::vector<std::pair<int, int>>& forbidden_pairs,
                                    long long budget = 50'000'000);

bool is_proper(const Graph& g, const EdgeColouring& c);

// Rotation file: "rot <n>" then "v <u>: <w1> <w2> ..." per vertex.
void write_rotation(std::ostream& out, const RotationSystem& rot);
RotationSystem read_rotation(std::istream& in);

// Colouring file: "col <c>" then "ce <u> <v> <colour>" lines.
void write_colouring(std::ostream& out, const Graph& g, const EdgeColouring& c);

}  // namespace girthbound

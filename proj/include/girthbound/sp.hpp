#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "girthbound/graph.hpp"
#include "girthbound/pdg.hpp"

namespace girthbound {

// Theorem: a graph is K4-minor-free iff it is a partial 2-tree. Decided by
// series-parallel reduction on an internal multigraph.
bool is_k4_minor_free(const Graph& g);

struct TwoTreeDecomposition {
    Edge base_edge;
    // replay order: each vertex enters adjacent to two already-present,
    // already-adjacent vertices
    std::vector<std::array<int, 3>> order;  // (vertex, parent_u, parent_v)
    std::vector<Edge> fill_edges;           // completion edges absent from the input

    std::vector<Edge> completion_edges(const Graph& g) const;
};

// Completion of a connected partial 2-tree to a 2-tree containing it.
TwoTreeDecomposition two_tree_completion(const Graph& g);

// Connected K4-minor-free graph of odd-girth >= 2k+1 and order >= target_n.
Graph random_sp_instance(int k, int target_n, std::uint64_t seed);

struct Homomorphism {
    std::vector<int> map;  // V(G) -> V(H)
};

enum class SearchStatus { found, none, budget_exceeded };

struct HomSearchResult {
    SearchStatus status;
    Homomorphism hom;       // valid when status == found
    long long nodes = 0;
};

inline constexpr long long kDefaultHomBudget = 100'000'000;

// Backtracking homomorphism search with adjacency and distance filtering.
// NONE is exhaustive; budget_exceeded signals an indeterminate result.
HomSearchResult hom_search(const Graph& g, const Graph& h, bool injective = false,
                           long long budget = kDefaultHomBudget);

bool is_hom(const Graph& g, const Graph& h, const Homomorphism& m);

// The constructive homomorphism behind a verified YES certificate: complete g
// to a 2-tree, weight its edges with min(d_g, k), then extend vertex by
// vertex along the 2-tree order picking the first witness in the pdg.
// Throws PreconditionViolated naming the failed clause.
Homomorphism hom_via_certificate(const Graph& g, const Graph& b,
                                 const PartialDistanceGraph& pdg, int k);

// Homomorphism text format: "hom <nG> <nH>" then "m <u> <image>" lines.
void write_homomorphism(std::ostream& out, const Homomorphism& m, int n_h);
Homomorphism read_homomorphism(std::istream& in, int* n_h = nullptr);

}  // namespace girthbound

#pragma once

#include "girthbound/graph.hpp"

namespace girthbound {

// Backtracking isomorphism test with degree and neighbour-degree pruning.
// Meant for the small family identities (n <= 40 or so); throws
// BudgetExceeded when the search exceeds `budget` nodes.
bool iso_check(const Graph& g, const Graph& h, long long budget = 50'000'000);

}  // namespace girthbound

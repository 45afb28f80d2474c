#pragma once

#include <optional>
#include <vector>

#include "girthbound/graph.hpp"
#include "girthbound/pdg.hpp"
#include "girthbound/triples.hpp"

namespace girthbound {

struct DeletionEvent {
    int u, v, weight;   // the deleted weighted edge
    GoodTriple triple;  // the first triple it failed to realize
    auto operator<=>(const DeletionEvent&) const = default;
};

enum class NoReason { odd_girth_mismatch, empty };

struct BoundVerdict {
    bool yes = false;
    PartialDistanceGraph certificate;    // YES only: the surviving weighted graph
    Graph residual;                      // base graph of the terminal call
    std::vector<DeletionEvent> trace;    // all prunings, weight-1 ones recursed on
    std::optional<NoReason> reason;      // NO only
};

struct AllGoodFailure {
    int u, v, weight;
    GoodTriple triple;
};

// All k-good triple property of (pdg, d_B): nonempty, and every triple
// containing an edge's weight is realized on it with both witness pairs
// present as pdg edges. Returns the lexicographically first failure.
std::optional<AllGoodFailure> all_k_good_check(const Graph& b,
                                               const PartialDistanceGraph& pdg, int k);

// Counts realization checks across check_bound / all_k_good_check runs;
// used by the empirical scaling harness.
long long realization_check_count();
void reset_realization_check_count();

// The certified decision procedure: odd-girth gate, full k-partial distance
// graph, lexicographic scan deleting failing weighted edges (restarting the
// scan) and recursing on the base graph when a weight-1 edge fails.
BoundVerdict check_bound(const Graph& b, int k);

// Independent recomputation: odd-girth gate, every weight equals the BFS
// distance and is at most k, and the all k-good triple property holds.
bool verify_certificate(const Graph& b, const PartialDistanceGraph& pdg, int k);

// Reverse replay of the deletion trace: start from a weighted 2-tree
// completion of C_{2k+1} and glue two oriented copies of the failing
// gadget's completion onto every matching-weight edge, oldest deletion last.
// Returns the weight-1 subgraph, or nullopt when vertex_cap is exceeded.
std::optional<Graph> no_certificate(const Graph& b, int k, const BoundVerdict& verdict,
                                    int vertex_cap = 10'000);

enum class LintRule { degree2_not_on_6cycle, adjacent_degree2_pair, crowded_6cycle };

struct LintViolation {
    LintRule rule;
    std::vector<int> vertices;
};

struct LintReport {
    std::vector<LintViolation> violations;
    bool clean() const { return violations.empty(); }
};

// Structural conditions every minimal bound satisfies: degree-2 vertices lie
// on 6-cycles and form an independent set; a 6-cycle holds at most two of
// them, at mutual distance 3. Violations certify non-minimality only.
LintReport minimality_lint(const Graph& b, int k);

// Verdict text: "no <reason>" header plus "del <u> <v> <w> <p> <q> <r>" lines.
void write_no_verdict(std::ostream& out, const BoundVerdict& v);

}  // namespace girthbound

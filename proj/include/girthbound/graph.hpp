#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "girthbound/bitset.hpp"

namespace girthbound {

using Edge = std::pair<int, int>;  // normalized u < v

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PreconditionViolated : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Simple undirected loopless graph on vertices 0..n-1. Immutable once built;
// adjacency lists are sorted so that every traversal order is reproducible.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n, std::vector<Edge> edges = {});

    int n() const { return n_; }
    int m() const { return int(edges_.size()); }

    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& neighbours(int v) const { return adj_[v]; }
    const Bitset& neighbour_set(int v) const { return nbr_[v]; }
    int degree(int v) const { return int(adj_[v].size()); }

    bool has_edge(int u, int v) const { return u != v && nbr_[u].test(v); }

    // Index of (u,v) in the sorted edge list, -1 if absent.
    int edge_index(int u, int v) const;

    Graph minus_edge(int u, int v) const;
    Graph minus_vertex(int v) const;  // remaining vertices are relabelled 0..n-2

    bool operator==(const Graph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
    std::vector<Bitset> nbr_;
};

// Text format: '#' comment lines, "graph <n>" header, then "e <u> <v>" lines.
Graph read_graph(std::istream& in);
void write_graph(std::ostream& out, const Graph& g);
Graph graph_from_string(const std::string& s);
std::string graph_to_string(const Graph& g);

}  // namespace girthbound

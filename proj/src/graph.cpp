#include "girthbound/graph.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

namespace girthbound {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    for (auto& [u, v] : edges) {
        if (u == v) throw std::invalid_argument("loop edge");
        if (u > v) std::swap(u, v);
        if (u < 0 || v >= n) throw std::invalid_argument("edge endpoint out of range");
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    edges_ = std::move(edges);

    adj_.assign(n_, {});
    nbr_.assign(n_, Bitset(n_));
    for (auto [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
        nbr_[u].set(v);
        nbr_[v].set(u);
    }
    for (auto& a : adj_) std::sort(a.begin(), a.end());
}

int Graph::edge_index(int u, int v) const {
    if (u > v) std::swap(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{u, v});
    if (it == edges_.end() || *it != Edge{u, v}) return -1;
    return int(it - edges_.begin());
}

Graph Graph::minus_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    std::vector<Edge> es;
    es.reserve(edges_.size());
    for (auto e : edges_)
        if (e != Edge{u, v}) es.push_back(e);
    return Graph(n_, std::move(es));
}

Graph Graph::minus_vertex(int v) const {
    std::vector<Edge> es;
    es.reserve(edges_.size());
    auto relabel = [v](int x) { return x < v ? x : x - 1; };
    for (auto [a, b] : edges_)
        if (a != v && b != v) es.emplace_back(relabel(a), relabel(b));
    return Graph(n_ - 1, std::move(es));
}

Graph read_graph(std::istream& in) {
    std::string line;
    int n = -1;
    std::vector<Edge> edges;
    std::vector<Bitset> seen;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string tok;
        ls >> tok;
        if (tok == "graph") {
            if (n >= 0) throw ParseError("duplicate graph header");
            if (!(ls >> n) || n < 0) throw ParseError("bad graph header");
            seen.assign(n, Bitset(n));
        } else if (tok == "e") {
            if (n < 0) throw ParseError("edge before graph header");
            int u, v;
            if (!(ls >> u >> v)) throw ParseError("bad edge line: " + line);
            if (u == v) throw ParseError("loop edge: " + line);
            if (u < 0 || v < 0 || u >= n || v >= n) throw ParseError("edge endpoint out of range: " + line);
            if (seen[u].test(v)) throw ParseError("duplicate edge: " + line);
            seen[u].set(v);
            seen[v].set(u);
            edges.emplace_back(u, v);
        } else {
            throw ParseError("unknown line: " + line);
        }
    }
    if (n < 0) throw ParseError("missing graph header");
    return Graph(n, std::move(edges));
}

void write_graph(std::ostream& out, const Graph& g) {
    out << "graph " << g.n() << "\n";
    for (auto [u, v] : g.edges()) out << "e " << u << " " << v << "\n";
}

Graph graph_from_string(const std::string& s) {
    std::istringstream in(s);
    return read_graph(in);
}

std::string graph_to_string(const Graph& g) {
    std::ostringstream out;
    write_graph(out, g);
    return out.str();
}

}  // namespace girthbound

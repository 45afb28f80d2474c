#include "girthbound/pdg.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace girthbound {

PartialDistanceGraph full_partial_distance_graph(const Graph& b, int k,
                                                 const DistanceMatrix& d) {
    PartialDistanceGraph pdg;
    pdg.n = b.n();
    pdg.k = k;
    for (int u = 0; u < b.n(); ++u)
        for (int v = u + 1; v < b.n(); ++v)
            if (d(u, v) != kInfiniteDistance && d(u, v) >= 1 && d(u, v) <= k)
                pdg.wedges.push_back({u, v, d(u, v)});
    return pdg;
}

PdgNeighbours::PdgNeighbours(const PartialDistanceGraph& pdg) {
    sets_.assign(pdg.n, std::vector<Bitset>(pdg.k + 1, Bitset(pdg.n)));
    for (const auto& e : pdg.wedges) {
        sets_[e.u][e.w].set(e.v);
        sets_[e.v][e.w].set(e.u);
    }
}

void PdgNeighbours::erase(int u, int v, int w) {
    sets_[u][w].reset(v);
    sets_[v][w].reset(u);
}

void write_certificate(std::ostream& out, const Certificate& c) {
    out << "cert " << c.pdg.n << " " << c.pdg.k << "\n";
    for (const auto& e : c.pdg.wedges)
        out << "w " << e.u << " " << e.v << " " << e.w << "\n";
    out << "base " << c.base.m() << "\n";
    for (auto [u, v] : c.base.edges()) out << "e " << u << " " << v << "\n";
}

Certificate read_certificate(std::istream& in) {
    Certificate c;
    std::string line;
    bool have_header = false, in_base = false;
    int base_n = -1;
    std::vector<Edge> base_edges;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string tok;
        ls >> tok;
        if (tok == "cert") {
            if (!(ls >> c.pdg.n >> c.pdg.k)) throw ParseError("bad cert header");
            have_header = true;
        } else if (tok == "w") {
            if (!have_header || in_base) throw ParseError("stray weight line");
            WeightedEdge e{};
            if (!(ls >> e.u >> e.v >> e.w)) throw ParseError("bad weight line: " + line);
            if (e.u >= e.v || e.u < 0 || e.v >= c.pdg.n || e.w < 1 || e.w > c.pdg.k)
                throw ParseError("weight line out of range: " + line);
            c.pdg.wedges.push_back(e);
        } else if (tok == "base") {
            int m;
            if (!have_header || !(ls >> m)) throw ParseError("bad base line");
            in_base = true;
            base_n = c.pdg.n;
            base_edges.reserve(m);
        } else if (tok == "e") {
            if (!in_base) throw ParseError("edge line before base header");
            int u, v;
            if (!(ls >> u >> v)) throw ParseError("bad edge line: " + line);
            base_edges.emplace_back(u, v);
        } else {
            throw ParseError("unknown certificate line: " + line);
        }
    }
    if (!have_header || !in_base) throw ParseError("incomplete certificate");
    c.base = Graph(base_n, std::move(base_edges));
    return c;
}

}  // namespace girthbound

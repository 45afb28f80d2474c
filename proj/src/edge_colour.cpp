#include "girthbound/edge_colour.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <ostream>
#include <sstream>

#include "girthbound/families.hpp"

namespace girthbound {

namespace {

int cayley_colour(unsigned x, unsigned y, int k) {
    unsigned diff = x ^ y;
    if (diff == (1u << (2 * k)) - 1) return 2 * k;  // J
    if (std::popcount(diff) != 1) return -1;
    return std::countr_zero(diff);
}

}  // namespace

EdgeColouring cayley_edge_labels(int k) {
    Graph pc = projective_cube(k);
    EdgeColouring c;
    c.colour_count = 2 * k + 1;
    c.colour.reserve(pc.m());
    for (auto [u, v] : pc.edges()) c.colour.push_back(cayley_colour(unsigned(u), unsigned(v), k));
    return c;
}

EdgeColouring induced_colouring(const Graph& g, int k, const Homomorphism& emb) {
    if (int(emb.map.size()) != g.n())
        throw PreconditionViolated("induced_colouring: map size mismatch");
    int n_pc = 1 << (2 * k);
    std::vector<char> used(n_pc, 0);
    for (int img : emb.map) {
        if (img < 0 || img >= n_pc || used[img])
            throw PreconditionViolated("induced_colouring: not injective into PC(2k)");
        used[img] = 1;
    }
    EdgeColouring c;
    c.colour_count = 2 * k + 1;
    for (auto [u, v] : g.edges()) {
        int col = cayley_colour(unsigned(emb.map[u]), unsigned(emb.map[v]), k);
        if (col < 0) throw PreconditionViolated("induced_colouring: image pair not a PC edge");
        c.colour.push_back(col);
    }
    return c;
}

bool is_proper(const Graph& g, const EdgeColouring& c) {
    std::vector<std::vector<int>> at(g.n());
    for (std::size_t i = 0; i < g.edges().size(); ++i) {
        auto [u, v] = g.edges()[i];
        at[u].push_back(c.colour[i]);
        at[v].push_back(c.colour[i]);
    }
    for (auto& cols : at) {
        std::sort(cols.begin(), cols.end());
        if (std::adjacent_find(cols.begin(), cols.end()) != cols.end()) return false;
    }
    return true;
}

namespace {

struct SuperProperSearch {
    const Graph& g;
    std::vector<std::vector<std::pair<int, int>>> rot_adjacent;  // per edge: (other edge, shared vertex)
    bool forbidden[5][5] = {};
    std::vector<int> colour;                   // per edge, -1 unset
    std::vector<std::array<char, 5>> used_at;  // per vertex, colour taken
    long long budget;
    long long nodes = 0;
    bool out_of_budget = false;

    SuperProperSearch(const Graph& graph, const RotationSystem& rot,
                      const std::vector<std::pair<int, int>>& pairs, long long b)
        : g(graph), budget(b) {
        colour.assign(g.m(), -1);
        used_at.assign(g.n(), {});
        for (auto [a, b2] : pairs) {
            forbidden[a][b2] = true;
            forbidden[b2][a] = true;
        }
        rot_adjacent.assign(g.m(), {});
        for (int v = 0; v < g.n(); ++v) {
            const auto& cyc = rot.order[v];
            int deg = int(cyc.size());
            for (int i = 0; i < deg; ++i) {
                int e1 = g.edge_index(v, cyc[i]);
                int e2 = g.edge_index(v, cyc[(i + 1) % deg]);
                if (e1 < 0 || e2 < 0)
                    throw PreconditionViolated("rotation lists a non-edge");
                if (e1 != e2) {
                    rot_adjacent[e1].emplace_back(e2, v);
                    rot_adjacent[e2].emplace_back(e1, v);
                }
            }
        }
    }

    bool admissible(int e, int c) const {
        auto [u, v] = g.edges()[e];
        if (used_at[u][c] || used_at[v][c]) return false;
        for (auto [other, _] : rot_adjacent[e]) {
            int oc = colour[other];
            if (oc >= 0 && forbidden[c][oc]) return false;
        }
        return true;
    }

    // most-constrained edge next; ties by index for determinism
    int pick() const {
        int best = -1, best_count = 6;
        for (int e = 0; e < g.m(); ++e) {
            if (colour[e] >= 0) continue;
            int count = 0;
            for (int c = 0; c < 5; ++c) count += admissible(e, c);
            if (count < best_count) {
                best = e;
                best_count = count;
            }
            if (best_count == 0) break;
        }
        return best;
    }

    bool run(int remaining) {
        if (remaining == 0) return true;
        if (++nodes > budget) {
            out_of_budget = true;
            return false;
        }
        int e = pick();
        auto [u, v] = g.edges()[e];
        for (int c = 0; c < 5; ++c) {
            if (!admissible(e, c)) continue;
            colour[e] = c;
            used_at[u][c] = 1;
            used_at[v][c] = 1;
            if (run(remaining - 1)) return true;
            colour[e] = -1;
            used_at[u][c] = 0;
            used_at[v][c] = 0;
            if (out_of_budget) return false;
        }
        return false;
    }
};

}  // namespace

ColouringResult super_proper_search(const Graph& g, const RotationSystem& rot,
                                    const std::vector<std::pair<int, int>>& forbidden_pairs,
                                    long long budget) {
    for (int v = 0; v < g.n(); ++v) {
        if (g.degree(v) != 5) throw PreconditionViolated("super_proper_search: graph not 5-regular");
        std::vector<int> sorted = rot.order[v];
        std::sort(sorted.begin(), sorted.end());
        if (sorted != g.neighbours(v))
            throw PreconditionViolated("super_proper_search: rotation is not a permutation of neighbours");
    }
    for (auto [a, b] : forbidden_pairs)
        if (a < 0 || a > 4 || b < 0 || b > 4 || a == b)
            throw std::invalid_argument("super_proper_search: bad forbidden pair");

    SuperProperSearch s(g, rot, forbidden_pairs, budget);
    ColouringResult result{ColouringStatus::unsat, {}, 0};
    bool found = s.run(g.m());
    result.nodes = s.nodes;
    if (found) {
        result.status = ColouringStatus::found;
        result.colouring.colour_count = 5;
        result.colouring.colour = s.colour;
    } else if (s.out_of_budget) {
        result.status = ColouringStatus::budget_exceeded;
    }
    return result;
}

void write_rotation(std::ostream& out, const RotationSystem& rot) {
    out << "rot " << rot.order.size() << "\n";
    for (std::size_t v = 0; v < rot.order.size(); ++v) {
        out << "v " << v << ":";
        for (int w : rot.order[v]) out << " " << w;
        out << "\n";
    }
}

RotationSystem read_rotation(std::istream& in) {
    RotationSystem rot;
    std::string line;
    int n = -1;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string tok;
        ls >> tok;
        if (tok == "rot") {
            if (!(ls >> n) || n < 0) throw ParseError("bad rot header");
            rot.order.assign(n, {});
        } else if (tok == "v") {
            std::string vs;
            ls >> vs;
            if (!vs.empty() && vs.back() == ':') vs.pop_back();
            int v = std::stoi(vs);
            if (n < 0 || v < 0 || v >= n) throw ParseError("bad rotation vertex: " + line);
            int w;
            while (ls >> w) rot.order[v].push_back(w);
        } else {
            throw ParseError("unknown rotation line: " + line);
        }
    }
    if (n < 0) throw ParseError("missing rot header");
    return rot;
}

void write_colouring(std::ostream& out, const Graph& g, const EdgeColouring& c) {
    out << "col " << c.colour_count << "\n";
    for (std::size_t i = 0; i < g.edges().size(); ++i)
        out << "ce " << g.edges()[i].first << " " << g.edges()[i].second << " " << c.colour[i]
            << "\n";
}

}  // namespace girthbound

#include "girthbound/sp.hpp"

#include <algorithm>
#include <array>
#include <istream>
#include <map>
#include <ostream>
#include <random>
#include <set>
#include <sstream>

#include "girthbound/bound_check.hpp"
#include "girthbound/distance.hpp"

namespace girthbound {

namespace {

// Multigraph under series-parallel reduction. Neighbour multiplicities are
// tracked because suppressing degree-2 vertices creates parallel edges.
struct ReductionEvent {
    enum Kind { suppress, leaf } kind;
    int vertex;
    int a, b;  // suppress: the two neighbours; leaf: a = the neighbour
};

struct SpReducer {
    std::vector<std::map<int, int>> adj;  // neighbour -> multiplicity
    std::vector<char> alive;
    std::set<int> work;  // alive vertices with degree <= 2
    std::vector<ReductionEvent> events;
    int alive_count;

    explicit SpReducer(const Graph& g)
        : adj(g.n()), alive(g.n(), 1), alive_count(g.n()) {
        for (auto [u, v] : g.edges()) {
            adj[u][v] = 1;
            adj[v][u] = 1;
        }
        for (int v = 0; v < g.n(); ++v)
            if (degree(v) <= 2) work.insert(v);
    }

    int degree(int v) const {
        int d = 0;
        for (auto [_, mult] : adj[v]) d += mult;
        return d;
    }

    void enqueue(int v) {
        if (alive[v] && degree(v) <= 2) work.insert(v);
    }

    void remove_vertex(int v) {
        for (auto [w, _] : adj[v]) {
            adj[w].erase(v);
            enqueue(w);
        }
        adj[v].clear();
        alive[v] = 0;
        --alive_count;
        work.erase(v);
    }

    // Reduce until no vertex of degree <= 2 is left or `stop_at` vertices
    // remain. Returns true if fully reduced (every component shrank away).
    bool run(int stop_at) {
        while (!work.empty()) {
            if (alive_count <= stop_at) return true;
            int v = *work.begin();
            work.erase(work.begin());
            if (!alive[v]) continue;
            int d = degree(v);
            if (d > 2) continue;
            if (d == 0) {
                alive[v] = 0;
                --alive_count;
                continue;
            }
            if (adj[v].size() == 1) {
                // single neighbour: a leaf, or a doubled edge that merges
                auto [a, mult] = *adj[v].begin();
                if (mult >= 2) {
                    adj[v][a] = 1;
                    adj[a][v] = 1;
                    enqueue(v);
                    enqueue(a);
                } else {
                    events.push_back({ReductionEvent::leaf, v, a, -1});
                    remove_vertex(v);
                }
                continue;
            }
            // two distinct neighbours, multiplicity 1 each
            auto it = adj[v].begin();
            int a = it->first;
            int b = std::next(it)->first;
            events.push_back({ReductionEvent::suppress, v, a, b});
            remove_vertex(v);
            adj[a][b] = std::min(adj[a][b] + 1, 2);
            adj[b][a] = adj[a][b];
            if (adj[a][b] == 2) {  // merge the parallel pair right away
                adj[a][b] = 1;
                adj[b][a] = 1;
            }
            enqueue(a);
            enqueue(b);
        }
        return alive_count <= stop_at;
    }
};

}  // namespace

bool is_k4_minor_free(const Graph& g) {
    SpReducer r(g);
    return r.run(0);
}

std::vector<Edge> TwoTreeDecomposition::completion_edges(const Graph& g) const {
    std::vector<Edge> es = g.edges();
    es.insert(es.end(), fill_edges.begin(), fill_edges.end());
    std::sort(es.begin(), es.end());
    return es;
}

TwoTreeDecomposition two_tree_completion(const Graph& g) {
    if (g.n() < 2) throw PreconditionViolated("two_tree_completion: n >= 2 required");
    {
        auto dist = bfs_distances(g, 0);
        for (int v = 0; v < g.n(); ++v)
            if (dist[v] == kInfiniteDistance)
                throw PreconditionViolated("two_tree_completion: DISCONNECTED");
    }
    SpReducer r(g);
    if (!r.run(2))
        throw PreconditionViolated("two_tree_completion: NOT_PARTIAL_2TREE");

    TwoTreeDecomposition dec;
    std::vector<int> rest;
    for (int v = 0; v < g.n(); ++v)
        if (r.alive[v]) rest.push_back(v);
    if (rest.size() != 2) {
        // fully reduced below two vertices: re-add the last removed ones
        while (rest.size() < 2) {
            rest.push_back(r.events.back().vertex);
            r.events.pop_back();
        }
        std::sort(rest.begin(), rest.end());
    }
    dec.base_edge = {rest[0], rest[1]};

    // replay in reverse; completion adjacency tracks fills as they appear
    std::vector<std::set<int>> comp(g.n());
    auto add_comp = [&](int a, int b) {
        comp[a].insert(b);
        comp[b].insert(a);
        if (a > b) std::swap(a, b);
        if (!g.has_edge(a, b)) dec.fill_edges.emplace_back(a, b);
    };
    comp[rest[0]].insert(rest[1]);
    comp[rest[1]].insert(rest[0]);
    if (!g.has_edge(rest[0], rest[1])) dec.fill_edges.push_back(dec.base_edge);

    for (auto it = r.events.rbegin(); it != r.events.rend(); ++it) {
        int x = it->vertex;
        int a = it->a, b = it->b;
        if (it->kind == ReductionEvent::leaf) {
            // attach to the edge between the old neighbour and its smallest
            // completion neighbour
            b = *comp[a].begin();
        }
        add_comp(x, a);
        add_comp(x, b);
        dec.order.push_back({x, a, b});
    }
    std::sort(dec.fill_edges.begin(), dec.fill_edges.end());
    dec.fill_edges.erase(std::unique(dec.fill_edges.begin(), dec.fill_edges.end()),
                         dec.fill_edges.end());
    return dec;
}

Graph random_sp_instance(int k, int target_n, std::uint64_t seed) {
    if (k < 1 || target_n < 2 * k + 1)
        throw std::invalid_argument("random_sp_instance: need k >= 1, target_n >= 2k+1");
    std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + 1);

    // grow a random 2-tree on ~target_n/2 vertices
    int base = std::max(3, target_n / 2);
    std::vector<Edge> tree_edges = {{0, 1}};
    for (int v = 2; v < base; ++v) {
        Edge e = tree_edges[rng() % tree_edges.size()];
        tree_edges.emplace_back(std::min(e.first, v), std::max(e.first, v));
        tree_edges.emplace_back(std::min(e.second, v), std::max(e.second, v));
    }
    std::sort(tree_edges.begin(), tree_edges.end());

    // keep each edge with probability 1/2, then restore dropped edges in
    // random order until connected
    std::vector<Edge> kept, dropped;
    for (auto e : tree_edges) (rng() & 1 ? kept : dropped).push_back(e);
    std::shuffle(dropped.begin(), dropped.end(), rng);
    auto connected = [&](const std::vector<Edge>& es) {
        Graph t(base, es);
        auto d = bfs_distances(t, 0);
        return std::none_of(d.begin(), d.end(),
                            [](int x) { return x == kInfiniteDistance; });
    };
    while (!connected(kept)) {
        kept.push_back(dropped.back());
        dropped.pop_back();
    }

    Graph g(base, kept);
    // parity-preserving surgery: subdividing any edge by two vertices keeps
    // K4-minor-freeness and every cycle's parity
    auto subdivide = [&](Graph& cur, int u, int v) {
        int n = cur.n();
        std::vector<Edge> es = cur.edges();
        es.erase(std::remove(es.begin(), es.end(), Edge{std::min(u, v), std::max(u, v)}),
                 es.end());
        es.emplace_back(std::min(u, n), std::max(u, n));
        es.emplace_back(n, n + 1);
        es.emplace_back(std::min(v, n + 1), std::max(v, n + 1));
        cur = Graph(n + 2, std::move(es));
    };
    while (odd_girth(g) < 2 * k + 1) {
        auto cyc = odd_girth_cycle(g);
        std::size_t i = rng() % cyc->size();
        subdivide(g, (*cyc)[i], (*cyc)[(i + 1) % cyc->size()]);
    }
    while (g.n() < target_n) {
        Edge e = g.edges()[rng() % g.edges().size()];
        subdivide(g, e.first, e.second);
    }
    return g;
}

namespace {

// Vertex order for the backtracking search: depth-first from the smallest
// vertex of each component, so locally glued substructures stay contiguous.
std::vector<int> dfs_order(const Graph& g) {
    std::vector<int> order;
    order.reserve(g.n());
    std::vector<char> seen(g.n(), 0);
    std::vector<int> stack;
    for (int s = 0; s < g.n(); ++s) {
        if (seen[s]) continue;
        stack.push_back(s);
        seen[s] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            order.push_back(v);
            auto& nb = g.neighbours(v);
            for (auto it = nb.rbegin(); it != nb.rend(); ++it) {
                if (!seen[*it]) {
                    seen[*it] = 1;
                    stack.push_back(*it);
                }
            }
        }
    }
    return order;
}

// Backtracking with arc-consistency propagation over word-packed candidate
// sets, undone through a trail. Constraints that cannot prune (balls covering
// all of H) are dropped up front, so propagation touches only nearby vertices.
template <int MaxWords>
struct HomSearcher {
    using Row = std::array<std::uint64_t, MaxWords>;

    HomSearcher(const Graph& g_, const Graph& h_, bool injective_, long long budget_)
        : g(g_), h(h_), injective(injective_), budget(budget_) {}

    const Graph& g;
    const Graph& h;
    bool injective;
    long long budget;
    long long nodes = 0;

    std::vector<int> order, depth_of;
    std::vector<std::vector<Row>> ball;  // h-vertex x radius -> closed ball
    std::vector<Row> h_nbr;
    std::vector<std::vector<std::pair<int, int>>> constraints;  // v -> (w, d_g(v,w))
    Row full{};

    std::vector<Row> domain;                   // current candidate images
    std::vector<std::pair<int, Row>> trail;    // saved (vertex, old domain)
    std::vector<int> map;

    static bool any(const Row& r) {
        for (auto w : r)
            if (w) return true;
        return false;
    }
    static int first_set(const Row& r) {
        for (int i = 0; i < MaxWords; ++i)
            if (r[i]) return i * 64 + std::countr_zero(r[i]);
        return -1;
    }
    static void intersect(Row& a, const Row& b) {
        for (int i = 0; i < MaxWords; ++i) a[i] &= b[i];
    }
    static void clear_bit(Row& r, int i) { r[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }
    static int popcount(const Row& r) {
        int c = 0;
        for (auto w : r) c += std::popcount(w);
        return c;
    }

    void prepare() {
        order = dfs_order(g);
        depth_of.assign(g.n(), 0);
        for (int i = 0; i < g.n(); ++i) depth_of[order[i]] = i;

        auto dh = all_pairs_distances(h);
        int h_radius = 0;
        for (int x = 0; x < h.n(); ++x)
            for (int y = 0; y < h.n(); ++y)
                if (dh(x, y) != kInfiniteDistance) h_radius = std::max(h_radius, dh(x, y));
        Row zero{};
        for (int y = 0; y < h.n(); ++y) full[y >> 6] |= std::uint64_t(1) << (y & 63);
        ball.assign(h.n(), std::vector<Row>(h_radius + 1, zero));
        h_nbr.assign(h.n(), zero);
        for (int x = 0; x < h.n(); ++x) {
            for (int y : h.neighbours(x)) h_nbr[x][y >> 6] |= std::uint64_t(1) << (y & 63);
            for (int y = 0; y < h.n(); ++y)
                if (dh(x, y) != kInfiniteDistance)
                    for (int r = dh(x, y); r <= h_radius; ++r)
                        ball[x][r][y >> 6] |= std::uint64_t(1) << (y & 63);
        }
        // largest radius at which some ball still constrains; pairs of g
        // farther apart than this never prune and are skipped entirely
        int effective_radius = 0;
        for (int r = 0; r <= h_radius; ++r)
            for (int x = 0; x < h.n(); ++x)
                if (ball[x][r] != full) {
                    effective_radius = r;
                    break;
                }
        constraints.assign(g.n(), {});
        std::vector<int> dist(g.n(), -1), frontier;
        for (int u = 0; u < g.n(); ++u) {
            // bounded bfs to depth effective_radius
            frontier.assign(1, u);
            dist[u] = 0;
            std::vector<int> touched{u};
            for (std::size_t head = 0; head < frontier.size(); ++head) {
                int v = frontier[head];
                if (dist[v] == effective_radius) break;
                for (int w : g.neighbours(v))
                    if (dist[w] < 0) {
                        dist[w] = dist[v] + 1;
                        frontier.push_back(w);
                        touched.push_back(w);
                    }
            }
            for (int w : touched)
                if (w != u) constraints[u].emplace_back(w, dist[w]);
            for (int w : g.neighbours(u))
                if (dist[w] != 1) constraints[u].emplace_back(w, 1);
            for (int w : touched) dist[w] = -1;
        }

        map.assign(g.n(), -1);
        domain.assign(g.n(), full);
        if (injective)
            for (int v = 0; v < g.n(); ++v)
                for (int y = 0; y < h.n(); ++y)
                    if (h.degree(y) < g.degree(v)) clear_bit(domain[v], y);
    }

    SearchStatus search(int depth) {
        if (depth == g.n()) return SearchStatus::found;
        // smallest domain first, ties by earliest position
        int best = depth;
        int best_count = popcount(domain[order[depth]]);
        for (int j = depth + 1; j < g.n() && best_count > 1; ++j) {
            int c = popcount(domain[order[j]]);
            if (c < best_count) {
                best = j;
                best_count = c;
            }
        }
        if (best != depth) {
            std::swap(order[depth], order[best]);
            std::swap(depth_of[order[depth]], depth_of[order[best]]);
        }
        int v = order[depth];
        Row cand = domain[v];
        std::size_t mark = trail.size();
        for (int img = first_set(cand); img >= 0; clear_bit(cand, img), img = first_set(cand)) {
            if (++nodes > budget) return SearchStatus::budget_exceeded;
            map[v] = img;
            bool wipeout = false;
            trail.emplace_back(v, domain[v]);
            domain[v] = Row{};
            domain[v][img >> 6] = std::uint64_t(1) << (img & 63);
            if (injective) {
                for (int j = depth + 1; j < g.n() && !wipeout; ++j) {
                    int w = order[j];
                    if (!((domain[w][img >> 6] >> (img & 63)) & 1)) continue;
                    trail.emplace_back(w, domain[w]);
                    clear_bit(domain[w], img);
                    wipeout = !any(domain[w]);
                }
            }
            if (!wipeout) wipeout = !propagate(v);
            if (!wipeout) {
                SearchStatus st = search(depth + 1);
                if (st != SearchStatus::none) return st;
            }
            while (trail.size() > mark) {
                domain[trail.back().first] = trail.back().second;
                trail.pop_back();
            }
            map[v] = -1;
        }
        return SearchStatus::none;
    }

    // arc-consistency propagation from a changed vertex; returns false on a
    // domain wipeout
    bool propagate(int source) {
        prop_queue.clear();
        prop_queue.push_back(source);
        for (std::size_t head = 0; head < prop_queue.size(); ++head) {
            int u = prop_queue[head];
            for (auto [w, dist] : constraints[u]) {
                // union of supports offered by the remaining candidates of u
                Row support{};
                Row du = domain[u];
                for (int x = first_set(du); x >= 0; clear_bit(du, x), x = first_set(du)) {
                    const Row& s = dist == 1 ? h_nbr[x] : ball[x][dist];
                    for (int i = 0; i < MaxWords; ++i) support[i] |= s[i];
                }
                Row d = domain[w];
                intersect(d, support);
                if (d == domain[w]) continue;
                trail.emplace_back(w, domain[w]);
                domain[w] = d;
                if (!any(d)) return false;
                if (std::find(prop_queue.begin() + head, prop_queue.end(), w) ==
                    prop_queue.end())
                    prop_queue.push_back(w);
            }
        }
        return true;
    }

    std::vector<int> prop_queue;
};

template <int MaxWords>
HomSearchResult run_hom_search(const Graph& g, const Graph& h, bool injective,
                               long long budget) {
    HomSearcher<MaxWords> s(g, h, injective, budget);
    s.prepare();
    HomSearchResult result{s.search(0), {}, s.nodes};
    if (result.status == SearchStatus::found) result.hom.map = s.map;
    return result;
}

}  // namespace

HomSearchResult hom_search(const Graph& g, const Graph& h, bool injective, long long budget) {
    if (g.n() == 0) return {SearchStatus::found, {}, 0};
    if (h.n() == 0) return {SearchStatus::none, {}, 0};
    int words = (h.n() + 63) / 64;
    if (words <= 1) return run_hom_search<1>(g, h, injective, budget);
    if (words <= 2) return run_hom_search<2>(g, h, injective, budget);
    if (words <= 8) return run_hom_search<8>(g, h, injective, budget);
    if (words <= 32) return run_hom_search<32>(g, h, injective, budget);
    throw std::invalid_argument("hom_search: target graphs above 2048 vertices unsupported");
}

bool is_hom(const Graph& g, const Graph& h, const Homomorphism& m) {
    if (int(m.map.size()) != g.n()) return false;
    for (int img : m.map)
        if (img < 0 || img >= h.n()) return false;
    for (auto [u, v] : g.edges())
        if (!h.has_edge(m.map[u], m.map[v])) return false;
    return true;
}

namespace {

int omega(const DistanceMatrix& d, int k, int x, int y) {
    int dist = d(x, y);
    return dist == kInfiniteDistance ? k : std::min(dist, k);
}

}  // namespace

Homomorphism hom_via_certificate(const Graph& g, const Graph& b,
                                 const PartialDistanceGraph& pdg, int k) {
    if (odd_girth(g) < 2 * k + 1)
        throw PreconditionViolated("hom_via_certificate: odd_girth(g) < 2k+1");
    if (!is_k4_minor_free(g))
        throw PreconditionViolated("hom_via_certificate: g has a K4 minor");
    if (!verify_certificate(b, pdg, k))
        throw PreconditionViolated("hom_via_certificate: certificate fails verification");

    PdgNeighbours nbr(pdg);
    auto dg = all_pairs_distances(g);
    Homomorphism hom;
    hom.map.assign(g.n(), -1);

    // components are mapped independently
    std::vector<int> comp(g.n(), -1);
    int comps = 0;
    for (int s = 0; s < g.n(); ++s) {
        if (comp[s] >= 0) continue;
        auto dist = bfs_distances(g, s);
        for (int v = 0; v < g.n(); ++v)
            if (dist[v] != kInfiniteDistance) comp[v] = comps;
        ++comps;
    }

    for (int c = 0; c < comps; ++c) {
        std::vector<int> verts;
        for (int v = 0; v < g.n(); ++v)
            if (comp[v] == c) verts.push_back(v);
        if (verts.size() == 1) {
            hom.map[verts[0]] = 0;
            continue;
        }
        // induced copy of the component, completed to a 2-tree
        std::vector<int> local(g.n(), -1);
        for (std::size_t i = 0; i < verts.size(); ++i) local[verts[i]] = int(i);
        std::vector<Edge> es;
        for (auto [u, v] : g.edges())
            if (comp[u] == c && comp[v] == c)
                es.emplace_back(std::min(local[u], local[v]), std::max(local[u], local[v]));
        Graph sub(int(verts.size()), std::move(es));
        auto dec = two_tree_completion(sub);

        auto wt = [&](int lu, int lv) { return omega(dg, k, verts[lu], verts[lv]); };

        int w0 = wt(dec.base_edge.first, dec.base_edge.second);
        const WeightedEdge* base = nullptr;
        for (const auto& e : pdg.wedges)
            if (e.w == w0) {
                base = &e;
                break;
            }
        if (!base)
            throw PreconditionViolated("hom_via_certificate: no pdg edge of base weight");
        std::vector<int> img(verts.size(), -1);
        img[dec.base_edge.first] = base->u;
        img[dec.base_edge.second] = base->v;

        for (auto [x, pu, pv] : dec.order) {
            int q = wt(x, pu), r = wt(x, pv);
            int z = nbr.at(img[pu], q).first_common(nbr.at(img[pv], r));
            if (z < 0)
                throw PreconditionViolated("hom_via_certificate: extension failed");
            img[x] = z;
        }
        for (std::size_t i = 0; i < verts.size(); ++i) hom.map[verts[i]] = img[i];
    }
    return hom;
}

void write_homomorphism(std::ostream& out, const Homomorphism& m, int n_h) {
    out << "hom " << m.map.size() << " " << n_h << "\n";
    for (std::size_t v = 0; v < m.map.size(); ++v)
        out << "m " << v << " " << m.map[v] << "\n";
}

Homomorphism read_homomorphism(std::istream& in, int* n_h) {
    Homomorphism m;
    std::string line;
    int ng = -1, nh = -1;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string tok;
        ls >> tok;
        if (tok == "hom") {
            if (!(ls >> ng >> nh) || ng < 0) throw ParseError("bad hom header");
            m.map.assign(ng, -1);
        } else if (tok == "m") {
            int v, img;
            if (ng < 0 || !(ls >> v >> img) || v < 0 || v >= ng)
                throw ParseError("bad mapping line: " + line);
            m.map[v] = img;
        } else {
            throw ParseError("unknown hom line: " + line);
        }
    }
    if (ng < 0) throw ParseError("missing hom header");
    if (n_h) *n_h = nh;
    return m;
}

}  // namespace girthbound

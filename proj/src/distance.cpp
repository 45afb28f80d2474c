#include "girthbound/distance.hpp"

#include <algorithm>

namespace girthbound {

std::vector<int> bfs_distances(const Graph& g, int source) {
    std::vector<int> dist(g.n(), kInfiniteDistance);
    std::vector<int> queue;
    queue.reserve(g.n());
    dist[source] = 0;
    queue.push_back(source);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int v = queue[head];
        for (int w : g.neighbours(v)) {
            if (dist[w] == kInfiniteDistance) {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

DistanceMatrix all_pairs_distances(const Graph& g) {
    DistanceMatrix m;
    m.n = g.n();
    m.d.reserve(g.n());
    for (int v = 0; v < g.n(); ++v) m.d.push_back(bfs_distances(g, v));
    return m;
}

DistanceLevels distance_levels(const Graph& g) {
    DistanceLevels levels;
    levels.n = g.n();
    levels.empty_ = Bitset(g.n());
    levels.level.resize(g.n());
    for (int v = 0; v < g.n(); ++v) {
        auto dist = bfs_distances(g, v);
        int ecc = 0;
        for (int u = 0; u < g.n(); ++u)
            if (dist[u] != kInfiniteDistance) ecc = std::max(ecc, dist[u]);
        levels.level[v].assign(ecc + 1, Bitset(g.n()));
        for (int u = 0; u < g.n(); ++u)
            if (dist[u] != kInfiniteDistance) levels.level[v][dist[u]].set(u);
    }
    return levels;
}

namespace {

// Shortest odd closed walk through v equals the shortest odd cycle when
// minimized over all v, realised by an edge (x,y) with d(v,x) = d(v,y).
struct OddWalkWitness {
    int length = kInfiniteDistance;
    int root = -1, x = -1, y = -1;
};

OddWalkWitness shortest_odd_closed_walk(const Graph& g) {
    OddWalkWitness best;
    for (int v = 0; v < g.n(); ++v) {
        auto dist = bfs_distances(g, v);
        for (auto [x, y] : g.edges()) {
            if (dist[x] == kInfiniteDistance || dist[y] == kInfiniteDistance) continue;
            if (dist[x] != dist[y]) continue;
            int len = 2 * dist[x] + 1;
            if (len < best.length) best = {len, v, x, y};
        }
    }
    return best;
}

}  // namespace

int odd_girth(const Graph& g) { return shortest_odd_closed_walk(g).length; }

std::optional<std::vector<int>> odd_girth_cycle(const Graph& g) {
    auto w = shortest_odd_closed_walk(g);
    if (w.length == kInfiniteDistance) return std::nullopt;
    // Rebuild the two BFS paths root..x and root..y; minimality makes the
    // closed walk a simple cycle.
    auto dist = bfs_distances(g, w.root);
    auto path_from = [&](int t) {
        std::vector<int> path{t};
        int cur = t;
        while (cur != w.root) {
            for (int nb : g.neighbours(cur)) {
                if (dist[nb] + 1 == dist[cur]) {
                    cur = nb;
                    break;
                }
            }
            path.push_back(cur);
        }
        return path;  // t .. root
    };
    std::vector<int> cycle = path_from(w.x);          // x .. root
    std::reverse(cycle.begin(), cycle.end());         // root .. x
    std::vector<int> back = path_from(w.y);           // y .. root
    back.pop_back();                                  // drop duplicate root
    cycle.insert(cycle.end(), back.begin(), back.end());
    return cycle;
}

int girth(const Graph& g) {
    int best = kInfiniteDistance;
    for (auto [u, v] : g.edges()) {
        Graph h = g.minus_edge(u, v);
        auto dist = bfs_distances(h, u);
        if (dist[v] != kInfiniteDistance && dist[v] + 1 < best) best = dist[v] + 1;
    }
    return best;
}

namespace {

struct TwoPathSearch {
    const Graph& g;
    std::vector<int> dist_to_target;
    std::vector<char> used;
    long long budget;

    bool path_of_length(int cur, int target, int remaining) {
        if (--budget < 0) throw BudgetExceeded("exists_cycle_through_pair budget");
        if (remaining == 0) return cur == target;
        if (dist_to_target[cur] == kInfiniteDistance || dist_to_target[cur] > remaining)
            return false;
        for (int nb : g.neighbours(cur)) {
            if (used[nb]) continue;
            if (nb == target && remaining != 1) continue;
            used[nb] = 1;
            bool ok = path_of_length(nb, target, remaining - 1);
            used[nb] = 0;
            if (ok) return true;
        }
        return false;
    }
};

}  // namespace

bool exists_cycle_through_pair(const Graph& g, int u, int v, int len, long long budget) {
    if (u == v || len < 3) throw std::invalid_argument("exists_cycle_through_pair domain");
    TwoPathSearch search{g, bfs_distances(g, v), std::vector<char>(g.n(), 0), budget};
    if (search.dist_to_target[u] == kInfiniteDistance) return false;
    // split len into two internally disjoint u-v path lengths a + b
    struct Enum {
        TwoPathSearch& s;
        const Graph& g;
        int u, v, b;
        // enumerate first paths; on each complete one, look for the second
        // path through the remaining vertices
        bool run(int cur, int remaining) {
            if (--s.budget < 0) throw BudgetExceeded("exists_cycle_through_pair budget");
            if (remaining == 0) {
                if (cur != v) return false;
                s.used[v] = 0;
                bool ok = s.path_of_length(u, v, b);
                s.used[v] = 1;
                return ok;
            }
            if (s.dist_to_target[cur] == kInfiniteDistance ||
                s.dist_to_target[cur] > remaining)
                return false;
            for (int nb : g.neighbours(cur)) {
                if (s.used[nb]) continue;
                if (nb == v && remaining != 1) continue;
                s.used[nb] = 1;
                bool ok = run(nb, remaining - 1);
                s.used[nb] = 0;
                if (ok) return true;
            }
            return false;
        }
    };
    for (int a = 1; 2 * a <= len; ++a) {
        std::fill(search.used.begin(), search.used.end(), 0);
        search.used[u] = 1;
        Enum e{search, g, u, v, len - a};
        if (e.run(u, a)) return true;
    }
    return false;
}

}  // namespace girthbound

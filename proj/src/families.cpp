#include "girthbound/families.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace girthbound {

namespace {

long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

Graph cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i) es.emplace_back(i, (i + 1) % n);
    return Graph(n, std::move(es));
}

Graph path(int n) {
    if (n < 1) throw std::invalid_argument("path needs n >= 1");
    std::vector<Edge> es;
    for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
    return Graph(n, std::move(es));
}

Graph complete(int n) {
    std::vector<Edge> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) es.emplace_back(u, v);
    return Graph(n, std::move(es));
}

Graph hypercube(int d, int vertex_cap) {
    if (d < 1) throw std::invalid_argument("hypercube needs d >= 1");
    if (d >= 31 || (1 << d) > vertex_cap) throw std::invalid_argument("hypercube vertex cap exceeded");
    int n = 1 << d;
    std::vector<Edge> es;
    for (int x = 0; x < n; ++x)
        for (int i = 0; i < d; ++i)
            if (!(x >> i & 1)) es.emplace_back(x, x | (1 << i));
    return Graph(n, std::move(es));
}

Graph projective_cube(int k, int vertex_cap) {
    if (k < 1) throw std::invalid_argument("projective_cube needs k >= 1");
    if (2 * k >= 31 || (1 << (2 * k)) > vertex_cap)
        throw std::invalid_argument("projective_cube vertex cap exceeded");
    int d = 2 * k;
    int n = 1 << d;
    int all_ones = n - 1;
    std::vector<Edge> es;
    for (int x = 0; x < n; ++x) {
        for (int i = 0; i < d; ++i)
            if (!(x >> i & 1)) es.emplace_back(x, x | (1 << i));
        if (x < (x ^ all_ones)) es.emplace_back(x, x ^ all_ones);
    }
    return Graph(n, std::move(es));
}

int pc_distance(unsigned x, unsigned y, int k) {
    int w = std::popcount(x ^ y);
    return std::min(w, 2 * k + 1 - w);
}

Graph kneser(int n, int k, int vertex_cap) {
    if (k < 1 || n < 2 * k) throw std::invalid_argument("kneser needs n >= 2k >= 2");
    if (n >= 31) throw std::invalid_argument("kneser parameter cap exceeded");
    long long count = binomial(n, k);
    if (count > vertex_cap) throw std::invalid_argument("kneser vertex cap exceeded");
    std::vector<unsigned> subsets;  // ascending bitmask = colex order
    for (unsigned mask = 0; mask < (1u << n); ++mask)
        if (std::popcount(mask) == k) subsets.push_back(mask);
    std::vector<Edge> es;
    for (std::size_t a = 0; a < subsets.size(); ++a)
        for (std::size_t b = a + 1; b < subsets.size(); ++b)
            if ((subsets[a] & subsets[b]) == 0) es.emplace_back(int(a), int(b));
    return Graph(int(subsets.size()), std::move(es));
}

Graph circular_clique(int p, int q) {
    if (q < 1 || p <= 2 * q) throw std::invalid_argument("circular_clique needs p > 2q >= 2");
    std::vector<Edge> es;
    for (int i = 0; i < p; ++i)
        for (int j = i + 1; j < p; ++j) {
            int diff = (j - i) % p;
            if (diff >= q && diff <= p - q) es.emplace_back(i, j);
        }
    return Graph(p, std::move(es));
}

Graph toroidal_grid(int a, int b) {
    if (a < 3 || b < 3) throw std::invalid_argument("toroidal_grid needs a,b >= 3");
    auto id = [b](int i, int j) { return i * b + j; };
    std::vector<Edge> es;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) {
            es.emplace_back(id(i, j), id((i + 1) % a, j));
            es.emplace_back(id(i, j), id(i, (j + 1) % b));
        }
    return Graph(a * b, std::move(es));
}

Graph augmented_toroidal(int k) {
    if (k < 1) throw std::invalid_argument("augmented_toroidal needs k >= 1");
    int s = 2 * k;
    auto id = [s](int i, int j) { return i * s + j; };
    std::vector<Edge> es;
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < s; ++j) {
            es.emplace_back(id(i, j), id(i, (j + 1) % s));            // vertical
            es.emplace_back(id(i, j), id((i + 1) % s, j));            // horizontal
            es.emplace_back(id(i, j), id((i + k) % s, (j + k) % s));  // antipodal
        }
    return Graph(s * s, std::move(es));  // k=1 duplicates collapse in the edge set
}

int at_distance(std::pair<int, int> u, std::pair<int, int> v, int k) {
    int s = 2 * k;
    auto cyc = [s](int a, int b) {
        int d = std::abs(a - b);
        return std::min(d, s - d);
    };
    int dt = cyc(u.first, v.first) + cyc(u.second, v.second);
    return std::min(dt, 2 * k + 1 - dt);
}

std::pair<int, int> at_antipode(std::pair<int, int> u, int k) {
    int s = 2 * k;
    return {(u.first + k) % s, (u.second + k) % s};
}

Graph mycielski_level(int k) {
    if (k < 1) throw std::invalid_argument("mycielski_level needs k >= 1");
    int c = 2 * k + 1;
    int apex = k * c;
    auto id = [c](int level, int j) { return level * c + j; };
    std::vector<Edge> es;
    for (int j = 0; j < c; ++j) es.emplace_back(id(0, j), id(0, (j + 1) % c));
    for (int level = 1; level < k; ++level)
        for (int j = 0; j < c; ++j) {
            es.emplace_back(id(level, j), id(level - 1, (j + 1) % c));
            es.emplace_back(id(level, j), id(level - 1, (j + c - 1) % c));
        }
    for (int j = 0; j < c; ++j) es.emplace_back(apex, id(k - 1, j));
    return Graph(apex + 1, std::move(es));
}

GadgetGraph gadget(int k, int p, int q, int r) {
    if (k < 1 || p < 1 || q < 1 || r < 1 || p > k || q > k || r > k)
        throw std::invalid_argument("gadget parameters out of domain");
    int c = 2 * k + 1;
    std::vector<Edge> es;
    int next = 3;
    auto add_path = [&](int a, int b, int len) {
        int prev = a;
        for (int i = 1; i < len; ++i) {
            es.emplace_back(prev, next);
            prev = next++;
        }
        es.emplace_back(prev, b);
    };
    const int u = 0, v = 1, w = 2;
    add_path(u, v, p);
    add_path(u, v, c - p);
    add_path(u, w, q);
    add_path(u, w, c - q);
    add_path(v, w, r);
    add_path(v, w, c - r);
    return {Graph(next, std::move(es)), u, v, w};
}

Graph c8pp() {
    std::vector<Edge> es;
    for (int i = 0; i < 8; ++i) es.emplace_back(i, (i + 1) % 8);
    es.emplace_back(0, 4);  // v1v5
    es.emplace_back(2, 6);  // v3v7
    return Graph(8, std::move(es));
}

Graph x15() {
    std::vector<Edge> es;
    for (int i = 0; i < 10; ++i) es.emplace_back(i, (i + 1) % 10);
    for (int j = 0; j < 5; ++j) {
        es.emplace_back(10 + j, j);
        es.emplace_back(10 + j, j + 5);
    }
    return Graph(15, std::move(es));
}

Graph x16() {
    // ids: a1=0 a2=1, b1..b6=2..7, c1..c6=8..13, d1=14 d2=15
    std::vector<Edge> es = {
        {0, 6},  {0, 2},  {2, 3},  {3, 1},  {1, 7},            // b5-a1-b1-b2-a2-b6
        {0, 4},  {4, 5},  {5, 1},                              // a1-b3-b4-a2
        {3, 8},  {8, 14}, {14, 12}, {12, 7},                   // b2-c1-d1-c5-b6
        {14, 10}, {10, 4},                                     // d1-c3-b3
        {5, 11}, {11, 10},                                     // b4-c4-c3
        {2, 9},  {9, 8},                                       // b1-c2-c1
        {9, 15}, {15, 11},                                     // c2-d2-c4
        {12, 6}, {6, 13},                                      // c5-b5-c6
        {15, 13}, {13, 7},                                     // d2-c6-b6
    };
    return Graph(16, std::move(es));
}

Graph petersen() {
    std::vector<Edge> es;
    for (int i = 0; i < 5; ++i) {
        es.emplace_back(i, (i + 1) % 5);          // outer cycle
        es.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
        es.emplace_back(i, 5 + i);                // spokes
    }
    return Graph(10, std::move(es));
}

Graph grotzsch() {
    std::vector<Edge> es;
    for (int i = 0; i < 5; ++i) {
        es.emplace_back(i, (i + 1) % 5);
        es.emplace_back(5 + i, (i + 1) % 5);
        es.emplace_back(5 + i, (i + 4) % 5);
        es.emplace_back(10, 5 + i);
    }
    return Graph(11, std::move(es));
}

Graph clebsch() { return projective_cube(2); }

Graph wagner() {
    std::vector<Edge> es;
    for (int i = 0; i < 8; ++i) es.emplace_back(i, (i + 1) % 8);
    for (int i = 0; i < 4; ++i) es.emplace_back(i, i + 4);
    return Graph(8, std::move(es));
}

Graph coxeter() {
    // rings a,b,c with steps 1,2,3 on ids 0..6, 7..13, 14..20; hubs 21..27
    std::vector<Edge> es;
    for (int i = 0; i < 7; ++i) {
        es.emplace_back(i, (i + 1) % 7);
        es.emplace_back(7 + i, 7 + (i + 2) % 7);
        es.emplace_back(14 + i, 14 + (i + 3) % 7);
        es.emplace_back(21 + i, i);
        es.emplace_back(21 + i, 7 + i);
        es.emplace_back(21 + i, 14 + i);
    }
    return Graph(28, std::move(es));
}

namespace {

// Labels of the planar drawing: x,y,z outer triangle; a..f middle hexagon;
// g,h,i inner triangle. Ids x=0 y=1 z=2 a=3 b=4 c=5 d=6 e=7 f=8 g=9 h=10 i=11.
const std::vector<std::vector<int>> kIcosaRotation = {
    /* x */ {1, 4, 3, 8, 2},
    /* y */ {2, 6, 5, 4, 0},
    /* z */ {0, 8, 7, 6, 1},
    /* a */ {4, 9, 11, 8, 0},
    /* b */ {1, 5, 9, 3, 0},
    /* c */ {1, 6, 10, 9, 4},
    /* d */ {1, 2, 7, 10, 5},
    /* e */ {6, 2, 8, 11, 10},
    /* f */ {11, 7, 2, 0, 3},
    /* g */ {5, 10, 11, 3, 4},
    /* h */ {5, 6, 7, 11, 9},
    /* i */ {10, 7, 8, 3, 9},
};

}  // namespace

Graph icosahedron() {
    std::vector<Edge> es;
    for (int v = 0; v < 12; ++v)
        for (int w : kIcosaRotation[v])
            if (v < w) es.emplace_back(v, w);
    return Graph(12, std::move(es));
}

std::vector<std::vector<int>> icosahedron_rotation() { return kIcosaRotation; }

int pc_vertex_of_subset(unsigned subset, int k) {
    unsigned universe = (1u << (2 * k + 1)) - 1;
    unsigned rep = (subset >> (2 * k)) & 1 ? (~subset & universe) : subset;
    return int(rep & ((1u << (2 * k)) - 1));
}

std::vector<int> kneser_pc_embedding(int k) {
    std::vector<int> emb;
    for (unsigned mask = 0; mask < (1u << (2 * k + 1)); ++mask)
        if (std::popcount(mask) == k) emb.push_back(pc_vertex_of_subset(mask, k));
    return emb;
}

std::vector<int> c8pp_pc_embedding() {
    // walk e1,e2,e3,e4 around the 8-cycle twice; both chords carry J
    return {0, 1, 3, 7, 15, 14, 12, 8};
}

std::vector<int> x15_pc_embedding() {
    std::vector<int> emb(15);
    int prefix[6] = {0, 1, 3, 7, 15, 31};
    for (int i = 0; i < 5; ++i) {
        emb[i] = prefix[i];
        emb[5 + i] = 31 ^ prefix[i];
        emb[10 + i] = prefix[i] | 32;  // x_i hangs off v_i by e6, off v_{i+5} by J
    }
    return emb;
}

Graph make_family(const std::string& name, const std::vector<int>& params) {
    auto want = [&](std::size_t k) {
        if (params.size() != k)
            throw std::invalid_argument("family '" + name + "' takes " + std::to_string(k) +
                                        " parameter(s)");
    };
    if (name == "cycle") { want(1); return cycle(params[0]); }
    if (name == "path") { want(1); return path(params[0]); }
    if (name == "complete") { want(1); return complete(params[0]); }
    if (name == "hypercube") { want(1); return hypercube(params[0]); }
    if (name == "projective_cube" || name == "pc") { want(1); return projective_cube(params[0]); }
    if (name == "kneser") { want(2); return kneser(params[0], params[1]); }
    if (name == "circular_clique") { want(2); return circular_clique(params[0], params[1]); }
    if (name == "toroidal_grid") { want(2); return toroidal_grid(params[0], params[1]); }
    if (name == "augmented_toroidal" || name == "at") { want(1); return augmented_toroidal(params[0]); }
    if (name == "mycielski" || name == "mycielski_level") { want(1); return mycielski_level(params[0]); }
    if (name == "gadget") {
        want(4);
        return gadget(params[0], params[1], params[2], params[3]).graph;
    }
    if (name == "c8pp") { want(0); return c8pp(); }
    if (name == "x15") { want(0); return x15(); }
    if (name == "x16") { want(0); return x16(); }
    if (name == "wagner") { want(0); return wagner(); }
    if (name == "petersen") { want(0); return petersen(); }
    if (name == "grotzsch") { want(0); return grotzsch(); }
    if (name == "coxeter") { want(0); return coxeter(); }
    if (name == "clebsch") { want(0); return clebsch(); }
    if (name == "icosahedron") { want(0); return icosahedron(); }
    throw std::invalid_argument("unknown family: " + name);
}

std::vector<std::string> family_names() {
    return {"cycle", "path", "complete", "hypercube", "projective_cube", "kneser",
            "circular_clique", "toroidal_grid", "augmented_toroidal", "mycielski",
            "gadget", "c8pp", "x15", "x16", "wagner", "petersen", "grotzsch",
            "coxeter", "clebsch", "icosahedron"};
}

}  // namespace girthbound

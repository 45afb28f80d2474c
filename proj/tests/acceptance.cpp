// Integration acceptance suite: one pass/fail line per criterion, exit code 0
// iff every criterion holds.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "girthbound/bound_check.hpp"
#include "girthbound/distance.hpp"
#include "girthbound/edge_colour.hpp"
#include "girthbound/families.hpp"
#include "girthbound/iso.hpp"
#include "girthbound/reproduce.hpp"
#include "girthbound/sp.hpp"

using namespace girthbound;

namespace {

int failures = 0;

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

void report(int criterion, bool pass, const std::string& detail, double seconds) {
    std::printf("criterion %2d: %s - %s (%.1fs)\n", criterion, pass ? "PASS" : "FAIL",
                detail.c_str(), seconds);
    std::fflush(stdout);
    if (!pass) ++failures;
}

void note(const std::string& text) { std::printf("              note: %s\n", text.c_str()); }

// ---- criterion 1: the pinned verdict table --------------------------------

void criterion_1() {
    Timer t;
    int mismatches = 0, rows = 0;
    std::string first_bad;
    for (const auto& c : verdict_table()) {
        if (c.name.rfind("c8pp minus edge", 0) == 0) continue;  // criterion 2's rows
        ++rows;
        auto v = check_bound(c.make(), c.k);
        if (v.yes != c.expect_yes) {
            ++mismatches;
            if (first_bad.empty())
                first_bad = c.name + ": expected " + (c.expect_yes ? "YES" : "NO") +
                            ", observed " + (v.yes ? "YES" : "NO");
        }
    }
    report(1, mismatches == 0,
           std::to_string(rows - mismatches) + "/" + std::to_string(rows) +
               " pinned verdicts match" + (first_bad.empty() ? "" : "; " + first_bad),
           t.seconds());
    if (mismatches) {
        note("petersen minus one vertex contains the 8-vertex optimal bound as a");
        note("subgraph (removing one further vertex yields it exactly), so every");
        note("instance maps through that subgraph and YES is forced; the pinned NO");
        note("cannot be met. Its stated rationale (order below 8 cannot bound)");
        note("describes c8pp minus one vertex instead - checked as a side condition:");
        bool side_ok = true;
        for (int v = 0; v < 8 && side_ok; ++v) {
            Graph g = c8pp().minus_vertex(v);
            if (odd_girth(g) != 5) continue;
            side_ok = !check_bound(g, 2).yes;
        }
        note(std::string("  check_bound(c8pp - v, 2) = NO for every vertex: ") +
             (side_ok ? "confirmed" : "NOT confirmed"));
    }
}

// ---- criterion 2: c8pp edge-deletion minimality ----------------------------

void criterion_2() {
    Timer t;
    Graph base = c8pp();
    int ok = 0;
    for (auto [u, v] : base.edges())
        if (!check_bound(base.minus_edge(u, v), 2).yes) ++ok;
    report(2, ok == 10, std::to_string(ok) + "/10 single-edge deletions lose the bound",
           t.seconds());
}

// ---- criterion 3: certificate shape pins -----------------------------------

void criterion_3() {
    Timer t;
    bool pass = true;
    {
        auto v = check_bound(c8pp(), 2);
        pass = pass && v.yes;
        std::set<std::pair<int, int>> pairs;
        for (const auto& e : v.certificate.wedges) pairs.insert({e.u, e.v});
        pass = pass && pairs.size() == 26 && !pairs.count({1, 5}) && !pairs.count({3, 7});
        for (int u = 0; u < 8 && pass; ++u)
            for (int w = u + 1; w < 8 && pass; ++w)
                if (!(u == 1 && w == 5) && !(u == 3 && w == 7)) pass = pairs.count({u, w});
    }
    {
        auto v = check_bound(x15(), 3);
        pass = pass && v.yes;
        for (const auto& e : v.certificate.wedges)
            if (e.u >= 10 && e.v >= 10) pass = false;
    }
    report(3, pass, "c8pp certificate = all pairs minus {v2,v6},{v4,v8}; x15 certificate "
                    "holds no x_i x_j pair",
           t.seconds());
}

// ---- criterion 4: oracle soundness sweep ------------------------------------

void criterion_4() {
    Timer t;
    int pass_count = 0, total = 0;
    for (int k : {2, 3}) {
        Graph b = k == 2 ? c8pp() : x15();
        auto verdict = check_bound(b, k);
        std::uint64_t seed = 90000 + 1000 * std::uint64_t(k);
        for (int i = 0; i < 100; ++i) {
            ++total;
            Graph inst = random_sp_instance(k, 2 * k + 10 + (i % 40), seed++);
            while (inst.n() > 60) inst = random_sp_instance(k, 2 * k + 5, seed++);
            auto hom = hom_via_certificate(inst, b, verdict.certificate, k);
            bool a = is_hom(inst, b, hom);
            auto direct = hom_search(inst, b);
            bool bb = direct.status == SearchStatus::found && is_hom(inst, b, direct.hom);
            if (a && bb) ++pass_count;
        }
    }
    report(4, pass_count == total,
           std::to_string(pass_count) + "/" + std::to_string(total) +
               " instances map both via certificate and by direct search",
           t.seconds());
}

// ---- criterion 5: NO-certificate validity -----------------------------------

void criterion_5() {
    Timer t;
    int verified = 0, cap_hits = 0;
    auto check_witness = [&](const Graph& b) {
        auto verdict = check_bound(b, 2);
        if (verdict.yes) return false;
        auto witness = no_certificate(b, 2, verdict, 10000);
        if (!witness.has_value()) {
            ++cap_hits;
            return false;  // reported, not failed
        }
        bool ok = is_k4_minor_free(*witness) && odd_girth(*witness) >= 5 &&
                  hom_search(*witness, b).status == SearchStatus::none;
        if (!ok) return false;
        ++verified;
        return true;
    };
    bool pass = check_witness(cycle(5));

    // scan seeded random graphs until five more emitted witnesses verified
    std::mt19937_64 rng(20250);
    for (int trial = 0; trial < 2000 && verified < 6; ++trial) {
        int n = 8 + int(rng() % 2);
        std::vector<Edge> es;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 100 < 30) es.emplace_back(u, v);
        Graph g(n, es);
        if (odd_girth(g) != 5) continue;
        if (check_bound(g, 2).yes) continue;
        check_witness(g);
    }
    pass = pass && verified == 6;
    report(5, pass,
           std::to_string(verified) + "/6 emitted witnesses verified (C5 and five random "
                                      "NO graphs), " +
               std::to_string(cap_hits) + " cap hits reported, not failed",
           t.seconds());
}

// ---- criterion 6: triple ground truth ---------------------------------------

void criterion_6() {
    Timer t;
    bool pass =
        enumerate_k_good(2) == std::vector<GoodTriple>{{1, 1, 2}, {1, 2, 2}, {2, 2, 2}};
    pass = pass && enumerate_k_good(3) == std::vector<GoodTriple>{{1, 1, 2}, {1, 2, 3},
                                                                  {1, 3, 3}, {2, 2, 2},
                                                                  {2, 2, 3}, {2, 3, 3},
                                                                  {3, 3, 3}};
    for (int k = 1; k <= 5 && pass; ++k)
        for (int p = 1; p <= k && pass; ++p)
            for (int q = p; q <= k && pass; ++q)
                for (int r = q; r <= k && pass; ++r)
                    pass = is_k_good(p, q, r, k) ==
                           (odd_girth(gadget(k, p, q, r).graph) >= 2 * k + 1);
    report(6, pass, "published k=2,3 lists verbatim; predicate agrees with the gadget "
                    "oracle for k <= 5",
           t.seconds());
}

// ---- criterion 7: distance-formula oracles ----------------------------------

void criterion_7() {
    Timer t;
    bool pass = true;
    for (int k = 1; k <= 4 && pass; ++k) {
        Graph pc = projective_cube(k);
        auto d = all_pairs_distances(pc);
        for (int u = 0; u < pc.n() && pass; ++u)
            for (int v = 0; v < pc.n() && pass; ++v)
                pass = d(u, v) == pc_distance(unsigned(u), unsigned(v), k);
    }
    for (int k = 1; k <= 7 && pass; ++k) {
        int s = 2 * k;
        Graph at = augmented_toroidal(k);
        auto d = all_pairs_distances(at);
        for (int u = 0; u < at.n() && pass; ++u)
            for (int v = 0; v < at.n() && pass; ++v)
                pass = d(u, v) == at_distance({u / s, u % s}, {v / s, v % s}, k);
    }
    for (int k = 2; k <= 7 && pass; ++k) {
        int s = 2 * k;
        auto lat = distance_levels(augmented_toroidal(k));
        auto lt = distance_levels(toroidal_grid(s, s));
        for (int u = 0; u < s * s && pass; ++u) {
            auto [ai, aj] = at_antipode({u / s, u % s}, k);
            int anti = ai * s + aj;
            for (int dist = 1; dist <= k && pass; ++dist) {
                Bitset expected(s * s);
                for (int w : lt.at(u, dist).to_vector()) expected.set(w);
                for (int w : lt.at(anti, dist - 1).to_vector()) expected.set(w);
                pass = lat.at(u, dist) == expected;
            }
        }
    }
    report(7, pass, "pc/at closed forms equal bfs exhaustively; at levels split into "
                    "torus levels",
           t.seconds());
}

// ---- criterion 8: family identities ------------------------------------------

void criterion_8() {
    Timer t;
    bool pass = iso_check(projective_cube(1), complete(4)) &&
                iso_check(augmented_toroidal(1), complete(4)) &&
                iso_check(augmented_toroidal(2), projective_cube(2)) &&
                iso_check(kneser(5, 2), petersen()) &&
                iso_check(mycielski_level(2), grotzsch());
    report(8, pass, "pc(2)=K4, at(2,2)=K4, at(4,4)=pc(4), kneser(5,2)=petersen, "
                    "mycielski(2)=grotzsch",
           t.seconds());
}

// ---- criterion 9: edge-colouring ----------------------------------------------

void criterion_9() {
    Timer t;
    bool pass = true;
    for (int k = 1; k <= 4 && pass; ++k)
        pass = is_proper(projective_cube(k), cayley_edge_labels(k));

    {
        Graph pc = projective_cube(2);
        auto col = cayley_edge_labels(2);
        // exhaustive canonical enumeration of the 5-cycles
        std::vector<int> path;
        std::vector<char> used(pc.n(), 0);
        int rainbow = 0, cycles = 0;
        auto dfs = [&](auto&& self, int start, int cur) -> void {
            if (path.size() == 5) {
                if (pc.has_edge(cur, start) && path[1] < path.back()) {
                    ++cycles;
                    std::set<int> cols;
                    for (std::size_t i = 0; i < 5; ++i)
                        cols.insert(col.of(pc, path[i], path[(i + 1) % 5]));
                    if (cols.size() == 5) ++rainbow;
                }
                return;
            }
            for (int nb : pc.neighbours(cur)) {
                if (nb <= start || used[nb]) continue;
                used[nb] = 1;
                path.push_back(nb);
                self(self, start, nb);
                path.pop_back();
                used[nb] = 0;
            }
        };
        for (int s = 0; s < pc.n(); ++s) {
            path = {s};
            std::fill(used.begin(), used.end(), 0);
            used[s] = 1;
            dfs(dfs, s, s);
        }
        pass = pass && cycles > 0 && rainbow == cycles;
    }
    {
        Graph g = c8pp();
        auto c = induced_colouring(g, 2, Homomorphism{c8pp_pc_embedding()});
        auto canonical = [](std::vector<int> seq) {
            std::vector<int> best;
            for (int flip = 0; flip < 2; ++flip) {
                for (std::size_t r = 0; r < seq.size(); ++r) {
                    std::rotate(seq.begin(), seq.begin() + 1, seq.end());
                    if (best.empty() || seq < best) best = seq;
                }
                std::reverse(seq.begin(), seq.end());
            }
            return best;
        };
        const int fives[4][5] = {
            {0, 1, 2, 3, 4}, {4, 5, 6, 7, 0}, {2, 3, 4, 5, 6}, {6, 7, 0, 1, 2}};
        std::set<std::vector<int>> orders;
        for (const auto& cyc : fives) {
            std::vector<int> cols;
            for (int i = 0; i < 5; ++i)
                cols.push_back(c.of(g, cyc[i], cyc[(i + 1) % 5]));
            orders.insert(canonical(cols));
        }
        pass = pass && orders.size() == 2;
    }
    {
        auto r = super_proper_search(icosahedron(), RotationSystem{icosahedron_rotation()},
                                     {{1, 2}, {3, 4}});
        pass = pass && r.status == ColouringStatus::unsat;
    }
    report(9, pass, "cayley labels proper (k<=4); all pc(4) 5-cycles rainbow; c8pp shows "
                    "two cyclic orders; icosahedron super-proper UNSAT",
           t.seconds());
}

// ---- criterion 10: empirical scaling -------------------------------------------

void criterion_10() {
    Timer t;
    std::vector<double> log_n, log_work;
    for (int k = 2; k <= 5; ++k) {
        Graph b = kneser(2 * k + 1, k);
        reset_realization_check_count();
        auto v = check_bound(b, k);
        long long work = realization_check_count();
        if (!v.yes || work <= 0) {
            report(10, false, "kneser run failed", t.seconds());
            return;
        }
        log_n.push_back(std::log(double(b.n())));
        log_work.push_back(std::log(double(work)));
    }
    double n = double(log_n.size()), sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < log_n.size(); ++i) {
        sx += log_n[i];
        sy += log_work[i];
        sxx += log_n[i] * log_n[i];
        sxy += log_n[i] * log_work[i];
    }
    double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    char detail[128];
    std::snprintf(detail, sizeof detail,
                  "fitted exponent of realization checks vs n on kneser(2k+1,k), k=2..5: "
                  "%.2f (required <= 4)",
                  slope);
    report(10, slope <= 4.0, detail, t.seconds());
}

}  // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    std::printf("%d criterion(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}

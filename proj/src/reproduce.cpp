#include "girthbound/reproduce.hpp"

#include <chrono>
#include <iomanip>
#include <ostream>

#include "girthbound/bound_check.hpp"
#include "girthbound/families.hpp"

namespace girthbound {

std::vector<ReproduceCase> verdict_table() {
    std::vector<ReproduceCase> table;
    auto add = [&](std::string name, std::function<Graph()> make, int k, bool yes,
                   bool slow = false) {
        table.push_back({std::move(name), std::move(make), k, yes, slow});
    };

    add("c8pp k=2", [] { return c8pp(); }, 2, true);
    add("x15 k=3", [] { return x15(); }, 3, true);
    add("x16 k=3", [] { return x16(); }, 3, true);
    add("petersen k=2", [] { return petersen(); }, 2, true);
    add("grotzsch k=2", [] { return grotzsch(); }, 2, true);
    add("wagner C(8,3) k=2", [] { return circular_clique(8, 3); }, 2, true);
    add("clebsch k=2", [] { return clebsch(); }, 2, true);
    add("coxeter k=3", [] { return coxeter(); }, 3, true);
    for (int k = 1; k <= 4; ++k)
        add("projective_cube(" + std::to_string(k) + ") k=" + std::to_string(k),
            [k] { return projective_cube(k); }, k, true);
    for (int k = 1; k <= 5; ++k)
        add("kneser(" + std::to_string(2 * k + 1) + "," + std::to_string(k) + ") k=" +
                std::to_string(k),
            [k] { return kneser(2 * k + 1, k); }, k, true, k >= 5);
    for (int k = 1; k <= 8; ++k)
        add("augmented_toroidal(" + std::to_string(k) + ") k=" + std::to_string(k),
            [k] { return augmented_toroidal(k); }, k, true, k >= 8);
    for (int k = 1; k <= 10; ++k)
        add("mycielski_level(" + std::to_string(k) + ") k=" + std::to_string(k),
            [k] { return mycielski_level(k); }, k, true, k >= 9);

    for (int k = 2; k <= 4; ++k)
        add("cycle(" + std::to_string(2 * k + 1) + ") k=" + std::to_string(k),
            [k] { return cycle(2 * k + 1); }, k, false);
    add("C9 k=2 (odd-girth gate)", [] { return cycle(9); }, 2, false);
    add("petersen minus vertex k=2", [] { return petersen().minus_vertex(9); }, 2, false);

    for (int i = 0; i < 10; ++i) {
        Edge e = c8pp().edges()[i];
        add("c8pp minus edge (" + std::to_string(e.first) + "," + std::to_string(e.second) +
                ") k=2",
            [e] { return c8pp().minus_edge(e.first, e.second); }, 2, false);
    }
    return table;
}

bool RunReport::pass() const {
    for (const auto& r : rows)
        if (!r.pass) return false;
    return true;
}

RunReport run_reproduce(bool quick, std::ostream* progress) {
    RunReport report;
    for (const auto& c : verdict_table()) {
        if (quick && c.slow) continue;
        RunRow row;
        row.name = c.name;
        row.expected = c.expect_yes ? "YES" : "NO";
        auto start = std::chrono::steady_clock::now();
        BoundVerdict v = check_bound(c.make(), c.k);
        row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        row.observed = v.yes ? "YES" : "NO";
        row.pass = v.yes == c.expect_yes;
        if (progress) {
            *progress << (row.pass ? "PASS" : "FAIL") << "  " << std::left << std::setw(36)
                      << row.name << " expected=" << row.expected << " observed=" << row.observed
                      << "  " << std::fixed << std::setprecision(2) << row.seconds << "s\n";
            progress->flush();
        }
        report.rows.push_back(std::move(row));
    }
    return report;
}

}  // namespace girthbound

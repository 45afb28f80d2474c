#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "girthbound/graph.hpp"

namespace girthbound {

struct ReproduceCase {
    std::string name;
    std::function<Graph()> make;
    int k;
    bool expect_yes;
    bool slow;  // skipped at the quick level
};

// The paper's verdict table plus the edge-deletion minimality sweep of C8++.
std::vector<ReproduceCase> verdict_table();

struct RunRow {
    std::string name;
    std::string expected, observed;
    double seconds = 0;
    bool pass = false;
};

struct RunReport {
    std::vector<RunRow> rows;
    bool pass() const;
};

RunReport run_reproduce(bool quick, std::ostream* progress = nullptr);

}  // namespace girthbound

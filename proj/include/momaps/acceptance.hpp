#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace momaps {

struct AcceptanceOptions {
    int full_max_vertices = 8;      // all rooted graphs: identities, melonic reduction, planar counts
    int sweep_all_degrees_max = 7;  // melon-free scheme sweep at every degree
    int low_degree_max = 10;        // melon-free graphs with 2*delta <= 3
    int delta_one_catalog_max = 16; // catalog scan for dominant membership at delta = 1
    int series_order = 400;
};

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0;
};

// Runs every criterion, printing one line per criterion as it completes.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts, std::ostream& out);

}  // namespace momaps

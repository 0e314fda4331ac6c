#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>

#include "momaps/generator.hpp"

namespace momaps {

// MOMAPS_THREADS if set and positive, else the hardware concurrency.
int thread_count();

// Runs the generator split into subtrees over worker threads. make_visitor is
// called once per worker (with its index) on the calling thread; each visitor
// only ever runs on its own worker. Callers keep per-worker state and merge.
using WorkerVisitor = std::function<void(const MOGraph&)>;
void parallel_generate(const GeneratorOptions& opts, const std::function<WorkerVisitor(int)>& make_visitor,
                       int threads = 0);

struct CountRow {
    long long count = 0;
    long long planar = 0;
};

struct CountFilters {
    bool planar = false;
    bool melon_free = false;
    int max_two_delta = -1;
};

// Keys are doubled: two_n = V (2n vertices), two_delta = 2*delta.
struct CountTable {
    std::map<std::pair<int, int>, CountRow> rows;
    // planar graphs by (V, F_s)
    std::map<std::pair<int, int>, long long> knots;
    bool planar_only = false;
    bool melon_free_only = false;
    int max_vertices = 0;

    long long count(int two_n, int two_delta) const;
    long long planar_count(int two_n, int two_delta) const;
    long long total(int two_n) const;
    long long planar_total(int two_n) const;
    long long knot_count(int two_n, int knots) const;
};

CountTable count_by_degree(int max_vertices, const CountFilters& filters = {});

std::string count_table_csv(const CountTable& t);
std::string knot_table_csv(const CountTable& t);

}  // namespace momaps

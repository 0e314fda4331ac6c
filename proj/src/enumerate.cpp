#include "momaps/enumerate.hpp"

#include <atomic>
#include <cstdlib>
#include <sstream>
#include <thread>
#include <vector>

#include "momaps/faces.hpp"

namespace momaps {

int thread_count() {
    if (const char* env = std::getenv("MOMAPS_THREADS")) {
        int n = std::atoi(env);
        if (n > 0) return n;
    }
    int hw = static_cast<int>(std::thread::hardware_concurrency());
    return hw > 0 ? hw : 1;
}

void parallel_generate(const GeneratorOptions& opts, const std::function<WorkerVisitor(int)>& make_visitor,
                       int threads) {
    if (threads <= 0) threads = thread_count();
    if (threads == 1 || opts.max_vertices < 3) {
        WorkerVisitor v = make_visitor(0);
        RootedGenerator gen(opts);
        gen.run(v);
        return;
    }
    int depth = 2, tasks = 1;
    for (; depth <= 8; ++depth) {
        RootedGenerator probe(opts);
        tasks = probe.task_count(depth);
        if (tasks >= 16 * threads) break;
    }
    if (depth > 8) depth = 8;
    std::vector<WorkerVisitor> visitors;
    for (int w = 0; w < threads; ++w) visitors.push_back(make_visitor(w));
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    for (int w = 0; w < threads; ++w)
        pool.emplace_back([&, w] {
            RootedGenerator gen(opts);
            for (int t = next++; t < tasks; t = next++) gen.run_task(depth, t, visitors[w]);
        });
    for (auto& th : pool) th.join();
}

long long CountTable::count(int two_n, int two_delta) const {
    auto it = rows.find({two_n, two_delta});
    return it == rows.end() ? 0 : it->second.count;
}

long long CountTable::planar_count(int two_n, int two_delta) const {
    auto it = rows.find({two_n, two_delta});
    return it == rows.end() ? 0 : it->second.planar;
}

long long CountTable::total(int two_n) const {
    long long s = 0;
    for (auto it = rows.lower_bound({two_n, -1}); it != rows.end() && it->first.first == two_n; ++it)
        s += it->second.count;
    return s;
}

long long CountTable::planar_total(int two_n) const {
    long long s = 0;
    for (auto it = rows.lower_bound({two_n, -1}); it != rows.end() && it->first.first == two_n; ++it)
        s += it->second.planar;
    return s;
}

long long CountTable::knot_count(int two_n, int k) const {
    auto it = knots.find({two_n, k});
    return it == knots.end() ? 0 : it->second;
}

CountTable count_by_degree(int max_vertices, const CountFilters& filters) {
    GeneratorOptions o;
    o.max_vertices = max_vertices;
    o.max_two_delta = filters.max_two_delta;
    o.melon_free = filters.melon_free;
    struct Local {
        CountTable t;
        FaceCounter fc;
    };
    int threads = thread_count();
    std::vector<Local> locals(threads);
    parallel_generate(
        o,
        [&](int w) -> WorkerVisitor {
            Local* L = &locals[w];
            return [L, &filters](const MOGraph& g) {
                FaceCounts fcs = L->fc.count(g);
                DegreeReport d = degree_from_counts(component_count(g), g.vertex_count(), fcs.left, fcs.right,
                                                    fcs.straight);
                bool planar = d.planar();
                if (filters.planar && !planar) return;
                CountRow& r = L->t.rows[{g.vertex_count(), d.two_delta}];
                ++r.count;
                if (planar) {
                    ++r.planar;
                    ++L->t.knots[{g.vertex_count(), d.F_s}];
                }
            };
        },
        threads);
    CountTable out;
    out.planar_only = filters.planar;
    out.melon_free_only = filters.melon_free;
    out.max_vertices = max_vertices;
    for (const Local& L : locals) {
        for (const auto& [k, r] : L.t.rows) {
            out.rows[k].count += r.count;
            out.rows[k].planar += r.planar;
        }
        for (const auto& [k, n] : L.t.knots) out.knots[k] += n;
    }
    return out;
}

std::string count_table_csv(const CountTable& t) {
    std::ostringstream os;
    os << "two_n,two_delta,count,planar_count\n";
    for (const auto& [k, r] : t.rows) os << k.first << ',' << k.second << ',' << r.count << ',' << r.planar << '\n';
    return os.str();
}

std::string knot_table_csv(const CountTable& t) {
    std::ostringstream os;
    os << "two_n,knots,planar_count\n";
    for (const auto& [k, n] : t.knots) os << k.first << ',' << k.second << ',' << n << '\n';
    return os.str();
}

}  // namespace momaps

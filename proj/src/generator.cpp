#include "momaps/generator.hpp"

namespace momaps {

namespace {

// jackets: 0 = (left,right), 1 = (left,straight), 2 = (right,straight)
constexpr int kJacketTypes[3][2] = {{kLeft, kRight}, {kLeft, kStraight}, {kRight, kStraight}};

inline int cap_type(int jacket, int t) {
    return kJacketTypes[jacket][0] == t ? kJacketTypes[jacket][1] : kJacketTypes[jacket][0];
}

// Walks the jacket boundary cycle through strand end (h0,t0) and reports
// whether (h1,t1) lies on it.
bool on_same_cycle(const std::vector<int>& pr, int jacket, int h0, int t0, int h1, int t1) {
    int h = h0, t = t0;
    while (true) {
        int p = pr[h];
        if (p >= 0) h = p;
        else t = cap_type(jacket, t);
        if (h == h1 && t == t1) return true;
        h = strand_internal(h, t);
        if (h == h0 && t == t0) return false;
        if (h == h1 && t == t1) return true;
    }
}

int count_jacket_cycles(const std::vector<int>& pr, int jacket) {
    const int n = static_cast<int>(pr.size());
    std::vector<char> seen(3 * static_cast<size_t>(n), 0);
    int cycles = 0;
    for (int h0 = 0; h0 < n; ++h0)
        for (int t0 : kJacketTypes[jacket]) {
            if (seen[3 * h0 + t0]) continue;
            ++cycles;
            int h = h0, t = t0;
            do {
                seen[3 * h + t] = 1;
                int p = pr[h];
                if (p >= 0) h = p;
                else t = cap_type(jacket, t);
                seen[3 * h + t] = 1;
                h = strand_internal(h, t);
            } while (!(h == h0 && t == t0));
        }
    return cycles;
}

}  // namespace

int partial_degree_bound(const MOGraph& partial) {
    const auto& pr = partial.pairing();
    int paired = 0;
    for (int h = 0; h < partial.half_edge_count(); ++h)
        if (pr[h] >= 0) ++paired;
    int faces = 0;
    for (int j = 0; j < 3; ++j) faces += count_jacket_cycles(pr, j);
    int c = 0;
    vertex_components(partial, &c);
    return 6 * c - 3 * partial.vertex_count() + 3 * (paired / 2) - faces;
}

RootedGenerator::RootedGenerator(GeneratorOptions opts) : opts_(opts) {}

void RootedGenerator::reset() {
    g_ = MOGraph(1);
    g_.set_root_dart(0);
    entry_.assign(1, 0);
    for (int& f : faces_) f = 1;
    paired_edges_ = 0;
    nodes_ = 0;
    task_counter_ = 0;
}

void RootedGenerator::run(const Visitor& visit) {
    split_depth_ = -1;
    target_task_ = -1;
    counting_ = false;
    visit_ = &visit;
    if (opts_.min_vertices == 0) {
        MOGraph cyc = make_cycle_graph(true);
        visit(cyc);
    }
    if (opts_.max_vertices >= 1) {
        reset();
        search(0, 0, 0);
    }
    visit_ = nullptr;
}

int RootedGenerator::task_count(int depth) {
    split_depth_ = depth;
    counting_ = true;
    Visitor none = [](const MOGraph&) {};
    visit_ = &none;
    if (opts_.max_vertices >= 1) {
        reset();
        search(0, 0, 0);
    }
    counting_ = false;
    visit_ = nullptr;
    return std::max(task_counter_, 1);
}

void RootedGenerator::run_task(int depth, int task, const Visitor& visit) {
    split_depth_ = depth;
    target_task_ = task;
    counting_ = false;
    visit_ = &visit;
    if (task == 0 && opts_.min_vertices == 0) {
        MOGraph cyc = make_cycle_graph(true);
        visit(cyc);
    }
    if (opts_.max_vertices >= 1) {
        reset();
        search(0, 0, 0);
    }
    visit_ = nullptr;
}

void RootedGenerator::emit() {
    if (g_.vertex_count() < opts_.min_vertices) return;
    if (opts_.max_two_delta >= 0) {
        int bound = 6 - 3 * g_.vertex_count() + 3 * paired_edges_ - faces_[0] - faces_[1] - faces_[2];
        if (bound > opts_.max_two_delta) return;
    }
    (*visit_)(g_);
}

int RootedGenerator::face_delta(int jacket, int a, int b) {
    // a and b are still unpaired: each closes its own two strands
    auto& pr = g_.pairing_mut();
    int t1 = kJacketTypes[jacket][0], t2 = kJacketTypes[jacket][1];
    int before = on_same_cycle(pr, jacket, a, t1, b, t1) ? 1 : 2;
    pr[a] = b;
    pr[b] = a;
    int after = on_same_cycle(pr, jacket, a, t1, a, t2) ? 1 : 2;
    pr[a] = pr[b] = MOGraph::kUnpaired;
    return after - before;
}

bool RootedGenerator::melon_between(int u, int w) const {
    if (u == w) return false;
    const auto& pr = g_.pairing();
    const int root_out = 0, root_in = pr[0];
    for (int c = 1; c <= 3; c += 2) {
        int match = 0;
        bool root_used = false;
        for (int i = 0; i < 4; ++i) {
            int a = he_index(u, i), b = he_index(w, (c - i) & 3);
            if (pr[a] != b) continue;
            ++match;
            if ((a == root_out && b == root_in) || (b == root_out && a == root_in)) root_used = true;
        }
        if (match == 4 || (match == 3 && !root_used)) return true;
    }
    return false;
}

bool RootedGenerator::try_pair(int a, int b, int v, int k, int depth) {
    int saved[3] = {faces_[0], faces_[1], faces_[2]};
    if (opts_.max_two_delta >= 0)
        for (int j = 0; j < 3; ++j) faces_[j] += face_delta(j, a, b);
    g_.connect(a, b);
    ++paired_edges_;
    bool ok = true;
    if (opts_.max_two_delta >= 0) {
        int bound = 6 - 3 * g_.vertex_count() + 3 * paired_edges_ - faces_[0] - faces_[1] - faces_[2];
        ok = bound <= opts_.max_two_delta;
    }
    if (ok && opts_.melon_free) ok = !melon_between(he_vertex(a), he_vertex(b));
    if (ok) search(v, k, depth + 1);
    g_.disconnect(a);
    --paired_edges_;
    for (int j = 0; j < 3; ++j) faces_[j] = saved[j];
    return ok;
}

void RootedGenerator::search(int v, int k, int depth) {
    const auto& pr = g_.pairing();
    int nv = g_.vertex_count();
    int h = -1;
    while (v < nv) {
        int cand = he_index(v, (entry_[v] + k) & 3);
        if (pr[cand] < 0) {
            h = cand;
            break;
        }
        if (++k == 4) {
            k = 0;
            ++v;
        }
    }
    if (h < 0) {
        if (split_depth_ >= 0 && depth <= split_depth_ && (counting_ || target_task_ != 0)) return;
        emit();
        return;
    }
    ++nodes_;
    if (depth == split_depth_) {
        int mine = task_counter_++;
        if (counting_ || mine != target_task_) return;
    }
    const int want_odd = he_out(h) ? 1 : 0;
    for (int w = 0; w < nv; ++w)
        for (int t = want_odd; t < 4; t += 2) {
            int b = he_index(w, t);
            if (b == h || g_.partner(b) >= 0) continue;
            try_pair(h, b, v, k, depth);
        }
    if (nv < opts_.max_vertices) {
        g_.add_vertices(1);
        entry_.push_back(want_odd);
        for (int& f : faces_) ++f;
        try_pair(h, he_index(nv, want_odd), v, k, depth);
        for (int& f : faces_) --f;
        entry_.pop_back();
        g_.pairing_mut().resize(4 * static_cast<size_t>(nv));
    }
}

}  // namespace momaps

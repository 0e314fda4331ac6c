#pragma once

#include <functional>
#include <vector>

#include "momaps/mo_graph.hpp"

namespace momaps {

struct GeneratorOptions {
    int max_vertices = 0;
    int min_vertices = 0;
    // prune prefixes whose degree lower bound exceeds this (negative: off)
    int max_two_delta = -1;
    // prune prefixes containing a melon (the root edge never belongs to one)
    bool melon_free = false;
};

// Lower bound on 2*delta of any completion of a partial pairing: the sum of
// the Euler genera of the three partial jackets, where an unpaired half-edge
// closes its two strands on each other.
int partial_degree_bound(const MOGraph& partial);

// Generates each connected rooted MO-graph exactly once, as the canonical
// breadth-first labeling with root dart (0,0). Every emitted graph equals its
// own canonical_form.
class RootedGenerator {
  public:
    using Visitor = std::function<void(const MOGraph&)>;

    explicit RootedGenerator(GeneratorOptions opts);

    void run(const Visitor& visit);

    // The search tree split at a fixed depth of pairing decisions; run_task
    // explores one subtree. Graphs completed above that depth go to task 0.
    int task_count(int depth);
    void run_task(int depth, int task, const Visitor& visit);

    long long nodes_visited() const { return nodes_; }

  private:
    struct Jackets {
        int f[3] = {0, 0, 0};
    };

    void reset();
    void search(int v, int k, int depth);
    void emit();
    bool try_pair(int a, int b, int v, int k, int depth);
    int face_delta(int jacket, int a, int b);
    bool melon_between(int u, int w) const;

    GeneratorOptions opts_;
    const Visitor* visit_ = nullptr;
    MOGraph g_;
    std::vector<int> entry_;
    int faces_[3] = {0, 0, 0};
    int paired_edges_ = 0;
    long long nodes_ = 0;

    int split_depth_ = -1;
    int target_task_ = -1;
    int task_counter_ = 0;
    bool counting_ = false;
};

// Strand ends and jacket strand types, shared with reduction code.
enum Strand : int { kLeft = 0, kRight = 1, kStraight = 2 };
inline int strand_internal(int h, int type) {
    if (type == kStraight) return h ^ 2;
    bool odd = h & 1;
    if (type == kLeft) return odd ? he_next(h) : he_prev(h);
    return odd ? he_prev(h) : he_next(h);
}

}  // namespace momaps

#pragma once

#include <span>
#include <string>
#include <vector>

#include "momaps/core.hpp"

namespace momaps {

// A multi-orientable 4-regular map. Vertex v owns half-edges 4v..4v+3 in
// clockwise order. The root, when present, is an outgoing dart; the fake
// root-vertex sits in the middle of the edge carrying it. A rooted graph
// whose root lies on a vertex-less cycle component uses root_on_cycle().
class MOGraph {
  public:
    static constexpr int kNoRoot = -1;
    static constexpr int kCycleRoot = -2;
    static constexpr int kUnpaired = -1;

    MOGraph() = default;
    explicit MOGraph(int vertices);

    int vertex_count() const { return static_cast<int>(pair_.size() / 4); }
    int half_edge_count() const { return static_cast<int>(pair_.size()); }
    int edge_count() const { return vertex_count() * 2; }

    int partner(int h) const { return pair_[h]; }
    void connect(int a, int b);
    void disconnect(int h);
    int add_vertices(int n);  // returns index of the first new vertex

    const std::vector<int>& pairing() const { return pair_; }
    std::vector<int>& pairing_mut() { return pair_; }

    int cycle_components() const { return cycles_; }
    void set_cycle_components(int k) { cycles_ = k; }

    bool rooted() const { return root_ != kNoRoot; }
    bool root_on_cycle() const { return root_ == kCycleRoot; }
    bool root_on_dart() const { return root_ >= 0; }
    int root_dart() const { return root_; }
    int root_raw() const { return root_; }
    void set_root_dart(int h) { root_ = h; }
    void set_root_cycle() { root_ = kCycleRoot; }
    void clear_root() { root_ = kNoRoot; }

    // Edge ids are indexed by the outgoing half-edge: id = out/2.
    int edge_of(int h) const { return (he_out(h) ? h : pair_[h]) >> 1; }
    bool is_root_edge(int h) const {
        return root_ >= 0 && (h == root_ || h == pair_[root_]);
    }

    bool operator==(const MOGraph& o) const = default;

  private:
    std::vector<int> pair_;
    int root_ = kNoRoot;
    int cycles_ = 0;
};

struct ValidationReport {
    std::vector<std::string> problems;
    bool ok() const { return problems.empty(); }
    std::string summary() const;
};

ValidationReport validate(const MOGraph& g);
// Involution, sign and root checks only (no face tracing).
ValidationReport validate_pairing(const MOGraph& g);
void require_valid(const MOGraph& g);

// Connected components of the vertex structure plus cycle components.
int component_count(const MOGraph& g);
std::vector<int> vertex_components(const MOGraph& g, int* count = nullptr);

MOGraph disjoint_union(const MOGraph& a, const MOGraph& b);

// The unrooted rotation map of one infinity graph etc.
MOGraph make_infinity_cw();
MOGraph make_infinity_ccw();
MOGraph make_cycle_graph(bool rooted);
MOGraph make_quadruple_edge();

// Deletes the marked vertices. For every deleted half-edge d, join[d] names
// the deleted half-edge through which a strand arriving at d leaves the
// deleted region (-1 when d is never reached from outside). Surviving
// dangling half-edges are reconnected along those paths; closed paths become
// cycle components. The root follows the edge it was on.
struct SpliceResult {
    MOGraph graph;
    std::vector<int> new_index;  // old vertex -> new vertex, -1 if deleted
};
SpliceResult splice(const MOGraph& g, std::span<const char> deleted, std::span<const int> join);

MOGraph remove_loop(const MOGraph& g, int loop_half_edge);

struct EdgeSite {
    int out_half_edge = -1;  // -1 selects the loop of a rooted cycle component
    bool after_root = false; // on the root edge: the half between root-vertex and head
};
std::vector<EdgeSite> edge_sites(const MOGraph& g);

}  // namespace momaps

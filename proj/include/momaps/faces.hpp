#pragma once

#include <map>
#include <vector>

#include "momaps/mo_graph.hpp"

namespace momaps {

enum class FaceType { left, right, straight };

// Left/right faces list their corners; corner c sits between half-edge c and
// its clockwise successor. Straight faces list the half-edge through which
// each vertex passage exits. Cycle components give one empty face per type.
struct Face {
    std::vector<int> half_edges;
    int length = 0;
    bool through_root = false;
};

struct FaceReport {
    std::vector<Face> left, right, straight;
    // per edge id: index of the face of each type containing it
    std::vector<int> left_of_edge, right_of_edge, straight_of_edge;

    int total() const { return static_cast<int>(left.size() + right.size() + straight.size()); }
    const std::vector<Face>& family(FaceType t) const;
};

FaceReport trace_faces(const MOGraph& g);

// Counting-only tracer with reusable buffers, for hot loops.
struct FaceCounts {
    int left = 0, right = 0, straight = 0;
    int total() const { return left + right + straight; }
};

class FaceCounter {
  public:
    FaceCounts count(const MOGraph& g);

  private:
    std::vector<unsigned> corner_, passage_;
    unsigned epoch_ = 0;
};

struct DegreeReport {
    int c = 0;
    int V = 0;
    int E = 0;
    int F = 0;
    int F_l = 0, F_r = 0, F_s = 0;
    int two_delta = 0;
    int g_lr = 0;
    int two_g_ls = 0, two_g_rs = 0;
    int lambda = 0;
    std::map<int, int> F_s_by_length;

    HalfInt delta() const { return HalfInt{two_delta}; }
    bool planar() const { return g_lr == 0; }
};

DegreeReport degree(const MOGraph& g);
DegreeReport degree_from_counts(int c, int V, int F_l, int F_r, int F_s);

struct KnotProfile {
    int V = 0;
    int F_s = 0;
    HalfInt delta;
};
KnotProfile knot_profile(const MOGraph& g);

}  // namespace momaps

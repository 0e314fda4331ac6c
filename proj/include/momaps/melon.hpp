#pragma once

#include <functional>
#include <vector>

#include "momaps/faces.hpp"
#include "momaps/mo_graph.hpp"

namespace momaps {

// Edges are named by their outgoing half-edge. (e1,e2) bound a left 2-face,
// (e2,e3) a right 2-face and (e1,e3) a straight 2-face. x is the remaining
// half-edge at u, y the remaining half-edge at v.
struct Melon {
    int u = -1, v = -1;
    int e[3] = {-1, -1, -1};
    int x = -1, y = -1;
};

std::vector<Melon> find_melons(const MOGraph& g);

// Slot-pattern test without face tracing; used in hot loops.
bool has_melon(const MOGraph& g);
bool melon_between(const MOGraph& g, int u, int v);

MOGraph remove_melon(const MOGraph& g, const Melon& m);
MOGraph insert_melon(const MOGraph& g, EdgeSite site);

// pick(n) chooses which of n available melons to remove next; defaults to 0.
MOGraph melon_free_core(const MOGraph& g, const std::function<size_t(size_t)>& pick = {});

}  // namespace momaps

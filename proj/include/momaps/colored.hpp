#pragma once

#include <array>
#include <optional>
#include <vector>

#include "momaps/mo_graph.hpp"

namespace momaps {

// Bipartite 4-colored graph: neighbour[b][c] is the white vertex joined to
// black vertex b by the edge of color c.
struct ColoredGraph {
    int white_count = 0;
    std::vector<std::array<int, 4>> neighbour;
    std::optional<int> root_black;  // black end of the marked color-0 edge

    int black_count() const { return static_cast<int>(neighbour.size()); }
};

void check_coloring(const ColoredGraph& cg);

struct ColoredFaces {
    int faces[4][4] = {};  // faces[i][j], i < j: bicolored cycles
    int total = 0;
    int components = 0;
};
ColoredFaces colored_faces(const ColoredGraph& cg);

// 2 * (D(D-1)/2 * k + c*D - F) with D = 3 and k black vertices.
int colored_two_delta(const ColoredGraph& cg);

// Colors 0..3 clockwise around black vertices and counterclockwise around
// white ones; even colors oriented from black to white.
MOGraph embed_colored(const ColoredGraph& cg);

}  // namespace momaps

#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "momaps/mo_graph.hpp"

namespace momaps {

// Breadth-first code from the root dart. Values are stored as 16-bit words.
struct CanonicalCode {
    std::string bytes;

    void push(int value);
    std::vector<int> words() const;
    std::string hex() const;
    auto operator<=>(const CanonicalCode&) const = default;
};

// Node kinds beyond standard vertices are used by scheme graphs; kind 0 is a
// standard vertex (rotation symmetric by 2), any other kind is a chain-vertex
// (symmetric under swapping its two sides, ports p <-> p^2).
struct PortGraphView {
    const std::vector<int>* pairing = nullptr;
    const std::vector<int>* kinds = nullptr;  // null means all standard
    int root = MOGraph::kNoRoot;
    int cycles = 0;

    int kind(int v) const { return kinds ? (*kinds)[v] : 0; }
};

// Rooted code; throws if the view is unrooted or not connected.
CanonicalCode canonical_code(const PortGraphView& g);
CanonicalCode canonical_code(const MOGraph& g);

// Rooted code starting from an arbitrary outgoing dart (ignores g's root).
CanonicalCode code_from_dart(const PortGraphView& g, int dart);

// Relabeling of vertices and ports induced by the BFS. new_port[h] gives the
// image of half-edge h.
struct CanonicalLabeling {
    std::vector<int> new_vertex;
    std::vector<int> new_port;
};
CanonicalLabeling canonical_labeling(const PortGraphView& g, int dart);

MOGraph canonical_form(const MOGraph& g);

// Minimum code over all root placements of a connected graph.
CanonicalCode unrooted_code(const MOGraph& g);

}  // namespace momaps

template <>
struct std::hash<momaps::CanonicalCode> {
    size_t operator()(const momaps::CanonicalCode& c) const noexcept {
        return std::hash<std::string>{}(c.bytes);
    }
};

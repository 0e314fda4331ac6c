#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "momaps/canonical.hpp"
#include "momaps/faces.hpp"
#include "momaps/mo_graph.hpp"

namespace momaps {

enum class DipoleType { L, R, S };
enum class ChainType { L = 1, R = 2, Se = 3, So = 4, B = 5 };

const char* to_string(DipoleType t);
const char* to_string(ChainType t);
ChainType chain_type_from_string(const std::string& s);
bool is_broken(ChainType t);

// Chain-vertex ports: 0 = side A +, 1 = side A -, 2 = side B +, 3 = side B -.
// Node kind 0 is a standard vertex, otherwise the int value of a ChainType.
struct SchemeGraph {
    MOGraph graph;
    std::vector<int> kinds;

    SchemeGraph() = default;
    explicit SchemeGraph(MOGraph g);

    int node_count() const { return graph.vertex_count(); }
    bool is_chain_vertex(int v) const { return kinds[v] != 0; }
    ChainType chain_type(int v) const { return static_cast<ChainType>(kinds[v]); }
    int standard_count() const;
    int chain_vertex_count() const;
    int add_node(int kind);
    PortGraphView view() const { return {&graph.pairing(), &kinds, graph.root_raw(), graph.cycle_components()}; }

    bool operator==(const SchemeGraph&) const = default;
};

CanonicalCode canonical_code(const SchemeGraph& s);
SchemeGraph canonical_form(const SchemeGraph& s);
ValidationReport validate(const SchemeGraph& s);

// A side lists its + half-edge first.
using Side = std::array<int, 2>;

struct Dipole {
    DipoleType type = DipoleType::L;
    int u = -1, v = -1;
    std::array<int, 2> face_edges{};  // outgoing half-edges of the two internal edges
    std::array<Side, 2> sides{};
};

// Dipoles among standard vertices; for a plain graph these are exactly the
// 2-faces on two distinct vertices avoiding the root edge.
std::vector<Dipole> find_dipoles(const SchemeGraph& s);
std::vector<Dipole> find_dipoles(const MOGraph& g);

// An element of a chain is a dipole or an existing chain-vertex.
struct Element {
    bool is_chain_vertex = false;
    int index = -1;  // into the dipole list, or the chain-vertex node
    std::array<Side, 2> sides{};
    std::vector<int> nodes;
};

struct ChainLink {
    int element = -1;
    int entry_side = 0;  // side facing side A of the chain
};

struct Chain {
    std::vector<ChainLink> links;  // ordered from side A to side B
    Side side_a{}, side_b{};
    ChainType type = ChainType::B;
    std::vector<DipoleType> dipole_types;  // expanded content, A to B
};

struct ChainAnalysis {
    std::vector<Dipole> dipoles;
    std::vector<Element> elements;
    std::vector<Chain> chains;        // maximal proper chains
    int closed_chains = 0;            // rejected closed chains
    bool vertex_disjoint = true;
    int linked_pairs = 0;             // number of links between elements
};

ChainAnalysis find_maximal_chains(const SchemeGraph& s);
ChainAnalysis find_maximal_chains(const MOGraph& g);

struct ChainSpec {
    ChainType type = ChainType::B;
    std::vector<DipoleType> dipoles;
};

ChainType classify_chain(const std::vector<DipoleType>& dipoles);
ChainSpec canonical_chain_spec(ChainType t);
void check_chain_spec(const ChainSpec& spec);

struct ExtractedScheme {
    SchemeGraph scheme;
    std::vector<ChainSpec> contents;  // per node; empty spec for standard vertices
    int closed_chains = 0;
    bool vertex_disjoint = true;
};

ExtractedScheme extract_scheme(const MOGraph& g);

SchemeGraph substitute_chain_vertex(const SchemeGraph& s, int cv, const ChainSpec& spec);
// Replaces every chain-vertex by the given contents (or canonical chains).
MOGraph substitute_all(const SchemeGraph& s, const std::vector<ChainSpec>* contents = nullptr);

// Strand routing through a chain-vertex of a given type, computed from its
// canonical chain: route[3*port + strand] = 3*port' + strand'.
struct ChainRouting {
    std::array<int, 12> route{};
    int internal_faces = 0;
};
ChainRouting chain_routing(const std::vector<DipoleType>& dipoles);
const ChainRouting& chain_routing(ChainType t);

struct SchemeDegree {
    DegreeReport substituted;  // degree of the canonical substitution
    int faces_through = 0;     // faces traced through chain-vertex routings
    int unbroken = 0, broken = 0;
    int two_delta_direct = 0;  // 6c + 3V - 2F + 4U + 6B
};
SchemeDegree scheme_degree(const SchemeGraph& s);
DegreeReport degree_with_chain_vertices(const SchemeGraph& s);

struct SchemeParams {
    int two_p = 0;  // standard (non-root) vertices
    int a = 0, b = 0, s_e = 0, s_o = 0;
    int two_delta = 0;
    int c() const { return a + b + s_e + s_o; }
    int s() const { return s_e + s_o; }
    bool operator==(const SchemeParams&) const = default;
};
SchemeParams scheme_params(const SchemeGraph& s);

// Number of dipoles plus chain-vertices.
int element_count(const SchemeGraph& s);

bool scheme_has_melon(const SchemeGraph& s);
bool scheme_has_adjacent_edge(const SchemeGraph& s);
bool is_melon_free_scheme(const SchemeGraph& s);
bool is_reduced_scheme(const SchemeGraph& s);

struct RemovalElement {
    bool is_chain_vertex = false;
    Dipole dipole;
    int chain_vertex = -1;
};

struct RemovalResult {
    bool separating = false;
    int two_delta_drop = 0;  // 2*(delta before - delta after)
    bool allowed = false;
    ChainType cv_type = ChainType::B;
};
RemovalResult removal_analysis(const SchemeGraph& s, const RemovalElement& e);

}  // namespace momaps

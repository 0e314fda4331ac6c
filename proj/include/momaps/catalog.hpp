#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "momaps/scheme.hpp"

namespace momaps {

struct CatalogEntry {
    SchemeGraph scheme;
    CanonicalCode code;
    SchemeParams params;
    int elements = 0;     // dipoles plus chain-vertices
    int first_seen = 0;   // smallest V of a melon-free graph with this scheme
    bool planar = false;  // of its canonical substitution
    std::map<int, long long> realizations;  // melon-free graphs by V
};

struct BoundViolation {
    CanonicalCode code;
    std::string what;
};

struct SchemeCatalog {
    int two_delta = 0;
    int max_vertices = 0;
    int last_growth = 0;  // largest V at which a new scheme appeared
    bool stabilized = false;
    long long graphs_scanned = 0;
    std::map<int, long long> melon_free_counts;  // graphs of this degree by V
    std::vector<CatalogEntry> entries;           // sorted by code
    std::vector<BoundViolation> violations;

    const CatalogEntry* find(const CanonicalCode& c) const;
    int max_broken() const;
};

// Stabilized means no scheme appeared in the top band of two sizes.
SchemeCatalog build_scheme_catalog(int two_delta, int max_vertices);

// Element bound 7*delta - 1 and broken bound 4*delta - 1, in doubled form.
bool within_element_bound(int elements, int two_delta);
bool within_broken_bound(int broken, int two_delta);

long long catalan(int n);

// Rooted plane binary trees with 2*delta - 1 inner nodes decorated as in the
// dominant-scheme construction, in canonical form and generation order.
std::vector<SchemeGraph> gen_dominant_schemes(int two_delta);

}  // namespace momaps

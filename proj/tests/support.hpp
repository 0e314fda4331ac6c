#pragma once

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include "momaps/canonical.hpp"
#include "momaps/faces.hpp"
#include "momaps/generator.hpp"
#include "momaps/mo_graph.hpp"

namespace testsupport {

using namespace momaps;

inline std::vector<MOGraph> rooted_graphs(int max_v, int min_v = 0, int max_two_delta = -1, bool melon_free = false) {
    GeneratorOptions o;
    o.max_vertices = max_v;
    o.min_vertices = min_v;
    o.max_two_delta = max_two_delta;
    o.melon_free = melon_free;
    RootedGenerator gen(o);
    std::vector<MOGraph> out;
    gen.run([&](const MOGraph& g) { out.push_back(g); });
    return out;
}

// Every pairing of the outgoing slots of V labelled vertices to the
// incoming ones, rooted at (0,0); only connected ones are kept.
template <class F>
void for_each_labelled(int V, F&& f) {
    std::vector<int> perm(2 * V);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        MOGraph g(V);
        for (int i = 0; i < 2 * V; ++i) g.connect(2 * i, 2 * perm[i] + 1);
        g.set_root_dart(0);
        if (component_count(g) == 1) f(g);
    } while (std::next_permutation(perm.begin(), perm.end()));
}

// Distinct root-isomorphism classes with V vertices by brute force.
inline std::set<CanonicalCode> brute_force_codes(int V) {
    std::set<CanonicalCode> codes;
    for_each_labelled(V, [&](const MOGraph& g) { codes.insert(canonical_code(g)); });
    return codes;
}

// Melons straight from the definition: unordered triples of parallel edges
// none of which is the root edge, admitting an order with the three 2-faces.
inline int melon_oracle(const MOGraph& g) {
    FaceReport fr = trace_faces(g);
    std::vector<std::pair<int, int>> ends;  // per edge id
    std::vector<int> ids;
    for (int h = 0; h < g.half_edge_count(); h += 2) {
        ids.push_back(h >> 1);
        ends.emplace_back(he_vertex(h), he_vertex(g.partner(h)));
    }
    auto two_face = [](const std::vector<int>& of, const std::vector<Face>& fam, int a, int b) {
        return of[a] == of[b] && fam[of[a]].length == 2;
    };
    int count = 0;
    const int n = static_cast<int>(ids.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                int t[3] = {ids[i], ids[j], ids[k]};
                bool skip = false;
                std::set<int> vs;
                for (int e : t) {
                    if (g.is_root_edge(2 * e)) skip = true;
                    vs.insert(ends[e].first);
                    vs.insert(ends[e].second);
                }
                if (skip || vs.size() != 2) continue;
                std::sort(t, t + 3);
                bool ok = false;
                do {
                    ok = ok || (two_face(fr.left_of_edge, fr.left, t[0], t[1]) &&
                                two_face(fr.right_of_edge, fr.right, t[1], t[2]) &&
                                two_face(fr.straight_of_edge, fr.straight, t[0], t[2]));
                } while (std::next_permutation(t, t + 3));
                if (ok) ++count;
            }
    return count;
}

// Dipoles from the definition: 2-faces on two distinct vertices whose walk
// avoids the root-vertex.
inline int dipole_oracle(const MOGraph& g, int* by_type = nullptr) {
    FaceReport fr = trace_faces(g);
    int count = 0;
    const std::vector<Face>* fams[3] = {&fr.left, &fr.right, &fr.straight};
    for (int t = 0; t < 3; ++t)
        for (const Face& f : *fams[t]) {
            if (f.length != 2 || f.through_root) continue;
            std::set<int> vs;
            for (int h : f.half_edges) vs.insert(he_vertex(h));
            if (vs.size() != 2) continue;
            ++count;
            if (by_type) ++by_type[t];
        }
    return count;
}

}  // namespace testsupport

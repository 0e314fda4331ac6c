#include "momaps/melon.hpp"

#include <algorithm>
#include <array>
#include <set>

namespace momaps {

std::vector<Melon> find_melons(const MOGraph& g) {
    std::vector<Melon> out;
    const int nv = g.vertex_count();
    if (nv < 2) return out;
    FaceReport fr = trace_faces(g);
    std::set<std::array<int, 3>> found;
    for (int u = 0; u < nv; ++u) {
        for (int v = u + 1; v < nv; ++v) {
            std::vector<int> between;  // outgoing half-edges of u-v edges, root edge excluded
            for (int s = 0; s < 4; ++s) {
                int h = he_index(u, s);
                if (he_vertex(g.partner(h)) != v || g.is_root_edge(h)) continue;
                between.push_back(he_out(h) ? h : g.partner(h));
            }
            if (between.size() < 3) continue;
            auto shares = [&](const std::vector<int>& of_edge, const std::vector<Face>& fam, int a, int b) {
                int fa = of_edge[a >> 1];
                return fa == of_edge[b >> 1] && fam[fa].length == 2;
            };
            const int n = static_cast<int>(between.size());
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    for (int k = 0; k < n; ++k) {
                        if (i == j || j == k || i == k) continue;
                        int e1 = between[i], e2 = between[j], e3 = between[k];
                        if (!shares(fr.left_of_edge, fr.left, e1, e2)) continue;
                        if (!shares(fr.right_of_edge, fr.right, e2, e3)) continue;
                        if (!shares(fr.straight_of_edge, fr.straight, e1, e3)) continue;
                        std::array<int, 3> key{e1, e2, e3};
                        std::sort(key.begin(), key.end());
                        if (!found.insert(key).second) continue;
                        Melon m;
                        m.u = u;
                        m.v = v;
                        m.e[0] = e1;
                        m.e[1] = e2;
                        m.e[2] = e3;
                        for (int s = 0; s < 4; ++s) {
                            int h = he_index(u, s);
                            int o = he_out(h) ? h : g.partner(h);
                            if (o != e1 && o != e2 && o != e3) m.x = h;
                            int w = he_index(v, s);
                            int ow = he_out(w) ? w : g.partner(w);
                            if (ow != e1 && ow != e2 && ow != e3) m.y = w;
                        }
                        out.push_back(m);
                    }
        }
    }
    return out;
}

bool melon_between(const MOGraph& g, int u, int v) {
    if (u == v) return false;
    // three edges (u,i)-(v,c-i), c odd, form the left, right and straight 2-faces
    for (int c = 1; c <= 3; c += 2) {
        int match = 0;
        bool root_used = false;
        for (int i = 0; i < 4; ++i) {
            int a = he_index(u, i);
            if (g.partner(a) != he_index(v, (c - i) & 3)) continue;
            ++match;
            if (g.is_root_edge(a)) root_used = true;
        }
        if (match == 4 || (match == 3 && !root_used)) return true;
    }
    return false;
}

bool has_melon(const MOGraph& g) {
    const int nv = g.vertex_count();
    for (int u = 0; u < nv; ++u)
        for (int s = 0; s < 4; ++s) {
            int x = he_vertex(g.partner(he_index(u, s)));
            if (x > u && melon_between(g, u, x)) return true;
        }
    return false;
}

MOGraph remove_melon(const MOGraph& g, const Melon& m) {
    bool ok = false;
    for (const Melon& c : find_melons(g))
        if (c.u == m.u && c.v == m.v && c.x == m.x && c.y == m.y) ok = true;
    if (!ok) throw NotAMelon("not a melon of this graph");
    std::vector<char> del(g.vertex_count(), 0);
    del[m.u] = del[m.v] = 1;
    std::vector<int> join(g.half_edge_count(), -1);
    join[m.x] = m.y;
    join[m.y] = m.x;
    return splice(g, del, join).graph;
}

MOGraph insert_melon(const MOGraph& g, EdgeSite site) {
    MOGraph out = g;
    int u = out.add_vertices(2), v = u + 1;
    out.connect(he_index(u, 0), he_index(v, 1));
    out.connect(he_index(u, 1), he_index(v, 0));
    out.connect(he_index(u, 2), he_index(v, 3));
    int x = he_index(u, 3), y = he_index(v, 2);
    if (site.out_half_edge < 0) {
        if (!g.root_on_cycle()) throw Error("insert_melon: no rooted cycle component");
        out.set_cycle_components(g.cycle_components() - 1);
        out.connect(y, x);
        out.set_root_dart(y);
        return out;
    }
    int a = site.out_half_edge;
    if (!he_out(a) || a >= g.half_edge_count()) throw Error("insert_melon: site must be an outgoing half-edge");
    int b = g.partner(a);
    out.connect(a, x);
    out.connect(y, b);
    if (g.root_dart() == a && !site.after_root) out.set_root_dart(y);
    return out;
}

MOGraph melon_free_core(const MOGraph& g, const std::function<size_t(size_t)>& pick) {
    MOGraph cur = g;
    while (true) {
        if (!has_melon(cur)) break;
        auto ms = find_melons(cur);
        if (ms.empty()) break;
        size_t i = pick ? pick(ms.size()) : 0;
        cur = remove_melon(cur, ms[i]);
    }
    return cur;
}

}  // namespace momaps

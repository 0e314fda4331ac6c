#include "momaps/mo_graph.hpp"

#include <sstream>

#include "momaps/faces.hpp"

namespace momaps {

std::string HalfInt::str() const {
    if (twice % 2 == 0) return std::to_string(twice / 2);
    return std::to_string(twice) + "/2";
}

std::ostream& operator<<(std::ostream& os, HalfInt h) { return os << h.str(); }

MOGraph::MOGraph(int vertices) : pair_(static_cast<size_t>(4 * vertices), kUnpaired) {}

void MOGraph::connect(int a, int b) {
    pair_[a] = b;
    pair_[b] = a;
}

void MOGraph::disconnect(int h) {
    int p = pair_[h];
    pair_[h] = kUnpaired;
    if (p >= 0) pair_[p] = kUnpaired;
}

int MOGraph::add_vertices(int n) {
    int first = vertex_count();
    pair_.resize(pair_.size() + 4 * static_cast<size_t>(n), kUnpaired);
    return first;
}

std::string ValidationReport::summary() const {
    std::ostringstream os;
    for (size_t i = 0; i < problems.size(); ++i) {
        if (i) os << "; ";
        os << problems[i];
    }
    return os.str();
}

ValidationReport validate_pairing(const MOGraph& g) {
    ValidationReport rep;
    const int n = g.half_edge_count();
    for (int h = 0; h < n; ++h) {
        int p = g.partner(h);
        std::string where = "half-edge [" + std::to_string(he_vertex(h)) + "," +
                            std::to_string(he_slot(h)) + "]";
        if (p < 0 || p >= n) {
            rep.problems.push_back(where + " is unpaired");
            continue;
        }
        if (p == h) {
            rep.problems.push_back(where + " is paired with itself");
            continue;
        }
        if (g.partner(p) != h) {
            rep.problems.push_back(where + ": pairing is not an involution");
            continue;
        }
        if (h < p && he_out(h) == he_out(p)) rep.problems.push_back(where + ": edge with equal signs");
    }
    if (g.cycle_components() < 0) rep.problems.push_back("negative cycle component count");
    if (g.root_on_dart()) {
        if (g.root_dart() >= n)
            rep.problems.push_back("root dart out of range");
        else if (!he_out(g.root_dart()))
            rep.problems.push_back("root dart is not an outgoing half-edge");
    } else if (g.root_on_cycle() && g.cycle_components() < 1) {
        rep.problems.push_back("root on a cycle component but there is none");
    } else if (g.root_raw() < MOGraph::kCycleRoot) {
        rep.problems.push_back("bad root marker");
    }
    return rep;
}

ValidationReport validate(const MOGraph& g) {
    ValidationReport rep = validate_pairing(g);
    if (rep.ok()) {
        FaceReport fr = trace_faces(g);
        for (const Face& f : fr.straight)
            if (f.length % 2 != 0) {
                rep.problems.push_back("straight face of odd length");
                break;
            }
    }
    return rep;
}

void require_valid(const MOGraph& g) {
    auto rep = validate(g);
    if (!rep.ok()) throw ValidationError(rep.summary());
}

std::vector<int> vertex_components(const MOGraph& g, int* count) {
    const int nv = g.vertex_count();
    std::vector<int> comp(nv, -1);
    std::vector<int> stack;
    int c = 0;
    for (int s = 0; s < nv; ++s) {
        if (comp[s] >= 0) continue;
        comp[s] = c;
        stack.push_back(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int k = 0; k < 4; ++k) {
                int p = g.partner(he_index(v, k));
                if (p < 0) continue;
                int w = he_vertex(p);
                if (comp[w] < 0) {
                    comp[w] = c;
                    stack.push_back(w);
                }
            }
        }
        ++c;
    }
    if (count) *count = c;
    return comp;
}

int component_count(const MOGraph& g) {
    int c = 0;
    vertex_components(g, &c);
    return c + g.cycle_components();
}

MOGraph disjoint_union(const MOGraph& a, const MOGraph& b) {
    MOGraph out = a;
    int off = out.add_vertices(b.vertex_count()) * 4;
    for (int h = 0; h < b.half_edge_count(); ++h)
        if (b.partner(h) >= 0) out.pairing_mut()[off + h] = b.partner(h) + off;
    out.set_cycle_components(a.cycle_components() + b.cycle_components());
    if (!a.rooted() && b.rooted()) {
        if (b.root_on_cycle())
            out.set_root_cycle();
        else
            out.set_root_dart(b.root_dart() + off);
    }
    return out;
}

MOGraph make_infinity_cw() {
    MOGraph g(1);
    g.connect(0, 1);
    g.connect(2, 3);
    return g;
}

MOGraph make_infinity_ccw() {
    MOGraph g(1);
    g.connect(0, 3);
    g.connect(2, 1);
    return g;
}

MOGraph make_cycle_graph(bool rooted) {
    MOGraph g;
    g.set_cycle_components(1);
    if (rooted) g.set_root_cycle();
    return g;
}

MOGraph make_quadruple_edge() {
    MOGraph g(2);
    for (int i = 0; i < 4; ++i) g.connect(he_index(0, i), he_index(1, (5 - i) & 3));
    return g;
}

SpliceResult splice(const MOGraph& g, std::span<const char> deleted, std::span<const int> join) {
    const int nv = g.vertex_count();
    SpliceResult res;
    res.new_index.assign(nv, -1);
    int kept = 0;
    for (int v = 0; v < nv; ++v)
        if (!deleted[v]) res.new_index[v] = kept++;

    MOGraph& out = res.graph;
    out = MOGraph(kept);
    out.set_cycle_components(g.cycle_components());
    if (g.root_on_cycle()) out.set_root_cycle();

    auto is_del = [&](int h) { return deleted[he_vertex(h)] != 0; };
    auto remap = [&](int h) { return he_index(res.new_index[he_vertex(h)], he_slot(h)); };
    const int rd = g.root_dart();
    const int rp = rd >= 0 ? g.partner(rd) : -1;
    auto root_pair = [&](int a, int b) { return rd >= 0 && ((a == rd && b == rp) || (a == rp && b == rd)); };

    std::vector<char> seen(g.half_edge_count(), 0);
    for (int h = 0; h < g.half_edge_count(); ++h) {
        if (is_del(h) || seen[h]) continue;
        int p = g.partner(h);
        if (!is_del(p)) {
            if (h < p) {
                out.connect(remap(h), remap(p));
                if (root_pair(h, p)) out.set_root_dart(remap(he_out(h) ? h : p));
            }
            continue;
        }
        bool carries_root = root_pair(h, p);
        int cur = p;
        int guard = 0;
        while (true) {
            int y = join[cur];
            if (y < 0) throw Error("splice: dangling path through deleted region");
            seen[cur] = seen[y] = 1;
            int z = g.partner(y);
            carries_root = carries_root || root_pair(y, z);
            if (!is_del(z)) {
                seen[h] = seen[z] = 1;
                if (he_out(h) == he_out(z)) throw Error("splice: reconnection with equal signs");
                out.connect(remap(h), remap(z));
                if (carries_root) out.set_root_dart(remap(he_out(h) ? h : z));
                break;
            }
            cur = z;
            if (++guard > g.half_edge_count()) throw Error("splice: path does not terminate");
        }
    }
    // closed paths entirely inside the deleted region
    for (int d = 0; d < g.half_edge_count(); ++d) {
        if (!is_del(d) || seen[d] || join[d] < 0) continue;
        bool carries_root = false;
        int cur = d;
        int guard = 0;
        do {
            int y = join[cur];
            seen[cur] = seen[y] = 1;
            int z = g.partner(y);
            carries_root = carries_root || root_pair(y, z);
            cur = z;
            if (++guard > g.half_edge_count()) throw Error("splice: cycle does not close");
        } while (cur != d);
        out.set_cycle_components(out.cycle_components() + 1);
        if (carries_root) out.set_root_cycle();
    }
    return res;
}

MOGraph remove_loop(const MOGraph& g, int loop_half_edge) {
    int h = loop_half_edge;
    if (h < 0 || h >= g.half_edge_count()) throw NotALoop("half-edge out of range");
    int p = g.partner(h);
    if (he_vertex(p) != he_vertex(h)) throw NotALoop("edge joins two distinct vertices");
    if (g.is_root_edge(h)) throw NotALoop("the root edge cannot be removed as a loop");
    int v = he_vertex(h);
    std::vector<char> del(g.vertex_count(), 0);
    del[v] = 1;
    std::vector<int> join(g.half_edge_count(), -1);
    int rest[2], k = 0;
    for (int s = 0; s < 4; ++s) {
        int x = he_index(v, s);
        if (x != h && x != p) rest[k++] = x;
    }
    join[rest[0]] = rest[1];
    join[rest[1]] = rest[0];
    return splice(g, del, join).graph;
}

std::vector<EdgeSite> edge_sites(const MOGraph& g) {
    std::vector<EdgeSite> sites;
    if (g.root_on_cycle()) sites.push_back({-1, false});
    for (int h = 0; h < g.half_edge_count(); h += 2) {
        sites.push_back({h, false});
        if (h == g.root_dart()) sites.push_back({h, true});
    }
    return sites;
}

}  // namespace momaps

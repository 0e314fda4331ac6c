#include "momaps/scheme.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "momaps/generator.hpp"
#include "momaps/melon.hpp"

namespace momaps {

const char* to_string(DipoleType t) {
    switch (t) {
        case DipoleType::L: return "L";
        case DipoleType::R: return "R";
        default: return "S";
    }
}

const char* to_string(ChainType t) {
    switch (t) {
        case ChainType::L: return "L";
        case ChainType::R: return "R";
        case ChainType::Se: return "Se";
        case ChainType::So: return "So";
        default: return "B";
    }
}

ChainType chain_type_from_string(const std::string& s) {
    if (s == "L") return ChainType::L;
    if (s == "R") return ChainType::R;
    if (s == "Se") return ChainType::Se;
    if (s == "So") return ChainType::So;
    if (s == "B") return ChainType::B;
    throw ParseError("unknown chain-vertex type '" + s + "'");
}

bool is_broken(ChainType t) { return t == ChainType::B; }

SchemeGraph::SchemeGraph(MOGraph g) : graph(std::move(g)), kinds(graph.vertex_count(), 0) {}

int SchemeGraph::standard_count() const {
    return static_cast<int>(std::count(kinds.begin(), kinds.end(), 0));
}

int SchemeGraph::chain_vertex_count() const { return node_count() - standard_count(); }

int SchemeGraph::add_node(int kind) {
    int v = graph.add_vertices(1);
    kinds.push_back(kind);
    return v;
}

CanonicalCode canonical_code(const SchemeGraph& s) { return canonical_code(s.view()); }

SchemeGraph canonical_form(const SchemeGraph& s) {
    if (!s.graph.root_on_dart()) return s;
    CanonicalLabeling lab = canonical_labeling(s.view(), s.graph.root_dart());
    SchemeGraph out;
    out.graph = MOGraph(s.node_count());
    out.kinds.assign(s.node_count(), 0);
    for (int v = 0; v < s.node_count(); ++v) {
        if (lab.new_vertex[v] < 0) throw Error("canonical_form: scheme is not connected");
        out.kinds[lab.new_vertex[v]] = s.kinds[v];
    }
    for (int h = 0; h < s.graph.half_edge_count(); ++h)
        out.graph.pairing_mut()[lab.new_port[h]] = lab.new_port[s.graph.partner(h)];
    out.graph.set_root_dart(lab.new_port[s.graph.root_dart()]);
    out.graph.set_cycle_components(s.graph.cycle_components());
    return out;
}

ValidationReport validate(const SchemeGraph& s) {
    ValidationReport rep = validate_pairing(s.graph);
    if (static_cast<int>(s.kinds.size()) != s.node_count()) rep.problems.push_back("kind list size mismatch");
    for (int k : s.kinds)
        if (k < 0 || k > 5) rep.problems.push_back("unknown node kind");
    return rep;
}

// ---------------------------------------------------------------- dipoles

namespace {

Side ordered_side(int a, int b) { return he_out(a) ? Side{a, b} : Side{b, a}; }

void order_sides(Dipole& d) {
    auto key = [](const Side& s) { return std::min(s[0], s[1]); };
    if (key(d.sides[1]) < key(d.sides[0])) std::swap(d.sides[0], d.sides[1]);
}

}  // namespace

std::vector<Dipole> find_dipoles(const SchemeGraph& s) {
    const MOGraph& g = s.graph;
    std::vector<Dipole> out;
    const int nv = s.node_count();
    auto standard = [&](int v) { return s.kinds[v] == 0; };
    for (int u = 0; u < nv; ++u) {
        if (!standard(u)) continue;
        // left and right 2-faces through corner c at u
        for (int slot = 0; slot < 4; ++slot) {
            int c = he_index(u, slot);
            int n1 = g.partner(he_next(c));
            int v = he_vertex(n1);
            if (v == u || !standard(v) || c > n1) continue;
            if (g.partner(he_next(n1)) != c) continue;
            if (g.is_root_edge(he_next(c)) || g.is_root_edge(he_next(n1))) continue;
            Dipole d;
            d.type = he_out(c) ? DipoleType::R : DipoleType::L;
            d.u = u;
            d.v = v;
            d.face_edges = {g.edge_of(he_next(c)) * 2, g.edge_of(he_next(n1)) * 2};
            d.sides[0] = ordered_side(he_rotate(c, 3), he_rotate(n1, 2));
            d.sides[1] = ordered_side(he_rotate(c, 2), he_rotate(n1, 3));
            order_sides(d);
            out.push_back(d);
        }
        // straight 2-face through the outgoing passage of u
        int x = he_index(u, 0);
        int p = g.partner(x);
        int v = he_vertex(p);
        if (v == u || !standard(v)) continue;
        if (g.partner(he_opposite(p)) != he_opposite(x)) continue;
        if (g.is_root_edge(x) || g.is_root_edge(he_opposite(x))) continue;
        Dipole d;
        d.type = DipoleType::S;
        d.u = u;
        d.v = v;
        d.face_edges = {x, he_opposite(x)};
        d.sides[0] = Side{he_rotate(p, 3), he_index(u, 1)};
        d.sides[1] = Side{he_rotate(p, 1), he_index(u, 3)};
        order_sides(d);
        out.push_back(d);
    }
    return out;
}

std::vector<Dipole> find_dipoles(const MOGraph& g) { return find_dipoles(SchemeGraph(g)); }

// ---------------------------------------------------------------- chains

ChainType classify_chain(const std::vector<DipoleType>& dipoles) {
    bool all_l = true, all_r = true, all_s = true;
    for (DipoleType t : dipoles) {
        all_l = all_l && t == DipoleType::L;
        all_r = all_r && t == DipoleType::R;
        all_s = all_s && t == DipoleType::S;
    }
    if (all_l) return ChainType::L;
    if (all_r) return ChainType::R;
    if (all_s) return dipoles.size() % 2 == 0 ? ChainType::Se : ChainType::So;
    return ChainType::B;
}

ChainSpec canonical_chain_spec(ChainType t) {
    using D = DipoleType;
    switch (t) {
        case ChainType::L: return {t, {D::L, D::L}};
        case ChainType::R: return {t, {D::R, D::R}};
        case ChainType::Se: return {t, {D::S, D::S}};
        case ChainType::So: return {t, {D::S, D::S, D::S}};
        default: return {t, {D::L, D::R}};
    }
}

void check_chain_spec(const ChainSpec& spec) {
    if (spec.dipoles.size() < 2) throw InconsistentSubstitution("a chain needs at least 2 dipoles");
    if (classify_chain(spec.dipoles) != spec.type)
        throw InconsistentSubstitution(std::string("chain content does not match type ") + to_string(spec.type));
}

ChainAnalysis find_maximal_chains(const SchemeGraph& s) {
    const MOGraph& g = s.graph;
    ChainAnalysis an;
    an.dipoles = find_dipoles(s);
    for (size_t i = 0; i < an.dipoles.size(); ++i) {
        const Dipole& d = an.dipoles[i];
        an.elements.push_back({false, static_cast<int>(i), d.sides, {d.u, d.v}});
    }
    for (int v = 0; v < s.node_count(); ++v)
        if (s.is_chain_vertex(v))
            an.elements.push_back({true, v,
                                   {Side{he_index(v, 0), he_index(v, 1)}, Side{he_index(v, 2), he_index(v, 3)}},
                                   {v}});

    const int ne = static_cast<int>(an.elements.size());
    std::multimap<int, std::pair<int, int>> owner;  // + half-edge of a side -> (element, side)
    for (int e = 0; e < ne; ++e)
        for (int k = 0; k < 2; ++k) owner.insert({an.elements[e].sides[k][0], {e, k}});

    // link[e][k] = element*2 + side on the other end, or -1
    std::vector<std::array<int, 2>> link(ne, {-1, -1});
    for (int e = 0; e < ne; ++e)
        for (int k = 0; k < 2; ++k) {
            const Side& sd = an.elements[e].sides[k];
            if (g.is_root_edge(sd[0]) || g.is_root_edge(sd[1])) continue;
            int pp = g.partner(sd[0]), pm = g.partner(sd[1]);
            auto range = owner.equal_range(pm);
            for (auto it = range.first; it != range.second; ++it) {
                auto [e2, k2] = it->second;
                if (e2 == e && k2 == k) continue;
                if (an.elements[e2].sides[k2][1] != pp) continue;
                link[e][k] = 2 * e2 + k2;
                break;
            }
        }
    for (int e = 0; e < ne; ++e)
        for (int k = 0; k < 2; ++k)
            if (link[e][k] >= 0 && 2 * e + k < link[e][k]) ++an.linked_pairs;

    std::vector<char> used(ne, 0);
    auto element_types = [&](int e, std::vector<DipoleType>& out) {
        const Element& el = an.elements[e];
        if (!el.is_chain_vertex) {
            out.push_back(an.dipoles[el.index].type);
            return;
        }
        for (DipoleType t : canonical_chain_spec(s.chain_type(el.index)).dipoles) out.push_back(t);
    };
    auto free_side_key = [&](int e) {
        int best = 1 << 30;
        for (int k = 0; k < 2; ++k)
            if (link[e][k] < 0) best = std::min({best, an.elements[e].sides[k][0], an.elements[e].sides[k][1]});
        return best;
    };

    for (int start = 0; start < ne; ++start) {
        if (used[start]) continue;
        bool free0 = link[start][0] < 0, free1 = link[start][1] < 0;
        if (!free0 && !free1) continue;  // interior element or part of a closed chain
        if (free0 && free1) {
            used[start] = 1;
            continue;
        }
        // entry_side faces side A of the chain
        std::vector<ChainLink> path;
        int e = start, in = free0 ? 0 : 1;
        while (true) {
            path.push_back({e, in});
            used[e] = 1;
            int nxt = link[e][1 - in];
            if (nxt < 0) break;
            e = nxt / 2;
            in = nxt % 2;
            if (path.size() > static_cast<size_t>(ne)) throw Error("chain walk does not terminate");
        }
        if (free_side_key(path.back().element) < free_side_key(start)) {
            std::reverse(path.begin(), path.end());
            for (ChainLink& l : path) l.entry_side = 1 - l.entry_side;
        }
        if (path.size() < 2) continue;
        Chain ch;
        ch.links = path;
        ch.side_a = an.elements[path.front().element].sides[path.front().entry_side];
        ch.side_b = an.elements[path.back().element].sides[1 - path.back().entry_side];
        for (const ChainLink& l : path) element_types(l.element, ch.dipole_types);
        ch.type = classify_chain(ch.dipole_types);
        an.chains.push_back(std::move(ch));
    }
    for (int e = 0; e < ne; ++e)
        if (!used[e]) {
            // only closed chains remain; consume the whole cycle
            ++an.closed_chains;
            int cur = e, entry = -1;
            while (!used[cur]) {
                used[cur] = 1;
                int exit = entry < 0 ? 1 : 1 - entry;
                int nxt = link[cur][exit];
                cur = nxt / 2;
                entry = nxt % 2;
            }
        }

    std::vector<int> owner_chain(s.node_count(), -1);
    for (size_t c = 0; c < an.chains.size(); ++c)
        for (const ChainLink& l : an.chains[c].links)
            for (int v : an.elements[l.element].nodes) {
                if (owner_chain[v] >= 0 && owner_chain[v] != static_cast<int>(c)) an.vertex_disjoint = false;
                owner_chain[v] = static_cast<int>(c);
            }
    return an;
}

ChainAnalysis find_maximal_chains(const MOGraph& g) { return find_maximal_chains(SchemeGraph(g)); }

// ---------------------------------------------------------------- gadgets

namespace {

struct Gadget {
    MOGraph graph;
    std::array<int, 4> ports{};  // A+, A-, B+, B-
};

Gadget build_chain(const std::vector<DipoleType>& seq) {
    Gadget gd;
    const int k = static_cast<int>(seq.size());
    gd.graph = MOGraph(2 * k);
    MOGraph& g = gd.graph;
    std::vector<std::array<Side, 2>> sides(k);
    for (int i = 0; i < k; ++i) {
        int u = 2 * i, v = 2 * i + 1;
        auto H = [](int w, int s) { return he_index(w, s); };
        switch (seq[i]) {
            case DipoleType::L:
                g.connect(H(u, 2), H(v, 1));
                g.connect(H(v, 2), H(u, 1));
                sides[i] = {Side{H(u, 0), H(v, 3)}, Side{H(v, 0), H(u, 3)}};
                break;
            case DipoleType::R:
                g.connect(H(u, 1), H(v, 0));
                g.connect(H(v, 1), H(u, 0));
                sides[i] = {Side{H(v, 2), H(u, 3)}, Side{H(u, 2), H(v, 3)}};
                break;
            case DipoleType::S:
                g.connect(H(u, 0), H(v, 3));
                g.connect(H(u, 2), H(v, 1));
                sides[i] = {Side{H(v, 0), H(u, 3)}, Side{H(v, 2), H(u, 1)}};
                break;
        }
    }
    for (int i = 0; i + 1 < k; ++i) {
        g.connect(sides[i][1][0], sides[i + 1][0][1]);
        g.connect(sides[i][1][1], sides[i + 1][0][0]);
    }
    gd.ports = {sides[0][0][0], sides[0][0][1], sides[k - 1][1][0], sides[k - 1][1][1]};
    return gd;
}

// Expands the chain-vertices v with non-empty specs[v]; other nodes are kept.
SchemeGraph expand(const SchemeGraph& s, const std::vector<ChainSpec>& specs) {
    const int nv = s.node_count();
    std::vector<int> new_index(nv, -1);
    SchemeGraph out;
    int kept = 0;
    for (int v = 0; v < nv; ++v)
        if (!s.is_chain_vertex(v) || specs[v].dipoles.empty()) {
            new_index[v] = kept++;
            out.kinds.push_back(s.kinds[v]);
        }
    out.graph = MOGraph(kept);
    std::vector<int> image(s.graph.half_edge_count(), -1);
    for (int h = 0; h < s.graph.half_edge_count(); ++h)
        if (new_index[he_vertex(h)] >= 0) image[h] = he_index(new_index[he_vertex(h)], he_slot(h));
    for (int v = 0; v < nv; ++v) {
        if (new_index[v] >= 0) continue;
        check_chain_spec(specs[v]);
        if (specs[v].type != s.chain_type(v))
            throw InconsistentSubstitution(std::string("chain-vertex of type ") + to_string(s.chain_type(v)) +
                                           " cannot receive a chain of type " + to_string(specs[v].type));
        Gadget gd = build_chain(specs[v].dipoles);
        int base = out.graph.add_vertices(gd.graph.vertex_count());
        out.kinds.resize(out.graph.vertex_count(), 0);
        int off = 4 * base;
        for (int h = 0; h < gd.graph.half_edge_count(); ++h)
            if (gd.graph.partner(h) >= 0) out.graph.pairing_mut()[off + h] = gd.graph.partner(h) + off;
        for (int p = 0; p < 4; ++p) image[he_index(v, p)] = gd.ports[p] + off;
    }
    for (int h = 0; h < s.graph.half_edge_count(); ++h) out.graph.pairing_mut()[image[h]] = image[s.graph.partner(h)];
    out.graph.set_cycle_components(s.graph.cycle_components());
    if (s.graph.root_on_dart()) out.graph.set_root_dart(image[s.graph.root_dart()]);
    else if (s.graph.root_on_cycle()) out.graph.set_root_cycle();
    return out;
}

}  // namespace

SchemeGraph substitute_chain_vertex(const SchemeGraph& s, int cv, const ChainSpec& spec) {
    if (cv < 0 || cv >= s.node_count() || !s.is_chain_vertex(cv))
        throw InconsistentSubstitution("node is not a chain-vertex");
    std::vector<ChainSpec> specs(s.node_count());
    specs[cv] = spec;
    return expand(s, specs);
}

MOGraph substitute_all(const SchemeGraph& s, const std::vector<ChainSpec>* contents) {
    std::vector<ChainSpec> specs(s.node_count());
    for (int v = 0; v < s.node_count(); ++v) {
        if (!s.is_chain_vertex(v)) continue;
        if (contents && !(*contents)[v].dipoles.empty()) specs[v] = (*contents)[v];
        else specs[v] = canonical_chain_spec(s.chain_type(v));
    }
    return expand(s, specs).graph;
}

// ---------------------------------------------------------------- extraction

ExtractedScheme extract_scheme(const MOGraph& g) {
    SchemeGraph base(g);
    ChainAnalysis an = find_maximal_chains(base);
    ExtractedScheme ex;
    ex.closed_chains = an.closed_chains;
    ex.vertex_disjoint = an.vertex_disjoint;
    if (!an.vertex_disjoint) throw Error("extract_scheme: maximal chains overlap");

    const int nv = g.vertex_count();
    std::vector<char> in_chain(nv, 0);
    for (const Chain& c : an.chains)
        for (const ChainLink& l : c.links)
            for (int v : an.elements[l.element].nodes) in_chain[v] = 1;

    SchemeGraph& out = ex.scheme;
    std::vector<int> new_index(nv, -1);
    int kept = 0;
    for (int v = 0; v < nv; ++v)
        if (!in_chain[v]) new_index[v] = kept++;
    out.graph = MOGraph(kept + static_cast<int>(an.chains.size()));
    out.kinds.assign(out.graph.vertex_count(), 0);
    ex.contents.assign(out.graph.vertex_count(), ChainSpec{});

    std::vector<int> image(g.half_edge_count(), -1);
    for (int h = 0; h < g.half_edge_count(); ++h)
        if (new_index[he_vertex(h)] >= 0) image[h] = he_index(new_index[he_vertex(h)], he_slot(h));
    for (size_t c = 0; c < an.chains.size(); ++c) {
        int cv = kept + static_cast<int>(c);
        const Chain& ch = an.chains[c];
        out.kinds[cv] = static_cast<int>(ch.type);
        ex.contents[cv] = ChainSpec{ch.type, ch.dipole_types};
        image[ch.side_a[0]] = he_index(cv, 0);
        image[ch.side_a[1]] = he_index(cv, 1);
        image[ch.side_b[0]] = he_index(cv, 2);
        image[ch.side_b[1]] = he_index(cv, 3);
    }
    for (int h = 0; h < g.half_edge_count(); ++h) {
        if (image[h] < 0) continue;
        int p = image[g.partner(h)];
        if (p < 0) throw Error("extract_scheme: exterior half-edge paired into a chain");
        out.graph.pairing_mut()[image[h]] = p;
    }
    out.graph.set_cycle_components(g.cycle_components());
    if (g.root_on_dart()) {
        if (image[g.root_dart()] < 0) throw Error("extract_scheme: root inside a chain");
        out.graph.set_root_dart(image[g.root_dart()]);
    } else if (g.root_on_cycle()) {
        out.graph.set_root_cycle();
    }
    return ex;
}

// ---------------------------------------------------------------- degree

ChainRouting chain_routing(const std::vector<DipoleType>& dipoles) {
    Gadget gd = build_chain(dipoles);
    const MOGraph& g = gd.graph;
    const int n = g.half_edge_count();
    std::vector<char> seen(3 * static_cast<size_t>(n), 0);
    ChainRouting rt;
    rt.route.fill(-1);
    auto port_of = [&](int h) {
        for (int p = 0; p < 4; ++p)
            if (gd.ports[p] == h) return p;
        return -1;
    };
    for (int p = 0; p < 4; ++p)
        for (int t = 0; t < 3; ++t) {
            int h = gd.ports[p];
            seen[3 * h + t] = 1;
            while (true) {
                h = strand_internal(h, t);
                seen[3 * h + t] = 1;
                int q = port_of(h);
                if (q >= 0) {
                    rt.route[3 * p + t] = 3 * q + t;
                    break;
                }
                h = g.partner(h);
                seen[3 * h + t] = 1;
            }
        }
    for (int h0 = 0; h0 < n; ++h0)
        for (int t = 0; t < 3; ++t) {
            if (seen[3 * h0 + t]) continue;
            ++rt.internal_faces;
            int h = h0;
            do {
                seen[3 * h + t] = 1;
                h = strand_internal(h, t);
                seen[3 * h + t] = 1;
                h = g.partner(h);
            } while (h != h0);
        }
    return rt;
}

const ChainRouting& chain_routing(ChainType t) {
    static std::once_flag once;
    static std::array<ChainRouting, 6> table;
    std::call_once(once, [] {
        for (int k = 1; k <= 5; ++k) table[k] = chain_routing(canonical_chain_spec(static_cast<ChainType>(k)).dipoles);
    });
    return table[static_cast<int>(t)];
}

SchemeDegree scheme_degree(const SchemeGraph& s) {
    SchemeDegree sd;
    sd.substituted = degree(substitute_all(s));
    const MOGraph& g = s.graph;
    const int n = g.half_edge_count();
    std::vector<char> seen(3 * static_cast<size_t>(n), 0);
    auto internal = [&](int h, int t, int& h2, int& t2) {
        int v = he_vertex(h);
        if (!s.is_chain_vertex(v)) {
            h2 = strand_internal(h, t);
            t2 = t;
            return;
        }
        int r = chain_routing(s.chain_type(v)).route[3 * he_slot(h) + t];
        h2 = he_index(v, r / 3);
        t2 = r % 3;
    };
    int faces = 0;
    for (int h0 = 0; h0 < n; ++h0)
        for (int t0 = 0; t0 < 3; ++t0) {
            if (seen[3 * h0 + t0]) continue;
            ++faces;
            int h = h0, t = t0;
            do {
                seen[3 * h + t] = 1;
                int h2, t2;
                internal(h, t, h2, t2);
                seen[3 * h2 + t2] = 1;
                h = g.partner(h2);
                t = t2;
            } while (!(h == h0 && t == t0));
        }
    faces += 3 * g.cycle_components();
    sd.faces_through = faces;
    for (int v = 0; v < s.node_count(); ++v) {
        if (!s.is_chain_vertex(v)) continue;
        if (is_broken(s.chain_type(v))) ++sd.broken;
        else ++sd.unbroken;
    }
    int c = component_count(g);
    sd.two_delta_direct = 6 * c + 3 * s.standard_count() - 2 * faces + 4 * sd.unbroken + 6 * sd.broken;
    return sd;
}

DegreeReport degree_with_chain_vertices(const SchemeGraph& s) {
    SchemeDegree sd = scheme_degree(s);
    if (sd.substituted.two_delta != sd.two_delta_direct)
        throw Error("degree through chain-vertex routing disagrees with the substituted graph");
    return sd.substituted;
}

SchemeParams scheme_params(const SchemeGraph& s) {
    SchemeParams p;
    p.two_p = s.standard_count();
    for (int v = 0; v < s.node_count(); ++v) {
        if (!s.is_chain_vertex(v)) continue;
        switch (s.chain_type(v)) {
            case ChainType::L:
            case ChainType::R: ++p.a; break;
            case ChainType::Se: ++p.s_e; break;
            case ChainType::So: ++p.s_o; break;
            case ChainType::B: ++p.b; break;
        }
    }
    p.two_delta = degree_with_chain_vertices(s).two_delta;
    return p;
}

int element_count(const SchemeGraph& s) {
    return static_cast<int>(find_dipoles(s).size()) + s.chain_vertex_count();
}

bool scheme_has_melon(const SchemeGraph& s) {
    const MOGraph& g = s.graph;
    for (int u = 0; u < s.node_count(); ++u) {
        if (s.is_chain_vertex(u)) continue;
        for (int k = 0; k < 4; ++k) {
            int w = he_vertex(g.partner(he_index(u, k)));
            if (w > u && !s.is_chain_vertex(w) && melon_between(g, u, w)) return true;
        }
    }
    return false;
}

bool scheme_has_adjacent_edge(const SchemeGraph& s) {
    const MOGraph& g = s.graph;
    for (int v = 0; v < s.node_count(); ++v) {
        if (!s.is_chain_vertex(v)) continue;
        for (int side = 0; side < 2; ++side) {
            int plus = he_index(v, 2 * side), minus = plus + 1;
            if (g.partner(plus) == minus && !g.is_root_edge(plus)) return true;
        }
    }
    return false;
}

bool is_melon_free_scheme(const SchemeGraph& s) { return !scheme_has_melon(s) && !scheme_has_adjacent_edge(s); }

bool is_reduced_scheme(const SchemeGraph& s) {
    if (!is_melon_free_scheme(s)) return false;
    ChainAnalysis an = find_maximal_chains(s);
    return an.linked_pairs == 0 && an.closed_chains == 0;
}

RemovalResult removal_analysis(const SchemeGraph& s, const RemovalElement& e) {
    RemovalResult res;
    const MOGraph& g = s.graph;
    std::vector<char> del(s.node_count(), 0);
    std::vector<int> join(g.half_edge_count(), -1);
    std::array<Side, 2> sides;
    if (e.is_chain_vertex) {
        int v = e.chain_vertex;
        del[v] = 1;
        sides = {Side{he_index(v, 0), he_index(v, 1)}, Side{he_index(v, 2), he_index(v, 3)}};
        res.cv_type = s.chain_type(v);
    } else {
        del[e.dipole.u] = del[e.dipole.v] = 1;
        sides = e.dipole.sides;
    }
    for (const Side& sd : sides) {
        join[sd[0]] = sd[1];
        join[sd[1]] = sd[0];
    }
    int before = degree_with_chain_vertices(s).two_delta;
    int c_before = component_count(g);
    SpliceResult sp = splice(g, del, join);
    SchemeGraph after;
    after.graph = std::move(sp.graph);
    after.kinds.assign(after.graph.vertex_count(), 0);
    for (int v = 0; v < s.node_count(); ++v)
        if (sp.new_index[v] >= 0) after.kinds[sp.new_index[v]] = s.kinds[v];
    int after_delta = degree_with_chain_vertices(after).two_delta;
    res.separating = component_count(after.graph) > c_before;
    res.two_delta_drop = before - after_delta;
    if (res.separating) res.allowed = res.two_delta_drop == 0;
    else if (e.is_chain_vertex && is_broken(res.cv_type)) res.allowed = res.two_delta_drop == 6;
    else res.allowed = res.two_delta_drop == 2 || res.two_delta_drop == 6;
    return res;
}

}  // namespace momaps

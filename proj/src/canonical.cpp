#include "momaps/canonical.hpp"

#include <algorithm>
#include <cstdio>

namespace momaps {

void CanonicalCode::push(int value) {
    auto w = static_cast<std::uint16_t>(value);
    bytes.push_back(static_cast<char>(w >> 8));
    bytes.push_back(static_cast<char>(w & 0xff));
}

std::vector<int> CanonicalCode::words() const {
    std::vector<int> out;
    for (size_t i = 0; i + 1 < bytes.size(); i += 2)
        out.push_back((static_cast<unsigned char>(bytes[i]) << 8) | static_cast<unsigned char>(bytes[i + 1]));
    return out;
}

std::string CanonicalCode::hex() const {
    std::string s;
    char buf[3];
    for (char c : bytes) {
        std::snprintf(buf, sizeof buf, "%02x", static_cast<unsigned char>(c));
        s += buf;
    }
    return s;
}

namespace {

inline int port_at(int kind, int entry, int rel) { return kind == 0 ? (entry + rel) & 3 : entry ^ rel; }
inline int rel_of(int kind, int entry, int port) { return kind == 0 ? (port - entry) & 3 : entry ^ port; }

}  // namespace

CanonicalCode code_from_dart(const PortGraphView& g, int dart) {
    const auto& pr = *g.pairing;
    const int nv = static_cast<int>(pr.size() / 4);
    CanonicalCode code;
    code.bytes.reserve(4 + 18 * static_cast<size_t>(nv));
    code.push(nv);
    code.push(g.cycles);
    if (dart == MOGraph::kCycleRoot) {
        if (nv != 0) throw Error("canonical_code: root on a cycle but vertices present");
        code.push(0xffff);
        return code;
    }
    if (dart < 0) throw Error("canonical_code: graph is not rooted");
    std::vector<int> label(nv, -1), entry(nv, 0), order;
    order.reserve(nv);
    int v0 = he_vertex(dart);
    label[v0] = 0;
    entry[v0] = he_slot(dart);
    order.push_back(v0);
    for (size_t qi = 0; qi < order.size(); ++qi) {
        int v = order[qi];
        int k = g.kind(v);
        code.push(k);
        for (int rel = 0; rel < 4; ++rel) {
            int p = pr[he_index(v, port_at(k, entry[v], rel))];
            int w = he_vertex(p);
            if (label[w] < 0) {
                label[w] = static_cast<int>(order.size());
                entry[w] = he_slot(p);
                order.push_back(w);
            }
            code.push(label[w]);
            code.push(rel_of(g.kind(w), entry[w], he_slot(p)));
        }
    }
    if (static_cast<int>(order.size()) != nv) throw Error("canonical_code: graph is not connected");
    return code;
}

CanonicalCode canonical_code(const PortGraphView& g) { return code_from_dart(g, g.root); }

CanonicalCode canonical_code(const MOGraph& g) {
    PortGraphView view{&g.pairing(), nullptr, g.root_raw(), g.cycle_components()};
    return canonical_code(view);
}

CanonicalLabeling canonical_labeling(const PortGraphView& g, int dart) {
    const auto& pr = *g.pairing;
    const int nv = static_cast<int>(pr.size() / 4);
    CanonicalLabeling lab;
    lab.new_vertex.assign(nv, -1);
    lab.new_port.assign(pr.size(), -1);
    if (dart < 0) return lab;
    std::vector<int> entry(nv, 0), order;
    auto visit = [&](int h) {
        int w = he_vertex(h);
        if (lab.new_vertex[w] >= 0) return;
        lab.new_vertex[w] = static_cast<int>(order.size());
        entry[w] = he_slot(h);
        order.push_back(w);
    };
    visit(dart);
    for (size_t qi = 0; qi < order.size(); ++qi) {
        int v = order[qi];
        int k = g.kind(v);
        for (int rel = 0; rel < 4; ++rel) visit(pr[he_index(v, port_at(k, entry[v], rel))]);
    }
    for (int v : order) {
        int k = g.kind(v);
        int e = entry[v];
        for (int s = 0; s < 4; ++s) {
            // rotate a standard vertex by an even amount, swap sides of a chain-vertex
            int ns = k == 0 ? (s - e + (e & 1)) & 3 : s ^ (e & 2);
            lab.new_port[he_index(v, s)] = he_index(lab.new_vertex[v], ns);
        }
    }
    return lab;
}

MOGraph canonical_form(const MOGraph& g) {
    if (!g.root_on_dart()) return g;
    PortGraphView view{&g.pairing(), nullptr, g.root_raw(), g.cycle_components()};
    CanonicalLabeling lab = canonical_labeling(view, g.root_dart());
    MOGraph out(g.vertex_count());
    for (int h = 0; h < g.half_edge_count(); ++h) {
        if (lab.new_port[h] < 0) throw Error("canonical_form: graph is not connected");
        out.pairing_mut()[lab.new_port[h]] = lab.new_port[g.partner(h)];
    }
    out.set_root_dart(lab.new_port[g.root_dart()]);
    out.set_cycle_components(g.cycle_components());
    return out;
}

CanonicalCode unrooted_code(const MOGraph& g) {
    PortGraphView view{&g.pairing(), nullptr, MOGraph::kNoRoot, g.cycle_components()};
    if (g.vertex_count() == 0) return code_from_dart(view, MOGraph::kCycleRoot);
    CanonicalCode best;
    bool have = false;
    for (int h = 0; h < g.half_edge_count(); h += 2) {
        CanonicalCode c = code_from_dart(view, h);
        if (!have || c < best) {
            best = std::move(c);
            have = true;
        }
    }
    return best;
}

}  // namespace momaps

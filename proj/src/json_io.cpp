#include "momaps/json_io.hpp"

#include <fstream>

namespace momaps {

namespace {

json ref(int h) { return json::array({he_vertex(h), he_slot(h)}); }

int parse_ref(const json& j, int nodes) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer())
        throw ParseError("half-edge reference must be [vertex, slot]");
    int v = j[0].get<int>(), s = j[1].get<int>();
    if (v < 0 || v >= nodes || s < 0 || s > 3) throw ParseError("half-edge reference out of range");
    return he_index(v, s);
}

MOGraph parse_base(const json& j) {
    if (!j.is_object()) throw ParseError("graph must be a JSON object");
    if (!j.contains("vertices") || !j["vertices"].is_number_integer()) throw ParseError("missing integer 'vertices'");
    int n = j["vertices"].get<int>();
    if (n < 0) throw ParseError("negative vertex count");
    MOGraph g(n);
    if (!j.contains("pairing") || !j["pairing"].is_array()) throw ParseError("missing array 'pairing'");
    for (const json& e : j["pairing"]) {
        if (!e.is_array() || e.size() != 2) throw ParseError("pairing entries must hold two half-edges");
        int a = parse_ref(e[0], n), b = parse_ref(e[1], n);
        if (g.partner(a) >= 0 || g.partner(b) >= 0) throw ValidationError("half-edge paired twice");
        if (a == b) throw ValidationError("half-edge paired with itself");
        g.connect(a, b);
    }
    int k = j.value("cycle_components", 0);
    if (k < 0) throw ParseError("negative cycle_components");
    g.set_cycle_components(k);
    if (j.contains("root")) {
        const json& r = j["root"];
        if (r.is_null()) {
        } else if (r.is_string() && r.get<std::string>() == "cycle") {
            g.set_root_cycle();
        } else {
            g.set_root_dart(parse_ref(r, n));
        }
    }
    return g;
}

void write_base(const MOGraph& g, json& j) {
    j["vertices"] = g.vertex_count();
    json pairs = json::array();
    for (int h = 0; h < g.half_edge_count(); ++h) {
        int p = g.partner(h);
        if (p < 0) continue;
        if (he_out(h)) pairs.push_back(json::array({ref(h), ref(p)}));
    }
    j["pairing"] = pairs;
    if (g.root_on_dart()) j["root"] = ref(g.root_dart());
    else if (g.root_on_cycle()) j["root"] = "cycle";
    else j["root"] = nullptr;
    j["cycle_components"] = g.cycle_components();
}

}  // namespace

json graph_to_json(const MOGraph& g) {
    json j;
    write_base(g, j);
    return j;
}

MOGraph graph_from_json(const json& j) {
    MOGraph g = parse_base(j);
    if (j.contains("chain_vertices") && !j["chain_vertices"].empty())
        throw ParseError("graph has chain-vertices; load it as a scheme");
    ValidationReport rep = validate(g);
    if (!rep.ok()) throw ValidationError(rep.summary());
    return g;
}

json scheme_to_json(const SchemeGraph& s) {
    json j;
    write_base(s.graph, j);
    json cvs = json::array();
    for (int v = 0; v < s.node_count(); ++v) {
        if (!s.is_chain_vertex(v)) continue;
        cvs.push_back({{"node", v},
                       {"type", to_string(s.chain_type(v))},
                       {"sides", json::array({json::array({ref(he_index(v, 0)), ref(he_index(v, 1))}),
                                              json::array({ref(he_index(v, 2)), ref(he_index(v, 3))})})}});
    }
    j["chain_vertices"] = cvs;
    return j;
}

SchemeGraph scheme_from_json(const json& j) {
    SchemeGraph s(parse_base(j));
    if (j.contains("chain_vertices")) {
        for (const json& c : j["chain_vertices"]) {
            if (!c.contains("node") || !c.contains("type")) throw ParseError("chain-vertex needs 'node' and 'type'");
            int v = c["node"].get<int>();
            if (v < 0 || v >= s.node_count()) throw ParseError("chain-vertex node out of range");
            s.kinds[v] = static_cast<int>(chain_type_from_string(c["type"].get<std::string>()));
            if (c.contains("sides")) {
                const json& sd = c["sides"];
                if (!sd.is_array() || sd.size() != 2) throw ParseError("chain-vertex needs two sides");
                for (int k = 0; k < 2; ++k) {
                    if (!sd[k].is_array() || sd[k].size() != 2) throw ParseError("a side lists two half-edges");
                    if (parse_ref(sd[k][0], s.node_count()) != he_index(v, 2 * k) ||
                        parse_ref(sd[k][1], s.node_count()) != he_index(v, 2 * k + 1))
                        throw ValidationError("chain-vertex sides must be its ports [[v,0],[v,1]] and [[v,2],[v,3]]");
                }
            }
        }
    }
    ValidationReport rep = validate(s);
    if (!rep.ok()) throw ValidationError(rep.summary());
    return s;
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError(path + ": " + e.what());
    }
}

MOGraph load_graph_file(const std::string& path) { return graph_from_json(read_json_file(path)); }

}  // namespace momaps

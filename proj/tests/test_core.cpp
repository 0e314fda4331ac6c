#include "doctest.h"

#include <map>
#include <random>

#include "momaps/colored.hpp"
#include "momaps/faces.hpp"
#include "momaps/json_io.hpp"
#include "momaps/mo_graph.hpp"
#include "support.hpp"

using namespace momaps;

namespace {

std::multiset<int> lengths(const FaceReport& fr) {
    std::multiset<int> out;
    for (auto* fam : {&fr.left, &fr.right, &fr.straight})
        for (const Face& f : *fam) out.insert(f.length);
    return out;
}

}  // namespace

TEST_CASE("validate accepts the basic graphs and rejects equal signs") {
    CHECK(validate(make_infinity_cw()).ok());
    CHECK(validate(make_infinity_ccw()).ok());
    CHECK(validate(MOGraph()).ok());
    CHECK(validate(make_cycle_graph(true)).ok());
    MOGraph bad(1);
    bad.connect(0, 2);
    bad.connect(1, 3);
    ValidationReport rep = validate(bad);
    REQUIRE_FALSE(rep.ok());
    CHECK(rep.summary().find("equal signs") != std::string::npos);
    MOGraph dangling(1);
    dangling.connect(0, 1);
    CHECK_FALSE(validate(dangling).ok());
}

TEST_CASE("faces of the infinity, cycle and quadruple-edge graphs") {
    FaceReport inf = trace_faces(make_infinity_cw());
    CHECK(inf.total() == 4);
    CHECK(lengths(inf) == std::multiset<int>{1, 1, 2, 2});
    CHECK(lengths(trace_faces(make_infinity_ccw())) == std::multiset<int>{1, 1, 2, 2});

    DegreeReport cyc = degree(make_cycle_graph(false));
    CHECK(cyc.F == 3);
    CHECK(cyc.F_l == 1);
    CHECK(cyc.F_r == 1);
    CHECK(cyc.F_s == 1);
    CHECK(cyc.two_delta == 0);

    // c=1, V=2, delta=0 forces F = 6
    DegreeReport q = degree(make_quadruple_edge());
    CHECK(q.F == 6);
    CHECK(q.two_delta == 0);
    CHECK(q.planar());
}

TEST_CASE("degree of the infinity graph") {
    for (const MOGraph& g : {make_infinity_cw(), make_infinity_ccw()}) {
        DegreeReport d = degree(g);
        CHECK(d.c == 1);
        CHECK(d.V == 1);
        CHECK(d.F == 4);
        CHECK(d.two_delta == 1);
        CHECK(d.delta().str() == "1/2");
        CHECK(d.g_lr == 0);
    }
}

TEST_CASE("every edge lies on one face of each type; straight faces are even") {
    for (const MOGraph& g : testsupport::rooted_graphs(5)) {
        FaceReport fr = trace_faces(g);
        int E = g.edge_count();
        for (auto* fam : {&fr.left, &fr.right, &fr.straight}) {
            int total = 0;
            for (const Face& f : *fam) total += f.length;
            CHECK(total == E);
        }
        for (const Face& f : fr.straight) CHECK(f.length % 2 == 0);
        for (auto* of : {&fr.left_of_edge, &fr.right_of_edge, &fr.straight_of_edge})
            for (int i : *of) CHECK(i >= 0);
    }
}

TEST_CASE("fast face counter agrees with the tracer") {
    FaceCounter fc;
    for (const MOGraph& g : testsupport::rooted_graphs(5)) {
        FaceReport fr = trace_faces(g);
        FaceCounts c = fc.count(g);
        CHECK(c.left == static_cast<int>(fr.left.size()));
        CHECK(c.right == static_cast<int>(fr.right.size()));
        CHECK(c.straight == static_cast<int>(fr.straight.size()));
    }
}

TEST_CASE("degree additivity on disjoint unions") {
    auto gs = testsupport::rooted_graphs(3, 1);
    std::mt19937 rng(7);
    for (int t = 0; t < 50; ++t) {
        MOGraph a = gs[rng() % gs.size()], b = gs[rng() % gs.size()];
        a.clear_root();
        b.clear_root();
        MOGraph u = disjoint_union(a, b);
        DegreeReport du = degree(u);
        CHECK(du.c == 2);
        CHECK(du.two_delta == degree(a).two_delta + degree(b).two_delta);
        CHECK(du.two_delta == du.g_lr * 2 + du.two_g_ls + du.two_g_rs);
    }
    MOGraph inf2 = disjoint_union(make_infinity_cw(), make_cycle_graph(false));
    CHECK(degree(inf2).two_delta == 1);
}

TEST_CASE("removing a loop of the infinity graph gives the cycle-graph") {
    MOGraph g = make_infinity_cw();
    for (int h : {0, 2}) {
        MOGraph r = remove_loop(g, h);
        CHECK(r.vertex_count() == 0);
        CHECK(r.cycle_components() == 1);
        CHECK(degree(r).two_delta == 0);
    }
    CHECK_THROWS_AS(remove_loop(make_quadruple_edge(), 0), NotALoop);
}

TEST_CASE("every loop removal lowers the degree by one half") {
    for (const MOGraph& g : testsupport::rooted_graphs(5, 1)) {
        int d = degree(g).two_delta;
        int loops = 0;
        for (int h = 0; h < g.half_edge_count(); h += 2) {
            if (he_vertex(g.partner(h)) != he_vertex(h)) continue;
            // the root-vertex subdivides a root loop
            if (g.is_root_edge(h)) {
                CHECK_THROWS_AS(remove_loop(g, h), NotALoop);
                continue;
            }
            ++loops;
            MOGraph r = remove_loop(g, h);
            CHECK(validate(r).ok());
            CHECK(degree(r).two_delta == d - 1);
        }
        CHECK(loops <= d);
    }
}

TEST_CASE("knot profile") {
    KnotProfile k = knot_profile(make_infinity_cw());
    CHECK(k.V == 1);
    CHECK(k.F_s == 1);
    CHECK(k.delta.twice == 1);
    KnotProfile q = knot_profile(make_quadruple_edge());
    CHECK(q.V == 2);
    CHECK(q.F_s == 2);
    CHECK(q.delta.twice == 0);
    bool saw_nonplanar = false;
    for (const MOGraph& g : testsupport::rooted_graphs(4, 1)) {
        if (degree(g).planar()) {
            KnotProfile p = knot_profile(g);
            CHECK(2 * p.F_s == p.V + 2 - p.delta.twice);
        } else {
            saw_nonplanar = true;
            CHECK_THROWS_AS(knot_profile(g), NotPlanar);
        }
    }
    CHECK(saw_nonplanar);
}

TEST_CASE("degree rejects an impossible face count") {
    CHECK_THROWS_AS(degree_from_counts(1, 1, 1, 1, 1), NonHalfIntegerDegree);
    CHECK_NOTHROW(degree_from_counts(1, 1, 2, 1, 1));
}

TEST_CASE("colored melon embeds as a degree-0 graph on two vertices") {
    ColoredGraph cg;
    cg.white_count = 1;
    cg.neighbour = {{0, 0, 0, 0}};
    cg.root_black = 0;
    CHECK(colored_two_delta(cg) == 0);
    MOGraph g = embed_colored(cg);
    CHECK(validate(g).ok());
    CHECK(g.vertex_count() == 2);
    CHECK(degree(g).two_delta == 0);
    CHECK(embed_colored(ColoredGraph{}).vertex_count() == 0);
}

TEST_CASE("colored embedding preserves faces by type") {
    std::mt19937 rng(11);
    for (int t = 0; t < 200; ++t) {
        int k = 1 + static_cast<int>(rng() % 6);
        ColoredGraph cg;
        cg.white_count = k;
        cg.neighbour.assign(k, {});
        for (int c = 0; c < 4; ++c) {
            std::vector<int> p(k);
            std::iota(p.begin(), p.end(), 0);
            std::shuffle(p.begin(), p.end(), rng);
            for (int b = 0; b < k; ++b) cg.neighbour[b][c] = p[b];
        }
        ColoredFaces cf = colored_faces(cg);
        DegreeReport d = degree(embed_colored(cg));
        CHECK(d.F_r == cf.faces[0][1] + cf.faces[2][3]);
        CHECK(d.F_l == cf.faces[1][2] + cf.faces[0][3]);
        CHECK(d.F_s == cf.faces[0][2] + cf.faces[1][3]);
        CHECK(d.c == cf.components);
        CHECK(d.two_delta == colored_two_delta(cg));
        CHECK(d.two_delta % 2 == 0);
    }
}

TEST_CASE("colored input checks") {
    ColoredGraph cg;
    cg.white_count = 2;
    cg.neighbour = {{0, 0, 0, 0}, {0, 1, 1, 1}};
    CHECK_THROWS_AS(embed_colored(cg), InvalidColoring);
    cg.white_count = 1;
    CHECK_THROWS_AS(colored_two_delta(cg), InvalidColoring);
}

TEST_CASE("json round trip") {
    for (const MOGraph& g : testsupport::rooted_graphs(3)) {
        MOGraph back = graph_from_json(json::parse(graph_to_json(g).dump()));
        CHECK(back == g);
    }
    MOGraph inf = make_infinity_ccw();
    CHECK(graph_from_json(graph_to_json(inf)) == inf);
    CHECK_THROWS_AS(graph_from_json(json::parse(R"({"vertices": 1, "pairing": [[[0,0],[0,2]],[[0,1],[0,3]]]})")),
                    ValidationError);
    CHECK_THROWS_AS(graph_from_json(json::parse(R"({"pairing": []})")), ParseError);
    CHECK_THROWS_AS(graph_from_json(json::parse(R"({"vertices": 1, "pairing": [[[0,0],[0,7]]]})")), ParseError);
}

TEST_CASE("corpus files") {
    const std::string dir = MOMAPS_CORPUS_DIR;
    CHECK(degree(load_graph_file(dir + "/infinity_cw.json")).two_delta == 1);
    CHECK(degree(load_graph_file(dir + "/infinity_ccw.json")).two_delta == 1);
    DegreeReport c = degree(load_graph_file(dir + "/cycle.json"));
    CHECK(c.two_delta == 0);
    CHECK(c.F == 3);
    DegreeReport q = degree(load_graph_file(dir + "/quadruple_edge.json"));
    CHECK(q.two_delta == 0);
    CHECK(q.V == 2);
    DegreeReport f = degree(load_graph_file(dir + "/fig4.json"));
    CHECK(f.V == 5);
    CHECK(f.F_s == 2);
    CHECK(f.two_delta == 3);
}

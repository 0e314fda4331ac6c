#include "momaps/faces.hpp"

#include <algorithm>

namespace momaps {

const std::vector<Face>& FaceReport::family(FaceType t) const {
    switch (t) {
        case FaceType::left: return left;
        case FaceType::right: return right;
        default: return straight;
    }
}

FaceReport trace_faces(const MOGraph& g) {
    FaceReport fr;
    const int n = g.half_edge_count();
    const int ne = n / 2;
    fr.left_of_edge.assign(ne, -1);
    fr.right_of_edge.assign(ne, -1);
    fr.straight_of_edge.assign(ne, -1);
    const int root_edge = g.root_on_dart() ? g.edge_of(g.root_dart()) : -1;

    std::vector<char> seen(n, 0);
    for (int c0 = 0; c0 < n; ++c0) {
        if (seen[c0]) continue;
        bool right = he_out(c0);
        auto& fam = right ? fr.right : fr.left;
        auto& of_edge = right ? fr.right_of_edge : fr.left_of_edge;
        Face f;
        int c = c0;
        do {
            seen[c] = 1;
            f.half_edges.push_back(c);
            int exit = he_next(c);
            int e = g.edge_of(exit);
            of_edge[e] = static_cast<int>(fam.size());
            if (e == root_edge) f.through_root = true;
            c = g.partner(exit);
        } while (c != c0);
        f.length = static_cast<int>(f.half_edges.size());
        fam.push_back(std::move(f));
    }

    // straight passages: 2 per vertex, indexed 2v + (slot parity)
    std::vector<char> pass(n / 2, 0);
    for (int x0 = 0; x0 < n; ++x0) {
        if (pass[2 * he_vertex(x0) + (x0 & 1)]) continue;
        Face f;
        int x = x0;
        do {
            pass[2 * he_vertex(x) + (x & 1)] = 1;
            f.half_edges.push_back(x);
            int e = g.edge_of(x);
            fr.straight_of_edge[e] = static_cast<int>(fr.straight.size());
            if (e == root_edge) f.through_root = true;
            x = he_opposite(g.partner(x));
        } while (x != x0);
        f.length = static_cast<int>(f.half_edges.size());
        fr.straight.push_back(std::move(f));
    }

    for (int k = 0; k < g.cycle_components(); ++k) {
        Face f;
        f.through_root = g.root_on_cycle() && k == 0;
        fr.left.push_back(f);
        fr.right.push_back(f);
        fr.straight.push_back(f);
    }
    return fr;
}

FaceCounts FaceCounter::count(const MOGraph& g) {
    const int n = g.half_edge_count();
    if (static_cast<int>(corner_.size()) < n) {
        corner_.assign(n, 0);
        passage_.assign(n, 0);
        epoch_ = 0;
    }
    if (++epoch_ == 0) {
        std::fill(corner_.begin(), corner_.end(), 0);
        std::fill(passage_.begin(), passage_.end(), 0);
        epoch_ = 1;
    }
    const unsigned ep = epoch_;
    FaceCounts fc;
    for (int c0 = 0; c0 < n; ++c0) {
        if (corner_[c0] == ep) continue;
        int c = c0;
        do {
            corner_[c] = ep;
            c = g.partner(he_next(c));
        } while (c != c0);
        if (he_out(c0)) ++fc.right;
        else ++fc.left;
    }
    // passage (v, parity) is recorded at index 4v + parity
    for (int x0 = 0; x0 < n; ++x0) {
        if (passage_[x0 & ~2] == ep) continue;
        int x = x0;
        do {
            passage_[x & ~2] = ep;
            x = he_opposite(g.partner(x));
        } while (x != x0);
        ++fc.straight;
    }
    fc.left += g.cycle_components();
    fc.right += g.cycle_components();
    fc.straight += g.cycle_components();
    return fc;
}

DegreeReport degree_from_counts(int c, int V, int F_l, int F_r, int F_s) {
    DegreeReport d;
    d.c = c;
    d.V = V;
    d.E = 2 * V;
    d.F_l = F_l;
    d.F_r = F_r;
    d.F_s = F_s;
    d.F = F_l + F_r + F_s;
    d.two_delta = 6 * c + 3 * V - 2 * d.F;
    int two_g_lr = 2 * c + V - F_l - F_r;
    d.two_g_ls = 2 * c + V - F_l - F_s;
    d.two_g_rs = 2 * c + V - F_r - F_s;
    if (two_g_lr % 2 != 0 || two_g_lr < 0 || d.two_g_ls < 0 || d.two_g_rs < 0)
        throw NonHalfIntegerDegree("jacket Euler relations give an impossible genus");
    d.g_lr = two_g_lr / 2;
    d.lambda = V - 2 * F_s + 2 * c;
    return d;
}

DegreeReport degree(const MOGraph& g) {
    FaceReport fr = trace_faces(g);
    DegreeReport d = degree_from_counts(component_count(g), g.vertex_count(),
                                        static_cast<int>(fr.left.size()),
                                        static_cast<int>(fr.right.size()),
                                        static_cast<int>(fr.straight.size()));
    for (const Face& f : fr.straight) d.F_s_by_length[f.length]++;
    return d;
}

KnotProfile knot_profile(const MOGraph& g) {
    DegreeReport d = degree(g);
    if (d.c != 1) throw Error("knot_profile expects a connected graph");
    if (d.g_lr > 0) throw NotPlanar("graph has genus " + std::to_string(d.g_lr));
    if (2 * d.F_s != d.V + 2 - d.two_delta) throw Error("knot component identity fails");
    return {d.V, d.F_s, d.delta()};
}

}  // namespace momaps

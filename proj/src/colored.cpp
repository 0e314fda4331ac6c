#include "momaps/colored.hpp"

#include <string>

namespace momaps {

void check_coloring(const ColoredGraph& cg) {
    if (cg.white_count != cg.black_count())
        throw InvalidColoring("black and white vertex counts differ");
    for (int c = 0; c < 4; ++c) {
        std::vector<int> hit(cg.white_count, 0);
        for (const auto& nb : cg.neighbour) {
            int w = nb[c];
            if (w < 0 || w >= cg.white_count) throw InvalidColoring("edge endpoint out of range");
            if (hit[w]++) throw InvalidColoring("white vertex with two edges of color " + std::to_string(c));
        }
    }
    if (cg.root_black && (*cg.root_black < 0 || *cg.root_black >= cg.black_count()))
        throw InvalidColoring("root edge out of range");
}

ColoredFaces colored_faces(const ColoredGraph& cg) {
    check_coloring(cg);
    const int k = cg.black_count();
    // inverse[c][w] = black vertex joined to w by color c
    std::vector<std::array<int, 4>> inverse(k);
    for (int b = 0; b < k; ++b)
        for (int c = 0; c < 4; ++c) inverse[cg.neighbour[b][c]][c] = b;
    ColoredFaces out;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            std::vector<char> seen(k, 0);
            for (int b0 = 0; b0 < k; ++b0) {
                if (seen[b0]) continue;
                ++out.faces[i][j];
                int b = b0;
                do {
                    seen[b] = 1;
                    b = inverse[cg.neighbour[b][i]][j];
                } while (b != b0);
            }
            out.total += out.faces[i][j];
        }
    // components via union of black vertices sharing a white neighbour
    std::vector<int> comp(k, -1);
    for (int b0 = 0; b0 < k; ++b0) {
        if (comp[b0] >= 0) continue;
        std::vector<int> stack{b0};
        comp[b0] = out.components;
        while (!stack.empty()) {
            int b = stack.back();
            stack.pop_back();
            for (int c = 0; c < 4; ++c)
                for (int d = 0; d < 4; ++d) {
                    int nb = inverse[cg.neighbour[b][c]][d];
                    if (comp[nb] < 0) {
                        comp[nb] = out.components;
                        stack.push_back(nb);
                    }
                }
        }
        ++out.components;
    }
    return out;
}

int colored_two_delta(const ColoredGraph& cg) {
    ColoredFaces f = colored_faces(cg);
    const int k = cg.black_count();
    return 2 * (3 * k + 3 * f.components - f.total);
}

MOGraph embed_colored(const ColoredGraph& cg) {
    check_coloring(cg);
    const int k = cg.black_count();
    MOGraph g(2 * k);
    for (int b = 0; b < k; ++b)
        for (int c = 0; c < 4; ++c) g.connect(he_index(b, c), he_index(k + cg.neighbour[b][c], 3 - c));
    if (cg.root_black) g.set_root_dart(he_index(*cg.root_black, 0));
    return g;
}

}  // namespace momaps

#include "momaps/catalog.hpp"

#include <algorithm>
#include <functional>
#include <memory>
#include <unordered_map>

#include "momaps/enumerate.hpp"

namespace momaps {

const CatalogEntry* SchemeCatalog::find(const CanonicalCode& c) const {
    auto it = std::lower_bound(entries.begin(), entries.end(), c,
                               [](const CatalogEntry& e, const CanonicalCode& k) { return e.code < k; });
    return it != entries.end() && it->code == c ? &*it : nullptr;
}

int SchemeCatalog::max_broken() const {
    int b = 0;
    for (const CatalogEntry& e : entries) b = std::max(b, e.params.b);
    return b;
}

bool within_element_bound(int elements, int two_delta) { return 2 * elements <= 7 * two_delta - 2; }
bool within_broken_bound(int broken, int two_delta) { return broken <= 2 * two_delta - 1; }

long long catalan(int n) {
    long long c = 1;
    for (int k = 0; k < n; ++k) c = c * 2 * (2 * k + 1) / (k + 2);
    return c;
}

SchemeCatalog build_scheme_catalog(int two_delta, int max_vertices) {
    struct Seen {
        SchemeGraph scheme;
        int first_seen = 0;
        std::map<int, long long> by_v;
    };
    struct Local {
        std::unordered_map<CanonicalCode, Seen> seen;
        std::map<int, long long> counts;
        long long scanned = 0;
        FaceCounter fc;
    };
    GeneratorOptions o;
    o.max_vertices = max_vertices;
    o.max_two_delta = two_delta;
    o.melon_free = true;
    int threads = thread_count();
    std::vector<Local> locals(threads);
    parallel_generate(
        o,
        [&](int w) -> WorkerVisitor {
            Local* L = &locals[w];
            return [L, two_delta](const MOGraph& g) {
                ++L->scanned;
                FaceCounts f = L->fc.count(g);
                if (degree_from_counts(1, g.vertex_count(), f.left, f.right, f.straight).two_delta != two_delta) return;
                const int V = g.vertex_count();
                ++L->counts[V];
                ExtractedScheme ex = extract_scheme(g);
                CanonicalCode code = canonical_code(ex.scheme);
                auto [it, fresh] = L->seen.try_emplace(std::move(code));
                if (fresh) {
                    it->second.scheme = canonical_form(ex.scheme);
                    it->second.first_seen = V;
                } else {
                    it->second.first_seen = std::min(it->second.first_seen, V);
                }
                ++it->second.by_v[V];
            };
        },
        threads);

    std::unordered_map<CanonicalCode, Seen> merged;
    SchemeCatalog cat;
    cat.two_delta = two_delta;
    cat.max_vertices = max_vertices;
    for (Local& L : locals) {
        cat.graphs_scanned += L.scanned;
        for (auto& [v, n] : L.counts) cat.melon_free_counts[v] += n;
        for (auto& [code, s] : L.seen) {
            auto [it, fresh] = merged.try_emplace(code, s);
            if (fresh) continue;
            it->second.first_seen = std::min(it->second.first_seen, s.first_seen);
            for (auto& [v, n] : s.by_v) it->second.by_v[v] += n;
        }
    }
    for (auto& [code, s] : merged) {
        CatalogEntry e;
        e.code = code;
        e.scheme = std::move(s.scheme);
        e.params = scheme_params(e.scheme);
        e.elements = element_count(e.scheme);
        e.first_seen = s.first_seen;
        e.realizations = std::move(s.by_v);
        e.planar = degree(substitute_all(e.scheme)).planar();
        cat.last_growth = std::max(cat.last_growth, e.first_seen);
        auto flag = [&](const std::string& what) { cat.violations.push_back({code, what}); };
        if (degree_with_chain_vertices(e.scheme).two_delta != two_delta) flag("degree");
        if (!is_reduced_scheme(e.scheme)) flag("not reduced");
        if (two_delta > 0) {
            if (!within_element_bound(e.elements, two_delta)) flag("element bound");
            if (!within_broken_bound(e.params.b, two_delta)) flag("broken bound");
        }
        if (two_delta > 0 && e.params.b == 2 * two_delta - 1 && !e.planar) flag("dominant but not planar");
        cat.entries.push_back(std::move(e));
    }
    std::sort(cat.entries.begin(), cat.entries.end(),
              [](const CatalogEntry& a, const CatalogEntry& b) { return a.code < b.code; });
    cat.stabilized = cat.last_growth <= max_vertices - 2;
    return cat;
}

namespace {

struct Tree {
    std::unique_ptr<Tree> left, right;
    bool leaf() const { return !left; }
};

std::vector<std::unique_ptr<Tree>> binary_trees(int inner) {
    std::vector<std::unique_ptr<Tree>> out;
    if (inner == 0) {
        out.push_back(std::make_unique<Tree>());
        return out;
    }
    std::function<std::unique_ptr<Tree>(const Tree&)> clone = [&](const Tree& t) {
        auto c = std::make_unique<Tree>();
        if (!t.leaf()) {
            c->left = clone(*t.left);
            c->right = clone(*t.right);
        }
        return c;
    };
    for (int l = 0; l < inner; ++l)
        for (auto& a : binary_trees(l))
            for (auto& b : binary_trees(inner - 1 - l)) {
                auto t = std::make_unique<Tree>();
                t->left = clone(*a);
                t->right = clone(*b);
                out.push_back(std::move(t));
            }
    return out;
}

void count_nodes(const Tree& t, int& leaves, int& inner) {
    if (t.leaf()) {
        ++leaves;
        return;
    }
    ++inner;
    count_nodes(*t.left, leaves, inner);
    count_nodes(*t.right, leaves, inner);
}

struct Port {
    int plus, minus;
};

class DominantBuilder {
  public:
    // choice bits: one per leaf (cw/ccw), two per inner node (cycle or one of
    // three quadruple-edge configurations), consumed in preorder
    DominantBuilder(const Tree& t, unsigned choices) : choices_(choices) {
        int r = s_.add_node(static_cast<int>(ChainType::B));
        s_.graph.connect(he_index(r, 0), he_index(r, 1));
        s_.graph.set_root_dart(he_index(r, 0));
        build(t, Port{he_index(r, 2), he_index(r, 3)});
    }

    SchemeGraph result() const { return canonical_form(s_); }

  private:
    unsigned take(int bits) {
        unsigned v = choices_ & ((1u << bits) - 1);
        choices_ >>= bits;
        return v;
    }

    // cuts edge a -> b and routes it through a side
    void insert(int a, int b, Port p) {
        s_.graph.connect(a, p.minus);
        s_.graph.connect(p.plus, b);
    }

    std::pair<Port, int> child_edge() {
        int x = s_.add_node(static_cast<int>(ChainType::B));
        return {Port{he_index(x, 0), he_index(x, 1)}, x};
    }

    void build(const Tree& t, Port parent) {
        if (t.leaf()) {
            int w = s_.add_node(0);
            if (take(1) == 0) {
                insert(he_index(w, 0), he_index(w, 1), parent);
                s_.graph.connect(he_index(w, 2), he_index(w, 3));
            } else {
                insert(he_index(w, 0), he_index(w, 3), parent);
                s_.graph.connect(he_index(w, 2), he_index(w, 1));
            }
            return;
        }
        unsigned kind = take(2);
        auto [lp, lx] = child_edge();
        auto [rp, rx] = child_edge();
        if (kind == 0) {
            s_.graph.connect(parent.plus, lp.minus);
            s_.graph.connect(lp.plus, rp.minus);
            s_.graph.connect(rp.plus, parent.minus);
        } else {
            int u = s_.add_node(0), v = s_.add_node(0);
            // roles on slots 1, 2, 3 of u; slot 0 stays a plain edge
            static constexpr int kRoles[3][3] = {{2, 0, 1}, {0, 1, 2}, {1, 2, 0}};  // 0=P 1=L 2=R
            const Port ports[3] = {parent, lp, rp};
            s_.graph.connect(he_index(u, 0), he_index(v, 1));
            for (int i = 1; i < 4; ++i) {
                int hu = he_index(u, i), hv = he_index(v, (5 - i) & 3);
                int a = he_out(hu) ? hu : hv, b = he_out(hu) ? hv : hu;
                insert(a, b, ports[kRoles[kind - 1][i - 1]]);
            }
        }
        build(*t.left, Port{he_index(lx, 2), he_index(lx, 3)});
        build(*t.right, Port{he_index(rx, 2), he_index(rx, 3)});
    }

    SchemeGraph s_;
    unsigned choices_;
};

}  // namespace

std::vector<SchemeGraph> gen_dominant_schemes(int two_delta) {
    std::vector<SchemeGraph> out;
    if (two_delta <= 0) return out;
    const int inner = two_delta - 1;
    for (auto& t : binary_trees(inner)) {
        int leaves = 0, in = 0;
        count_nodes(*t, leaves, in);
        const int bits = leaves + 2 * in;
        for (unsigned c = 0; c < (1u << bits); ++c) out.push_back(DominantBuilder(*t, c).result());
    }
    return out;
}

}  // namespace momaps

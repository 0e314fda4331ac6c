#include "doctest.h"

#include <cmath>

#include "momaps/catalog.hpp"
#include "momaps/enumerate.hpp"
#include "momaps/series.hpp"

using namespace momaps;

namespace {

BigInt fuss_catalan(int m) {
    // binom(4m, m) / (3m + 1)
    BigInt r = 1;
    for (int i = 1; i <= m; ++i) r = r * (3 * m + i) / i;
    return r / (3 * m + 1);
}

}  // namespace

TEST_CASE("melonic series") {
    const int K = 60;
    VSeries T = melonic_T(K);
    CHECK(T[0] == 1);
    CHECK(T[2] == 1);
    CHECK(T[4] == 4);
    CHECK(T[6] == 22);
    CHECK(T[8] == 140);
    for (int k = 1; k <= K; k += 2) CHECK(T[k] == 0);
    for (int m = 0; 2 * m <= K; ++m) CHECK(T[2 * m] == fuss_catalan(m));
    VSeries residual = T - VSeries::one(K) - T.pow(4).shift(2);
    for (int k = 0; k <= K; ++k) CHECK(residual[k] == 0);
    CHECK(melonic_U(K) == T - VSeries::one(K));
}

TEST_CASE("series arithmetic") {
    const int K = 20;
    VSeries x = VSeries::monomial(K, 2);
    VSeries geo = (VSeries::one(K) - x).reciprocal();
    for (int k = 0; k <= K; ++k) CHECK(geo[k] == (k % 2 == 0 ? 1 : 0));
    CHECK(geo * (VSeries::one(K) - x) == VSeries::one(K));
    VSeries neg = (VSeries::one(K) * BigInt(-1) + x).reciprocal();
    CHECK(neg * (VSeries::one(K) * BigInt(-1) + x) == VSeries::one(K));
    CHECK_THROWS((VSeries::one(K) * BigInt(2)).reciprocal());
    // 1/(1-u) at u = x/(1-x) is (1-x)/(1-2x)
    VSeries inner = x * geo;
    VSeries comp = geo.compose(inner);
    VSeries expect = (VSeries::one(K) - x) * (VSeries::one(K) - x * BigInt(2)).reciprocal();
    CHECK(comp == expect);
    CHECK_THROWS(geo.compose(geo));
}

TEST_CASE("chain generating functions") {
    const int K = 24;
    VSeries L = chain_gf(ChainType::L, K);
    for (int m = 0; 2 * m <= K; ++m) CHECK(L[2 * m] == (m >= 2 ? 1 : 0));
    CHECK(chain_gf(ChainType::R, K) == L);
    VSeries se = chain_gf(ChainType::Se, K), so = chain_gf(ChainType::So, K);
    CHECK(so[4] == 0);
    CHECK(so[6] == 1);
    for (int m = 0; 2 * m <= K; ++m) {
        CHECK(se[2 * m] == (m >= 2 && m % 2 == 0 ? 1 : 0));
        CHECK(so[2 * m] == (m >= 3 && m % 2 == 1 ? 1 : 0));
    }
    VSeries b = chain_gf(ChainType::B, K);
    CHECK(b[4] == 6);
    // broken chains of m dipoles: 3^m sequences minus the 3 unbroken ones
    for (int m = 2; 2 * m <= K; ++m) {
        BigInt p = 1;
        for (int i = 0; i < m; ++i) p *= 3;
        CHECK(b[2 * m] == p - 3);
    }
}

TEST_CASE("scheme and rooted generating functions") {
    const int K = 40;
    SchemeParams inf;
    inf.two_p = 1;
    VSeries g = scheme_gf(inf, K);
    CHECK(g == VSeries::monomial(K, 1));
    SeriesCache cache(K);
    VSeries T = cache.T();
    CHECK(rooted_gf(inf, cache) == T.pow(3).shift(1));
    CHECK(rooted_gf(SchemeParams{}, cache) == T);

    SchemeParams dom;
    dom.two_p = 1;
    dom.b = 1;
    VSeries d = scheme_gf(dom, K);
    VSeries u = VSeries::monomial(K, 2);
    VSeries expect = ((VSeries::one(K) - u) * (VSeries::one(K) - u * BigInt(3))).reciprocal().shift(5) * BigInt(6);
    CHECK(d == expect);
    CHECK(d[5] == 6);

    for (SchemeParams p : {inf, dom, SchemeParams{3, 1, 1, 1, 0, 0}, SchemeParams{2, 0, 0, 1, 1, 0},
                           SchemeParams{1, 2, 2, 0, 0, 0}})
        CHECK(rooted_gf(p, cache) == rooted_gf_by_edges(p, cache));
}

TEST_CASE("degree series of low catalogs match the counts") {
    const int maxv = 9;
    CountTable t = count_by_degree(maxv, CountFilters{false, false, 2});
    for (int td : {0, 1, 2}) {
        SchemeCatalog cat = build_scheme_catalog(td, maxv);
        DegreeSeries ds = degree_gf(cat, maxv);
        for (int V = 0; V <= maxv; ++V) CHECK(ds.series[V] == t.count(V, td));
        for (const CatalogEntry& e : cat.entries) {
            VSeries g = scheme_gf(e.params, maxv);
            for (int V = 0; V <= maxv; ++V) {
                auto it = e.realizations.find(V);
                CHECK(g[V] == (it == e.realizations.end() ? 0 : it->second));
            }
        }
        if (td > 0 && !cat.stabilized) CHECK(ds.unstabilized);
    }
    SchemeCatalog zero = build_scheme_catalog(0, 4);
    CHECK(degree_gf(zero, 30).series == melonic_T(30));
}

TEST_CASE("planar map formula and gamma") {
    CHECK(rooted_planar_maps(1) == 2);
    CHECK(rooted_planar_maps(2) == 9);
    CHECK(rooted_planar_maps(3) == 54);
    CHECK(rooted_planar_maps(4) == 378);
    const long double pi = M_PI;
    CHECK(std::fabs(gamma_half(1) - std::sqrt(pi)) < 1e-15);
    CHECK(std::fabs(gamma_half(5) - std::tgamma(2.5L)) < 1e-15);
    CHECK_THROWS(gamma_half(4));
}

TEST_CASE("log of big integers") {
    BigInt x = 1;
    for (int i = 0; i < 500; ++i) x *= 7;
    CHECK(std::fabs(log_bigint(x) - 500 * std::log(7.0)) < 1e-9 * 500 * std::log(7.0));
    CHECK(std::fabs(log_bigint(BigInt(1000)) - std::log(1000.0)) < 1e-12);
}

#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "momaps/catalog.hpp"
#include "momaps/scheme.hpp"

namespace momaps {

using BigInt = boost::multiprecision::cpp_int;

// Truncated power series with exact integer coefficients, indexed by vertex
// count: index k stands for z^(k/2) (or u^(k/2)). Coefficients past the order
// are dropped.
class VSeries {
  public:
    VSeries() = default;
    explicit VSeries(int order) : c_(order + 1) {}
    VSeries(int order, std::vector<BigInt> coeffs);

    static VSeries one(int order);
    static VSeries monomial(int order, int k, const BigInt& coeff = 1);

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const BigInt& operator[](int k) const { return c_[k]; }
    BigInt& operator[](int k) { return c_[k]; }
    BigInt at(int k) const { return k >= 0 && k <= order() ? c_[k] : BigInt(0); }
    const std::vector<BigInt>& coeffs() const { return c_; }

    VSeries operator+(const VSeries& o) const;
    VSeries operator-(const VSeries& o) const;
    VSeries operator*(const VSeries& o) const;
    VSeries operator*(const BigInt& s) const;
    VSeries& operator+=(const VSeries& o);
    bool operator==(const VSeries& o) const = default;

    // multiplies by z^(k/2)
    VSeries shift(int k) const;
    VSeries pow(int e) const;
    // requires a constant term of +1 or -1
    VSeries reciprocal() const;
    // f(g) for g without constant term, where f's index step is `step`
    // per power of its variable (2 for a series in u or z)
    VSeries compose(const VSeries& g, int step = 2) const;

  private:
    std::vector<BigInt> c_;
};

// T = 1 + z T^4 by fixed-point iteration; U = T - 1 = z T^4.
VSeries melonic_T(int order);
VSeries melonic_U(int order);

VSeries chain_gf(ChainType t, int order);

// 6^b u^(p+2c+s_o) / ((1-u)^(c-s) (1-u^2)^s (1-3u)^b)
VSeries scheme_gf(const SchemeParams& p, int order);

// Precomputed powers shared across the schemes of one catalog.
class SeriesCache {
  public:
    explicit SeriesCache(int order);
    int order() const { return order_; }
    const VSeries& T() const { return T_; }
    const VSeries& U() const { return U_; }
    VSeries T_pow(int e);
    VSeries inv_one_minus_U_pow(int e);
    VSeries inv_one_minus_U2_pow(int e);
    VSeries inv_one_minus_3U_pow(int e);

  private:
    VSeries power(std::vector<VSeries>& table, const VSeries& base, int e);
    int order_;
    VSeries T_, U_;
    std::vector<VSeries> tp_, a_, s_, b_;
};

// T * 6^b U^(p+2c+s_o) / ((1-U)^(c-s) (1-U^2)^s (1-3U)^b)
VSeries rooted_gf(const SchemeParams& p, SeriesCache& cache);
// sum over k of g_k z^(k/2) T^(2k+1), g the scheme's melon-free series
VSeries rooted_gf_by_edges(const SchemeParams& p, SeriesCache& cache);

struct DegreeSeries {
    VSeries series;
    bool unstabilized = false;  // set when the catalog did not stabilize
    std::string warning;
};
DegreeSeries degree_gf(const SchemeCatalog& catalog, int order);
DegreeSeries degree_gf(const SchemeCatalog& catalog, SeriesCache& cache);

BigInt rooted_planar_maps(int edges);

// Gamma at x = twice/2 for odd positive twice, as rational * sqrt(pi).
long double gamma_half(int twice);
long double asymptotic_estimate(int two_delta, long double n);

struct RatioRow {
    long double n = 0;
    long double ratio = 0;  // a_n / estimate(n)
};

struct RatioReport {
    int two_delta = 0;
    std::vector<RatioRow> rows;
    long double fitted_rate = 0;
    long double fitted_exponent = 0;
    // a_(n+1/2) sqrt(n) / a_n for n in delta + Z
    std::vector<RatioRow> parity;
    bool trend_to_one = false;   // |ratio - 1| non-increasing over the top decade
    bool estimate_defined = true;
};

// coeffs indexed by vertex count (a_n at index 2n)
RatioReport asymptotic_check(int two_delta, const VSeries& coeffs);

double log_bigint(const BigInt& x);

std::string series_csv(const VSeries& s);
std::string ratio_csv(const RatioReport& r);

}  // namespace momaps

#include "momaps/series.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include <Eigen/Dense>

namespace momaps {

VSeries::VSeries(int order, std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { c_.resize(order + 1); }

VSeries VSeries::one(int order) { return monomial(order, 0); }

VSeries VSeries::monomial(int order, int k, const BigInt& coeff) {
    VSeries s(order);
    if (k >= 0 && k <= order) s.c_[k] = coeff;
    return s;
}

VSeries VSeries::operator+(const VSeries& o) const {
    VSeries r = *this;
    r += o;
    return r;
}

VSeries& VSeries::operator+=(const VSeries& o) {
    if (o.order() != order()) throw std::invalid_argument("VSeries: order mismatch");
    for (int k = 0; k <= order(); ++k) c_[k] += o.c_[k];
    return *this;
}

VSeries VSeries::operator-(const VSeries& o) const {
    if (o.order() != order()) throw std::invalid_argument("VSeries: order mismatch");
    VSeries r = *this;
    for (int k = 0; k <= order(); ++k) r.c_[k] -= o.c_[k];
    return r;
}

VSeries VSeries::operator*(const VSeries& o) const {
    if (o.order() != order()) throw std::invalid_argument("VSeries: order mismatch");
    const int K = order();
    VSeries r(K);
    std::vector<int> nz;
    for (int j = 0; j <= K; ++j)
        if (!o.c_[j].is_zero()) nz.push_back(j);
    for (int i = 0; i <= K; ++i) {
        if (c_[i].is_zero()) continue;
        for (int j : nz) {
            if (i + j > K) break;
            r.c_[i + j] += c_[i] * o.c_[j];
        }
    }
    return r;
}

VSeries VSeries::operator*(const BigInt& s) const {
    VSeries r = *this;
    for (BigInt& x : r.c_) x *= s;
    return r;
}

VSeries VSeries::shift(int k) const {
    VSeries r(order());
    for (int i = 0; i + k <= order(); ++i)
        if (i + k >= 0) r.c_[i + k] = c_[i];
    return r;
}

VSeries VSeries::pow(int e) const {
    VSeries r = one(order()), b = *this;
    for (; e > 0; e >>= 1) {
        if (e & 1) r = r * b;
        if (e > 1) b = b * b;
    }
    return r;
}

VSeries VSeries::reciprocal() const {
    const int K = order();
    if (c_[0] != 1 && c_[0] != -1) throw std::domain_error("VSeries::reciprocal: constant term must be +1 or -1");
    const BigInt& a0 = c_[0];
    VSeries r(K);
    r.c_[0] = a0;
    for (int k = 1; k <= K; ++k) {
        BigInt s = 0;
        for (int j = 1; j <= k; ++j)
            if (!c_[j].is_zero()) s += c_[j] * r.c_[k - j];
        r.c_[k] = -s * a0;
    }
    return r;
}

VSeries VSeries::compose(const VSeries& g, int step) const {
    if (!g.c_[0].is_zero()) throw std::domain_error("VSeries::compose: inner series has a constant term");
    const int K = g.order();
    int top = order() / step;
    VSeries r(K);
    for (int j = top; j >= 0; --j) {
        r = r * g;
        r.c_[0] += at(j * step);
    }
    return r;
}

VSeries melonic_T(int order) {
    VSeries T = VSeries::one(order);
    // each pass fixes two more coefficients
    for (int it = 0; it <= order / 2; ++it) {
        VSeries next = VSeries::one(order) + T.pow(4).shift(2);
        if (next == T) break;
        T = std::move(next);
    }
    return T;
}

VSeries melonic_U(int order) { return melonic_T(order) - VSeries::one(order); }

namespace {

VSeries one_minus(const VSeries& x, const BigInt& s = 1) { return VSeries::one(x.order()) - x * s; }

}  // namespace

VSeries chain_gf(ChainType t, int K) {
    VSeries u = VSeries::monomial(K, 2), u2 = VSeries::monomial(K, 4);
    switch (t) {
        case ChainType::L:
        case ChainType::R: return one_minus(u).reciprocal().shift(4);
        case ChainType::Se: return one_minus(u2).reciprocal().shift(4);
        case ChainType::So: return one_minus(u2).reciprocal().shift(6);
        case ChainType::B: return (one_minus(u, 3).reciprocal() * one_minus(u).reciprocal()).shift(4) * BigInt(6);
    }
    throw std::invalid_argument("chain_gf: unknown type");
}

namespace {

int u_exponent_twice(const SchemeParams& p) { return p.two_p + 4 * p.c() + 2 * p.s_o; }

BigInt pow6(int b) {
    BigInt r = 1;
    for (int i = 0; i < b; ++i) r *= 6;
    return r;
}

}  // namespace

VSeries scheme_gf(const SchemeParams& p, int K) {
    VSeries u = VSeries::monomial(K, 2), u2 = VSeries::monomial(K, 4);
    VSeries den = one_minus(u).pow(p.c() - p.s()) * one_minus(u2).pow(p.s()) * one_minus(u, 3).pow(p.b);
    return den.reciprocal().shift(u_exponent_twice(p)) * pow6(p.b);
}

SeriesCache::SeriesCache(int order) : order_(order), T_(melonic_T(order)), U_(T_ - VSeries::one(order)) {}

VSeries SeriesCache::power(std::vector<VSeries>& table, const VSeries& base, int e) {
    if (table.empty()) table.push_back(VSeries::one(order_));
    while (static_cast<int>(table.size()) <= e) table.push_back(table.back() * base);
    return table[e];
}

VSeries SeriesCache::T_pow(int e) { return power(tp_, T_, e); }

VSeries SeriesCache::inv_one_minus_U_pow(int e) {
    if (a_.size() < 2) {
        a_ = {VSeries::one(order_), one_minus(U_).reciprocal()};
    }
    return power(a_, a_[1], e);
}

VSeries SeriesCache::inv_one_minus_U2_pow(int e) {
    if (s_.size() < 2) s_ = {VSeries::one(order_), one_minus(U_ * U_).reciprocal()};
    return power(s_, s_[1], e);
}

VSeries SeriesCache::inv_one_minus_3U_pow(int e) {
    if (b_.size() < 2) b_ = {VSeries::one(order_), one_minus(U_, 3).reciprocal()};
    return power(b_, b_[1], e);
}

VSeries rooted_gf(const SchemeParams& p, SeriesCache& cache) {
    // U^(m/2) = z^(m/2) T^(2m)
    const int m = u_exponent_twice(p);
    VSeries r = cache.T_pow(2 * m + 1).shift(m);
    r = r * cache.inv_one_minus_U_pow(p.c() - p.s());
    r = r * cache.inv_one_minus_U2_pow(p.s());
    r = r * cache.inv_one_minus_3U_pow(p.b);
    return r * pow6(p.b);
}

VSeries rooted_gf_by_edges(const SchemeParams& p, SeriesCache& cache) {
    const int K = cache.order();
    VSeries g = scheme_gf(p, K);
    VSeries r(K);
    for (int k = 0; k <= K; ++k) {
        if (g[k].is_zero()) continue;
        r += cache.T_pow(2 * k + 1).shift(k) * g[k];
    }
    return r;
}

DegreeSeries degree_gf(const SchemeCatalog& catalog, SeriesCache& cache) {
    DegreeSeries out;
    out.series = VSeries(cache.order());
    for (const CatalogEntry& e : catalog.entries) out.series += rooted_gf(e.params, cache);
    if (!catalog.stabilized) {
        out.unstabilized = true;
        std::ostringstream os;
        os << "UnstabilizedCatalog: two_delta=" << catalog.two_delta << " grew at V=" << catalog.last_growth
           << " with max_vertices=" << catalog.max_vertices << "; coefficients are exact only up to V="
           << catalog.max_vertices;
        out.warning = os.str();
    }
    return out;
}

DegreeSeries degree_gf(const SchemeCatalog& catalog, int order) {
    SeriesCache cache(order);
    return degree_gf(catalog, cache);
}

BigInt rooted_planar_maps(int m) {
    // 2 * 3^m (2m)! / (m! (m+2)!)
    BigInt num = 2, den = 1;
    for (int i = 0; i < m; ++i) num *= 3;
    for (int i = m + 1; i <= 2 * m; ++i) num *= i;
    for (int i = 2; i <= m + 2; ++i) den *= i;
    return num / den;
}

long double gamma_half(int twice) {
    if (twice <= 0 || twice % 2 == 0) throw std::domain_error("gamma_half: argument must be a positive half-integer");
    // Gamma(k + 1/2) = (2k)! / (4^k k!) sqrt(pi)
    long double r = std::sqrt(static_cast<long double>(M_PI));
    for (int k = 1; 2 * k < twice; ++k) r *= (2 * k - 1) / 2.0L;
    return r;
}

long double asymptotic_estimate(int two_delta, long double n) {
    if (two_delta <= 0) throw std::domain_error("asymptotic_estimate: defined for delta > 0");
    const long double d = two_delta / 2.0L;
    long double cat = static_cast<long double>(catalan(two_delta - 1));
    return cat * std::pow(3.0L, d - 1.5L) / std::pow(2.0L, 2 * d - 2.5L) * std::pow(n, 2 * d - 1.5L) /
           gamma_half(2 * two_delta - 1) * std::pow(256.0L / 27.0L, n);
}

double log_bigint(const BigInt& x) {
    if (x <= 0) throw std::domain_error("log_bigint: nonpositive");
    unsigned bits = boost::multiprecision::msb(x);
    if (bits < 900) return std::log(x.convert_to<double>());
    unsigned s = bits - 900;
    BigInt top = x >> s;
    return std::log(top.convert_to<double>()) + s * std::log(2.0);
}

RatioReport asymptotic_check(int two_delta, const VSeries& coeffs) {
    RatioReport rep;
    rep.two_delta = two_delta;
    rep.estimate_defined = two_delta > 0;
    // doubled indices V = 2n with n in delta + Z, i.e. V of the parity of 2*delta
    std::vector<int> vs;
    for (int V = 2; V <= coeffs.order(); ++V)
        if ((V - two_delta) % 2 == 0 && !coeffs[V].is_zero()) vs.push_back(V);
    for (int V : vs) {
        long double n = V / 2.0L;
        if (rep.estimate_defined)
            rep.rows.push_back({n, std::exp(static_cast<long double>(log_bigint(coeffs[V])) -
                                            std::log(asymptotic_estimate(two_delta, n)))});
        if (V + 1 <= coeffs.order()) {
            long double other = coeffs[V + 1].is_zero()
                                    ? 0.0L
                                    : std::exp(static_cast<long double>(log_bigint(coeffs[V + 1]) - log_bigint(coeffs[V])));
            rep.parity.push_back({n, other * std::sqrt(n)});
        }
    }
    // log a_n = c0 + n log(rate) + e log n + c1 n^-1/2 + c2 n^-1 + c3 n^-3/2 over the top three quarters
    std::vector<int> fit;
    const int vmax = vs.empty() ? 0 : vs.back();
    for (int V : vs)
        if (4 * V >= vmax && V >= 20) fit.push_back(V);
    if (fit.size() >= 8) {
        Eigen::MatrixXd A(fit.size(), 6);
        Eigen::VectorXd y(fit.size());
        for (size_t i = 0; i < fit.size(); ++i) {
            double n = fit[i] / 2.0;
            A.row(i) << 1.0, n, std::log(n), 1.0 / std::sqrt(n), 1.0 / n, 1.0 / (n * std::sqrt(n));
            y(i) = log_bigint(coeffs[fit[i]]);
        }
        Eigen::VectorXd x = A.colPivHouseholderQr().solve(y);
        rep.fitted_rate = std::exp(static_cast<long double>(x(1)));
        rep.fitted_exponent = x(2);
    }
    if (rep.rows.size() >= 10) {
        rep.trend_to_one = true;
        for (size_t i = rep.rows.size() - 9; i < rep.rows.size(); ++i)
            if (std::fabs(rep.rows[i].ratio - 1) > std::fabs(rep.rows[i - 1].ratio - 1)) rep.trend_to_one = false;
    }
    return rep;
}

std::string series_csv(const VSeries& s) {
    std::ostringstream os;
    os << "two_n,coefficient\n";
    for (int k = 0; k <= s.order(); ++k) os << k << ',' << s[k] << '\n';
    return os.str();
}

std::string ratio_csv(const RatioReport& r) {
    std::ostringstream os;
    os.precision(12);
    os << "n,ratio,fitted_rate,fitted_exponent\n";
    for (const RatioRow& row : r.rows)
        os << static_cast<double>(row.n) << ',' << static_cast<double>(row.ratio) << ','
           << static_cast<double>(r.fitted_rate) << ',' << static_cast<double>(r.fitted_exponent) << '\n';
    return os.str();
}

}  // namespace momaps

#pragma once

/// Truncated power-series arithmetic for the extremal functions and the
/// initial-coefficient bounds.  Two scalar modes: exact rationals (the
/// coefficient identities are equalities, so they are checked exactly) and
/// doubles for everything else.

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "cusp/errors.hpp"

namespace cusp::series {

using Rational = boost::multiprecision::cpp_rational;

/// Coefficients a_0..a_K of a power series truncated at order K.
template <typename T>
struct BasicSeries {
    std::vector<T> coeffs;  // size K+1

    int order() const { return int(coeffs.size()) - 1; }
    static BasicSeries zero(int K) { return BasicSeries{std::vector<T>(K + 1, T(0))}; }
    const T& operator[](int k) const { return coeffs[k]; }
    T& operator[](int k) { return coeffs[k]; }
};

using TruncatedSeries = BasicSeries<double>;
using RationalSeries = BasicSeries<Rational>;

template <typename T>
BasicSeries<T> mul(const BasicSeries<T>& a, const BasicSeries<T>& b) {
    const int K = std::min(a.order(), b.order());
    auto out = BasicSeries<T>::zero(K);
    for (int m = 0; m <= K; ++m)
        for (int j = 0; j <= m; ++j) out[m] += a.coeffs[j] * b.coeffs[m - j];
    return out;
}

/// exp of a series with zero constant term, via the differential recurrence
/// m g_m = sum_{k=1..m} k s_k g_{m-k}.  Exact in rational mode.
template <typename T>
BasicSeries<T> series_exp(const BasicSeries<T>& s) {
    if (!(s.coeffs.at(0) == T(0)))
        throw NonzeroConstantTerm("series_exp: constant term must be zero");
    const int K = s.order();
    auto g = BasicSeries<T>::zero(K);
    g[0] = T(1);
    for (int m = 1; m <= K; ++m) {
        T acc(0);
        for (int k = 1; k <= m; ++k) acc += T(k) * s.coeffs[k] * g.coeffs[m - k];
        g[m] = acc / T(m);
    }
    return g;
}

/// Coefficients of f_i(z) = z exp(c z^{i-1} + d z^{n(i-1)}) with
/// c = n/((i-1)(n+1)) and d = 1/(n(i-1)(n+1)); i = 2 is the extremal function
/// of the class itself.  T is Rational or double.
template <typename T>
BasicSeries<T> extremal_series(int n, int i, int K) {
    if (n < 4 || n % 2 != 0) throw OutOfRange("extremal_series: n must be even >= 4");
    if (i < 2 || i > 5) throw OutOfRange("extremal_series: i in 2..5");
    if (K < i) throw OutOfRange("extremal_series: K must be >= i");
    auto s = BasicSeries<T>::zero(K - 1);
    const int p = i - 1;
    if (p <= K - 1) s[p] = T(n) / (T(p) * T(n + 1));
    if (n * p <= K - 1) s[n * p] += T(1) / (T(n) * T(p) * T(n + 1));
    auto g = series_exp(s);
    auto f = BasicSeries<T>::zero(K);
    for (int m = 0; m <= K - 1; ++m) f[m + 1] = g.coeffs[m];
    return f;
}

/// Exact-mode front end; the rational path is meant for small orders.
RationalSeries extremal_series_exact(int n, int i, int K);

/// Checks (m-1) a_m = sum_{k=1}^{m-1} b_k a_{m-k} for 2 <= m <= K, where
/// p = 1 + sum b_k z^k and f = z + sum a_m z^m (normalized a_1 = 1).
bool verify_recurrence(const TruncatedSeries& p, const TruncatedSeries& f, double tol = 1e-12);

struct CoefficientReport {
    int n = 0;
    std::vector<double> bounds;           // stated bounds for |a_2|..|a_5|
    std::vector<double> extremal_values;  // a_i of f_i, i = 2..5
    std::vector<std::string> bounds_exact;
    std::vector<std::string> extremal_exact;
    std::vector<bool> agreement;          // extremal <= bound + 1e-12
    std::vector<std::string> errata;      // human-readable discrepancy notes
};

/// The four stated bounds beside the extremal-function coefficients.  The
/// |a_4| row disagrees (stated n/(12(n+1)) vs extremal n/(3(n+1))) and is
/// reported as an erratum rather than asserted either way.
CoefficientReport coefficient_bounds(int n);

/// Caratheodory coefficient predicates.
/// cubic:  0 <= beta <= 1 and beta(2 beta - 1) <= delta <= beta.
bool caratheodory_cubic_criterion(const Rational& beta, const Rational& delta);
/// quartic: 0 < alpha < 1, 0 < a < 1 and
///   8a(1-a)((alpha beta - 2 gamma)^2 + (alpha(a+alpha) - beta)^2)
///     + alpha(1-alpha)(beta - a alpha)^2 <= 4 alpha^2 (1-alpha)^2 a (1-a).
bool caratheodory_quartic_criterion(const Rational& alpha, const Rational& a, const Rational& beta,
                 const Rational& gamma);

/// Parameter choices that drive the fourth and fifth coefficient bounds.
void fourth_coefficient_params(int n, Rational& beta, Rational& delta);
void fifth_coefficient_params(int n, Rational& alpha, Rational& a, Rational& beta, Rational& gamma);

/// The printed reduced form of the quartic-criterion slack,
/// -(5832 + 46656 n + ... + 1301 n^8)/(93312 (1+n)^8); non-positive for all
/// n tested.  The exact reduction differs slightly from the print (another
/// typo); caratheodory_quartic_criterion evaluates the genuine inequality.
Rational quartic_criterion_slack_printed(int n);

}  // namespace cusp::series

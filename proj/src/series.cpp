#include "cusp/series.hpp"

#include <cmath>
#include <sstream>

namespace cusp::series {

namespace {
std::string frac_str(const Rational& r) {
    std::ostringstream os;
    os << numerator(r) << "/" << denominator(r);
    return os.str();
}
}  // namespace

RationalSeries extremal_series_exact(int n, int i, int K) {
    if (K > 16) throw OutOfRange("extremal_series_exact: exact mode supports K <= 16");
    return extremal_series<Rational>(n, i, K);
}

bool verify_recurrence(const TruncatedSeries& p, const TruncatedSeries& f, double tol) {
    if (f.order() < 1 || std::abs(f.coeffs[1] - 1.0) > tol || std::abs(f.coeffs[0]) > tol)
        throw OutOfRange("verify_recurrence: f must be normalized, f = z + ...");
    const int K = std::min(p.order(), f.order());
    for (int m = 2; m <= K; ++m) {
        double rhs = 0.0;
        for (int k = 1; k <= m - 1; ++k)
            rhs += (k <= p.order() ? p.coeffs[k] : 0.0) * f.coeffs[m - k];
        if (std::abs((m - 1) * f.coeffs[m] - rhs) > tol) return false;
    }
    return true;
}

CoefficientReport coefficient_bounds(int n) {
    if (n < 4 || n % 2 != 0) throw OutOfRange("coefficient_bounds: n must be even >= 4");
    CoefficientReport rep;
    rep.n = n;
    const Rational N(n), M(n + 1);
    const Rational stated[4] = {N / M, N / (2 * M), N / (12 * M), N / (4 * M)};
    for (int idx = 0; idx < 4; ++idx) {
        const int i = idx + 2;
        auto f = extremal_series_exact(n, i, i + 1);
        const Rational ai = f.coeffs[i];
        rep.bounds.push_back(double(stated[idx]));
        rep.extremal_values.push_back(double(ai));
        rep.bounds_exact.push_back(frac_str(stated[idx]));
        rep.extremal_exact.push_back(frac_str(ai));
        rep.agreement.push_back(double(ai) <= double(stated[idx]) + 1e-12);
        if (!(ai <= stated[idx])) {
            std::ostringstream os;
            os << "|a_" << i << "|: stated bound " << frac_str(stated[idx])
               << " is exceeded by the extremal coefficient " << frac_str(ai)
               << "; the Caratheodory estimate yields n/(3(n+1)) for this index";
            rep.errata.push_back(os.str());
        }
    }
    {
        // The series print of the extremal function gives its z^3 coefficient
        // as n^2/(2(n+1)); the expansion gives n^2/(2(n+1)^2).
        auto f = extremal_series_exact(n, 2, 3);
        std::ostringstream os;
        os << "extremal-function z^3 coefficient: printed " << frac_str(Rational(n * n) / (2 * M))
           << ", expansion gives " << frac_str(f.coeffs[3]);
        rep.errata.push_back(os.str());
    }
    return rep;
}

bool caratheodory_cubic_criterion(const Rational& beta, const Rational& delta) {
    return beta >= 0 && beta <= 1 && beta * (2 * beta - 1) <= delta && delta <= beta;
}

bool caratheodory_quartic_criterion(const Rational& alpha, const Rational& a, const Rational& beta,
                 const Rational& gamma) {
    if (!(alpha > 0 && alpha < 1 && a > 0 && a < 1)) return false;
    const Rational t1 = alpha * beta - 2 * gamma;
    const Rational t2 = alpha * (a + alpha) - beta;
    const Rational t3 = beta - a * alpha;
    const Rational lhs =
        8 * a * (1 - a) * (t1 * t1 + t2 * t2) + alpha * (1 - alpha) * t3 * t3;
    const Rational rhs = 4 * alpha * alpha * (1 - alpha) * (1 - alpha) * a * (1 - a);
    return lhs <= rhs;
}

void fourth_coefficient_params(int n, Rational& beta, Rational& delta) {
    beta = Rational(n + 4) / (8 * Rational(n + 1));
    delta = Rational(n + 2) / (8 * Rational(n + 1) * Rational(n + 1));
}

void fifth_coefficient_params(int n, Rational& alpha, Rational& a, Rational& beta,
                          Rational& gamma) {
    const Rational M(n + 1);
    alpha = Rational(n + 3) / (6 * M);
    a = Rational(n + 2) / (4 * M);
    beta = Rational(n) * n + 7 * Rational(n) + 9;
    beta /= 18 * M * M;
    gamma = Rational(n + 2) * Rational(2 * n + 3) / (48 * M * M * M);
}

Rational quartic_criterion_slack_printed(int n) {
    const Rational N(n);
    Rational num = 5832 + 46656 * N + 156564 * N * N + 286536 * N * N * N +
                   310942 * N * N * N * N + 203428 * N * N * N * N * N +
                   77806 * N * N * N * N * N * N + 15816 * N * N * N * N * N * N * N +
                   1301 * N * N * N * N * N * N * N * N;
    Rational den = 93312;
    for (int k = 0; k < 8; ++k) den *= (1 + N);
    return -num / den;
}

}  // namespace cusp::series

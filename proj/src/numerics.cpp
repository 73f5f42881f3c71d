#include "cusp/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace cusp::num {

namespace {
constexpr double kInvE = 0.36787944117144233;  // 1/e
}

double find_root_bracketed(const RootProblem& p) {
    if (!(p.lo < p.hi)) throw OutOfDomain("find_root_bracketed: lo must be < hi");
    if (!(p.tol > 0.0)) throw OutOfDomain("find_root_bracketed: tol must be > 0");

    double a = p.lo, b = p.hi;
    double fa = p.f(a), fb = p.f(b);
    if (!std::isfinite(fa) || !std::isfinite(fb))
        throw OutOfDomain("find_root_bracketed: f not finite at bracket ends");
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    if (fa * fb > 0.0) throw NoSignChange("find_root_bracketed: f(lo) and f(hi) have the same sign");

    // Bisection with a secant candidate each step; the secant point is used
    // only when it falls safely inside the bracket, so convergence is
    // guaranteed and the sequence is deterministic.
    while (b - a > p.tol) {
        double mid = 0.5 * (a + b);
        double x = mid;
        const double denom = fb - fa;
        if (denom != 0.0) {
            const double sec = a - fa * (b - a) / denom;
            const double margin = 0.01 * (b - a);
            if (sec > a + margin && sec < b - margin) x = sec;
        }
        double fx = p.f(x);
        if (!std::isfinite(fx)) { x = mid; fx = p.f(x); }
        if (fx == 0.0) return x;
        if (fa * fx < 0.0) {
            b = x; fb = fx;
        } else {
            a = x; fa = fx;
        }
    }
    return 0.5 * (a + b);
}

double smallest_positive_root(const std::function<double(double)>& f, double hi,
                              int grid, double tol) {
    if (!(hi > 0.0) || hi > 1.0) throw OutOfDomain("smallest_positive_root: need 0 < hi <= 1");
    if (grid < 64) throw OutOfDomain("smallest_positive_root: grid must be >= 64");

    const double eps = hi / grid;
    double prev_r = eps;
    double prev_f = f(prev_r);
    if (!std::isfinite(prev_f)) throw NoRoot("smallest_positive_root: f not finite near 0");
    if (prev_f == 0.0) return prev_r;
    const bool start_negative = prev_f < 0.0;

    for (int j = 2; j <= grid; ++j) {
        const double r = hi * j / grid;
        const double fr = f(r);
        if (fr == 0.0) return r;
        if ((prev_f < 0.0) != (fr < 0.0)) {
            RootProblem p;
            p.f = f; p.lo = prev_r; p.hi = r; p.tol = tol;
            return find_root_bracketed(p);
        }
        prev_r = r;
        prev_f = fr;
    }
    // No sign change on (0, hi].
    if (start_negative) return hi;  // constraint satisfied throughout: saturate
    throw NoRoot("smallest_positive_root: constraint violated on the whole interval");
}

double lambert_w0(double x) {
    if (x < -kInvE - 1e-15) throw OutOfDomain("lambert_w0: x < -1/e");
    if (x == 0.0) return 0.0;

    double w;
    if (x < -kInvE + 1e-14) {
        w = -1.0;
        // At the branch point Halley cannot improve; the series value is exact
        // to the precision of the argument.
        const double p = std::sqrt(std::max(0.0, 2.0 * (std::exp(1.0) * x + 1.0)));
        return -1.0 + p - p * p / 3.0 + 11.0 * p * p * p / 72.0;
    }
    if (x < 0.0) {
        const double p = std::sqrt(2.0 * (std::exp(1.0) * x + 1.0));
        w = -1.0 + p - p * p / 3.0 + 11.0 * p * p * p / 72.0;
    } else {
        w = std::log1p(x);  // globally convergent seed for x >= 0
    }

    for (int it = 0; it < 64; ++it) {
        const double ew = std::exp(w);
        const double r = w * ew - x;
        const double d1 = ew * (w + 1.0);
        const double step = r / (d1 - 0.5 * r * (w + 2.0) / (w + 1.0));  // Halley
        w -= step;
        if (std::abs(step) <= 1e-16 * std::max(1.0, std::abs(w))) break;
    }
    return w;
}

Complex lambert_w0(Complex x) {
    if (x == Complex(0.0, 0.0)) return {0.0, 0.0};

    Complex w;
    const Complex ex1 = std::exp(1.0) * x + 1.0;
    if (std::abs(ex1) < 0.25) {
        const Complex p = std::sqrt(2.0 * ex1);
        w = -1.0 + p - p * p / 3.0 + 11.0 * p * p * p / 72.0;
    } else if (std::abs(x) < 0.5) {
        w = x * (1.0 - x + 1.5 * x * x);
    } else {
        w = std::log(1.0 + x);
    }

    for (int it = 0; it < 100; ++it) {
        const Complex ew = std::exp(w);
        const Complex r = w * ew - x;
        const Complex d1 = ew * (w + 1.0);
        Complex denom = d1 - 0.5 * r * (w + 2.0) / (w + 1.0);
        if (denom == Complex(0.0, 0.0)) denom = d1;
        const Complex step = r / denom;
        w -= step;
        if (std::abs(step) <= 1e-16 * std::max(1.0, std::abs(w))) break;
    }
    return w;
}

Complex principal_sqrt(Complex z) { return std::sqrt(z); }

Complex principal_log(Complex z) {
    if (z == Complex(0.0, 0.0)) throw BranchPole("principal_log: log(0)");
    return std::log(z);
}

Complex principal_asin(Complex z) { return std::asin(z); }

Complex principal_acos(Complex z) {
    constexpr double half_pi = 1.5707963267948966;
    return Complex(half_pi, 0.0) - std::asin(z);
}

Complex pow_int(Complex z, int n) {
    if (n < 0) return 1.0 / pow_int(z, -n);
    Complex acc(1.0, 0.0);
    Complex base = z;
    while (n > 0) {
        if (n & 1) acc *= base;
        base *= base;
        n >>= 1;
    }
    return acc;
}

}  // namespace cusp::num

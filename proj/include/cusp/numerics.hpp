#pragma once

/// Scalar numerical kernel: bracketed root finding, smallest-positive-root
/// scans on (0,1], the principal Lambert W branch (real and complex), and
/// principal-branch complex elementary functions.
///
/// Branch conventions used throughout the library:
///   sqrt: principal, arg in (-pi/2, pi/2]
///   log:  principal, Im in (-pi, pi]
///   asin(z) = -i log(iz + sqrt(1 - z^2))
/// All functions here are pure; safe for concurrent use.

#include <complex>
#include <functional>

#include "cusp/errors.hpp"

namespace cusp::num {

using Complex = std::complex<double>;

/// A scalar root problem on a bracket [lo, hi].
struct RootProblem {
    std::function<double(double)> f;
    double lo = 0.0;
    double hi = 1.0;
    double tol = 1e-12;
};

/// Bracketed root: bisection refined by a safeguarded secant step.
/// Requires f(lo)*f(hi) <= 0; throws NoSignChange otherwise.
/// Deterministic; final bracket width <= tol.
double find_root_bracketed(const RootProblem& p);

/// Scan (0, hi] on a uniform grid for the first sign change of f, then
/// refine with find_root_bracketed.  If f never changes sign:
///   - f < 0 on the whole grid: the constraint is satisfied throughout,
///     the radius saturates, return hi;
///   - f > 0 on the whole grid: no admissible radius, throw NoRoot.
double smallest_positive_root(const std::function<double(double)>& f, double hi,
                              int grid = 4096, double tol = 1e-12);

/// Principal real Lambert W on [-1/e, inf): returns w >= -1 with w e^w = x.
/// Halley iteration from a branch-appropriate seed.  Throws OutOfDomain for
/// x < -1/e.
double lambert_w0(double x);

/// Principal complex Lambert W branch (W0): the solution of w e^w = x that is
/// analytic at 0 with W0(0) = 0.  Arguments on the cut (-inf, -1/e] resolve to
/// the upper-side limit; both sides have equal modulus, which is all the
/// region predicates need.
Complex lambert_w0(Complex x);

/// Principal branches. log throws BranchPole at 0.
Complex principal_sqrt(Complex z);
Complex principal_log(Complex z);
Complex principal_asin(Complex z);
/// acos z = pi/2 - asin z (derived; used by the cosine-region predicates).
Complex principal_acos(Complex z);

/// Integer power by binary exponentiation (exact operation count, no exp/log).
Complex pow_int(Complex z, int n);

}  // namespace cusp::num

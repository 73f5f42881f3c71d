#pragma once

/// Geometry of the n-cusp epicycloid domain: the image of the unit disk under
///     phi(z) = 1 + n z/(n+1) + z^n/(n+1),   n even, n >= 4.
/// The boundary curve has n-1 inward-pointing cusps at parameter angles
/// (2k-1) pi/(n-1); the domain is starlike with respect to 1, which the
/// membership oracle exploits.

#include <memory>
#include <vector>

#include "cusp/numerics.hpp"

namespace cusp::geom {

using num::Complex;

/// Point on the boundary curve at parameter t in (-pi, pi].
struct BoundaryPoint {
    double t;
    double x;
    double y;
};

struct CuspSet {
    std::vector<double> angles;   // all n-1 cusp parameters in (-pi, pi], ascending
    Complex primary_cusp;         // gamma = e^{i pi/(n-1)} on the unit circle
};

/// Query for the largest disk centred at (a, 0) inside the domain.
/// Admissible centres: 2/(n+1) < a < 2.
struct InscribedDiskQuery {
    double a;
    int n;
};

enum class Verdict { Inside, Outside, Boundary };

class EpicycloidDomain {
  public:
    /// Rejects n odd or n < 4.
    explicit EpicycloidDomain(int n);

    int n() const { return n_; }

    /// phi(z); z^n computed by binary exponentiation.
    Complex phi(Complex z) const;

    /// Parametric boundary point; equals phi(e^{it}) componentwise.
    BoundaryPoint boundary(double t) const;

    CuspSet cusps() const;

    /// Squared distance from (a, 0) to the boundary point at parameter t.
    double sigma(const InscribedDiskQuery& q, double t) const;

    /// Largest disk centred at (a,0) inside the domain, piecewise in a with
    /// breakpoint a3:
    ///     a - 2/(n+1)              on (2/(n+1), 1]
    ///     sqrt(sigma(pi/(n-1)))    on [1, a3]      (distance to the cusp)
    ///     2 - a                    on [a3, 2)
    /// The middle branch is the square root of the squared-distance function;
    /// the brute-force oracle in the verification suite confirms this choice.
    double inscribed_radius(const InscribedDiskQuery& q) const;

    /// Breakpoint a3: closed form, checked internally against the defining
    /// equation sigma(pi/(n-1)) = sigma(0) and the bracket
    /// (2(1+n^2)/(1+n)^2, 2).
    double a3_threshold() const;

    /// alpha_0 = min over |z|=1 of Re phi(z), attained at t0 = n pi/(n+1).
    double min_real_part() const;

    /// beta_0 = max over |z|=1 of |arg phi(z)| = arctan(sin(pi/n)/(1-cos(pi/n))).
    double max_argument() const;

    /// Membership by the winding number of the sampled boundary polyline
    /// (`samples` vertices, uniform in t).  Returns Boundary when the query
    /// point is within 10 local segment lengths of the polyline.
    Verdict contains_point(Complex w, int samples = 8192) const;

    /// Distance from w to the sampled boundary polyline (same cache as
    /// contains_point).  Used by clearance reports.
    double boundary_distance(Complex w, int samples = 8192) const;

    /// max over a dense t-grid of | |phi(e^{it}) - 1| - 1 |; analytically
    /// 2/(n+1) (the boundary lies between the circles of radius (n-1)/(n+1)
    /// and 1 about the point 1).
    double hausdorff_gap_to_unit_circle(int samples = 100000) const;

    struct Polyline;  // sampled boundary with angle index; built lazily

  private:
    const Polyline& polyline(int samples) const;

    int n_;
    mutable std::shared_ptr<void> cache_;  // opaque polyline cache, see .cpp
};

}  // namespace cusp::geom

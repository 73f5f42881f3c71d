#pragma once

/// The radius calculus: forward radii (largest r such that class-C behaviour
/// on |z| < r forces epicycloid-class behaviour), backward radii (the
/// converse), the limits as n grows, and the sampling oracles that validate
/// every closed form by region containment.

#include <optional>
#include <string>
#include <vector>

#include "cusp/classes.hpp"
#include "cusp/domain.hpp"

namespace cusp::radii {

using cls::ComparatorClass;
using geom::EpicycloidDomain;
using num::Complex;

enum class Direction { Forward, Backward };

struct OracleOptions {
    int curve_samples = 2048;     // samples on the reachable-set boundary
    int boundary_samples = 8192;  // epicycloid polyline density (forward only)
    double tol = 1e-5;            // bisection tolerance on r
};

struct RadiusOptions {
    bool with_oracle = true;
    OracleOptions oracle;
    double agree_tol = 1e-4;
};

struct RadiusResult {
    Direction direction = Direction::Forward;
    std::string class_name;
    int n = 0;
    double closed_form = 0.0;                    // clamped to [0, 1]
    std::optional<Complex> closed_form_complex;  // before taking the modulus
    std::optional<double> oracle;
    std::optional<bool> agree;
    std::string errata_note;
};

/// Signed clearance data from sampling one region's image curve against
/// another region's boundary.
struct ContainmentReport {
    double r = 0.0;
    double min_clearance = 0.0;  // negative when some sample is outside
    double touching_angle = 0.0; // curve parameter of the minimal-clearance sample
};

/// Closed-form forward radius of class c with respect to the n-cusp class,
/// with oracle cross-check when requested.  Throws UnsupportedClass for
/// classes without a forward formula.
RadiusResult forward_radius(const ComparatorClass& c, const EpicycloidDomain& d,
                            const RadiusOptions& opts = {});

/// Backward radius: root of the disk equation r^n + n r - (n+1) kappa = 0
/// (symmetric threshold) or r^n - n r + (n+1) kappa' = 0 (left-edge classes),
/// saturating at 1 when the equation has no root in (0, 1].
RadiusResult backward_radius(const ComparatorClass& c, const EpicycloidDomain& d,
                             const RadiusOptions& opts = {});

/// Sup of r such that the class-C reachable set at radius r lies inside the
/// epicycloid domain; bisection over full containment of sampled boundaries.
double forward_oracle(const ComparatorClass& c, const EpicycloidDomain& d,
                      const OracleOptions& opts = {});

/// Sup of r such that the epicycloid image curve at radius r lies inside
/// Omega_C (exact membership predicates; no polyline bias).
double backward_oracle(const ComparatorClass& c, const EpicycloidDomain& d,
                       const OracleOptions& opts = {});

/// Sin / nephroid forward radii with the parity cusp selection (n = 2k uses
/// the cusp nearest the imaginary axis).  The complex solution is retained.
RadiusResult parity_radius_sin_ne(const ComparatorClass& c, const EpicycloidDomain& d,
                                  const RadiusOptions& opts = {});

/// Lower bound for the convexity-class radius; no sharpness claim.
double strohhacker_bound(const EpicycloidDomain& d);

/// The classes whose whole region lies inside the domain (radius 1),
/// verified by sampling.  Throws VerificationFailed on an Outside verdict.
std::vector<ComparatorClass> unit_radius_classes(const EpicycloidDomain& d,
                                                 int samples = 4096);

/// Forward closed forms evaluated in the large-n limit (n = 10^6).
double limit_radius(const ComparatorClass& c);

/// Clearance of the forward configuration at radius r: min distance of the
/// sampled reachable-set boundary to the epicycloid polyline, signed by the
/// membership verdict.
ContainmentReport forward_containment_report(const ComparatorClass& c,
                                             const EpicycloidDomain& d, double r,
                                             const OracleOptions& opts = {});

///Same for the backward configuration; the clearance is the membership-margin
/// proxy of the deepest sample (predicate units, not a distance).
ContainmentReport backward_containment_report(const ComparatorClass& c,
                                              const EpicycloidDomain& d, double r,
                                              const OracleOptions& opts = {});

}  // namespace cusp::radii

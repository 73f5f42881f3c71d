#pragma once

/// Inclusion constants between the epicycloid class and the parameterized
/// comparator classes: thresholds on the parameter for which one class sits
/// inside the other.

#include "cusp/domain.hpp"

namespace cusp::inclusion {

struct InclusionReport {
    int n = 0;
    double alpha0 = 0.0;                     // largest order: S*_nL in S*(alpha)
    double beta0 = 0.0;                      // argument bound: S*_nL in SS*(2 beta0/pi)
    double sl_alpha_min = 0.0;               // SL*(alpha) inside for alpha >= this
    double cassinian_c_max = 0.0;            // S*(sqrt(1+cz)) inside for c <= this
    double janowski_uniform_alpha_min = 0.0; // S*[1-alpha,0] inside for alpha >= this
    double alpha_alpha_max = 0.0;            // S*[alpha,-alpha] inside for alpha <= this
    double m_beta_min = 0.0;                 // S*_nL in M(beta) for beta >= this
};

/// All constants of the report; each is checked against its stated range.
InclusionReport inclusion_constants(const geom::EpicycloidDomain& d);

/// Whether the Janowski reachable disk (centre (1-AB)/(1-B^2), radius
/// (A-B)/(1-B^2)) lies inside the epicycloid domain, by the three
/// inscribed-disk cases with breakpoint a3.  Throws ParamOrder for B >= A.
bool janowski_inclusion(const geom::EpicycloidDomain& d, double A, double B);

/// S*_nL inside the Janowski disk class S*[1, -(M-1)/M].
bool m_class_contains(const geom::EpicycloidDomain& d, double M);

/// S*_nL inside M(beta) (Re zf'/f < beta).
bool m_beta_contains(const geom::EpicycloidDomain& d, double beta);

}  // namespace cusp::inclusion

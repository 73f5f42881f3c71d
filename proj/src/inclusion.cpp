#include "cusp/inclusion.hpp"

#include <cmath>
#include <stdexcept>

namespace cusp::inclusion {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
}

InclusionReport inclusion_constants(const geom::EpicycloidDomain& d) {
    const int n = d.n();
    InclusionReport rep;
    rep.n = n;
    rep.alpha0 = d.min_real_part();
    rep.beta0 = d.max_argument();
    rep.sl_alpha_min = 2.0 / (n + 1);
    rep.cassinian_c_max = 1.0 - 4.0 / (double(n + 1) * (n + 1));
    rep.janowski_uniform_alpha_min = 2.0 / (n + 1);

    const num::Complex t = std::polar(1.0, kPi / (n - 1));
    const num::Complex tn = -t;  // t^n = e^{i n pi/(n-1)} = -t for n even
    rep.alpha_alpha_max = std::abs((tn + double(n) * t) /
                                   (2.0 + tn + 2.0 * double(n) + double(n) * t));
    rep.m_beta_min = 2.0;

    if (!(rep.alpha0 > 0.0 && rep.alpha0 < 1.0))
        throw std::logic_error("inclusion_constants: alpha0 outside (0,1)");
    if (!(rep.beta0 > 0.0 && rep.beta0 < kPi / 2))
        throw std::logic_error("inclusion_constants: beta0 outside (0, pi/2)");
    if (!(rep.cassinian_c_max > 0.0 && rep.cassinian_c_max < 1.0))
        throw std::logic_error("inclusion_constants: cassinian threshold outside (0,1)");
    if (!(rep.alpha_alpha_max > 0.0 && rep.alpha_alpha_max < 1.0))
        throw std::logic_error("inclusion_constants: alpha_alpha_max outside (0,1)");
    return rep;
}

bool janowski_inclusion(const geom::EpicycloidDomain& d, double A, double B) {
    if (B >= A) throw ParamOrder("janowski_inclusion: need B < A");
    if (!(B >= -1.0 && A <= 1.0)) throw OutOfRange("janowski_inclusion: need -1 <= B < A <= 1");

    const int n = d.n();
    const double denom = 1.0 - B * B;
    if (denom <= 0.0) return false;  // B = -1: half-plane image, unbounded
    const double a = (1.0 - A * B) / denom;
    const double r = (A - B) / denom;

    const double left = 2.0 / (n + 1);
    if (!(a > left && a < 2.0)) return false;
    if (a <= 1.0) return r <= a - left;
    if (a < d.a3_threshold()) {
        const num::Complex cusp = d.phi(std::polar(1.0, kPi / (n - 1)));
        return r <= std::abs(cusp - a);
    }
    return r <= 2.0 - a;
}

bool m_class_contains(const geom::EpicycloidDomain&, double M) { return M >= 1.0; }

bool m_beta_contains(const geom::EpicycloidDomain&, double beta) { return beta >= 2.0; }

}  // namespace cusp::inclusion

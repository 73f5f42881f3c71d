#include "cusp/radii.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include "cusp/inclusion.hpp"

namespace cusp::radii {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kSqrt2 = 1.4142135623730951;

/// gamma^m on the unit circle, gamma = e^{i pi/(n-1)}; computed from the
/// angle so large n stays exact.
Complex cusp_power(int n, double m) { return std::polar(1.0, m * kPi / (n - 1)); }

/// q = (n gamma + gamma^n)/(n+1) = (n-1) gamma/(n+1): the primary cusp seen
/// from the centre 1.
Complex cusp_offset(int n) { return double(n - 1) / double(n + 1) * cusp_power(n, 1.0); }

double clamp01(double x) { return std::clamp(x, 0.0, 1.0); }

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(6);
    os << std::fixed << v;
    return os.str();
}

/// Reachable-set boundary of class c at radius r, sampled at `samples`
/// uniform angles.  Ratio/growth classes use their sharp disk bound; the
/// Ma-Minda classes use phi_C itself.
std::vector<Complex> reachable_boundary(const ComparatorClass& c, double r, int samples) {
    std::vector<Complex> out(samples);
    const double rr = std::min(r, 1.0 - 1e-12);
    Complex center(1.0, 0.0);
    double rho = 0.0;
    bool disk = true;
    switch (c.tag()) {
        case cls::Tag::W: rho = 2.0 * rr / (1.0 - rr * rr); break;
        case cls::Tag::F1: rho = 4.0 * rr / (1.0 - rr * rr); break;
        case cls::Tag::F2: rho = (3.0 * rr + rr * rr) / (1.0 - rr * rr); break;
        case cls::Tag::BS: rho = rr / (1.0 - c.param() * rr * rr); break;
        case cls::Tag::MBeta: {
            const double b = c.param();
            center = Complex((1.0 + (1.0 - 2.0 * b) * rr * rr) / (1.0 - rr * rr), 0.0);
            rho = 2.0 * rr * (b - 1.0) / (1.0 - rr * rr);
            break;
        }
        default: disk = false; break;
    }
    for (int j = 0; j < samples; ++j) {
        const double t = -kPi + 2.0 * kPi * (j + 1) / samples;
        out[j] = disk ? center + rho * std::polar(1.0, t) : c.phi_of(std::polar(rr, t));
    }
    return out;
}

double curve_parameter(int j, int samples) { return -kPi + 2.0 * kPi * (j + 1) / samples; }

/// Cusp selection for n = 2k: the odd multiple of pi/(n-1) nearest pi/2.
int parity_cusp_index(int n) {
    const int k = n / 2;
    return (k % 2 == 1) ? k : k - 1;
}

/// Smallest-modulus root of R^3 - 3 R + q0 = 0 (Cardano plus a Newton polish).
Complex cubic_smallest_root(Complex q0) {
    const Complex disc = std::sqrt(0.25 * q0 * q0 - 1.0);
    Complex u3 = -0.5 * q0 + disc;
    if (std::abs(u3) < 1e-8) u3 = -0.5 * q0 - disc;
    const Complex u = std::exp(std::log(u3) / 3.0);
    const Complex omega(-0.5, 0.8660254037844386);
    Complex best(0.0, 0.0);
    double best_mod = 1e300;
    Complex w = u;
    for (int m = 0; m < 3; ++m) {
        Complex root = w + 1.0 / w;
        for (int it = 0; it < 8; ++it) {  // polish
            const Complex f = root * root * root - 3.0 * root + q0;
            const Complex fp = 3.0 * root * root - 3.0;
            if (std::abs(fp) < 1e-14) break;
            root -= f / fp;
        }
        if (std::abs(root) < best_mod) { best_mod = std::abs(root); best = root; }
        w *= omega;
    }
    return best;
}

void attach_oracle(RadiusResult& res, const ComparatorClass& c, const EpicycloidDomain& d,
                   const RadiusOptions& opts, bool backward) {
    if (!opts.with_oracle) return;
    const double o = backward ? backward_oracle(c, d, opts.oracle)
                              : forward_oracle(c, d, opts.oracle);
    res.oracle = o;
    res.agree = std::abs(o - res.closed_form) <= opts.agree_tol;
    if (!*res.agree && res.errata_note.empty()) {
        res.errata_note = "closed form and containment oracle differ by " +
                          fmt(o - res.closed_form) +
                          (backward ? ""
                                    : "; the closed form is a touching heuristic at the "
                                      "primary cusp");
    }
}

}  // namespace

double strohhacker_bound(const EpicycloidDomain& d) {
    const int n = d.n();
    const Complex g = cusp_power(n, 1.0);
    const Complex gn = -g;  // gamma^n = -gamma (n even)
    return std::abs((gn + double(n) * g) / (1.0 + gn + double(n) + double(n) * g));
}

double forward_oracle(const ComparatorClass& c, const EpicycloidDomain& d,
                      const OracleOptions& opts) {
    auto contained = [&](double r) {
        const auto pts = reachable_boundary(c, r, opts.curve_samples);
        for (const Complex& w : pts)
            if (d.contains_point(w, opts.boundary_samples) != geom::Verdict::Inside)
                return false;
        return true;
    };
    if (contained(1.0)) return 1.0;
    double lo = 0.0, hi = 1.0;
    while (hi - lo > opts.tol) {
        const double mid = 0.5 * (lo + hi);
        (contained(mid) ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

double backward_oracle(const ComparatorClass& c, const EpicycloidDomain& d,
                       const OracleOptions& opts) {
    auto contained = [&](double r) {
        for (int j = 0; j < opts.curve_samples; ++j) {
            const double t = curve_parameter(j, opts.curve_samples);
            const Complex w = d.phi(std::polar(std::min(r, 1.0 - 1e-12), t));
            if (c.membership(w) != geom::Verdict::Inside) return false;
        }
        return true;
    };
    if (contained(1.0)) return 1.0;
    double lo = 0.0, hi = 1.0;
    while (hi - lo > opts.tol) {
        const double mid = 0.5 * (lo + hi);
        (contained(mid) ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

RadiusResult parity_radius_sin_ne(const ComparatorClass& c, const EpicycloidDomain& d,
                                  const RadiusOptions& opts) {
    if (c.tag() != cls::Tag::Sin && c.tag() != cls::Tag::Nephroid)
        throw UnsupportedClass("parity_radius_sin_ne: only sin and nephroid");
    const int n = d.n();
    const int j = parity_cusp_index(n);
    // gamma^{nj} = (-1)^j gamma^j and j is odd, so the right side is
    // (n-1) gamma^j/(n+1).
    const Complex target = double(n - 1) / double(n + 1) * cusp_power(n, double(j));

    RadiusResult res;
    res.direction = Direction::Forward;
    res.class_name = c.display_name();
    res.n = n;
    if (c.tag() == cls::Tag::Sin) {
        const Complex R = num::principal_asin(target);
        res.closed_form_complex = R;
        res.closed_form = clamp01(std::abs(R));
    } else {
        const Complex R = cubic_smallest_root(3.0 * target);
        res.closed_form_complex = R;
        res.closed_form = clamp01(std::abs(R));
    }
    attach_oracle(res, c, d, opts, /*backward=*/false);
    return res;
}

RadiusResult forward_radius(const ComparatorClass& c, const EpicycloidDomain& d,
                            const RadiusOptions& opts) {
    const int n = d.n();
    const double N1 = n + 1;
    const Complex g = cusp_power(n, 1.0);
    const Complex gn = -g;
    const Complex q = cusp_offset(n);  // (n gamma + gamma^n)/(n+1)
    const Complex y = 1.0 + q;         // cusp value phi(gamma)

    if (c.tag() == cls::Tag::Sin || c.tag() == cls::Tag::Nephroid)
        return parity_radius_sin_ne(c, d, opts);

    RadiusResult res;
    res.direction = Direction::Forward;
    res.class_name = c.display_name();
    res.n = n;

    switch (c.tag()) {
        case cls::Tag::MBeta: {
            const double b = c.param();
            res.closed_form = clamp01((n - 1.0) / ((2.0 * b - 1.0) * n + (2.0 * b - 3.0)));
            break;
        }
        case cls::Tag::BS: {
            const double a = c.param();
            res.closed_form =
                clamp01((std::sqrt(N1 * N1 + 4.0 * a * (n - 1.0) * (n - 1.0)) - N1) /
                        (2.0 * a * (n - 1.0)));
            res.errata_note =
                "positive root of alpha(n-1)r^2+(n+1)r-(n-1)=0; the printed closed form "
                "carries the negative root";
            break;
        }
        case cls::Tag::W:
            res.closed_form = clamp01((std::sqrt(2.0 * (1.0 + double(n) * n)) - N1) / (n - 1.0));
            break;
        case cls::Tag::F1:
            res.closed_form =
                clamp01((std::sqrt(5.0 * n * n + 6.0 * n + 5.0) - 2.0 * N1) / (n - 1.0));
            res.errata_note = "printed numerator sign flipped; positive root used";
            break;
        case cls::Tag::F2:
            res.closed_form =
                clamp01((std::sqrt(17.0 * n * n + 10.0 * n + 9.0) - 3.0 * N1) / (4.0 * n));
            res.errata_note = "printed numerator sign flipped; positive root used";
            break;
        case cls::Tag::SLalpha: {
            const double a = c.param();
            if (a >= 2.0 / N1) {
                res.closed_form = 1.0;  // inclusion threshold reached
            } else {
                res.closed_form = clamp01((n - 1.0) * (n + 3.0 - 2.0 * a * N1) /
                                          (N1 * N1 * (1.0 - a) * (1.0 - a)));
                res.errata_note = "numerator sign corrected to (n-1)(n+3-2alpha(n+1))";
            }
            break;
        }
        case cls::Tag::Cassinian: {
            const double cc = c.param();
            if (cc <= 1.0 - 4.0 / (N1 * N1)) {
                res.closed_form = 1.0;  // inclusion range
            } else {
                res.closed_form = clamp01((n * n + 2.0 * n - 3.0) / (cc * N1 * N1));
            }
            break;
        }
        case cls::Tag::AlphaExp: {
            const double a = c.param();
            const Complex R =
                num::principal_log((N1 * y - a * N1) / (N1 * (1.0 - a)));
            res.closed_form_complex = R;
            res.closed_form = clamp01(std::abs(R));
            res.errata_note = "sign of the alpha terms in the printed numerator corrected";
            break;
        }
        case cls::Tag::EL: {
            const double a = c.param();
            Complex R;
            if (a == 0.0) {
                R = q;
            } else {
                const Complex h = (y - (1.0 - a)) / (1.0 - a);
                R = h - num::lambert_w0(a / (1.0 - a) * std::exp(h));
            }
            res.closed_form_complex = R;
            res.closed_form = clamp01(std::abs(R));
            res.errata_note =
                "printed expression lacks the (n+1)(1-alpha) normalization; the touching "
                "equation alpha e^R + (1-alpha)(1+R) = phi(gamma) is solved directly";
            break;
        }
        case cls::Tag::Cardioid: {
            const Complex R =
                -1.0 + std::sqrt(16.0 * N1 * N1 + 24.0 * N1 * (double(n) * g + gn)) / (4.0 * N1);
            res.closed_form_complex = R;
            res.closed_form = clamp01(std::abs(R));
            break;
        }
        case cls::Tag::Lune: {
            const Complex R = (y * y - 1.0) / (2.0 * y);
            res.closed_form_complex = R;
            res.closed_form = clamp01(std::abs(R));
            res.errata_note =
                "printed formula is incomplete; touching equation r+sqrt(1+r^2)=phi(gamma) "
                "solved directly";
            break;
        }
        case cls::Tag::RationalR: {
            const double k = 1.0 + kSqrt2;
            const Complex W = N1 * y;
            const Complex R =
                k * (std::sqrt(W * W + 4.0 * N1 * (double(n) * g + gn)) - W) / (2.0 * N1);
            res.closed_form_complex = R;
            res.closed_form = clamp01(std::abs(R));
            res.errata_note =
                "printed radical is inconsistent with the defining quadratic; root of "
                "smallest modulus used";
            break;
        }
        case cls::Tag::RL: {
            const double num_ = (n - 1.0) * (1.0 - kSqrt2 + 3.0 * n + kSqrt2 * n);
            const double den = 11.0 - 7.0 * kSqrt2 + 6.0 * n - 6.0 * kSqrt2 * n +
                               3.0 * double(n) * n + kSqrt2 * double(n) * n;
            res.closed_form = clamp01(num_ / den);
            break;
        }
        case cls::Tag::Lim: {
            const Complex R = std::sqrt(2.0 * (N1 + double(n) * g + gn) / N1) - kSqrt2;
            res.closed_form_complex = R;
            res.closed_form = clamp01(std::abs(R));
            break;
        }
        case cls::Tag::ZExp: {
            const Complex R = num::lambert_w0(q);
            res.closed_form_complex = R;
            res.closed_form = clamp01(std::abs(R));
            break;
        }
        case cls::Tag::Car: {
            const Complex R = -1.0 + std::sqrt((N1 + 2.0 * double(n) * g + 2.0 * gn) / N1);
            res.closed_form_complex = R;
            res.closed_form = clamp01(std::abs(R));
            break;
        }
        case cls::Tag::Janowski:
        case cls::Tag::OrderAlpha: {
            double A, B;
            if (c.tag() == cls::Tag::OrderAlpha) {
                A = 1.0 - 2.0 * c.param();
                B = -1.0;
            } else {
                A = c.param(0);
                B = c.param(1);
            }
            if (inclusion::janowski_inclusion(d, A, B)) {
                res.closed_form = 1.0;
            } else {
                const Complex R = (y - 1.0) / (A - B * y);
                res.closed_form_complex = R;
                res.closed_form = clamp01(std::abs(R));
            }
            break;
        }
        case cls::Tag::SG:
        case cls::Tag::Cos:
        case cls::Tag::Cosh:
            res.closed_form = 1.0;
            res.errata_note.clear();
            break;
        default:
            throw UnsupportedClass("forward_radius: no closed form for " + c.name());
    }

    attach_oracle(res, c, d, opts, /*backward=*/false);
    return res;
}

RadiusResult backward_radius(const ComparatorClass& c, const EpicycloidDomain& d,
                             const RadiusOptions& opts) {
    const int n = d.n();
    const auto thr = c.disk_threshold();

    RadiusResult res;
    res.direction = Direction::Backward;
    res.class_name = c.display_name();
    res.n = n;

    const bool symmetric = thr.kind == ComparatorClass::DiskThreshold::Kind::Symmetric;
    const double kappa = thr.value;
    auto equation = [&](bool sym, double kap) {
        return [n, sym, kap](double r) {
            const double rn = std::pow(r, n);
            return sym ? rn + n * r - (n + 1) * kap : rn - n * r + (n + 1) * kap;
        };
    };
    res.closed_form = num::smallest_positive_root(equation(symmetric, kappa), 1.0);

    if (c.tag() == cls::Tag::RationalR) {
        const double alt = num::smallest_positive_root(equation(false, kappa), 1.0);
        std::ostringstream os;
        os << "the published closed form prints r^n - rn - (n+1)(2*sqrt2+3) = 0, which has no root in (0,1); "
           << "the symmetric-disk equation reproduces the published table (" << fmt(res.closed_form)
           << "), the left-edge touching inequality gives " << fmt(alt)
           << "; the containment oracle adjudicates";
        res.errata_note = os.str();
        if (opts.with_oracle) {
            const double o = backward_oracle(c, d, opts.oracle);
            res.oracle = o;
            res.agree = std::abs(o - res.closed_form) <= opts.agree_tol;
            std::ostringstream os2;
            os2 << res.errata_note << ": oracle " << fmt(o) << " matches ";
            const bool near_main = std::abs(o - res.closed_form) <= opts.agree_tol;
            const bool near_alt = std::abs(o - alt) <= opts.agree_tol;
            if (near_main && !near_alt) os2 << "the symmetric-disk root";
            else if (near_alt && !near_main) os2 << "the left-edge root";
            else if (near_main && near_alt) os2 << "both candidates (indistinguishable at this n)";
            else os2 << "neither candidate";
            res.errata_note = os2.str();
        }
        return res;
    }

    attach_oracle(res, c, d, opts, /*backward=*/true);
    if (res.agree && !*res.agree && c.tag() == cls::Tag::RL) {
        res.errata_note =
            "published disk bound is not sharp here: the image-curve containment oracle "
            "gives " + fmt(*res.oracle) + " against the root " + fmt(res.closed_form) +
            " (the inscribed disk touches the region off the real axis)";
    }
    return res;
}

std::vector<ComparatorClass> unit_radius_classes(const EpicycloidDomain& d, int samples) {
    std::vector<ComparatorClass> out = {ComparatorClass::sg(), ComparatorClass::cosine(),
                                        ComparatorClass::hyp_cosine()};
    for (const auto& c : out) {
        for (int j = 0; j < samples; ++j) {
            const double t = curve_parameter(j, samples);
            const Complex w = c.phi_of(std::polar(1.0, t));
            if (d.contains_point(w) == geom::Verdict::Outside)
                throw VerificationFailed("unit_radius_classes: " + c.name() +
                                         " sample escapes the domain at t=" + fmt(t));
        }
    }
    return out;
}

double limit_radius(const ComparatorClass& c) {
    const EpicycloidDomain big(1000000);
    RadiusOptions o;
    o.with_oracle = false;
    return forward_radius(c, big, o).closed_form;
}

ContainmentReport forward_containment_report(const ComparatorClass& c,
                                             const EpicycloidDomain& d, double r,
                                             const OracleOptions& opts) {
    ContainmentReport rep;
    rep.r = r;
    rep.min_clearance = 1e300;
    const auto pts = reachable_boundary(c, r, opts.curve_samples);
    for (int j = 0; j < opts.curve_samples; ++j) {
        const double dist = d.boundary_distance(pts[j], opts.boundary_samples);
        const auto v = d.contains_point(pts[j], opts.boundary_samples);
        const double signed_dist = (v == geom::Verdict::Outside) ? -dist : dist;
        if (signed_dist < rep.min_clearance) {
            rep.min_clearance = signed_dist;
            rep.touching_angle = curve_parameter(j, opts.curve_samples);
        }
    }
    return rep;
}

ContainmentReport backward_containment_report(const ComparatorClass& c,
                                              const EpicycloidDomain& d, double r,
                                              const OracleOptions& opts) {
    ContainmentReport rep;
    rep.r = r;
    rep.min_clearance = 1e300;
    for (int j = 0; j < opts.curve_samples; ++j) {
        const double t = curve_parameter(j, opts.curve_samples);
        const Complex w = d.phi(std::polar(std::min(r, 1.0 - 1e-12), t));
        const double m = c.membership_margin(w);
        if (m < rep.min_clearance) {
            rep.min_clearance = m;
            rep.touching_angle = t;
        }
    }
    return rep;
}

}  // namespace cusp::radii

#include "cusp/domain.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace cusp::geom {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;

double cross2(Complex a, Complex b) { return a.real() * b.imag() - a.imag() * b.real(); }
double dot2(Complex a, Complex b) { return a.real() * b.real() + a.imag() * b.imag(); }

double point_segment_dist(Complex w, Complex p, Complex q) {
    const Complex d = q - p;
    const double len2 = std::norm(d);
    if (len2 == 0.0) return std::abs(w - p);
    double s = dot2(w - p, d) / len2;
    s = std::clamp(s, 0.0, 1.0);
    return std::abs(w - (p + s * d));
}
}  // namespace

struct EpicycloidDomain::Polyline {
    int samples = 0;
    std::vector<Complex> pts;     // vertex j at t = -pi + 2*pi*(j+1)/samples
    std::vector<double> theta;    // angle of pts[j] - 1, non-decreasing in (-pi, pi]
    std::vector<double> seg_len;  // seg_len[j] = |pts[j+1 mod N] - pts[j]|
    double max_seg = 0.0;
    double min_radius = 0.0;      // min |pts[j] - 1|
};

namespace {
struct PolylineCache {
    std::mutex mutex;
    std::map<int, std::shared_ptr<const EpicycloidDomain::Polyline>> by_samples;
};
}  // namespace

EpicycloidDomain::EpicycloidDomain(int n) : n_(n) {
    if (n < 4 || n % 2 != 0)
        throw std::invalid_argument("EpicycloidDomain: n must be even and >= 4");
    cache_ = std::make_shared<PolylineCache>();
}

Complex EpicycloidDomain::phi(Complex z) const {
    return 1.0 + double(n_) * z / double(n_ + 1) + num::pow_int(z, n_) / double(n_ + 1);
}

BoundaryPoint EpicycloidDomain::boundary(double t) const {
    const double m = n_ + 1;
    return BoundaryPoint{t, 1.0 + n_ * std::cos(t) / m + std::cos(n_ * t) / m,
                         n_ * std::sin(t) / m + std::sin(n_ * t) / m};
}

CuspSet EpicycloidDomain::cusps() const {
    CuspSet cs;
    // Parameters (2k-1) pi/(n-1) folded into (-pi, pi]; t = pi is always a
    // cusp since n-1 is odd.
    for (int k = (n_ - 2) / 2; k >= 1; --k)
        cs.angles.push_back(-(2 * k - 1) * kPi / (n_ - 1));
    for (int k = 1; k <= (n_ - 2) / 2; ++k)
        cs.angles.push_back((2 * k - 1) * kPi / (n_ - 1));
    cs.angles.push_back(kPi);
    cs.primary_cusp = std::polar(1.0, kPi / (n_ - 1));
    return cs;
}

double EpicycloidDomain::sigma(const InscribedDiskQuery& q, double t) const {
    if (q.n != n_) throw OutOfRange("sigma: query n does not match domain");
    const BoundaryPoint b = boundary(t);
    const double dx = b.x - q.a;
    return dx * dx + b.y * b.y;
}

double EpicycloidDomain::a3_threshold() const {
    const double c1 = std::cos(kPi / (n_ - 1));
    const double cn = std::cos(n_ * kPi / (n_ - 1));
    const double num = -(1.0 + 4.0 * n_ + double(n_) * n_) + n_ * (1.0 + n_) * c1 + (n_ + 1) * cn;
    const double den = n_ * (1.0 + n_) * c1 + (n_ + 1) * cn - double(n_ + 1) * (n_ + 1);
    const double a3 = num / den;

    InscribedDiskQuery q{a3, n_};
    const double eq = sigma(q, kPi / (n_ - 1)) - sigma(q, 0.0);
    if (std::abs(eq) > 1e-9)
        throw std::logic_error("a3_threshold: sigma(pi/(n-1)) != sigma(0) at a3");
    const double lo = 2.0 * (1.0 + double(n_) * n_) / (double(n_ + 1) * (n_ + 1));
    if (!(a3 > lo && a3 < 2.0))
        throw std::logic_error("a3_threshold: a3 outside (2(1+n^2)/(1+n)^2, 2)");
    return a3;
}

double EpicycloidDomain::inscribed_radius(const InscribedDiskQuery& q) const {
    if (q.n != n_) throw OutOfRange("inscribed_radius: query n does not match domain");
    const double left = 2.0 / (n_ + 1);
    if (!(q.a > left && q.a < 2.0))
        throw OutOfRange("inscribed_radius: centre outside (2/(n+1), 2)");
    if (q.a <= 1.0) return q.a - left;
    if (q.a <= a3_threshold()) {
        const Complex cusp = phi(std::polar(1.0, kPi / (n_ - 1)));
        return std::abs(cusp - q.a);
    }
    return 2.0 - q.a;
}

double EpicycloidDomain::min_real_part() const {
    const double t0 = n_ * kPi / (n_ + 1);
    return (1.0 + std::cos(n_ * t0) + n_ * (1.0 + std::cos(t0))) / (n_ + 1);
}

double EpicycloidDomain::max_argument() const {
    const double c = kPi / n_;
    return std::atan(std::sin(c) / (1.0 - std::cos(c)));
}

const EpicycloidDomain::Polyline& EpicycloidDomain::polyline(int samples) const {
    auto* cache = static_cast<PolylineCache*>(cache_.get());
    std::lock_guard<std::mutex> lock(cache->mutex);
    auto it = cache->by_samples.find(samples);
    if (it != cache->by_samples.end()) return *it->second;

    auto pl = std::make_shared<Polyline>();
    pl->samples = samples;
    pl->pts.resize(samples);
    pl->theta.resize(samples);
    pl->seg_len.resize(samples);
    for (int j = 0; j < samples; ++j) {
        const double t = -kPi + 2.0 * kPi * (j + 1) / samples;
        const BoundaryPoint b = boundary(t);
        pl->pts[j] = Complex(b.x, b.y);
    }
    pl->min_radius = std::abs(pl->pts[0] - 1.0);
    double prev = -kPi;
    for (int j = 0; j < samples; ++j) {
        double th = std::atan2(pl->pts[j].imag(), pl->pts[j].real() - 1.0);
        // The curve is starlike about 1, so the angles are monotone in t up to
        // rounding at cusps; clamp tiny reversals to keep the array sorted.
        if (th < prev) th = prev;
        pl->theta[j] = th;
        prev = th;
        pl->min_radius = std::min(pl->min_radius, std::abs(pl->pts[j] - 1.0));
    }
    for (int j = 0; j < samples; ++j) {
        const Complex q = pl->pts[(j + 1) % samples];
        pl->seg_len[j] = std::abs(q - pl->pts[j]);
        pl->max_seg = std::max(pl->max_seg, pl->seg_len[j]);
    }
    auto [pos, inserted] = cache->by_samples.emplace(samples, std::move(pl));
    return *pos->second;
}

namespace {
/// Radius at which the ray from 1 with direction u crosses the chord p..q.
/// Returns a negative value if the chord does not cross the ray.
double ray_chord_radius(Complex u, Complex p1, Complex q1) {
    const double cp = cross2(p1, u);
    const double cq = cross2(q1, u);
    const double denom = cp - cq;
    double s;
    if (denom == 0.0) {
        s = 0.0;  // chord parallel to the ray: both ends at the same angle
    } else {
        s = cp / denom;
    }
    s = std::clamp(s, 0.0, 1.0);
    return dot2(p1 + s * (q1 - p1), u);
}
}  // namespace

Verdict EpicycloidDomain::contains_point(Complex w, int samples) const {
    if (samples < 1024) throw OutOfRange("contains_point: samples must be >= 1024");
    const Polyline& pl = polyline(samples);
    const int N = pl.samples;
    const Complex rel = w - 1.0;
    const double rw = std::abs(rel);

    // The boundary keeps distance >= (n-1)/(n+1) from 1, so the centre region
    // needs no polyline work at all.
    if (rw < 0.5 * pl.min_radius) return Verdict::Inside;

    const double theta_w = std::atan2(rel.imag(), rel.real());
    const Complex u = rel / rw;

    // Radial crossing of the bracketing chord: for a polygon that is starlike
    // about 1 this is exactly the winding-number test.
    double rho;
    if (theta_w < pl.theta.front()) {
        rho = ray_chord_radius(u, pl.pts[N - 1] - 1.0, pl.pts[0] - 1.0);
    } else {
        auto it = std::upper_bound(pl.theta.begin(), pl.theta.end(), theta_w);
        int idx = int(it - pl.theta.begin()) - 1;
        if (idx >= N - 1) {
            rho = std::abs(pl.pts[N - 1] - 1.0);  // theta_w == pi exactly
        } else {
            rho = ray_chord_radius(u, pl.pts[idx] - 1.0, pl.pts[idx + 1] - 1.0);
        }
    }

    // Boundary band: distance to the polyline below 10 local segment lengths.
    // Candidate segments are found by angle window; any point within the band
    // of some segment sees that segment within this window.
    const double band_cap = 10.0 * pl.max_seg;
    const double dtheta = std::max(16.0 * kPi / N, 3.0 * band_cap / pl.min_radius);
    double best = std::numeric_limits<double>::infinity();
    double best_seg = 0.0;
    auto scan = [&](double lo_angle, double hi_angle) {
        auto lo_it = std::lower_bound(pl.theta.begin(), pl.theta.end(), lo_angle);
        auto hi_it = std::upper_bound(pl.theta.begin(), pl.theta.end(), hi_angle);
        int lo_i = std::max(0, int(lo_it - pl.theta.begin()) - 1);
        int hi_i = std::min(N - 1, int(hi_it - pl.theta.begin()));
        for (int j = lo_i; j <= hi_i; ++j) {
            const Complex p = pl.pts[j];
            const Complex q = pl.pts[(j + 1) % N];
            const double d = point_segment_dist(w, p, q);
            if (d < best) { best = d; best_seg = pl.seg_len[j]; }
        }
    };
    scan(theta_w - dtheta, theta_w + dtheta);
    if (theta_w + dtheta > kPi) scan(-kPi, theta_w + dtheta - 2.0 * kPi);
    if (theta_w - dtheta < -kPi) scan(theta_w - dtheta + 2.0 * kPi, kPi);

    if (best < 10.0 * best_seg) return Verdict::Boundary;
    return rw < rho ? Verdict::Inside : Verdict::Outside;
}

double EpicycloidDomain::boundary_distance(Complex w, int samples) const {
    const Polyline& pl = polyline(samples);
    const int N = pl.samples;
    double best = std::numeric_limits<double>::infinity();
    for (int j = 0; j < N; ++j)
        best = std::min(best, point_segment_dist(w, pl.pts[j], pl.pts[(j + 1) % N]));
    return best;
}

double EpicycloidDomain::hausdorff_gap_to_unit_circle(int samples) const {
    double gap = 0.0;
    for (int j = 1; j <= samples; ++j) {
        const double t = -kPi + 2.0 * kPi * j / samples;
        const BoundaryPoint b = boundary(t);
        const double r = std::hypot(b.x - 1.0, b.y);
        gap = std::max(gap, std::abs(r - 1.0));
    }
    return gap;
}

}  // namespace cusp::geom

#include "cusp/classes.hpp"

#include <cmath>
#include <sstream>

namespace cusp::cls {

namespace {
constexpr double kSqrt2 = 1.4142135623730951;
constexpr double kBand = 1e-9;  // membership verdicts within this margin are Boundary

Verdict from_margin(double m) {
    if (std::abs(m) <= kBand) return Verdict::Boundary;
    return m > 0.0 ? Verdict::Inside : Verdict::Outside;
}

double min_root_modulus(Complex b, Complex c) {
    // roots of z^2 + b z + c = 0
    const Complex disc = std::sqrt(b * b - 4.0 * c);
    const Complex z1 = 0.5 * (-b + disc);
    const Complex z2 = 0.5 * (-b - disc);
    return std::min(std::abs(z1), std::abs(z2));
}
}  // namespace

ComparatorClass ComparatorClass::m_beta(double beta) {
    if (!(beta > 1.0)) throw OutOfRange("m-beta: beta must be > 1");
    return {Tag::MBeta, beta, 0.0};
}
ComparatorClass ComparatorClass::bs(double alpha) {
    if (!(alpha > 0.0 && alpha <= 1.0)) throw OutOfRange("bs-alpha: alpha in (0, 1]");
    return {Tag::BS, alpha, 0.0};
}
ComparatorClass ComparatorClass::w() { return {Tag::W, 0.0, 0.0}; }
ComparatorClass ComparatorClass::f1() { return {Tag::F1, 0.0, 0.0}; }
ComparatorClass ComparatorClass::f2() { return {Tag::F2, 0.0, 0.0}; }
ComparatorClass ComparatorClass::sl_alpha(double alpha) {
    if (!(alpha >= 0.0 && alpha < 1.0)) throw OutOfRange("sl-alpha: alpha in [0, 1)");
    return {Tag::SLalpha, alpha, 0.0};
}
ComparatorClass ComparatorClass::cassinian(double c) {
    if (!(c > 0.0 && c <= 1.0)) throw OutOfRange("cassinian: c in (0, 1]");
    return {Tag::Cassinian, c, 0.0};
}
ComparatorClass ComparatorClass::alpha_exp(double alpha) {
    if (!(alpha >= 0.0 && alpha < 1.0)) throw OutOfRange("alpha-exp: alpha in [0, 1)");
    return {Tag::AlphaExp, alpha, 0.0};
}
ComparatorClass ComparatorClass::el(double alpha) {
    if (!(alpha >= 0.0 && alpha < 1.0)) throw OutOfRange("el: alpha in [0, 1)");
    return {Tag::EL, alpha, 0.0};
}
ComparatorClass ComparatorClass::cardioid() { return {Tag::Cardioid, 0.0, 0.0}; }
ComparatorClass ComparatorClass::lune() { return {Tag::Lune, 0.0, 0.0}; }
ComparatorClass ComparatorClass::rational_r() { return {Tag::RationalR, 0.0, 0.0}; }
ComparatorClass ComparatorClass::rl() { return {Tag::RL, 0.0, 0.0}; }
ComparatorClass ComparatorClass::lim() { return {Tag::Lim, 0.0, 0.0}; }
ComparatorClass ComparatorClass::z_exp() { return {Tag::ZExp, 0.0, 0.0}; }
ComparatorClass ComparatorClass::car() { return {Tag::Car, 0.0, 0.0}; }
ComparatorClass ComparatorClass::sine() { return {Tag::Sin, 0.0, 0.0}; }
ComparatorClass ComparatorClass::nephroid() { return {Tag::Nephroid, 0.0, 0.0}; }
ComparatorClass ComparatorClass::janowski(double A, double B) {
    if (B >= A) throw ParamOrder("janowski: need B < A");
    if (!(B >= -1.0 && A <= 1.0)) throw OutOfRange("janowski: need -1 <= B < A <= 1");
    return {Tag::Janowski, A, B};
}
ComparatorClass ComparatorClass::order_alpha(double alpha) {
    if (!(alpha >= 0.0 && alpha < 1.0)) throw OutOfRange("order-alpha: alpha in [0, 1)");
    return {Tag::OrderAlpha, alpha, 0.0};
}
ComparatorClass ComparatorClass::sg() { return {Tag::SG, 0.0, 0.0}; }
ComparatorClass ComparatorClass::cosine() { return {Tag::Cos, 0.0, 0.0}; }
ComparatorClass ComparatorClass::hyp_cosine() { return {Tag::Cosh, 0.0, 0.0}; }
ComparatorClass ComparatorClass::arc_sinh() { return {Tag::ArcSinh, 0.0, 0.0}; }
ComparatorClass ComparatorClass::snl(int n) {
    ComparatorClass c{Tag::SnL, double(n), 0.0};
    c.snl_domain_ = std::make_shared<geom::EpicycloidDomain>(n);
    return c;
}

std::string ComparatorClass::name() const {
    switch (tag_) {
        case Tag::MBeta: return "m-beta";
        case Tag::BS: return "bs-alpha";
        case Tag::W: return "w";
        case Tag::F1: return "f1";
        case Tag::F2: return "f2";
        case Tag::SLalpha: return "sl-alpha";
        case Tag::Cassinian: return "cassinian";
        case Tag::AlphaExp: return "alpha-exp";
        case Tag::EL: return "el";
        case Tag::Cardioid: return "cardioid";
        case Tag::Lune: return "lune";
        case Tag::RationalR: return "rational-r";
        case Tag::RL: return "rl";
        case Tag::Lim: return "lim";
        case Tag::ZExp: return "z-exp";
        case Tag::Car: return "car";
        case Tag::Sin: return "sin";
        case Tag::Nephroid: return "nephroid";
        case Tag::Janowski: return "janowski";
        case Tag::OrderAlpha: return "order-alpha";
        case Tag::SG: return "sg";
        case Tag::Cos: return "cos";
        case Tag::Cosh: return "cosh";
        case Tag::ArcSinh: return "arc-sinh";
        case Tag::SnL: return "snl";
    }
    return "?";
}

std::string ComparatorClass::display_name() const {
    std::ostringstream os;
    os << name();
    switch (tag_) {
        case Tag::MBeta:
        case Tag::BS:
        case Tag::SLalpha:
        case Tag::Cassinian:
        case Tag::AlphaExp:
        case Tag::EL:
        case Tag::OrderAlpha:
            os << "(" << p1_ << ")";
            break;
        case Tag::Janowski:
            os << "(" << p1_ << "," << p2_ << ")";
            break;
        case Tag::SnL:
            os << "(" << int(p1_) << ")";
            break;
        default:
            break;
    }
    return os.str();
}

bool ComparatorClass::has_phi() const {
    switch (tag_) {
        case Tag::W:
        case Tag::F1:
        case Tag::F2:
        case Tag::MBeta:
            return false;
        default:
            return true;
    }
}

Complex ComparatorClass::phi_of(Complex z) const {
    const double a = p1_;
    switch (tag_) {
        case Tag::BS: return 1.0 + z / (1.0 - a * z * z);
        case Tag::SLalpha: return a + (1.0 - a) * std::sqrt(1.0 + z);
        case Tag::Cassinian: return std::sqrt(1.0 + a * z);
        case Tag::AlphaExp: return a + (1.0 - a) * std::exp(z);
        case Tag::EL: return a * std::exp(z) + (1.0 - a) * (1.0 + z);
        case Tag::Cardioid: return 1.0 + 4.0 * z / 3.0 + 2.0 * z * z / 3.0;
        case Tag::Lune: return z + std::sqrt(1.0 + z * z);
        case Tag::RationalR: {
            const double k = 1.0 + kSqrt2;
            return (k * k + z * z) / (k * k - k * z);
        }
        case Tag::RL:
            return kSqrt2 -
                   (kSqrt2 - 1.0) * std::sqrt((1.0 - z) / (1.0 + 2.0 * (kSqrt2 - 1.0) * z));
        case Tag::Lim: return 1.0 + kSqrt2 * z + 0.5 * z * z;
        case Tag::ZExp: return 1.0 + z * std::exp(z);
        case Tag::Car: return 1.0 + z + 0.5 * z * z;
        case Tag::Sin: return 1.0 + std::sin(z);
        case Tag::Nephroid: return 1.0 + z - z * z * z / 3.0;
        case Tag::Janowski: return (1.0 + p1_ * z) / (1.0 + p2_ * z);
        case Tag::OrderAlpha: return (1.0 + (1.0 - 2.0 * a) * z) / (1.0 - z);
        case Tag::SG: return 2.0 / (1.0 + std::exp(-z));
        case Tag::Cos: return std::cos(z);
        case Tag::Cosh: return std::cosh(z);
        case Tag::ArcSinh: return 1.0 + std::log(z + std::sqrt(1.0 + z * z));
        case Tag::SnL: return snl_domain_->phi(z);
        default:
            throw NotMaMinda("phi_of: " + name() + " is not defined by a single phi");
    }
}

double ComparatorClass::membership_margin(Complex w) const {
    const double a = p1_;
    switch (tag_) {
        case Tag::MBeta: return p1_ - w.real();
        case Tag::OrderAlpha: return w.real() - a;
        case Tag::Janowski: {
            if (p2_ <= -1.0 + 1e-15) return w.real() - 0.5 * (1.0 - p1_);  // half-plane
            const Complex den = p1_ - p2_ * w;
            if (den == Complex(0.0, 0.0)) return -1.0;
            return 1.0 - std::abs((w - 1.0) / den);
        }
        case Tag::SLalpha: {
            const Complex s = (w - a) / (1.0 - a);
            if (s.real() < 0.0) return -std::max(1e-6, -s.real());
            return 1.0 - std::abs(s * s - 1.0);
        }
        case Tag::Cassinian: {
            if (w.real() < 0.0) return -std::max(1e-6, -w.real());
            return a - std::abs(w * w - 1.0);
        }
        case Tag::RL: {
            if (w.real() > kSqrt2) return -(w.real() - kSqrt2);
            const Complex u = w - kSqrt2;
            return 1.0 - std::abs(u * u - 1.0);
        }
        case Tag::Lune: return 2.0 * std::abs(w) - std::abs(w * w - 1.0);
        case Tag::SG: {
            if (w == Complex(0.0, 0.0) || w == Complex(2.0, 0.0)) return -1.0;
            return 1.0 - std::abs(std::log(w / (2.0 - w)));
        }
        case Tag::Sin: return 1.0 - std::abs(num::principal_asin(w - 1.0));
        case Tag::ArcSinh: return 1.0 - std::abs(std::sinh(w - 1.0));
        case Tag::ZExp: return 1.0 - std::abs(num::lambert_w0(w - 1.0));
        case Tag::Nephroid: {
            // cube-root form of ((u-1)^2+v^2-4/9)^3 < (4/3) v^2, so the margin
            // stays distance-scaled at the two boundary cusps
            const double u = w.real() - 1.0, v = w.imag();
            const double s = u * u + v * v - 4.0 / 9.0;
            return std::cbrt((4.0 / 3.0) * v * v) - s;
        }
        case Tag::AlphaExp: {
            const Complex s = (w - a) / (1.0 - a);
            if (s == Complex(0.0, 0.0)) return -1.0;
            return 1.0 - std::abs(std::log(s));
        }
        case Tag::EL: {
            if (a == 0.0) return 1.0 - std::abs(w - 1.0);
            const Complex h = (w - (1.0 - a)) / (1.0 - a);
            const Complex z = h - num::lambert_w0(a / (1.0 - a) * std::exp(h));
            return 1.0 - std::abs(z);
        }
        case Tag::BS: {
            if (w == Complex(1.0, 0.0)) return 1.0;
            // alpha (w-1) z^2 + z - (w-1) = 0
            return 1.0 - min_root_modulus(1.0 / (a * (w - 1.0)), Complex(-1.0 / a, 0.0));
        }
        case Tag::Cardioid:
            // 2 z^2 + 4 z + 3(1-w) = 0
            return 1.0 - min_root_modulus(Complex(2.0, 0.0), 1.5 * (1.0 - w));
        case Tag::Car:
            // z^2 + 2 z + 2(1-w) = 0
            return 1.0 - min_root_modulus(Complex(2.0, 0.0), 2.0 * (1.0 - w));
        case Tag::Lim:
            // z^2 + 2 sqrt2 z + 2(1-w) = 0
            return 1.0 - min_root_modulus(Complex(2.0 * kSqrt2, 0.0), 2.0 * (1.0 - w));
        case Tag::RationalR: {
            const double k = 1.0 + kSqrt2;
            // z^2 + w k z + k^2 (1-w) = 0
            return 1.0 - min_root_modulus(w * k, k * k * (1.0 - w));
        }
        case Tag::Cos:
        case Tag::Cosh:
            // cos(D) and cosh(D) coincide as sets (cosh z = cos iz, iD = D)
            return 1.0 - std::abs(num::principal_acos(w));
        case Tag::SnL: {
            const auto v = snl_domain_->contains_point(w);
            if (v == Verdict::Boundary) return 0.0;
            const double d = snl_domain_->boundary_distance(w);
            return v == Verdict::Inside ? d : -d;
        }
        default:
            throw NotMaMinda("membership: " + name() + " has no region predicate");
    }
}

Verdict ComparatorClass::membership(Complex w) const {
    if (tag_ == Tag::SnL) return snl_domain_->contains_point(w);
    return from_margin(membership_margin(w));
}

std::optional<Complex> ComparatorClass::boundary_param(double t) const {
    if (!has_phi()) return std::nullopt;
    if (tag_ == Tag::Janowski && p2_ <= -1.0 + 1e-15) return std::nullopt;  // half-plane
    if (tag_ == Tag::OrderAlpha) return std::nullopt;                       // half-plane
    return phi_of(std::polar(1.0, t));
}

ComparatorClass::DiskThreshold ComparatorClass::disk_threshold() const {
    using Kind = DiskThreshold::Kind;
    switch (tag_) {
        case Tag::SLalpha: return {Kind::Symmetric, (kSqrt2 - 1.0) * (1.0 - p1_)};
        case Tag::RL: {
            const double g = 2.0 * kSqrt2 - 2.0;
            return {Kind::Symmetric, std::sqrt(std::sqrt(g) - g)};
        }
        case Tag::RationalR:
            // kappa = 3 - 2 sqrt2 = 1 - phi_R(-1); only this choice reproduces
            // the published radii table, see the backward-radius errata note.
            return {Kind::Symmetric, 3.0 - 2.0 * kSqrt2};
        case Tag::Sin: return {Kind::Symmetric, std::sin(1.0)};
        case Tag::SG: {
            const double e = std::exp(1.0);
            return {Kind::Symmetric, (e - 1.0) / (e + 1.0)};
        }
        case Tag::Nephroid: return {Kind::Symmetric, 2.0 / 3.0};
        case Tag::ZExp: return {Kind::LeftGap, std::exp(-1.0)};
        case Tag::ArcSinh: return {Kind::Symmetric, std::asinh(1.0)};
        case Tag::MBeta: return {Kind::Symmetric, p1_ - 1.0};
        case Tag::Janowski:
            if (p2_ == 0.0) return {Kind::Symmetric, p1_};  // S*[1-alpha, 0]
            throw NotInBackwardTable("disk_threshold: general Janowski is not in the backward table");
        default:
            throw NotInBackwardTable("disk_threshold: " + name() + " is not in the backward table");
    }
}

}  // namespace cusp::cls

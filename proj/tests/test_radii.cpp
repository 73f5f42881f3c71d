#include <doctest.h>

#include <cmath>

#include "cusp/radii.hpp"
#include "cusp/verification.hpp"

using namespace cusp;
using cls::ComparatorClass;
using geom::EpicycloidDomain;
using num::Complex;

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kSqrt2 = 1.4142135623730951;

radii::RadiusOptions no_oracle() {
    radii::RadiusOptions o;
    o.with_oracle = false;
    return o;
}
}  // namespace

TEST_CASE("forward closed forms from the disk bounds") {
    EpicycloidDomain d(4);
    CHECK(radii::forward_radius(ComparatorClass::m_beta(2.0), d, no_oracle()).closed_form ==
          doctest::Approx(3.0 / 13.0).epsilon(1e-12));
    CHECK(radii::forward_radius(ComparatorClass::w(), d, no_oracle()).closed_form ==
          doctest::Approx((std::sqrt(34.0) - 5.0) / 3.0).epsilon(1e-12));
    const auto bs = radii::forward_radius(ComparatorClass::bs(0.5), d, no_oracle());
    CHECK(bs.closed_form == doctest::Approx(0.519146).epsilon(1e-5));
    CHECK(!bs.errata_note.empty());
}

TEST_CASE("forward closed forms agree with the containment oracle for disk classes") {
    EpicycloidDomain d(4);
    radii::RadiusOptions o;  // oracle on
    for (const auto& c : {ComparatorClass::w(), ComparatorClass::f1(), ComparatorClass::f2(),
                          ComparatorClass::m_beta(2.0), ComparatorClass::bs(0.5),
                          ComparatorClass::sl_alpha(0.0), ComparatorClass::cassinian(1.0)}) {
        const auto res = radii::forward_radius(c, d, o);
        REQUIRE(res.oracle.has_value());
        CHECK(std::abs(*res.oracle - res.closed_form) < 2e-4);
    }
}

TEST_CASE("forward saturation at the inclusion thresholds") {
    EpicycloidDomain d(4);
    const double c_incl = 1.0 - 4.0 / 25.0;
    CHECK(radii::forward_radius(ComparatorClass::cassinian(c_incl), d, no_oracle()).closed_form ==
          1.0);
    CHECK(radii::forward_radius(ComparatorClass::sl_alpha(0.5), d, no_oracle()).closed_form == 1.0);
    CHECK(radii::forward_radius(ComparatorClass::janowski(0.5, 0.0), d, no_oracle()).closed_form ==
          1.0);
    const auto orac = radii::forward_oracle(ComparatorClass::cassinian(c_incl), d);
    CHECK(orac > 0.9999);
}

TEST_CASE("forward touching heuristics against the oracle") {
    EpicycloidDomain d(4);
    radii::RadiusOptions o;
    o.oracle.boundary_samples = 131072;  // thin band near the touching cusp
    const auto car = radii::forward_radius(ComparatorClass::car(), d, o);
    CHECK(car.closed_form == doctest::Approx(0.5093).epsilon(1e-3));
    REQUIRE(car.oracle.has_value());
    CHECK(*car.oracle == doctest::Approx(0.5142).epsilon(1e-3));
    CHECK((*car.agree || !car.errata_note.empty()));

    const auto rl = radii::forward_radius(ComparatorClass::rl(), d, o);
    CHECK(rl.closed_form == doctest::Approx(0.837200).epsilon(1e-5));
    CHECK(*rl.oracle == doctest::Approx(rl.closed_form).epsilon(5e-4));
}

TEST_CASE("parity radii for the sine and nephroid classes") {
    EpicycloidDomain d6(6), d8(8);
    const auto s6 = radii::parity_radius_sin_ne(ComparatorClass::sine(), d6, no_oracle());
    // |arcsin(gamma^3 (gamma^5 + 6)/7)|, gamma = e^{i pi/5}
    const Complex g = std::polar(1.0, kPi / 5.0);
    const Complex expect = num::principal_asin(num::pow_int(g, 3) * (num::pow_int(g, 5) + 6.0) / 7.0);
    CHECK(s6.closed_form == doctest::Approx(std::abs(expect)).epsilon(1e-12));
    CHECK(s6.closed_form == doctest::Approx(0.670474).epsilon(1e-5));
    REQUIRE(s6.closed_form_complex.has_value());

    const auto n8 = radii::parity_radius_sin_ne(ComparatorClass::nephroid(), d8, no_oracle());
    CHECK(n8.closed_form == doctest::Approx(0.679070).epsilon(1e-5));
    // verify the cubic: R^3 - 3R + 3(n-1)gamma^j/(n+1) = 0 at the returned root
    const Complex R = *n8.closed_form_complex;
    const Complex g7 = std::polar(1.0, 3.0 * kPi / 7.0);
    const Complex resid = R * R * R - 3.0 * R + 3.0 * (7.0 / 9.0) * g7;
    CHECK(std::abs(resid) < 1e-10);

    radii::RadiusOptions o;
    o.agree_tol = 1e-3;
    const auto s6o = radii::parity_radius_sin_ne(ComparatorClass::sine(), d6, o);
    CHECK((*s6o.agree || !s6o.errata_note.empty()));
}

TEST_CASE("backward radii reproduce the published table") {
    for (int row = 0; row < 8; ++row) {
        for (int n : {4, 6, 8}) {
            // closed forms against the frozen table
            EpicycloidDomain d(n);
            const ComparatorClass c = [&]() -> ComparatorClass {
                switch (row) {
                    case 0: return ComparatorClass::sl_alpha(0.0);
                    case 1: return ComparatorClass::rl();
                    case 2: return ComparatorClass::rational_r();
                    case 3: return ComparatorClass::sine();
                    case 4: return ComparatorClass::sg();
                    case 5: return ComparatorClass::nephroid();
                    case 6: return ComparatorClass::z_exp();
                    default: return ComparatorClass::arc_sinh();
                }
            }();
            const auto res = radii::backward_radius(c, d, no_oracle());
            CHECK(res.closed_form ==
                  doctest::Approx(verify::table2_value(row, n)).epsilon(2e-5));
        }
    }
}

TEST_CASE("backward saturation for the half-plane class") {
    EpicycloidDomain d(4);
    CHECK(radii::backward_radius(ComparatorClass::m_beta(3.0), d, no_oracle()).closed_form == 1.0);
    CHECK(radii::backward_oracle(ComparatorClass::m_beta(3.0), d) == 1.0);
    CHECK(radii::backward_radius(ComparatorClass::m_beta(2.0), d, no_oracle()).closed_form ==
          doctest::Approx(1.0).epsilon(1e-9));
    const auto half = radii::backward_radius(ComparatorClass::m_beta(1.5), d, no_oracle());
    CHECK(half.closed_form < 1.0);
}

TEST_CASE("backward radii for the parameterized families") {
    EpicycloidDomain d(4);
    radii::RadiusOptions o;  // oracle on
    // scaled lemniscate: the touching stays on the real axis for alpha > 0
    const auto sl = radii::backward_radius(ComparatorClass::sl_alpha(0.3), d, o);
    CHECK(*sl.agree);
    // the Janowski [1-alpha, 0] region is literally the disk |w-1| < 1-alpha
    const auto jd = radii::backward_radius(ComparatorClass::janowski(0.6, 0.0), d, o);
    CHECK(*jd.agree);
    CHECK(jd.closed_form ==
          doctest::Approx(num::smallest_positive_root(
              [](double r) { return std::pow(r, 4) + 4 * r - 5 * 0.6; }, 1.0)).epsilon(1e-10));
}

TEST_CASE("backward touching identities at the roots") {
    for (int n : {4, 6, 8}) {
        EpicycloidDomain d(n);
        for (const auto& c : {ComparatorClass::sl_alpha(0.0), ComparatorClass::sine(),
                              ComparatorClass::sg(), ComparatorClass::nephroid(),
                              ComparatorClass::arc_sinh()}) {
            const auto res = radii::backward_radius(c, d, no_oracle());
            const double r = res.closed_form;
            const double kappa = c.disk_threshold().value;
            CHECK(std::abs(std::abs(d.phi({r, 0.0}) - 1.0) - kappa) < 1e-9);
        }
        // left-edge class: the curve's left extreme meets the region's left extreme
        const auto z = radii::backward_radius(ComparatorClass::z_exp(), d, no_oracle());
        CHECK(std::abs(d.phi({-z.closed_form, 0.0}).real() - (1.0 - std::exp(-1.0))) < 1e-9);
    }
}

TEST_CASE("rational-r equation-form adjudication") {
    EpicycloidDomain d(4);
    radii::RadiusOptions o;
    const auto res = radii::backward_radius(ComparatorClass::rational_r(), d, o);
    CHECK(res.closed_form == doctest::Approx(0.213942).epsilon(1e-5));
    REQUIRE(res.oracle.has_value());
    CHECK(*res.oracle == doctest::Approx(0.215000).epsilon(1e-4));
    CHECK(res.errata_note.find("left-edge") != std::string::npos);
    // at the left-edge candidate the curve's left extreme meets 2(sqrt2 - 1)
    CHECK(std::abs(d.phi({-*res.oracle, 0.0}).real() - 2.0 * (kSqrt2 - 1.0)) < 1e-4);
}

TEST_CASE("table ordering across n is preserved") {
    for (int row = 0; row < 8; ++row) {
        double prev = 0.0;
        for (int idx = 0; idx < 3; ++idx) {
            const int n = 4 + 2 * idx;
            EpicycloidDomain d(n);
            const ComparatorClass c = [&]() -> ComparatorClass {
                switch (row) {
                    case 0: return ComparatorClass::sl_alpha(0.0);
                    case 1: return ComparatorClass::rl();
                    case 2: return ComparatorClass::rational_r();
                    case 3: return ComparatorClass::sine();
                    case 4: return ComparatorClass::sg();
                    case 5: return ComparatorClass::nephroid();
                    case 6: return ComparatorClass::z_exp();
                    default: return ComparatorClass::arc_sinh();
                }
            }();
            const double r = radii::backward_radius(c, d, no_oracle()).closed_form;
            if (idx > 0) {
                const double printed_prev = verify::table2_value(row, n - 2);
                const double printed_cur = verify::table2_value(row, n);
                CHECK(((r > prev) == (printed_cur > printed_prev)));
            }
            prev = r;
        }
    }
}

TEST_CASE("strohhacker bound") {
    EpicycloidDomain d4(4), d8(8);
    CHECK(radii::strohhacker_bound(d4) == doctest::Approx(3.0 / 7.0).epsilon(1e-12));
    CHECK(radii::strohhacker_bound(d8) > 0.0);
    CHECK(radii::strohhacker_bound(d8) < 1.0);
    EpicycloidDomain big(1000000);
    CHECK(radii::strohhacker_bound(big) == doctest::Approx(0.5).epsilon(1e-4));

    // the starlike radius (order 0) sits strictly below the convexity bound
    const auto s0 = radii::forward_radius(ComparatorClass::order_alpha(0.0), d4, no_oracle());
    CHECK(s0.closed_form < radii::strohhacker_bound(d4));
    // and equals |(gamma^n + n gamma)/(2 + gamma^n + 2n + n gamma)| = 3/sqrt(139) at n=4
    CHECK(s0.closed_form == doctest::Approx(3.0 / std::sqrt(139.0)).epsilon(1e-12));
}

TEST_CASE("limit radii") {
    CHECK(radii::limit_radius(ComparatorClass::z_exp()) == doctest::Approx(0.567143).epsilon(1e-5));
    CHECK(radii::limit_radius(ComparatorClass::lune()) == doctest::Approx(0.75).epsilon(1e-5));
    CHECK(radii::limit_radius(ComparatorClass::w()) == doctest::Approx(kSqrt2 - 1).epsilon(1e-5));
}

TEST_CASE("unit-radius classes") {
    EpicycloidDomain d(8);
    const auto v = radii::unit_radius_classes(d);
    REQUIRE(v.size() == 3);
    CHECK(v[0].name() == "sg");
    CHECK(v[1].name() == "cos");
    CHECK(v[2].name() == "cosh");
    EpicycloidDomain d4(4);
    CHECK_NOTHROW(radii::unit_radius_classes(d4));
}

TEST_CASE("unsupported directions throw") {
    EpicycloidDomain d(4);
    CHECK_THROWS_AS(radii::forward_radius(ComparatorClass::arc_sinh(), d, no_oracle()),
                    UnsupportedClass);
    CHECK_THROWS_AS(radii::backward_radius(ComparatorClass::cardioid(), d, no_oracle()),
                    NotInBackwardTable);
    CHECK_THROWS_AS(radii::parity_radius_sin_ne(ComparatorClass::car(), d, no_oracle()),
                    UnsupportedClass);
}

TEST_CASE("containment reports") {
    EpicycloidDomain d(4);
    const auto w = radii::forward_radius(ComparatorClass::w(), d, no_oracle());
    const auto rep = radii::forward_containment_report(ComparatorClass::w(), d, 0.9 * w.closed_form);
    CHECK(rep.min_clearance > 0.0);
    const auto rep2 = radii::forward_containment_report(ComparatorClass::w(), d,
                                                        std::min(1.0, 1.2 * w.closed_form));
    CHECK(rep2.min_clearance < 0.0);

    const auto sg = radii::backward_radius(ComparatorClass::sg(), d, no_oracle());
    const auto brep = radii::backward_containment_report(ComparatorClass::sg(), d,
                                                         0.95 * sg.closed_form);
    CHECK(brep.min_clearance > 0.0);
}

TEST_CASE("forward touching property at the oracle radius") {
    EpicycloidDomain d(4);
    radii::OracleOptions oo;
    oo.boundary_samples = 32768;
    for (const auto& c : {ComparatorClass::car(), ComparatorClass::z_exp()}) {
        const double rstar = radii::forward_oracle(c, d, oo);
        const auto rep = radii::forward_containment_report(c, d, rstar, oo);
        // resolution taken as the largest polyline segment
        const double res_len = 2.0 * kPi / oo.boundary_samples * 2.0;
        CHECK(rep.min_clearance <= 2.0 * res_len);
        const auto rep99 = radii::forward_containment_report(c, d, 0.99 * rstar, oo);
        CHECK(rep99.min_clearance > 0.0);
    }
}

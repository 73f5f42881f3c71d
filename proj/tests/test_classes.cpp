#include <doctest.h>

#include <cmath>
#include <vector>

#include "cusp/classes.hpp"

using namespace cusp;
using cls::ComparatorClass;
using geom::Verdict;
using num::Complex;

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kSqrt2 = 1.4142135623730951;

std::vector<ComparatorClass> phi_catalog() {
    return {ComparatorClass::bs(0.5),        ComparatorClass::sl_alpha(0.25),
            ComparatorClass::cassinian(0.8), ComparatorClass::alpha_exp(0.3),
            ComparatorClass::el(0.5),        ComparatorClass::cardioid(),
            ComparatorClass::lune(),         ComparatorClass::rational_r(),
            ComparatorClass::rl(),           ComparatorClass::lim(),
            ComparatorClass::z_exp(),        ComparatorClass::car(),
            ComparatorClass::sine(),         ComparatorClass::nephroid(),
            ComparatorClass::janowski(0.75, -0.25), ComparatorClass::order_alpha(0.25),
            ComparatorClass::sg(),           ComparatorClass::cosine(),
            ComparatorClass::hyp_cosine(),   ComparatorClass::arc_sinh(),
            ComparatorClass::snl(4)};
}
}  // namespace

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(ComparatorClass::m_beta(1.0), OutOfRange);
    CHECK_THROWS_AS(ComparatorClass::bs(0.0), OutOfRange);
    CHECK_THROWS_AS(ComparatorClass::sl_alpha(1.0), OutOfRange);
    CHECK_THROWS_AS(ComparatorClass::cassinian(1.5), OutOfRange);
    CHECK_THROWS_AS(ComparatorClass::janowski(0.2, 0.4), ParamOrder);
    CHECK_THROWS_AS(ComparatorClass::janowski(1.2, 0.0), OutOfRange);
    CHECK_NOTHROW(ComparatorClass::janowski(1.0, -1.0));
}

TEST_CASE("defining functions at distinguished points") {
    CHECK(std::abs(ComparatorClass::cardioid().phi_of({0, 0}) - 1.0) == 0.0);
    CHECK(std::abs(ComparatorClass::sl_alpha(0.0).phi_of({-1.0, 0.0})) < 1e-15);
    CHECK(std::abs(ComparatorClass::rational_r().phi_of({-1.0, 0.0}) -
                   2.0 * (kSqrt2 - 1.0)) < 1e-14);
    CHECK_THROWS_AS(ComparatorClass::w().phi_of({0.5, 0.0}), NotMaMinda);
    CHECK_THROWS_AS(ComparatorClass::m_beta(2.0).phi_of({0.5, 0.0}), NotMaMinda);
}

TEST_CASE("membership verdicts at distinguished points") {
    CHECK(ComparatorClass::lune().membership({1.0, 0.0}) == Verdict::Inside);
    const double e = std::exp(1.0);
    CHECK(ComparatorClass::sg().membership({2.0 * e / (e + 1.0), 0.0}) == Verdict::Boundary);
    CHECK(ComparatorClass::order_alpha(0.5).membership({0.4, 0.0}) == Verdict::Outside);
    CHECK_THROWS_AS(ComparatorClass::f1().membership({1.0, 0.0}), NotMaMinda);
}

TEST_CASE("membership is consistent with the defining function") {
    for (const auto& c : phi_catalog()) {
        CHECK(c.membership(c.phi_of({0.5, 0.0})) == Verdict::Inside);
        for (int k = 0; k < 64; ++k) {
            const Complex z = std::polar(0.9, -kPi + 2 * kPi * (k + 1) / 64.0);
            CHECK(c.membership(c.phi_of(z)) == Verdict::Inside);
        }
    }
}

TEST_CASE("membership respects conjugation symmetry") {
    for (const auto& c : phi_catalog()) {
        for (int k = 0; k < 40; ++k) {
            const Complex w(0.3 + 0.05 * k, 0.02 * k - 0.4);
            CHECK(c.membership(w) == c.membership(std::conj(w)));
        }
    }
}

TEST_CASE("symmetric thresholds bound a disk inside the region") {
    const std::vector<ComparatorClass> backward = {
        ComparatorClass::sl_alpha(0.0), ComparatorClass::rl(),
        ComparatorClass::rational_r(),  ComparatorClass::sine(),
        ComparatorClass::sg(),          ComparatorClass::nephroid(),
        ComparatorClass::arc_sinh(),    ComparatorClass::m_beta(1.5),
        ComparatorClass::janowski(0.5, 0.0)};
    for (const auto& c : backward) {
        const auto thr = c.disk_threshold();
        if (thr.kind != ComparatorClass::DiskThreshold::Kind::Symmetric) continue;
        const double kappa = thr.value;
        for (int k = 0; k < 360; ++k) {
            const Complex w = 1.0 + kappa * (1 - 1e-4) * std::polar(1.0, 2 * kPi * k / 360.0);
            CHECK(c.membership(w) == Verdict::Inside);
        }
        CHECK(c.membership_margin(Complex(1.0 + kappa, 0.0)) >= -1e-9);
        CHECK(c.membership_margin(Complex(1.0 - kappa, 0.0)) >= -1e-9);
    }
}

TEST_CASE("backward thresholds") {
    CHECK(ComparatorClass::sine().disk_threshold().value == doctest::Approx(std::sin(1.0)));
    CHECK(ComparatorClass::nephroid().disk_threshold().value == doctest::Approx(2.0 / 3.0));
    const auto z = ComparatorClass::z_exp().disk_threshold();
    CHECK(z.kind == ComparatorClass::DiskThreshold::Kind::LeftGap);
    CHECK(z.value == doctest::Approx(std::exp(-1.0)));
    CHECK(ComparatorClass::m_beta(1.5).disk_threshold().value == doctest::Approx(0.5));
    CHECK_THROWS_AS(ComparatorClass::lune().disk_threshold(), NotInBackwardTable);
    CHECK_THROWS_AS(ComparatorClass::janowski(0.5, -0.5).disk_threshold(), NotInBackwardTable);
}

TEST_CASE("left-edge extremes used by the touching checks") {
    // the left extreme of the 1+z e^z region is the Lambert branch point
    CHECK(std::abs(ComparatorClass::z_exp().phi_of({-1.0, 0.0}) -
                   (1.0 - std::exp(-1.0))) < 1e-15);
    CHECK(ComparatorClass::z_exp().membership({1.0 - std::exp(-1.0) - 1e-6, 0.0}) ==
          Verdict::Outside);
    CHECK(ComparatorClass::z_exp().membership({1.0 - std::exp(-1.0) + 1e-6, 0.0}) ==
          Verdict::Inside);
}

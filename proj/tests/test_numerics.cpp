#include <doctest.h>

#include <cmath>
#include <complex>

#include "cusp/numerics.hpp"

using namespace cusp;
using num::Complex;

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
}

TEST_CASE("bracketed root: published radii equations") {
    num::RootProblem p;
    p.f = [](double r) { return r * r * r * r + 4 * r - 5 * std::sin(1.0); };
    p.lo = 0.0; p.hi = 1.0;
    CHECK(num::find_root_bracketed(p) == doctest::Approx(0.892917).epsilon(1e-6));

    p.f = [](double r) { return r; };
    p.lo = -1.0; p.hi = 1.0;
    CHECK(std::abs(num::find_root_bracketed(p)) < 1e-12);

    const double kappa = 3.0 - 2.0 * std::sqrt(2.0);
    p.f = [kappa](double r) { return r * r * r * r + 4 * r - 5 * kappa; };
    p.lo = 0.0; p.hi = 1.0;
    CHECK(num::find_root_bracketed(p) == doctest::Approx(0.213942).epsilon(1e-5));
}

TEST_CASE("bracketed root: sign guard and refinement stability") {
    num::RootProblem p;
    p.f = [](double r) { return r * r + 1.0; };
    p.lo = 0.0; p.hi = 1.0;
    CHECK_THROWS_AS(num::find_root_bracketed(p), NoSignChange);

    // halving the tolerance moves the root by no more than the old tolerance
    p.f = [](double r) { return std::cos(3.0 * r) - r; };
    p.lo = 0.0; p.hi = 1.0; p.tol = 1e-8;
    const double x1 = num::find_root_bracketed(p);
    p.tol = 1e-9;
    const double x2 = num::find_root_bracketed(p);
    CHECK(std::abs(x1 - x2) <= 1e-8);
}

TEST_CASE("smallest positive root: table equations in both orientations") {
    CHECK(num::smallest_positive_root(
              [](double r) { return std::pow(r, 8) + 8 * r - 9 * std::asinh(1.0); }, 1.0) ==
          doctest::Approx(0.924715).epsilon(1e-5));
    CHECK(num::smallest_positive_root(
              [](double r) { return std::pow(r, 4) + 4 * r - 5.0 * (2.0 / 3.0); }, 1.0) ==
          doctest::Approx(0.752971).epsilon(1e-5));
    // left-edge orientation: positive near zero, crossing downward
    CHECK(num::smallest_positive_root(
              [](double r) { return std::pow(r, 4) - 4 * r + 5.0 / std::exp(1.0); }, 1.0) ==
          doctest::Approx(0.472288).epsilon(1e-5));
}

TEST_CASE("smallest positive root: saturation and failure modes") {
    // constraint satisfied on all of (0, 1]: radius saturates at hi
    CHECK(num::smallest_positive_root([](double r) { return r - 2.0; }, 1.0) == 1.0);
    // constraint violated everywhere
    CHECK_THROWS_AS(num::smallest_positive_root([](double r) { return r + 1.0; }, 1.0), NoRoot);
    CHECK_THROWS_AS(num::smallest_positive_root([](double r) { return r - 0.5; }, 1.0, 32),
                    OutOfDomain);
}

TEST_CASE("lambert w0: real branch") {
    CHECK(num::lambert_w0(0.0) == 0.0);
    CHECK(num::lambert_w0(std::exp(1.0)) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(num::lambert_w0(1.0) == doctest::Approx(0.567143).epsilon(1e-6));
    CHECK_THROWS_AS(num::lambert_w0(-1.0), OutOfDomain);

    for (double x : {-1.0 / std::exp(1.0) + 1e-6, 0.1, 1.0, 10.0, 1e6}) {
        const double w = num::lambert_w0(x);
        CHECK(std::abs(w * std::exp(w) - x) <= 1e-12 * std::max(1.0, std::abs(x)));
        CHECK(w >= -1.0);
    }
}

TEST_CASE("lambert w0: complex branch round trip") {
    for (double rr : {0.05, 0.3, 0.6, 0.95}) {
        for (int k = 0; k < 16; ++k) {
            const Complex x = std::polar(rr, -kPi + 2 * kPi * (k + 1) / 16.0);
            const Complex w = num::lambert_w0(x);
            CHECK(std::abs(w * std::exp(w) - x) <= 1e-12 * std::max(1.0, std::abs(x)));
        }
    }
    // near the branch point
    const Complex w = num::lambert_w0(Complex(-1.0 / std::exp(1.0) + 1e-5, 1e-7));
    CHECK(std::abs(w + 1.0) < 0.02);
}

TEST_CASE("principal branches") {
    CHECK(num::principal_sqrt(Complex(-1.0, 0.0)) == Complex(0.0, 1.0));
    CHECK(num::principal_log(Complex(1.0, 0.0)) == Complex(0.0, 0.0));
    CHECK(num::principal_asin(Complex(1.0, 0.0)).real() == doctest::Approx(kPi / 2));
    CHECK_THROWS_AS(num::principal_log(Complex(0.0, 0.0)), BranchPole);

    // arcsin inverts sin on |z| <= 0.9
    for (double rr : {0.25, 0.6, 0.9}) {
        for (int k = 0; k < 24; ++k) {
            const Complex z = std::polar(rr, -kPi + 2 * kPi * (k + 1) / 24.0);
            CHECK(std::abs(std::sin(num::principal_asin(z)) - z) <= 1e-12);
        }
    }
}

TEST_CASE("integer powers by squaring") {
    const Complex z(0.3, -0.7);
    Complex acc(1.0, 0.0);
    for (int k = 1; k <= 20; ++k) {
        acc *= z;
        CHECK(std::abs(num::pow_int(z, k) - acc) <= 1e-14 * std::abs(acc) * k);
    }
}

#include "cusp/verification.hpp"

#include "cusp/errors.hpp"

#include <cmath>
#include <complex>
#include <sstream>

#include "cusp/classes.hpp"
#include "cusp/domain.hpp"
#include "cusp/inclusion.hpp"
#include "cusp/radii.hpp"
#include "cusp/series.hpp"

namespace cusp::verify {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kSqrt2 = 1.4142135623730951;

using cls::ComparatorClass;
using geom::EpicycloidDomain;
using num::Complex;

// Published radii table: rows (a)-(h), columns n = 4, 6, 8.
constexpr double kTable2[8][3] = {
    {0.501903, 0.481180, 0.465714},  // sl-alpha(0)
    {0.353501, 0.333349, 0.321650},  // rl
    {0.213942, 0.200158, 0.193019},  // rational-r
    {0.892917, 0.895669, 0.895131},  // sin
    {0.554083, 0.535219, 0.519222},  // sg
    {0.752971, 0.748475, 0.738894},  // nephroid
    {0.472288, 0.430250, 0.413972},  // z-exp
    {0.921471, 0.924325, 0.924715},  // arc-sinh
};

ComparatorClass table2_class(int row) {
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
}

int n_column(int n) { return n == 4 ? 0 : n == 6 ? 1 : 2; }

std::string cell_id(const std::string& cls_name, int n) {
    std::ostringstream os;
    os << cls_name << " n=" << n;
    return os.str();
}

CaseResult make_case(std::string suite, std::string id, double expected, double got,
                     double tol, std::string note = "") {
    CaseResult c;
    c.suite = std::move(suite);
    c.case_id = std::move(id);
    c.expected = expected;
    c.got = got;
    c.tol = tol;
    c.pass = std::abs(got - expected) <= tol;
    c.errata_note = std::move(note);
    return c;
}
}  // namespace

const char* const kTable2Classes[8] = {"sl-alpha(0)", "rl",       "rational-r", "sin",
                                       "sg",          "nephroid", "z-exp",      "arc-sinh"};

double table2_value(int row, int n) {
    if (row < 0 || row > 7) throw OutOfRange("table2_value: row must be in 0..7");
    if (n != 4 && n != 6 && n != 8) throw OutOfRange("table2_value: n must be 4, 6 or 8");
    return kTable2[row][n_column(n)];
}

std::vector<CaseResult> suite_table2_closed(const Options& o) {
    std::vector<CaseResult> out;
    radii::RadiusOptions ropts;
    ropts.with_oracle = false;
    for (int row = 0; row < 8; ++row) {
        const auto c = table2_class(row);
        for (int n : o.n_list) {
            const EpicycloidDomain d(n);
            const auto res = radii::backward_radius(c, d, ropts);
            out.push_back(make_case("table2-closed", cell_id(kTable2Classes[row], n),
                                    table2_value(row, n), res.closed_form, 1e-5));
        }
    }
    return out;
}

std::vector<CaseResult> suite_table2_oracle(const Options& o) {
    std::vector<CaseResult> out;
    radii::OracleOptions oo;
    oo.curve_samples = o.samples;
    oo.tol = o.oracle_tol;
    radii::RadiusOptions ropts;
    ropts.with_oracle = false;
    for (int row = 0; row < 8; ++row) {
        const auto c = table2_class(row);
        for (int n : o.n_list) {
            const EpicycloidDomain d(n);
            const double closed = radii::backward_radius(c, d, ropts).closed_form;
            const double oracle = radii::backward_oracle(c, d, oo);
            CaseResult cr = make_case("table2-oracle", cell_id(kTable2Classes[row], n),
                                      closed, oracle, 1e-4);
            if (row == 2 && n == 4) {
                // The printed root equation for this row is inconsistent; the
                // oracle picks between the two candidate roots.
                const double cand_sym = 0.213942, cand_left = 0.215000;
                const bool near_sym = std::abs(oracle - cand_sym) <= 1e-4;
                const bool near_left = std::abs(oracle - cand_left) <= 1e-4;
                cr.pass = near_sym != near_left;  // exactly one
                std::ostringstream os;
                os << "equation-form adjudication: oracle " << oracle << " matches "
                   << (near_left ? "0.215000 (left-edge equation r^n - nr + (n+1)(3-2sqrt2))"
                                 : near_sym ? "0.213942 (symmetric-disk equation)"
                                            : "neither candidate");
                cr.errata_note = os.str();
            } else if (!cr.pass && row == 1) {
                std::ostringstream os;
                os << "published disk bound is not sharp at n=" << n
                   << ": the inscribed disk touches the region off the real axis; the "
                      "sharp containment radius is "
                   << oracle;
                cr.errata_note = os.str();
            }
            out.push_back(cr);
        }
    }
    return out;
}

std::vector<CaseResult> suite_limits() {
    std::vector<CaseResult> out;
    const double tol = 1e-3;
    auto add = [&](const std::string& id, const ComparatorClass& c, double expected,
                   std::string note = "") {
        out.push_back(make_case("limits", id, expected, radii::limit_radius(c), tol,
                                std::move(note)));
    };
    add("w", ComparatorClass::w(), kSqrt2 - 1.0);
    add("f1", ComparatorClass::f1(), std::sqrt(5.0) - 2.0);
    add("f2", ComparatorClass::f2(), (std::sqrt(17.0) - 3.0) / 4.0);
    add("rl", ComparatorClass::rl(), 1.0);
    add("cardioid", ComparatorClass::cardioid(), std::sqrt(2.5) - 1.0);
    add("rational-r", ComparatorClass::rational_r(), -1.0 - kSqrt2 + std::sqrt(6.0 + 4.0 * kSqrt2));
    add("lune", ComparatorClass::lune(), 0.75);
    add("lim", ComparatorClass::lim(), 2.0 - kSqrt2);
    add("z-exp", ComparatorClass::z_exp(), 0.567143);
    add("m-beta(2)", ComparatorClass::m_beta(2.0), 1.0 / 3.0);
    add("alpha-exp(0)", ComparatorClass::alpha_exp(0.0), std::log(2.0));
    add("order-alpha(0.5)", ComparatorClass::order_alpha(0.5), 0.5);
    add("janowski(0.5,-0.5)", ComparatorClass::janowski(0.5, -0.5), 2.0 / 3.0);
    add("janowski(1,-0.5) [M=2]", ComparatorClass::janowski(1.0, -0.5), 0.5);

    // Errata rows: the printed limits carry a sign flip; the positive-root
    // values are reported (the last one exceeds 1, where the radius saturates).
    const double big_n = 1e6;
    {
        const double a = 1.0;
        const double got = (std::sqrt((big_n + 1) * (big_n + 1) +
                                      4.0 * a * (big_n - 1) * (big_n - 1)) -
                            (big_n + 1)) /
                           (2.0 * a * (big_n - 1));
        out.push_back(make_case("limits", "bs-alpha(1) [errata]", (std::sqrt(5.0) - 1.0) / 2.0,
                                got, tol,
                                "printed (1+sqrt5)/2 is the negative-root mate; the positive "
                                "root gives (sqrt5-1)/2"));
    }
    {
        const double a = 0.25;
        const double got = (big_n - 1) * (big_n + 3 - 2 * a * (big_n + 1)) /
                           ((big_n + 1) * (big_n + 1) * (1 - a) * (1 - a));
        out.push_back(make_case("limits", "sl-alpha(0.25) [errata]",
                                (1 - 2 * a) / ((1 - a) * (1 - a)), got, tol,
                                "printed (2a-1)/(a-1)^2 is negative; the corrected numerator "
                                "gives (1-2a)/(1-a)^2"));
    }
    {
        const double a = 0.5;
        const Complex g = std::polar(1.0, kPi / (big_n - 1));
        const double got = std::abs((big_n * g - g) / ((big_n + 1) * (1.0 - a)));
        out.push_back(make_case("limits", "janowski(0.5,0) [errata]", 1.0 / (1.0 - a), got, tol,
                                "printed 1/(a-1) is negative; the formula value 1/(1-a) "
                                "exceeds 1, so the radius saturates at 1"));
    }
    return out;
}

std::vector<CaseResult> suite_inscribed_disk(const Options& o) {
    std::vector<CaseResult> out;
    for (int n : o.n_list) {
        const EpicycloidDomain d(n);
        const int grid = 100000;
        std::vector<Complex> bd(grid);
        for (int j = 0; j < grid; ++j)
            bd[j] = d.phi(std::polar(1.0, -kPi + 2.0 * kPi * (j + 1) / grid));
        const double lo = 2.0 / (n + 1) + 0.01, hi = 1.99;
        double worst = 0.0;
        for (int i = 0; i < 50; ++i) {
            const double a = lo + (hi - lo) * i / 49.0;
            double bf = 1e300;
            for (const Complex& w : bd) bf = std::min(bf, std::abs(w - a));
            const double cf = d.inscribed_radius({a, n});
            worst = std::max(worst, std::abs(bf - cf));
        }
        out.push_back(make_case("inscribed-disk", "50 centres n=" + std::to_string(n), 0.0, worst, 1e-6));
    }
    {
        const EpicycloidDomain d4(4);
        out.push_back(make_case("inscribed-disk", "a=1 n=4 exact", 0.6,
                                d4.inscribed_radius({1.0, 4}), 1e-12));
    }
    return out;
}

std::vector<CaseResult> suite_coefficients() {
    std::vector<CaseResult> out;
    using series::Rational;
    for (int n : {4, 6, 8}) {
        const auto rep = series::coefficient_bounds(n);
        const Rational M(n + 1);
        const Rational expect[4] = {Rational(n) / M, Rational(n) / (2 * M),
                                    Rational(n) / (3 * M), Rational(n) / (4 * M)};
        for (int idx = 0; idx < 4; ++idx) {
            const int i = idx + 2;
            const auto f = series::extremal_series_exact(n, i, i + 1);
            const bool exact_ok = f.coeffs[i] == expect[idx];
            CaseResult c = make_case("coefficients",
                                     "a_" + std::to_string(i) + " n=" + std::to_string(n),
                                     double(expect[idx]), double(f.coeffs[i]), 0.0);
            c.pass = exact_ok;
            if (i == 4)
                c.errata_note = "stated bound n/(12(n+1)) = " +
                                std::to_string(rep.bounds[idx]) +
                                " versus extremal coefficient n/(3(n+1)) = " +
                                std::to_string(rep.extremal_values[idx]) +
                                "; reported, not asserted";
            out.push_back(c);
        }
    }
    {
        bool ok = true;
        for (int n = 4; n <= 64; ++n) {
            series::Rational b, dl;
            series::fourth_coefficient_params(n, b, dl);
            ok = ok && series::caratheodory_cubic_criterion(b, dl);
        }
        CaseResult c = make_case("coefficients", "cubic-criterion params n=4..64", 1.0, ok ? 1.0 : 0.0, 0.0);
        c.pass = ok;
        out.push_back(c);
    }
    {
        bool ok = true;
        for (int n = 4; n <= 64; ++n) {
            series::Rational al, a, b, g;
            series::fifth_coefficient_params(n, al, a, b, g);
            ok = ok && series::caratheodory_quartic_criterion(al, a, b, g);
        }
        CaseResult c = make_case("coefficients", "quartic-criterion params n=4..64", 1.0, ok ? 1.0 : 0.0, 0.0);
        c.pass = ok;
        out.push_back(c);
    }
    {
        bool ok = true;
        for (int n = 1; n <= 64; ++n) ok = ok && (series::quartic_criterion_slack_printed(n) <= 0);
        CaseResult c = make_case("coefficients", "quartic-criterion printed reduction <= 0", 1.0,
                                 ok ? 1.0 : 0.0, 0.0);
        c.pass = ok;
        out.push_back(c);
    }
    return out;
}

std::vector<CaseResult> suite_inclusion() {
    std::vector<CaseResult> out;
    const EpicycloidDomain d(8);
    const auto rep = inclusion::inclusion_constants(d);
    out.push_back(make_case("inclusion", "alpha0 n=8", 1.0 - std::cos(kPi / 9.0), rep.alpha0, 1e-4));
    out.push_back(make_case("inclusion", "tan(beta0) n=8", 5.0273, std::tan(rep.beta0), 5e-4));
    out.push_back(make_case("inclusion", "cassinian c n=8", 77.0 / 81.0, rep.cassinian_c_max, 1e-4));
    out.push_back(make_case("inclusion", "janowski disk radius n=8", 7.0 / 9.0,
                            1.0 - rep.janowski_uniform_alpha_min, 1e-4));

    // Grid extremes: the sample count is chosen so both stationary angles
    // n pi/(n+1) (for alpha0) and (n-1) pi/n (for beta0) land on grid points.
    const int grid = 105840;
    double min_re = 1e300, max_arg = 0.0;
    for (int j = 1; j <= grid; ++j) {
        const double t = -kPi + 2.0 * kPi * j / grid;
        const Complex w = d.phi(std::polar(1.0, t));
        min_re = std::min(min_re, w.real());
        max_arg = std::max(max_arg, std::abs(std::arg(w)));
    }
    out.push_back(make_case("inclusion", "alpha0 vs grid min", min_re, rep.alpha0, 1e-8));
    out.push_back(make_case("inclusion", "beta0 vs grid max", max_arg, rep.beta0, 1e-8));
    return out;
}

std::vector<CaseResult> suite_domain_invariants() {
    std::vector<CaseResult> out;
    for (int n : {4, 6, 8, 20}) {
        const EpicycloidDomain d(n);
        const double inner = double(n - 1) / (n + 1);
        const int grid = 100000;
        double lo = 1e300, hi = 0.0;
        bool in_band = true;
        for (int j = 1; j <= grid; ++j) {
            const double t = -kPi + 2.0 * kPi * j / grid;
            const double r = std::abs(d.phi(std::polar(1.0, t)) - 1.0);
            lo = std::min(lo, r);
            hi = std::max(hi, r);
            in_band = in_band && r >= inner - 1e-12 && r <= 1.0 + 1e-12;
        }
        {
            CaseResult c = make_case("domain", "modulus band n=" + std::to_string(n), 1.0,
                                     in_band ? 1.0 : 0.0, 0.0);
            c.pass = in_band;
            out.push_back(c);
        }
        out.push_back(make_case("domain", "min at cusps n=" + std::to_string(n), inner, lo, 1e-9));
        out.push_back(make_case("domain", "max at aligned angles n=" + std::to_string(n), 1.0, hi, 1e-9));

        double worst = 0.0;
        const double h = 2e-6;
        for (double tk : d.cusps().angles) {
            const auto p = [&](double t) { return d.boundary(t); };
            const double xp = (p(tk + h).x - p(tk - h).x) / (2 * h);
            const double yp = (p(tk + h).y - p(tk - h).y) / (2 * h);
            worst = std::max(worst, std::max(std::abs(xp), std::abs(yp)));
        }
        out.push_back(make_case("domain", "cusp derivative zeros n=" + std::to_string(n), 0.0,
                                worst, 1e-9));
        out.push_back(make_case("domain", "hausdorff gap n=" + std::to_string(n), 2.0 / (n + 1),
                                d.hausdorff_gap_to_unit_circle(grid), 1e-9));
    }
    return out;
}

std::vector<CaseResult> suite_unit_radius(const Options& o) {
    std::vector<CaseResult> out;
    for (int n : o.n_list) {
        const EpicycloidDomain d(n);
        for (const char* nm : {"sg", "cos", "cosh"}) {
            const ComparatorClass c = nm == std::string("sg")    ? ComparatorClass::sg()
                                      : nm == std::string("cos") ? ComparatorClass::cosine()
                                                                 : ComparatorClass::hyp_cosine();
            int outside = 0;
            for (int j = 0; j < 4096; ++j) {
                const double t = -kPi + 2.0 * kPi * (j + 1) / 4096;
                if (d.contains_point(c.phi_of(std::polar(1.0, t)), o.boundary_samples) ==
                    geom::Verdict::Outside)
                    ++outside;
            }
            CaseResult cr = make_case("unit-radius",
                                      std::string(nm) + " n=" + std::to_string(n), 0.0,
                                      double(outside), 0.0);
            cr.pass = outside == 0;
            out.push_back(cr);
        }
    }
    return out;
}

std::vector<CaseResult> suite_forward_touching(const Options& o) {
    std::vector<CaseResult> out;
    const EpicycloidDomain d(4);
    radii::OracleOptions oo;
    oo.curve_samples = o.samples;
    oo.boundary_samples = 131072;  // tight band so a 1% excursion is visible
    oo.tol = o.oracle_tol;
    const ComparatorClass classes[7] = {
        ComparatorClass::cardioid(), ComparatorClass::lune(), ComparatorClass::rational_r(),
        ComparatorClass::rl(),       ComparatorClass::lim(),  ComparatorClass::z_exp(),
        ComparatorClass::car()};
    for (const auto& c : classes) {
        const double rstar = radii::forward_oracle(c, d, oo);
        bool all_inside = true;
        int outside = 0;
        for (int j = 0; j < oo.curve_samples; ++j) {
            const double t = -kPi + 2.0 * kPi * (j + 1) / oo.curve_samples;
            const Complex zin = std::polar(0.99 * rstar, t);
            if (d.contains_point(c.phi_of(zin), oo.boundary_samples) != geom::Verdict::Inside)
                all_inside = false;
            const Complex zout = std::polar(std::min(1.01 * rstar, 1.0 - 1e-12), t);
            if (d.contains_point(c.phi_of(zout), oo.boundary_samples) == geom::Verdict::Outside)
                ++outside;
        }
        CaseResult cr = make_case("forward-touching", c.name() + " n=4", 1.0,
                                  (all_inside && outside > 0) ? 1.0 : 0.0, 0.0);
        cr.pass = all_inside && outside > 0;
        std::ostringstream os;
        os.precision(6);
        os << std::fixed << "r*=" << rstar << ", outside-at-1.01r*=" << outside;
        if (!cr.pass) cr.errata_note = os.str();
        out.push_back(cr);
    }
    return out;
}

std::vector<CaseResult> run_all(const Options& o) {
    std::vector<CaseResult> all;
    auto append = [&all](std::vector<CaseResult> v) {
        all.insert(all.end(), v.begin(), v.end());
    };
    append(suite_table2_closed(o));
    append(suite_table2_oracle(o));
    append(suite_limits());
    append(suite_inscribed_disk(o));
    append(suite_coefficients());
    append(suite_inclusion());
    append(suite_domain_invariants());
    append(suite_unit_radius(o));
    append(suite_forward_touching(o));
    return all;
}

}  // namespace cusp::verify

#pragma once

/// Catalog of comparator starlike classes.  Each entry carries the defining
/// Ma-Minda function phi_C where one exists, an exact region-membership
/// predicate for Omega_C = phi_C(D), and the disk-containment threshold used
/// by the backward root equations.
///
/// Membership predicates invert phi_C analytically (quadratic formulas,
/// principal arcsin/arccos/log/Lambert W, or a defining inequality), so the
/// backward oracle carries no discretization bias.

#include <memory>
#include <optional>
#include <string>

#include "cusp/domain.hpp"
#include "cusp/numerics.hpp"

namespace cusp::cls {

using geom::Verdict;
using num::Complex;

enum class Tag {
    MBeta,      // Re w < beta, beta > 1
    BS,         // 1 + z/(1 - alpha z^2), 0 < alpha <= 1
    W,          // f/z of positive real part (ratio class, no phi)
    F1,         // f/g, Re g/z > 0 (ratio class)
    F2,         // |f/g - 1| < 1 (ratio class)
    SLalpha,    // alpha + (1-alpha) sqrt(1+z)
    Cassinian,  // sqrt(1 + c z)
    AlphaExp,   // alpha + (1-alpha) e^z
    EL,         // alpha e^z + (1-alpha)(1+z)
    Cardioid,   // 1 + 4z/3 + 2z^2/3
    Lune,       // z + sqrt(1+z^2)
    RationalR,  // (k^2+z^2)/(k^2-kz), k = 1+sqrt(2)
    RL,         // sqrt(2) - (sqrt(2)-1) sqrt((1-z)/(1+2(sqrt(2)-1)z))
    Lim,        // 1 + sqrt(2) z + z^2/2
    ZExp,       // 1 + z e^z
    Car,        // 1 + z + z^2/2
    Sin,        // 1 + sin z
    Nephroid,   // 1 + z - z^3/3
    Janowski,   // (1+Az)/(1+Bz)
    OrderAlpha, // Re w > alpha (Janowski [1-2alpha, -1])
    SG,         // 2/(1+e^{-z})
    Cos,        // cos z
    Cosh,       // cosh z
    ArcSinh,    // 1 + asinh z
    SnL,        // the n-cusp epicycloid class itself
};

class ComparatorClass {
  public:
    static ComparatorClass m_beta(double beta);
    static ComparatorClass bs(double alpha);
    static ComparatorClass w();
    static ComparatorClass f1();
    static ComparatorClass f2();
    static ComparatorClass sl_alpha(double alpha);
    static ComparatorClass cassinian(double c);
    static ComparatorClass alpha_exp(double alpha);
    static ComparatorClass el(double alpha);
    static ComparatorClass cardioid();
    static ComparatorClass lune();
    static ComparatorClass rational_r();
    static ComparatorClass rl();
    static ComparatorClass lim();
    static ComparatorClass z_exp();
    static ComparatorClass car();
    static ComparatorClass sine();
    static ComparatorClass nephroid();
    static ComparatorClass janowski(double A, double B);
    static ComparatorClass order_alpha(double alpha);
    static ComparatorClass sg();
    static ComparatorClass cosine();
    static ComparatorClass hyp_cosine();
    static ComparatorClass arc_sinh();
    static ComparatorClass snl(int n);

    Tag tag() const { return tag_; }
    double param(int i = 0) const { return i == 0 ? p1_ : p2_; }

    /// Stable kebab-case identifier ("sl-alpha", "rational-r", ...).
    std::string name() const;
    /// Identifier plus parameters, for table rows ("sl-alpha(0.25)").
    std::string display_name() const;

    bool has_phi() const;

    /// The defining function phi_C(z).  Throws NotMaMinda for the ratio and
    /// growth classes (W, F1, F2, MBeta).
    Complex phi_of(Complex z) const;

    /// Exact membership of w in Omega_C.  Boundary within a 1e-9 band of the
    /// defining equality.  Throws NotMaMinda for the ratio classes.
    Verdict membership(Complex w) const;

    /// Signed margin proxy behind the verdict: positive inside, negative
    /// outside, magnitude in the predicate's own units (not a distance).
    double membership_margin(Complex w) const;

    /// Boundary parametrization phi_C(e^{it}) where Omega_C has one.
    std::optional<Complex> boundary_param(double t) const;

    struct DiskThreshold {
        enum class Kind { Symmetric, LeftGap } kind;
        double value;
    };
    /// kappa(C) for the backward root equations.  Symmetric: the equation is
    /// r^n + n r - (n+1) kappa = 0; LeftGap: r^n - n r + (n+1) kappa' = 0.
    /// Throws NotInBackwardTable for classes outside the backward inventory.
    DiskThreshold disk_threshold() const;

  private:
    ComparatorClass(Tag t, double p1, double p2) : tag_(t), p1_(p1), p2_(p2) {}
    Tag tag_;
    double p1_ = 0.0;
    double p2_ = 0.0;
    std::shared_ptr<geom::EpicycloidDomain> snl_domain_;  // SnL only
};

}  // namespace cusp::cls

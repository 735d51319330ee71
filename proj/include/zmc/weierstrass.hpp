#pragma once

// The four representation formulas that turn a data pair (g, omega) of
// para-holomorphic expressions into zero-mean-curvature surface patches in
// Lorentz-Minkowski 3-space R^3_1, signature (-,+,+).

#include <Eigen/Core>
#include <array>
#include <optional>

#include "zmc/expr.hpp"
#include "zmc/integrate.hpp"
#include "zmc/region.hpp"

namespace zmc {

// Coordinates ordered (t, x, y): index 0 is the time axis.
using Point3 = Eigen::Vector3d;

// <a, b> = -a_t b_t + a_x b_x + a_y b_y.
double lorentz_dot(const Point3& a, const Point3& b);

// Bilinear product with <cross(a,b), c> = det[a; b; c] for the Lorentzian
// inner product; orthogonal to both arguments.
Point3 lorentz_cross(const Point3& a, const Point3& b);

enum class Formula { F1, F2, F3, F4 };

const char* formula_name(Formula f);
Formula parse_formula(const std::string& text);  // "F1".."F4", throws Error

struct WeierstrassData {
    ParaExpr g;
    ParaExpr omega;
    ParaComplexd base{};
    RegionSpec region;
};

// Integrand triple of the representation formula:
//   F1/F2 (first kind):  (-(1+g^2),  j(1-g^2),  2g) * omega
//   F3/F4 (second kind): (-(1+g^2),  2jg,  g^2-1) * omega
std::array<ParaExpr, 3> integrand(const WeierstrassData& d, Formula f);

struct SurfacePatch {
    WeierstrassData data;
    Formula formula{Formula::F1};
    // Componentwise antiderivative of the integrand, when known in closed
    // form.  Without it evaluation falls back to checked line integrals.
    std::optional<std::array<ParaExpr, 3>> primitive;
};

// Builds a patch, deriving the primitive automatically when every integrand
// component is polynomial.
SurfacePatch make_patch(WeierstrassData d, Formula f);

// F1/F3 take the real part of the primitive, F2/F4 the imaginary part.
Point3 immersion_part(const std::array<ParaComplexd, 3>& h, Formula f);

// Immersion normalized so evaluate_immersion(p, base) = (0,0,0).
// Throws DomainViolation outside the region; PathDependent if the numeric
// fallback detects a non-closed integrand.
Point3 evaluate_immersion(const SurfacePatch& p, const ParaComplexd& z);

// Closed-form immersion with no base-point normalization (the constant the
// antiderivative happens to carry).  Requires a primitive; no region check.
Point3 raw_immersion(const SurfacePatch& p, const ParaComplexd& z);

// (g, omega) -> ((g-1)/(g+1), (1+g)^2 omega / 2).  The first-kind integrand
// of the result equals the second-kind integrand of the input; the region
// shrinks by the constraint that g+1 stays invertible.
WeierstrassData dual_transform(const WeierstrassData& d);

// lambda(z) with induced metric lambda * (du^2 - dv^2):
//   F1: -(1 - norm2 g)^2 norm2 omega        F2: +(1 - norm2 g)^2 norm2 omega
//   F3: -(2 re g)^2 norm2 omega             F4: +(2 re g)^2 norm2 omega
double conformal_factor(const WeierstrassData& d, Formula f,
                        const ParaComplexd& z);

// Immersion rebuilt from two one-dimensional real integrals along the null
// profiles of g and omega (anchored at the origin): equals the patch
// immersion at z = (x+y) + j(x-y) up to the base-point constant.
Point3 null_form_immersion(const WeierstrassData& d, Formula f, double x,
                           double y, double rel_tol = kQuadRelTol);

// [[<F_u,F_u>, <F_u,F_v>], [., <F_v,F_v>]] by central differences, Lorentzian
// inner products.  Matches diag(lambda, -lambda) to O(h^2).
Eigen::Matrix2d first_fundamental_form_fd(const SurfacePatch& p,
                                          const ParaComplexd& z, double h);

// Mean curvature from finite-difference fundamental forms.  Throws
// DomainViolation where the tangent plane is light-like within tolerance
// (no unit normal exists).
double mean_curvature_fd(const SurfacePatch& p, const ParaComplexd& z,
                         double h);

} // namespace zmc

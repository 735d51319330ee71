#pragma once

#include <functional>
#include <vector>

#include "zmc/expr.hpp"
#include "zmc/paracomplex.hpp"

namespace zmc {

inline constexpr double kQuadRelTol = 1e-10;
inline constexpr double kPathAgreementTol = 1e-8;

// Adaptive composite 16-point Gauss-Legendre quadrature on [a, b].
// Panel count doubles until two successive refinements agree to rel_tol
// (relative to 1 + |result|).  Throws DomainViolation if no convergence.
double integrate_real(const std::function<double(double)>& f, double a,
                      double b, double rel_tol = kQuadRelTol);

// Line integral of f(z) dz along the polyline through the given vertices,
// where dz multiplication is para-complex.  Errors thrown by the integrand
// (domain violations, non-invertible divisors) propagate unchanged.
ParaComplexd line_integral(
    const std::function<ParaComplexd(const ParaComplexd&)>& f,
    const std::vector<ParaComplexd>& polyline, double rel_tol = kQuadRelTol);

ParaComplexd line_integral(const ParaExpr& e,
                           const std::vector<ParaComplexd>& polyline,
                           double rel_tol = kQuadRelTol);

// Integral from z0 to z1 evaluated along the two axis-aligned elbow paths
// (via (u1, v0) and via (u0, v1)).  Disagreement beyond path_tol means the
// integrand is not para-holomorphic on the region and raises PathDependent.
ParaComplexd line_integral_checked(
    const std::function<ParaComplexd(const ParaComplexd&)>& f,
    const ParaComplexd& z0, const ParaComplexd& z1,
    double rel_tol = kQuadRelTol, double path_tol = kPathAgreementTol);

ParaComplexd line_integral_checked(const ParaExpr& e, const ParaComplexd& z0,
                                   const ParaComplexd& z1,
                                   double rel_tol = kQuadRelTol,
                                   double path_tol = kPathAgreementTol);

} // namespace zmc

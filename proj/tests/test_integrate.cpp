#include <cmath>
#include <numbers>

#include "doctest.h"
#include "zmc/errors.hpp"
#include "zmc/expr.hpp"
#include "zmc/integrate.hpp"

using zmc::ParaComplexd;
using zmc::ParaExpr;

namespace {

double dist(const ParaComplexd& a, const ParaComplexd& b) {
  return std::max(std::abs(re(a) - re(b)), std::abs(im(a) - im(b)));
}

}  // namespace

TEST_CASE("real quadrature oracles") {
  const double third =
      zmc::integrate_real([](double x) { return x * x; }, 0, 1);
  CHECK(third == doctest::Approx(1.0 / 3).epsilon(1e-13));

  const double two = zmc::integrate_real([](double x) { return std::sin(x); },
                                         0, std::numbers::pi);
  CHECK(two == doctest::Approx(2.0).epsilon(1e-13));

  const double em1 =
      zmc::integrate_real([](double x) { return std::exp(x); }, 0, 1);
  CHECK(em1 == doctest::Approx(std::exp(1.0) - 1).epsilon(1e-13));

  // Steep but integrable; the panel doubling has to work for this one.
  const double steep = zmc::integrate_real(
      [](double x) { return 1.0 / (x + 1e-3); }, 0, 1);
  CHECK(steep == doctest::Approx(std::log(1.001 / 1e-3)).epsilon(1e-9));

  // Orientation flip negates.
  CHECK(zmc::integrate_real([](double x) { return x; }, 1, 0) ==
        doctest::Approx(-0.5).epsilon(1e-13));
}

TEST_CASE("quadrature reports non-convergence") {
  // A value that never settles: successive refinements see fresh values.
  long calls = 0;
  const auto noisy = [&calls](double) {
    ++calls;
    return std::sin(static_cast<double>(calls) * 12.9898) * 43758.5453;
  };
  CHECK_THROWS_AS((void)zmc::integrate_real(noisy, 0, 1),
                  zmc::DomainViolation);
}

TEST_CASE("line integral oracles") {
  const ParaExpr z = zmc::var();

  // Integral of 1/(1+z^2) along the real segment [0, 1].
  const ParaComplexd i1 = zmc::line_integral(
      1.0 / (z * z + 1.0), {ParaComplexd(0, 0), ParaComplexd(1, 0)});
  CHECK(dist(i1, ParaComplexd(std::numbers::pi / 4, 0)) < 1e-12);

  // Integral of z along a null segment direction.
  const ParaComplexd i2 =
      zmc::line_integral(z, {ParaComplexd(0, 0), ParaComplexd(1, 1)});
  CHECK(dist(i2, ParaComplexd(1, 1)) < 1e-12);

  // Polyline additivity.
  const ParaComplexd whole = zmc::line_integral(
      z * z, {ParaComplexd(0, 0), ParaComplexd(1, 0), ParaComplexd(1, 2)});
  const ParaComplexd a =
      zmc::line_integral(z * z, {ParaComplexd(0, 0), ParaComplexd(1, 0)});
  const ParaComplexd b =
      zmc::line_integral(z * z, {ParaComplexd(1, 0), ParaComplexd(1, 2)});
  CHECK(dist(whole, a + b) < 1e-12);
}

TEST_CASE("path independence for para-holomorphic integrands") {
  const ParaExpr z = zmc::var();
  const ParaComplexd z1(1, 2);

  // Antiderivative oracle: integral of z^2 from 0 to z1 is z1^3 / 3.
  const ParaComplexd got = zmc::line_integral_checked(
      z * z, ParaComplexd(0, 0), z1);
  const ParaComplexd want = zmc::pow(z1, 3) / 3.0;
  CHECK(dist(got, want) < 1e-11);

  // The two elbow paths agree for exp as well.
  const ParaComplexd ge = zmc::line_integral_checked(
      zmc::exp(z), ParaComplexd(-1, 0), ParaComplexd(0.5, 1));
  const ParaComplexd we =
      zmc::exp(ParaComplexd(0.5, 1)) - zmc::exp(ParaComplexd(-1, 0));
  CHECK(dist(ge, we) < 1e-11);
}

TEST_CASE("path dependence is detected") {
  // f(z) = im(z) fails the para-Cauchy-Riemann equations; its two elbow
  // integrals from 0 to 1+1j differ by 1.
  const auto f = [](const ParaComplexd& w) {
    return ParaComplexd(im(w), 0);
  };
  CHECK_THROWS_AS((void)zmc::line_integral_checked(f, ParaComplexd(0, 0),
                                                   ParaComplexd(1, 1)),
                  zmc::PathDependent);
}

TEST_CASE("integrand errors propagate") {
  // A domain error raised inside the integrand must reach the caller
  // unchanged, not be swallowed by the quadrature driver.
  const auto f = [](const ParaComplexd& w) -> ParaComplexd {
    if (re(w) > 0.5)
      throw zmc::DomainViolation("test integrand left its domain");
    return w;
  };
  CHECK_THROWS_AS((void)zmc::line_integral(
                      f, {ParaComplexd(0, 0), ParaComplexd(1, 0)}),
                  zmc::DomainViolation);
  CHECK_THROWS_WITH_AS((void)zmc::line_integral_checked(f, ParaComplexd(0, 0),
                                                        ParaComplexd(1, 0.2)),
                       "test integrand left its domain", zmc::DomainViolation);
}

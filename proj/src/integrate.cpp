#include "zmc/integrate.hpp"

#include <cmath>
#include <sstream>

#include "zmc/errors.hpp"

namespace zmc {

namespace {

// 16-point Gauss-Legendre nodes/weights on [-1, 1] (positive half; the rule
// is symmetric).
constexpr int kHalf = 8;
constexpr double kNodes[kHalf] = {
    0.0950125098376374401853193, 0.2816035507792589132304605,
    0.4580167776572273863424194, 0.6178762444026437484466718,
    0.7554044083550030338951012, 0.8656312023878317438804679,
    0.9445750230732325760779884, 0.9894009349916499325961542,
};
constexpr double kWeights[kHalf] = {
    0.1894506104550684962853967, 0.1826034150449235888667637,
    0.1691565193950025381893121, 0.1495959888165767320815017,
    0.1246289712555338720524763, 0.0951585116824927848099251,
    0.0622535239386478928628438, 0.0271524594117540948517806,
};

constexpr int kMaxPanels = 4096;

double panel_sum(const std::function<double(double)>& f, double a, double b,
                 int panels) {
    const double h = (b - a) / panels;
    double total = 0.0;
    for (int p = 0; p < panels; ++p) {
        const double mid = a + (p + 0.5) * h;
        const double half = 0.5 * h;
        double acc = 0.0;
        for (int k = 0; k < kHalf; ++k) {
            acc += kWeights[k] *
                   (f(mid - half * kNodes[k]) + f(mid + half * kNodes[k]));
        }
        total += acc * half;
    }
    return total;
}

} // namespace

double integrate_real(const std::function<double(double)>& f, double a,
                      double b, double rel_tol) {
    if (a == b) return 0.0;
    double prev = panel_sum(f, a, b, 1);
    for (int panels = 2; panels <= kMaxPanels; panels *= 2) {
        const double cur = panel_sum(f, a, b, panels);
        if (std::abs(cur - prev) <= rel_tol * (1.0 + std::abs(cur))) {
            return cur;
        }
        prev = cur;
    }
    std::ostringstream os;
    os << "quadrature failed to converge on [" << a << ", " << b << "]";
    throw DomainViolation(os.str());
}

ParaComplexd line_integral(
    const std::function<ParaComplexd(const ParaComplexd&)>& f,
    const std::vector<ParaComplexd>& polyline, double rel_tol) {
    if (polyline.size() < 2) {
        throw DomainViolation("line integral needs at least two vertices");
    }
    ParaComplexd total(0.0, 0.0);
    for (std::size_t s = 0; s + 1 < polyline.size(); ++s) {
        const ParaComplexd a = polyline[s];
        const ParaComplexd b = polyline[s + 1];
        const ParaComplexd dz = b - a;
        // f(z(tau)) * dz is para-complex; integrate both components of the
        // product along the segment parameter.
        auto component = [&](int which) {
            return integrate_real(
                [&](double tau) {
                    const ParaComplexd z = a + tau * dz;
                    const ParaComplexd w = f(z) * dz;
                    return which == 0 ? re(w) : im(w);
                },
                0.0, 1.0, rel_tol);
        };
        total += ParaComplexd(component(0), component(1));
    }
    return total;
}

ParaComplexd line_integral(const ParaExpr& e,
                           const std::vector<ParaComplexd>& polyline,
                           double rel_tol) {
    return line_integral([&](const ParaComplexd& z) { return eval(e, z); },
                         polyline, rel_tol);
}

ParaComplexd line_integral_checked(
    const std::function<ParaComplexd(const ParaComplexd&)>& f,
    const ParaComplexd& z0, const ParaComplexd& z1, double rel_tol,
    double path_tol) {
    const ParaComplexd elbow_a(re(z1), im(z0));
    const ParaComplexd elbow_b(re(z0), im(z1));
    const ParaComplexd via_a = line_integral(f, {z0, elbow_a, z1}, rel_tol);
    const ParaComplexd via_b = line_integral(f, {z0, elbow_b, z1}, rel_tol);
    const ParaComplexd diff = via_a - via_b;
    const double err = std::hypot(re(diff), im(diff));
    const double scale = 1.0 + std::hypot(re(via_a), im(via_a));
    if (err > path_tol * scale) {
        std::ostringstream os;
        os << "integral from " << z0 << " to " << z1
           << " differs between elbow paths by " << err
           << "; integrand is path dependent";
        throw PathDependent(os.str());
    }
    return via_a;
}

ParaComplexd line_integral_checked(const ParaExpr& e, const ParaComplexd& z0,
                                   const ParaComplexd& z1, double rel_tol,
                                   double path_tol) {
    return line_integral_checked(
        [&](const ParaComplexd& z) { return eval(e, z); }, z0, z1, rel_tol,
        path_tol);
}

} // namespace zmc

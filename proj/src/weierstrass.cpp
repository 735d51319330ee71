#include "zmc/weierstrass.hpp"

#include <cmath>
#include <sstream>
#include <vector>

#include "zmc/errors.hpp"

namespace zmc {

double lorentz_dot(const Point3& a, const Point3& b) {
    return -a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

Point3 lorentz_cross(const Point3& a, const Point3& b) {
    const Point3 c(a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
                   a[0] * b[1] - a[1] * b[0]);
    return Point3(-c[0], c[1], c[2]);
}

const char* formula_name(Formula f) {
    switch (f) {
        case Formula::F1: return "F1";
        case Formula::F2: return "F2";
        case Formula::F3: return "F3";
        case Formula::F4: return "F4";
    }
    return "?";
}

Formula parse_formula(const std::string& text) {
    if (text == "F1" || text == "f1") return Formula::F1;
    if (text == "F2" || text == "f2") return Formula::F2;
    if (text == "F3" || text == "f3") return Formula::F3;
    if (text == "F4" || text == "f4") return Formula::F4;
    throw Error("unknown formula id '" + text + "' (expected F1..F4)");
}

namespace {

bool first_kind(Formula f) { return f == Formula::F1 || f == Formula::F2; }
bool real_part(Formula f) { return f == Formula::F1 || f == Formula::F3; }

const ParaComplexd kJ(0.0, 1.0);

// --- polynomial antiderivatives ---------------------------------------------

using Coeffs = std::vector<ParaComplexd>;

void trim(Coeffs& c) {
    while (!c.empty() && c.back() == ParaComplexd(0.0)) c.pop_back();
}

std::optional<Coeffs> poly_coeffs(const detail::ExprNode& n);

std::optional<Coeffs> poly_binary(const detail::ExprNode& n) {
    auto a = poly_coeffs(*n.a);
    if (!a) return std::nullopt;
    auto b = poly_coeffs(*n.b);
    if (!b) return std::nullopt;
    if (n.kind == ExprKind::Mul) {
        if (a->empty() || b->empty()) return Coeffs{};
        Coeffs out(a->size() + b->size() - 1, ParaComplexd(0.0));
        for (std::size_t i = 0; i < a->size(); ++i)
            for (std::size_t j = 0; j < b->size(); ++j)
                out[i + j] += (*a)[i] * (*b)[j];
        trim(out);
        return out;
    }
    Coeffs out = *a;
    if (out.size() < b->size()) out.resize(b->size(), ParaComplexd(0.0));
    for (std::size_t j = 0; j < b->size(); ++j) {
        if (n.kind == ExprKind::Add)
            out[j] += (*b)[j];
        else
            out[j] -= (*b)[j];
    }
    trim(out);
    return out;
}

std::optional<Coeffs> poly_coeffs(const detail::ExprNode& n) {
    switch (n.kind) {
        case ExprKind::Var:
            return Coeffs{ParaComplexd(0.0), ParaComplexd(1.0)};
        case ExprKind::Const:
            return Coeffs{n.value};
        case ExprKind::Add:
        case ExprKind::Sub:
        case ExprKind::Mul:
            return poly_binary(n);
        case ExprKind::Neg: {
            auto a = poly_coeffs(*n.a);
            if (!a) return std::nullopt;
            for (auto& c : *a) c = -c;
            return a;
        }
        case ExprKind::Pow: {
            if (n.ipow < 0 || n.ipow > 64) return std::nullopt;
            auto a = poly_coeffs(*n.a);
            if (!a) return std::nullopt;
            Coeffs acc{ParaComplexd(1.0)};
            for (long long k = 0; k < n.ipow; ++k) {
                Coeffs out(acc.size() + a->size() - 1, ParaComplexd(0.0));
                for (std::size_t i = 0; i < acc.size(); ++i)
                    for (std::size_t j = 0; j < a->size(); ++j)
                        out[i + j] += acc[i] * (*a)[j];
                acc = std::move(out);
            }
            trim(acc);
            return acc;
        }
        case ExprKind::Div: {
            if (n.b->kind != ExprKind::Const || is_null(n.b->value))
                return std::nullopt;
            auto a = poly_coeffs(*n.a);
            if (!a) return std::nullopt;
            const ParaComplexd inv = inverse(n.b->value);
            for (auto& c : *a) c *= inv;
            return a;
        }
        default:
            return std::nullopt;
    }
}

std::optional<ParaExpr> poly_antiderivative(const ParaExpr& e) {
    auto coeffs = poly_coeffs(e.node());
    if (!coeffs) return std::nullopt;
    ParaExpr sum = constant(0.0);
    for (std::size_t k = 0; k < coeffs->size(); ++k) {
        const ParaComplexd c = (*coeffs)[k] / double(k + 1);
        if (c == ParaComplexd(0.0)) continue;
        sum = sum + constant(c) * pow(ParaExpr(), (long long)(k + 1));
    }
    return sum;
}

std::array<ParaComplexd, 3> eval_triple(const std::array<ParaExpr, 3>& t,
                                        const ParaComplexd& z) {
    return {eval(t[0], z), eval(t[1], z), eval(t[2], z)};
}

} // namespace

std::array<ParaExpr, 3> integrand(const WeierstrassData& d, Formula f) {
    const ParaExpr g = d.g;
    const ParaExpr w = d.omega;
    const ParaExpr g2 = g * g;
    if (first_kind(f)) {
        return {-(1.0 + g2) * w, constant(kJ) * (1.0 - g2) * w,
                2.0 * g * w};
    }
    return {-(1.0 + g2) * w, constant(ParaComplexd(0.0, 2.0)) * g * w,
            (g2 - 1.0) * w};
}

SurfacePatch make_patch(WeierstrassData d, Formula f) {
    SurfacePatch p;
    p.data = std::move(d);
    p.formula = f;
    const auto tri = integrand(p.data, f);
    std::array<ParaExpr, 3> prim;
    bool ok = true;
    for (int k = 0; k < 3 && ok; ++k) {
        auto a = poly_antiderivative(tri[k]);
        if (a)
            prim[k] = *a;
        else
            ok = false;
    }
    if (ok) p.primitive = prim;
    return p;
}

Point3 immersion_part(const std::array<ParaComplexd, 3>& h, Formula f) {
    if (real_part(f)) return Point3(re(h[0]), re(h[1]), re(h[2]));
    return Point3(im(h[0]), im(h[1]), im(h[2]));
}

Point3 evaluate_immersion(const SurfacePatch& p, const ParaComplexd& z) {
    if (!p.data.region.contains(z)) {
        std::ostringstream os;
        os << "point " << z << " outside region (" << p.data.region.describe()
           << ")";
        throw DomainViolation(os.str());
    }
    if (p.primitive) {
        const auto hz = eval_triple(*p.primitive, z);
        const auto hb = eval_triple(*p.primitive, p.data.base);
        return immersion_part(
            {hz[0] - hb[0], hz[1] - hb[1], hz[2] - hb[2]}, p.formula);
    }
    const auto tri = integrand(p.data, p.formula);
    std::array<ParaComplexd, 3> acc;
    for (int k = 0; k < 3; ++k)
        acc[k] = line_integral_checked(tri[k], p.data.base, z);
    return immersion_part(acc, p.formula);
}

Point3 raw_immersion(const SurfacePatch& p, const ParaComplexd& z) {
    if (!p.primitive)
        throw Error("raw_immersion needs a closed-form primitive");
    return immersion_part(eval_triple(*p.primitive, z), p.formula);
}

WeierstrassData dual_transform(const WeierstrassData& d) {
    WeierstrassData out;
    out.g = (d.g - 1.0) / (d.g + 1.0);
    out.omega = constant(0.5) * (1.0 + d.g) * (1.0 + d.g) * d.omega;
    out.base = d.base;
    out.region = d.region;
    out.region.constraints.push_back({d.g + 1.0, SignRequirement::NonNull});
    out.region.name += " (dual)";
    return out;
}

double conformal_factor(const WeierstrassData& d, Formula f,
                        const ParaComplexd& z) {
    const double n2w = norm2(eval(d.omega, z));
    const ParaComplexd gz = eval(d.g, z);
    double lam;
    if (first_kind(f)) {
        const double a = 1.0 - norm2(gz);
        lam = -a * a * n2w;
    } else {
        const double a = 2.0 * re(gz);
        lam = -a * a * n2w;
    }
    // A formula and its conjugate induce opposite metrics.
    return real_part(f) ? lam : -lam;
}

Point3 null_form_immersion(const WeierstrassData& d, Formula f, double x,
                           double y, double rel_tol) {
    // Null profiles anchored at the origin, where both integrals start.
    const auto g_node = d.g.ptr();
    const auto w_node = d.omega.ptr();
    auto plus_of = [](const detail::NodePtr& n, double s) {
        return to_null(eval(ParaExpr(n), from_null(s, 0.0))).plus;
    };
    auto minus_of = [](const detail::NodePtr& n, double s) {
        return to_null(eval(ParaExpr(n), from_null(0.0, s))).minus;
    };
    const bool fk = first_kind(f);
    const double flip = real_part(f) ? 1.0 : -1.0;

    // First profile: components of the integrand triple along u+v = 2 xi.
    auto leg1 = [&](int comp) {
        return integrate_real(
            [&](double xi) {
                const double G = plus_of(g_node, 2.0 * xi);
                const double W = plus_of(w_node, 2.0 * xi);
                double c;
                if (comp == 0)
                    c = -1.0 - G * G;
                else if (comp == 1)
                    c = fk ? (1.0 - G * G) : 2.0 * G;
                else
                    c = fk ? 2.0 * G : (-1.0 + G * G);
                return c * W;
            },
            0.0, x, rel_tol);
    };
    // Second profile along u-v = 2 upsilon; the conjugate formulas flip the
    // sign of this profile's weight.
    auto leg2 = [&](int comp) {
        return integrate_real(
            [&](double up) {
                const double G = minus_of(g_node, 2.0 * up);
                const double W = flip * minus_of(w_node, 2.0 * up);
                double c;
                if (comp == 0)
                    c = -1.0 - G * G;
                else if (comp == 1)
                    c = fk ? -(1.0 - G * G) : -2.0 * G;
                else
                    c = fk ? 2.0 * G : (-1.0 + G * G);
                return c * W;
            },
            0.0, y, rel_tol);
    };
    return Point3(leg1(0) + leg2(0), leg1(1) + leg2(1), leg1(2) + leg2(2));
}

Eigen::Matrix2d first_fundamental_form_fd(const SurfacePatch& p,
                                          const ParaComplexd& z, double h) {
    const auto at = [&](double du, double dv) {
        return evaluate_immersion(
            p, ParaComplexd(re(z) + du, im(z) + dv));
    };
    const Point3 fu = (at(h, 0) - at(-h, 0)) / (2 * h);
    const Point3 fv = (at(0, h) - at(0, -h)) / (2 * h);
    Eigen::Matrix2d m;
    m << lorentz_dot(fu, fu), lorentz_dot(fu, fv), lorentz_dot(fu, fv),
        lorentz_dot(fv, fv);
    return m;
}

double mean_curvature_fd(const SurfacePatch& p, const ParaComplexd& z,
                         double h) {
    const auto at = [&](double du, double dv) {
        return evaluate_immersion(
            p, ParaComplexd(re(z) + du, im(z) + dv));
    };
    const Point3 f00 = at(0, 0);
    const Point3 fu = (at(h, 0) - at(-h, 0)) / (2 * h);
    const Point3 fv = (at(0, h) - at(0, -h)) / (2 * h);
    const Point3 fuu = (at(h, 0) - 2 * f00 + at(-h, 0)) / (h * h);
    const Point3 fvv = (at(0, h) - 2 * f00 + at(0, -h)) / (h * h);
    const Point3 fuv =
        (at(h, h) - at(h, -h) - at(-h, h) + at(-h, -h)) / (4 * h * h);

    const double E = lorentz_dot(fu, fu);
    const double F = lorentz_dot(fu, fv);
    const double G = lorentz_dot(fv, fv);
    const Point3 n = lorentz_cross(fu, fv);
    const double nn = lorentz_dot(n, n);
    const double scale = E * E + 2 * F * F + G * G;
    if (std::abs(nn) <= 1e-12 * (1.0 + scale)) {
        std::ostringstream os;
        os << "tangent plane at " << z
           << " is light-like within tolerance; no unit normal";
        throw DomainViolation(os.str());
    }
    const Point3 unit = n / std::sqrt(std::abs(nn));
    const double L = lorentz_dot(fuu, unit);
    const double M = lorentz_dot(fuv, unit);
    const double N = lorentz_dot(fvv, unit);
    return (G * L - 2 * F * M + E * N) / (2 * (E * G - F * F));
}

} // namespace zmc

#include "zmc/verify.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <deque>
#include <random>

#include "zmc/errors.hpp"

namespace zmc {

const char* causal_name(CausalLabel l) {
    switch (l) {
        case CausalLabel::Spacelike: return "spacelike";
        case CausalLabel::Timelike: return "timelike";
        case CausalLabel::Lightlike: return "lightlike";
    }
    return "?";
}

namespace {

struct GraphJet {
    double fa{}, fb{}, faa{}, fab{}, fbb{};
};

GraphJet jet_at(const EntireGraph& g, double a, double b, DerivMode mode,
                double h) {
    GraphJet j;
    if (mode == DerivMode::Analytic) {
        if (!g.partials)
            throw DomainViolation(
                "analytic mode requested but no partials are registered");
        j.fa = g.partials->fa(a, b);
        j.fb = g.partials->fb(a, b);
        j.faa = g.partials->faa(a, b);
        j.fab = g.partials->fab(a, b);
        j.fbb = g.partials->fbb(a, b);
        return j;
    }
    const auto& f = g.f;
    const double f00 = f(a, b);
    j.fa = (f(a + h, b) - f(a - h, b)) / (2 * h);
    j.fb = (f(a, b + h) - f(a, b - h)) / (2 * h);
    j.faa = (f(a + h, b) - 2 * f00 + f(a - h, b)) / (h * h);
    j.fbb = (f(a, b + h) - 2 * f00 + f(a, b - h)) / (h * h);
    j.fab = (f(a + h, b + h) - f(a + h, b - h) - f(a - h, b + h) +
             f(a - h, b - h)) /
            (4 * h * h);
    return j;
}

struct FormEntries {
    double E{}, F{}, G{}, L{}, M{}, N{};
};

// First fundamental form of the graph embedding plus second-form entries
// against the unnormalized normal (enough for the zero test, and smooth
// across the light-like locus).
FormEntries forms_from_jet(const EntireGraph& g, const GraphJet& j) {
    FormEntries o;
    if (g.plane == EntireGraph::Plane::Spacelike) {
        o.E = 1 - j.fa * j.fa;
        o.F = -j.fa * j.fb;
        o.G = 1 - j.fb * j.fb;
        o.L = j.faa;
        o.M = j.fab;
        o.N = j.fbb;
    } else {
        o.E = 1.0;
        o.F = -j.fa / 2;
        o.G = -j.fb;
        o.L = j.faa / 2;
        o.M = j.fab / 2;
        o.N = j.fbb / 2;
    }
    return o;
}

} // namespace

double zmc_residual(const EntireGraph& g, double a, double b, DerivMode mode,
                    double h) {
    const FormEntries o = forms_from_jet(g, jet_at(g, a, b, mode, h));
    return o.G * o.L - 2 * o.F * o.M + o.E * o.N;
}

Classified causal_classify(const EntireGraph& g, double a, double b,
                           double tol_light) {
    const GraphJet j = jet_at(
        g, a, b, g.partials ? DerivMode::Analytic : DerivMode::FiniteDifference,
        1e-5);
    Classified c;
    if (g.plane == EntireGraph::Plane::Spacelike) {
        c.disc = 1 - j.fa * j.fa - j.fb * j.fb;
        c.scale = 1 + j.fa * j.fa + j.fb * j.fb;
    } else {
        const FormEntries o = forms_from_jet(g, j);
        c.disc = o.E * o.G - o.F * o.F;
        c.scale = 1 + o.E * o.E + 2 * o.F * o.F + o.G * o.G;
    }
    if (std::abs(c.disc) <= tol_light * c.scale)
        c.label = CausalLabel::Lightlike;
    else
        c.label = c.disc > 0 ? CausalLabel::Spacelike : CausalLabel::Timelike;
    return c;
}

CensusReport component_census(const EntireGraph& g, const Rect& window,
                              int na, int nb, double tol_light,
                              bool eight_connected) {
    if (na < 2 || nb < 2) throw Error("census grid must be at least 2x2");
    CensusReport rep;
    rep.window = window;
    rep.na = na;
    rep.nb = nb;
    rep.tol_light = tol_light;

    const double da = (window.umax - window.umin) / (na - 1);
    const double db = (window.vmax - window.vmin) / (nb - 1);
    auto coord = [&](int i, int jj) {
        return std::pair<double, double>(window.umin + i * da,
                                         window.vmin + jj * db);
    };

    std::vector<double> disc((std::size_t)na * nb);
    std::vector<double> scale((std::size_t)na * nb);
    auto idx = [na](int i, int jj) { return (std::size_t)jj * na + i; };
    for (int jj = 0; jj < nb; ++jj) {
        for (int i = 0; i < na; ++i) {
            const auto [a, b] = coord(i, jj);
            const Classified c = causal_classify(g, a, b, tol_light);
            disc[idx(i, jj)] = c.disc;
            scale[idx(i, jj)] = c.scale;
        }
    }

    // Boundary: light-like within tolerance, or sign unresolved at cell
    // scale (|disc| below the discriminant's jump to a neighbor, which is
    // where a sub-grid zero crossing can hide).
    std::vector<char> boundary((std::size_t)na * nb, 0);
    for (int jj = 0; jj < nb; ++jj) {
        for (int i = 0; i < na; ++i) {
            const double d = disc[idx(i, jj)];
            double var = 0;
            if (i > 0) var = std::max(var, std::abs(disc[idx(i - 1, jj)] - d));
            if (i + 1 < na)
                var = std::max(var, std::abs(disc[idx(i + 1, jj)] - d));
            if (jj > 0) var = std::max(var, std::abs(disc[idx(i, jj - 1)] - d));
            if (jj + 1 < nb)
                var = std::max(var, std::abs(disc[idx(i, jj + 1)] - d));
            if (std::abs(d) <= std::max(tol_light * scale[idx(i, jj)], var))
                boundary[idx(i, jj)] = 1;
        }
    }

    std::vector<int> comp((std::size_t)na * nb, -1);
    long boundary_cells = 0;
    for (std::size_t k = 0; k < boundary.size(); ++k)
        if (boundary[k]) ++boundary_cells;
    rep.boundary_cells = boundary_cells;

    int next = 0;
    for (int jj = 0; jj < nb; ++jj) {
        for (int i = 0; i < na; ++i) {
            if (boundary[idx(i, jj)] || comp[idx(i, jj)] >= 0) continue;
            const bool space = disc[idx(i, jj)] > 0;
            const int id = next++;
            ComponentInfo info;
            info.label =
                space ? CausalLabel::Spacelike : CausalLabel::Timelike;
            info.amin = info.amax = coord(i, jj).first;
            info.bmin = info.bmax = coord(i, jj).second;
            std::deque<std::pair<int, int>> queue{{i, jj}};
            comp[idx(i, jj)] = id;
            while (!queue.empty()) {
                const auto [ci, cj] = queue.front();
                queue.pop_front();
                ++info.cells;
                const auto [a, b] = coord(ci, cj);
                info.amin = std::min(info.amin, a);
                info.amax = std::max(info.amax, a);
                info.bmin = std::min(info.bmin, b);
                info.bmax = std::max(info.bmax, b);
                const int di[8] = {1, -1, 0, 0, 1, 1, -1, -1};
                const int dj[8] = {0, 0, 1, -1, 1, -1, 1, -1};
                const int nnb = eight_connected ? 8 : 4;
                for (int s = 0; s < nnb; ++s) {
                    const int ni = ci + di[s], nj = cj + dj[s];
                    if (ni < 0 || ni >= na || nj < 0 || nj >= nb) continue;
                    const auto k = idx(ni, nj);
                    if (boundary[k] || comp[k] >= 0) continue;
                    if ((disc[k] > 0) != space) continue;
                    comp[k] = id;
                    queue.emplace_back(ni, nj);
                }
            }
            rep.components.push_back(info);
            if (space)
                ++rep.spacelike_components;
            else
                ++rep.timelike_components;
        }
    }
    return rep;
}

double membership_residual(const std::vector<Point3>& pts,
                           const ImplicitSurface& s) {
    double worst = 0;
    for (const auto& p : pts) worst = std::max(worst, std::abs(s.residual(p)));
    return worst;
}

std::vector<SingularPoint> singular_locus_scan(const WeierstrassData& d,
                                               Formula f, const Rect& window,
                                               int nu, int nv,
                                               double threshold) {
    std::vector<SingularPoint> out;
    const double du = (window.umax - window.umin) / (nu - 1);
    const double dv = (window.vmax - window.vmin) / (nv - 1);
    for (int j = 0; j < nv; ++j) {
        for (int i = 0; i < nu; ++i) {
            const ParaComplexd z(window.umin + i * du, window.vmin + j * dv);
            if (!d.region.contains(z)) continue;
            double lam;
            try {
                lam = conformal_factor(d, f, z);
            } catch (const Error&) {
                continue;  // excluded locus, not metric-singular
            }
            if (std::abs(lam) < threshold)
                out.push_back({re(z), im(z), lam});
        }
    }
    return out;
}

HausdorffCheck hyperbola_hausdorff(const std::vector<SingularPoint>& pts,
                                   const Rect& window) {
    // Dense polyline samples of both branches of u^2 - v^2 = 1 inside the
    // window.
    std::vector<std::pair<double, double>> curve;
    const int n = 4001;
    for (int k = 0; k < n; ++k) {
        const double v =
            window.vmin + (window.vmax - window.vmin) * k / double(n - 1);
        const double u = std::sqrt(1.0 + v * v);
        if (u <= window.umax) {
            curve.emplace_back(u, v);
            curve.emplace_back(-u, v);
        }
    }
    HausdorffCheck h;
    if (pts.empty() || curve.empty()) {
        h.flagged_to_curve = pts.empty() ? 0 : 1e300;
        h.curve_to_flagged = curve.empty() ? 0 : 1e300;
        return h;
    }
    auto dist2 = [](double a, double b, double c, double d) {
        return (a - c) * (a - c) + (b - d) * (b - d);
    };
    for (const auto& p : pts) {
        double best = 1e300;
        for (const auto& c : curve)
            best = std::min(best, dist2(p.u, p.v, c.first, c.second));
        h.flagged_to_curve = std::max(h.flagged_to_curve, best);
    }
    for (const auto& c : curve) {
        double best = 1e300;
        for (const auto& p : pts)
            best = std::min(best, dist2(p.u, p.v, c.first, c.second));
        h.curve_to_flagged = std::max(h.curve_to_flagged, best);
    }
    h.flagged_to_curve = std::sqrt(h.flagged_to_curve);
    h.curve_to_flagged = std::sqrt(h.curve_to_flagged);
    return h;
}

double congruence_residual(const std::vector<Point3>& samples,
                           const ImplicitSurface& target,
                           const Isometry& iso) {
    double worst = 0;
    for (const auto& p : samples)
        worst = std::max(worst, std::abs(target.residual(iso.apply(p))));
    return worst;
}

CongruenceResult find_congruence(const std::vector<Point3>& samples,
                                 const ImplicitSurface& target) {
    const double shifts[5] = {0.0, M_PI / 2, -M_PI / 2, M_PI, -M_PI};
    CongruenceResult best;
    best.residual = 1e300;
    for (int swap = 0; swap < 2; ++swap)
        for (int sx = 1; sx >= -1; sx -= 2)
            for (int sy = 1; sy >= -1; sy -= 2)
                for (int st = 1; st >= -1; st -= 2)
                    for (double dx : shifts)
                        for (double dy : shifts) {
                            Isometry iso{swap == 1, sx, sy, st, 0.0, dx, dy};
                            const double r =
                                congruence_residual(samples, target, iso);
                            if (r < best.residual) {
                                best.residual = r;
                                best.iso = iso;
                            }
                        }
    return best;
}

std::vector<Point3> entry_samples(const CatalogEntry& e, int max_points) {
    std::vector<Point3> pts;
    const int n = 40;
    if (e.patch) {
        const Rect r = e.patch->data.region.rect;
        for (int j = 0; j < n; ++j) {
            for (int i = 0; i < n; ++i) {
                const ParaComplexd z(
                    r.umin + (r.umax - r.umin) * i / double(n - 1),
                    r.vmin + (r.vmax - r.vmin) * j / double(n - 1));
                if (!e.patch->data.region.contains(z)) continue;
                pts.push_back(e.implicit_point(z));
            }
        }
    } else if (e.graph) {
        const Rect r = e.graph->window;
        for (int j = 0; j < n; ++j)
            for (int i = 0; i < n; ++i)
                pts.push_back(graph_eval(
                    *e.graph, r.umin + (r.umax - r.umin) * i / double(n - 1),
                    r.vmin + (r.vmax - r.vmin) * j / double(n - 1)));
    } else {
        throw Error("entry '" + e.name + "' has neither patch nor graph");
    }
    if ((int)pts.size() > max_points) {
        std::vector<Point3> sub;
        const double stride = pts.size() / double(max_points);
        for (int k = 0; k < max_points; ++k)
            sub.push_back(pts[(std::size_t)(k * stride)]);
        pts.swap(sub);
    }
    return pts;
}

UmbilicScan umbilic_scan(const EntireGraph& g, const Rect& window, int na,
                         int nb, double min_disc, double h) {
    if (g.plane != EntireGraph::Plane::Spacelike)
        throw DomainViolation(
            "umbilic scan is defined for graphs over a space-like plane");
    UmbilicScan out;
    out.min_residual = 1e300;
    const double da = (window.umax - window.umin) / (na - 1);
    const double db = (window.vmax - window.vmin) / (nb - 1);
    for (int j = 0; j < nb; ++j) {
        for (int i = 0; i < na; ++i) {
            const double a = window.umin + i * da;
            const double b = window.vmin + j * db;
            const GraphJet jet =
                jet_at(g, a, b, DerivMode::FiniteDifference, h);
            const double disc = 1 - jet.fa * jet.fa - jet.fb * jet.fb;
            if (disc < min_disc) continue;
            // I and II for the unit time-like normal; then the trace-free
            // part of II w.r.t. I.
            Eigen::Matrix2d I, II;
            I << 1 - jet.fa * jet.fa, -jet.fa * jet.fb, -jet.fa * jet.fb,
                1 - jet.fb * jet.fb;
            const double rn = std::sqrt(disc);
            II << jet.faa / rn, jet.fab / rn, jet.fab / rn, jet.fbb / rn;
            const double mean = (I.inverse() * II).trace() / 2.0;
            const Eigen::Matrix2d A = II - mean * I;
            const double res = A.norm();
            ++out.cells;
            if (res < out.min_residual) {
                out.min_residual = res;
                out.a = a;
                out.b = b;
            }
        }
    }
    if (out.cells == 0) out.min_residual = 0;
    return out;
}

// --- identity suite ----------------------------------------------------------

namespace {

struct Suite {
    std::mt19937_64 rng{987654321ULL};
    std::vector<CheckResult> results;

    double uniform(double lo, double hi) {
        return std::uniform_real_distribution<double>(lo, hi)(rng);
    }

    ParaComplexd sample_z(double lo, double hi) {
        const double u = uniform(lo, hi);
        return ParaComplexd(u, uniform(lo, hi));
    }

    void run(const std::string& name, long count, double tol,
             const std::function<double()>& one) {
        CheckResult r;
        r.name = name;
        r.samples = count;
        r.tolerance = tol;
        for (long k = 0; k < count; ++k)
            r.max_error = std::max(r.max_error, one());
        r.pass = r.max_error <= tol;
        results.push_back(r);
    }
};

double dist(const ParaComplexd& a, const ParaComplexd& b) {
    return std::hypot(re(a) - re(b), im(a) - im(b));
}

} // namespace

std::vector<CheckResult> identities_suite(long count) {
    Suite s;
    const double tol = 1e-9;

    s.run("log_exp_identity", count, tol, [&s] {
        const ParaComplexd z = s.sample_z(-3, 3);
        return dist(log(exp(z)), z);
    });

    s.run("rational_substitution", count, tol, [&s] {
        // tilde of f(x) = (3x^2 - 2)/(x^2 + 1) vs direct para-complex
        // evaluation of the same rational expression.
        static const auto tf = tilde_extend<double>(
            {[](double x) { return (3 * x * x - 2) / (x * x + 1); },
             [](double) { return true; },
             "rational"});
        static const ParaExpr e =
            (3.0 * pow(ParaExpr(), 2) - 2.0) / (pow(ParaExpr(), 2) + 1.0);
        const ParaComplexd z = s.sample_z(-4, 4);
        const ParaComplexd a = tf(z);
        return dist(a, eval(e, z)) / (1.0 + std::hypot(re(a), im(a)));
    });

    s.run("reciprocal_substitution", count, tol, [&s] {
        static const auto tf = tilde_extend<double>(
            {[](double x) { return 1.0 / x; },
             [](double x) { return x != 0.0; },
             "reciprocal"});
        // Sample with both null coordinates bounded away from zero.
        ParaComplexd z;
        do {
            z = s.sample_z(-4, 4);
        } while (std::abs(re(z) + im(z)) < 0.1 ||
                 std::abs(re(z) - im(z)) < 0.1);
        return dist(tf(z), inverse(z));
    });

    s.run("arctan_derivative", count, tol, [&s] {
        // Central difference of arctan against 1/(1 + z^2), step 1e-5.
        const ParaComplexd z = s.sample_z(-3, 3);
        const double h = 1e-5;
        const ParaComplexd du =
            (arctan(z + ParaComplexd(h)) - arctan(z - ParaComplexd(h))) /
            (2 * h);
        const ParaComplexd dv = (arctan(z + ParaComplexd(0.0, h)) -
                                 arctan(z - ParaComplexd(0.0, h))) /
                                (2 * h);
        const ParaComplexd fd(re(du), im(du));
        const ParaComplexd expected = inverse(1.0 + z * z);
        const double cr = dist(ParaComplexd(re(dv), im(dv)),
                               ParaComplexd(im(du), re(du)));
        return std::max(dist(fd, expected), cr);
    });

    s.run("cosh_sinh_log_ratio", count, tol, [&s] {
        const double a = s.uniform(0.1, 5.0);
        const double b = s.uniform(0.1, 5.0);
        const double lg = std::log(a / b);
        const double e1 =
            std::abs(std::cosh(lg) - (a * a + b * b) / (2 * a * b));
        const double e2 =
            std::abs(std::sinh(lg) - (a * a - b * b) / (2 * a * b));
        return std::max(e1, e2);
    });

    s.run("argh_quotients", count, tol, [&s] {
        ParaComplexd z;
        do {
            z = s.sample_z(-3, 3);
        } while (std::abs(norm2(z)) < 1e-3);
        const double t = argh(z);
        const double root = std::sqrt(std::abs(norm2(z)));
        if (norm2(z) > 0)
            return std::abs(std::cosh(t) - std::abs(re(z)) / root);
        return std::abs(std::cosh(t) - std::abs(im(z)) / root);
    });

    s.run("arctan_addition", count, tol, [&s] {
        // Componentwise |ab| < 1, so the real addition law applies in each
        // null coordinate.
        const ParaComplexd a = from_null(s.uniform(-0.9, 0.9),
                                         s.uniform(-0.9, 0.9));
        const ParaComplexd b = from_null(s.uniform(-0.9, 0.9),
                                         s.uniform(-0.9, 0.9));
        const ParaComplexd lhs = arctan(a) + arctan(b);
        const ParaComplexd rhs = arctan((a + b) / (1.0 - a * b));
        return dist(lhs, rhs);
    });

    s.run("one_plus_z2_norm_positive", count, tol, [&s] {
        const ParaComplexd z = s.sample_z(-5, 5);
        const double lhs = norm2(1.0 + z * z);
        const auto n = to_null(z);
        const double rhs = (1 + n.minus * n.minus) * (1 + n.plus * n.plus);
        const double rel = std::abs(lhs - rhs) / (1.0 + std::abs(rhs));
        return lhs > 0 ? rel : 1e300;
    });

    return s.results;
}

} // namespace zmc

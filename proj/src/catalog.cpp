#include "zmc/catalog.hpp"

#include <cmath>
#include <map>
#include <sstream>

#include "zmc/errors.hpp"

namespace zmc {

std::string Isometry::describe() const {
    std::ostringstream os;
    const char* a = swap_xy ? "y" : "x";
    const char* b = swap_xy ? "x" : "y";
    os << "t' = " << (st < 0 ? "-t" : "t");
    if (dt != 0) os << (dt > 0 ? " + " : " - ") << std::abs(dt);
    os << ", x' = " << (sx < 0 ? "-" : "") << a;
    if (dx != 0) os << (dx > 0 ? " + " : " - ") << std::abs(dx);
    os << ", y' = " << (sy < 0 ? "-" : "") << b;
    if (dy != 0) os << (dy > 0 ? " + " : " - ") << std::abs(dy);
    return os.str();
}

LightlikeCoords lightlike_coords(const Point3& p) {
    return {p[1], p[0] + p[2], p[0] - p[2]};
}

Point3 from_lightlike(const LightlikeCoords& c) {
    return Point3((c.eta + c.zeta) / 2, c.x, (c.eta - c.zeta) / 2);
}

Point3 graph_eval(const EntireGraph& g, double a, double b) {
    const double h = g.f(a, b);
    if (g.plane == EntireGraph::Plane::Spacelike) return Point3(h, a, b);
    return from_lightlike({a, b, h});
}

Point3 CatalogEntry::implicit_point(const ParaComplexd& z) const {
    if (!patch) throw Error("entry '" + name + "' has no patch");
    return patch_to_implicit.apply(scale * raw_immersion(*patch, z));
}

namespace {

double sq(double a) { return a * a; }

const ParaComplexd kJ(0.0, 1.0);

// --- Weierstrass data -------------------------------------------------------

WeierstrassData enneper_data() {
    WeierstrassData d;
    d.g = var();
    d.omega = constant(1.0);
    d.base = ParaComplexd(0.0);
    d.region.rect = {-3, 3, -3, 3};
    d.region.name = "square";
    return d;
}

WeierstrassData scherk_data(bool plus) {
    WeierstrassData d;
    const ParaExpr z;
    d.g = -z;
    d.omega = 1.0 / (pow(z, 4) - 1.0);
    d.base = plus ? ParaComplexd(0.0) : ParaComplexd(1.0, 0.5);
    d.region.rect = {-2, 2, -2, 2};
    d.region.margin = 0.05;
    d.region.name = plus ? "D+" : "D-";
    d.region.constraints.push_back(
        {pow(z, 2) - 1.0,
         plus ? SignRequirement::Positive : SignRequirement::Negative});
    return d;
}

WeierstrassData catenoid_data(bool norm_positive) {
    WeierstrassData d;
    const ParaExpr z;
    d.g = z;
    d.omega = -(1.0 / pow(z, 2));
    d.base = norm_positive ? ParaComplexd(1.0) : ParaComplexd(0.0, 1.0);
    d.region.rect = {-5, 5, -5, 5};
    d.region.margin = 0.05;
    d.region.name = norm_positive ? "norm-positive" : "norm-negative";
    d.region.constraints.push_back(
        {z, norm_positive ? SignRequirement::Positive
                          : SignRequirement::Negative});
    return d;
}

std::array<ParaExpr, 3> scherk_primitive(bool kind_first) {
    const ParaExpr z;
    const ParaExpr ratio1 = (z + 1.0) / (z - 1.0);
    const ParaExpr ratio2 = (pow(z, 2) + 1.0) / (pow(z, 2) - 1.0);
    if (kind_first) {
        return {constant(0.5) * log(ratio1), -(constant(kJ) * arctan(z)),
                constant(0.5) * log(ratio2)};
    }
    return {constant(0.5) * log(ratio1),
            constant(ParaComplexd(0.0, 0.5)) * log(ratio2), arctan(z)};
}

std::array<ParaExpr, 3> catenoid_primitive() {
    const ParaExpr z;
    return {z - 1.0 / z, constant(kJ) * (z + 1.0 / z),
            constant(-2.0) * log(z)};
}

SurfacePatch patch_with_primitive(WeierstrassData d, Formula f,
                                  std::array<ParaExpr, 3> prim) {
    SurfacePatch p = make_patch(std::move(d), f);
    p.primitive = std::move(prim);
    return p;
}

// --- implicit surfaces ------------------------------------------------------

ImplicitSurface implicit_E3() {
    ImplicitSurface s;
    s.formula = "t^2 - y^2 - (t+y)^4/12 - x^2";
    s.residual = [](const Point3& p) {
        const double q = p[0] + p[2];
        return sq(p[0]) - sq(p[2]) - sq(sq(q)) / 12.0 - sq(p[1]);
    };
    s.components = "single sheet through the origin, quartic in t+y";
    s.causal = "mixed type: space-like near the waist, time-like outward";
    return s;
}

ImplicitSurface implicit_E4() {
    ImplicitSurface s;
    s.formula = "(t - y) + (t+y)^3/6 - x*(t+y)";
    s.residual = [](const Point3& p) {
        const double q = p[0] + p[2];
        return (p[0] - p[2]) + q * q * q / 6.0 - p[1] * q;
    };
    s.components =
        "single sheet; a cubic graph zeta = x*eta - eta^3/6 in light-like "
        "coordinates eta = t+y, zeta = t-y";
    s.causal = "mixed-type entire graph over a light-like plane";
    return s;
}

ImplicitSurface implicit_two_sheet(const char* formula, const char* comp,
                                   std::function<double(const Point3&)> res) {
    ImplicitSurface s;
    s.formula = formula;
    s.residual = std::move(res);
    s.components = comp;
    s.causal =
        "mixed type; light-like locus where the two squared sides meet "
        "tangentially";
    return s;
}

ImplicitSurface implicit_S1() {
    return implicit_two_sheet(
        "cosh(t) - exp(y)*cos(x)",
        "two sheets cosh(t) = +/- exp(y)*cos(x); membership tests use the "
        "squared form cosh(t)^2 = exp(2y)*cos(x)^2",
        [](const Point3& p) {
            return sq(std::cosh(p[0])) - std::exp(2 * p[2]) * sq(std::cos(p[1]));
        });
}

ImplicitSurface implicit_S1p() {
    return implicit_two_sheet(
        "sinh(t) - exp(y)*cos(x)",
        "two sheets sinh(t) = +/- exp(y)*cos(x), each an entire graph "
        "t = -/+ arcsinh(exp(y)*cos(x)); squared form sinh(t)^2 = "
        "exp(2y)*cos(x)^2",
        [](const Point3& p) {
            return sq(std::sinh(p[0])) - std::exp(2 * p[2]) * sq(std::cos(p[1]));
        });
}

ImplicitSurface implicit_S2() {
    return implicit_two_sheet(
        "sinh(y) - sinh(t)*sin(x)",
        "two sheets sinh(y) = +/- sinh(t)*sin(x); squared form "
        "sinh(y)^2 = sinh(t)^2*sin(x)^2",
        [](const Point3& p) {
            return sq(std::sinh(p[2])) - sq(std::sinh(p[0])) * sq(std::sin(p[1]));
        });
}

ImplicitSurface implicit_S2p() {
    return implicit_two_sheet(
        "cosh(y) - cosh(t)*sin(x)",
        "two sheets cosh(y) = +/- cosh(t)*sin(x); squared form "
        "cosh(y)^2 = cosh(t)^2*sin(x)^2",
        [](const Point3& p) {
            return sq(std::cosh(p[2])) - sq(std::cosh(p[0])) * sq(std::sin(p[1]));
        });
}

ImplicitSurface implicit_S3() {
    return implicit_two_sheet(
        "cosh(t)*cos(y) - cosh(x)",
        "two sheets cosh(t)*cos(y) = +/- cosh(x); squared form "
        "cosh(t)^2*cos(y)^2 = cosh(x)^2",
        [](const Point3& p) {
            return sq(std::cosh(p[0])) * sq(std::cos(p[2])) - sq(std::cosh(p[1]));
        });
}

ImplicitSurface implicit_S3p() {
    return implicit_two_sheet(
        "sinh(t)*cos(y) - sinh(x)",
        "two sheets sinh(t)*cos(y) = +/- sinh(x); squared form "
        "sinh(t)^2*cos(y)^2 = sinh(x)^2",
        [](const Point3& p) {
            return sq(std::sinh(p[0])) * sq(std::cos(p[2])) - sq(std::sinh(p[1]));
        });
}

ImplicitSurface implicit_S4() {
    return implicit_two_sheet(
        "sinh(t) - exp(x)*sin(y)",
        "two sheets sinh(t) = +/- exp(x)*sin(y); squared form "
        "sinh(t)^2 = exp(2x)*sin(y)^2",
        [](const Point3& p) {
            return sq(std::sinh(p[0])) - std::exp(2 * p[1]) * sq(std::sin(p[2]));
        });
}

ImplicitSurface implicit_S4p() {
    return implicit_two_sheet(
        "cosh(t) - exp(x)*sin(y)",
        "two sheets cosh(t) = +/- exp(x)*sin(y); squared form "
        "cosh(t)^2 = exp(2x)*sin(y)^2",
        [](const Point3& p) {
            return sq(std::cosh(p[0])) - std::exp(2 * p[1]) * sq(std::sin(p[2]));
        });
}

ImplicitSurface implicit_C1() {
    ImplicitSurface s;
    s.formula = "t^2 - x^2 - sinh(y)^2";
    s.residual = [](const Point3& p) {
        return sq(p[0]) - sq(p[1]) - sq(std::sinh(p[2]));
    };
    s.components = "cone-like double sheet t = +/- sqrt(x^2 + sinh(y)^2)";
    s.causal = "time-like rotational surface away from its singular axis "
               "points";
    return s;
}

ImplicitSurface implicit_C2() {
    ImplicitSurface s;
    s.formula = "t - x*tanh(y)";
    s.residual = [](const Point3& p) { return p[0] - p[1] * std::tanh(p[2]); };
    s.components = "single sheet, the entire graph t = x*tanh(y)";
    s.causal = "mixed-type entire graph over a space-like plane";
    return s;
}

ImplicitSurface implicit_C1p() {
    ImplicitSurface s;
    s.formula = "x^2 - t^2 - cosh(y)^2";
    s.residual = [](const Point3& p) {
        return sq(p[1]) - sq(p[0]) - sq(std::cosh(p[2]));
    };
    s.components = "two sheets x = +/- sqrt(t^2 + cosh(y)^2)";
    s.causal = "time-like counterpart with norm-negative parameter domain";
    return s;
}

ImplicitSurface implicit_C2p() {
    ImplicitSurface s;
    s.formula = "t*tanh(y) - x";
    s.residual = [](const Point3& p) { return p[0] * std::tanh(p[2]) - p[1]; };
    s.components = "single sheet x = t*tanh(y)";
    s.causal = "mixed-type conjugate of the norm-negative patch";
    return s;
}

ImplicitSurface implicit_K(int k) {
    ImplicitSurface s;
    switch (k) {
        case 1:
            s.formula = "exp(t)*cosh(x) - cosh(y)";
            s.residual = [](const Point3& p) {
                return std::exp(p[0]) * std::cosh(p[1]) - std::cosh(p[2]);
            };
            s.components = "single sheet t = log(cosh(y)/cosh(x))";
            break;
        case 2:
            s.formula = "sin(t) - sin(x)*sin(y)";
            s.residual = [](const Point3& p) {
                return std::sin(p[0]) - std::sin(p[1]) * std::sin(p[2]);
            };
            s.components = "doubly periodic family of sheets";
            break;
        case 3:
            s.formula = "cos(t)*cosh(x) - cos(y)";
            s.residual = [](const Point3& p) {
                return std::cos(p[0]) * std::cosh(p[1]) - std::cos(p[2]);
            };
            s.components = "periodic family of compact-in-t sheets";
            break;
        default:
            s.formula = "sinh(t) + exp(y)*sin(x)";
            s.residual = [](const Point3& p) {
                return std::sinh(p[0]) + std::exp(p[2]) * std::sin(p[1]);
            };
            s.components =
                "single sheet, the entire graph t = -arcsinh(exp(y)*sin(x))";
            break;
    }
    s.causal = "mixed-type zero-mean-curvature set";
    return s;
}

// --- entire graphs ----------------------------------------------------------

// Graphs of the family t = arcsinh(w(x,y)) with w_y = w and w_xx = -w share
// one partial-derivative structure.
EntireGraph arcsinh_graph(std::function<double(double, double)> w,
                          std::function<double(double, double)> wx,
                          double sign, Rect window) {
    EntireGraph g;
    g.plane = EntireGraph::Plane::Spacelike;
    g.window = window;
    g.f = [w, sign](double x, double y) { return sign * std::asinh(w(x, y)); };
    EntireGraph::Partials p;
    p.fa = [w, wx, sign](double x, double y) {
        return sign * wx(x, y) / std::hypot(1.0, w(x, y));
    };
    p.fb = [w, sign](double x, double y) {
        return sign * w(x, y) / std::hypot(1.0, w(x, y));
    };
    p.faa = [w, wx, sign](double x, double y) {
        const double W = w(x, y), Wx = wx(x, y);
        const double r = std::hypot(1.0, W);
        return sign * (-W / r - W * Wx * Wx / (r * r * r));
    };
    p.fab = [w, wx, sign](double x, double y) {
        const double r = std::hypot(1.0, w(x, y));
        return sign * wx(x, y) / (r * r * r);
    };
    p.fbb = [w, sign](double x, double y) {
        const double W = w(x, y);
        const double r = std::hypot(1.0, W);
        return sign * W / (r * r * r);
    };
    g.partials = p;
    return g;
}

EntireGraph graph_S1p_def() {
    return arcsinh_graph(
        [](double x, double y) { return std::exp(y) * std::cos(x); },
        [](double x, double y) { return -std::exp(y) * std::sin(x); }, 1.0,
        {-2 * M_PI, 2 * M_PI, -3, 3});
}

EntireGraph graph_K4_def() {
    // t = -arcsinh(exp(y) sin(x)) = arcsinh(-exp(y) sin(x)).
    return arcsinh_graph(
        [](double x, double y) { return -std::exp(y) * std::sin(x); },
        [](double x, double y) { return -std::exp(y) * std::cos(x); }, 1.0,
        {-2 * M_PI, 2 * M_PI, -3, 3});
}

EntireGraph graph_C2_def() {
    EntireGraph g;
    g.plane = EntireGraph::Plane::Spacelike;
    g.window = {-5, 5, -5, 5};
    g.f = [](double x, double y) { return x * std::tanh(y); };
    EntireGraph::Partials p;
    p.fa = [](double, double y) { return std::tanh(y); };
    p.fb = [](double x, double y) { return x / sq(std::cosh(y)); };
    p.faa = [](double, double) { return 0.0; };
    p.fab = [](double, double y) { return 1.0 / sq(std::cosh(y)); };
    p.fbb = [](double x, double y) {
        return -2.0 * x * std::tanh(y) / sq(std::cosh(y));
    };
    g.partials = p;
    return g;
}

EntireGraph graph_E4_def() {
    EntireGraph g;
    g.plane = EntireGraph::Plane::Lightlike;
    g.window = {-3, 3, -3, 3};
    g.f = [](double x, double eta) { return x * eta - eta * eta * eta / 6.0; };
    EntireGraph::Partials p;
    p.fa = [](double, double eta) { return eta; };
    p.fb = [](double x, double eta) { return x - eta * eta / 2.0; };
    p.faa = [](double, double) { return 0.0; };
    p.fab = [](double, double) { return 1.0; };
    p.fbb = [](double, double eta) { return -eta; };
    g.partials = p;
    return g;
}

// --- registry ----------------------------------------------------------------

std::map<std::string, CatalogEntry> build_catalog() {
    std::map<std::string, CatalogEntry> m;
    auto add = [&m](CatalogEntry e) { m.emplace(e.name, std::move(e)); };

    const Isometry mirror_y{false, 1, -1, 1, 0, 0, 0};

    // Enneper-type family: polynomial data g = z, omega = 1.
    {
        CatalogEntry e;
        e.name = "enneper_E3";
        e.title = "polynomial patch of the third formula with its quartic "
                  "implicit set";
        e.tags = {"enneper", "patch", "implicit", "F3"};
        e.patch = make_patch(enneper_data(), Formula::F3);
        e.implicit = implicit_E3();
        e.notes = "closed form (-u^3/3-u*v^2-u, 2uv, u^3/3+u*v^2-u); the "
                  "implicit residual vanishes identically in exact "
                  "arithmetic";
        add(e);
    }
    {
        CatalogEntry e;
        e.name = "enneper_E4";
        e.title = "polynomial patch of the fourth formula; cubic entire "
                  "graph over a light-like plane";
        e.tags = {"enneper", "patch", "implicit", "F4"};
        e.patch = make_patch(enneper_data(), Formula::F4);
        e.implicit = implicit_E4();
        e.notes = "closed form (-u^2*v-v^3/3-v, u^2+v^2, u^2*v+v^3/3-v); "
                  "same zero set as graph_E4";
        add(e);
    }
    {
        CatalogEntry e;
        e.name = "enneper_timelike_F1";
        e.title = "time-like polynomial patch of the first formula";
        e.tags = {"enneper", "patch", "F1", "singular-locus"};
        e.patch = make_patch(enneper_data(), Formula::F1);
        e.notes = "conformal factor -(1 - norm2(z))^2: metric degenerates "
                  "exactly on the hyperbola u^2 - v^2 = 1";
        add(e);
    }
    {
        CatalogEntry e;
        e.name = "enneper_timelike_F2";
        e.title = "conjugate of the time-like first-formula patch";
        e.tags = {"enneper", "patch", "F2", "singular-locus"};
        e.patch = make_patch(enneper_data(), Formula::F2);
        e.notes = "conformal factor +(1 - norm2(z))^2; degenerate on "
                  "u^2 - v^2 = 1";
        add(e);
    }

    // Scherk-type family: g = -z, omega = 1/(z^4 - 1), scale 2.
    struct ScherkRow {
        const char* name;
        bool plus;
        Formula f;
        ImplicitSurface (*implicit)();
    };
    const ScherkRow scherk_rows[] = {
        {"scherk_S1", true, Formula::F1, implicit_S1},
        {"scherk_S1p", false, Formula::F1, implicit_S1p},
        {"scherk_S2", true, Formula::F2, implicit_S2},
        {"scherk_S2p", false, Formula::F2, implicit_S2p},
        {"scherk_S3", true, Formula::F3, implicit_S3},
        {"scherk_S3p", false, Formula::F3, implicit_S3p},
        {"scherk_S4", true, Formula::F4, implicit_S4},
        {"scherk_S4p", false, Formula::F4, implicit_S4p},
    };
    for (const auto& r : scherk_rows) {
        CatalogEntry e;
        e.name = r.name;
        std::ostringstream title;
        title << "doubly periodic patch (" << formula_name(r.f) << " on "
              << (r.plus ? "D+" : "D-") << ") with its implicit set";
        e.title = title.str();
        e.tags = {"scherk", "patch", "implicit", formula_name(r.f),
                  r.plus ? "dplus" : "dminus"};
        e.patch = patch_with_primitive(
            scherk_data(r.plus), r.f,
            scherk_primitive(r.f == Formula::F1 || r.f == Formula::F2));
        e.scale = 2.0;
        e.implicit = r.implicit();
        e.notes = "membership holds for twice the closed-form primitive "
                  "values; the domain is the sign set of norm2(z^2 - 1)";
        add(e);
    }

    // Catenoid-type family: g = z, omega = -1/z^2, scale 1/2.
    struct CatRow {
        const char* name;
        bool norm_positive;
        Formula f;
        ImplicitSurface (*implicit)();
        bool mirror;
    };
    const CatRow cat_rows[] = {
        {"catenoid_C1", true, Formula::F1, implicit_C1, false},
        {"catenoid_C2", true, Formula::F2, implicit_C2, true},
        {"catenoid_C1p", false, Formula::F1, implicit_C1p, false},
        {"catenoid_C2p", false, Formula::F2, implicit_C2p, true},
    };
    for (const auto& r : cat_rows) {
        CatalogEntry e;
        e.name = r.name;
        std::ostringstream title;
        title << "rotational patch (" << formula_name(r.f) << " on the "
              << (r.norm_positive ? "norm-positive" : "norm-negative")
              << " domain)";
        e.title = title.str();
        e.tags = {"catenoid", "patch", "implicit", formula_name(r.f),
                  r.norm_positive ? "normpos" : "normneg"};
        e.patch = patch_with_primitive(catenoid_data(r.norm_positive), r.f,
                                       catenoid_primitive());
        e.scale = 0.5;
        if (r.mirror) e.patch_to_implicit = mirror_y;
        e.implicit = r.implicit();
        e.notes = r.mirror
                      ? "half the primitive lands on the y-mirror of the "
                        "printed set, so the entry carries the reflection "
                        "y -> -y"
                      : "half the primitive satisfies the implicit equation "
                        "exactly";
        add(e);
    }

    // Implicit-only mixed-type sets.
    for (int k = 1; k <= 4; ++k) {
        CatalogEntry e;
        e.name = "kobayashi_K" + std::to_string(k);
        e.title = "implicit mixed-type zero set #" + std::to_string(k);
        e.tags = {"kobayashi", "implicit"};
        e.implicit = implicit_K(k);
        if (k == 4)
            e.notes = "congruent to the scherk_S4 set by swapping the "
                      "spatial axes; same zero set as graph_K4";
        else
            e.notes = "verified as implicit target only";
        add(e);
    }

    // Entire graphs.
    {
        CatalogEntry e;
        e.name = "graph_S1p";
        e.title = "entire graph t = arcsinh(exp(y)*cos(x))";
        e.tags = {"graph", "spacelike-plane", "mixed-type"};
        e.graph = graph_S1p_def();
        ImplicitSurface s = implicit_S1p();
        // Component form: the graph hits one sheet, so the residual is
        // exactly sinh(t) - exp(y)*cos(x).
        s.residual = [](const Point3& p) {
            return std::sinh(p[0]) - std::exp(p[2]) * std::cos(p[1]);
        };
        s.components = "the positive sheet of the two-sheet set";
        e.implicit = s;
        e.notes = "space-like set is connected; time-like pockets sit where "
                  "exp(2y)*sin(x)^2 > 1";
        add(e);
    }
    {
        CatalogEntry e;
        e.name = "graph_E4";
        e.title = "entire cubic graph over a light-like plane";
        e.tags = {"graph", "lightlike-plane", "mixed-type"};
        e.graph = graph_E4_def();
        e.implicit = implicit_E4();
        e.notes = "zeta = x*eta - eta^3/6 in coordinates eta = t+y, "
                  "zeta = t-y; space-like where x < eta^2/4";
        add(e);
    }
    {
        CatalogEntry e;
        e.name = "graph_C2";
        e.title = "entire graph t = x*tanh(y)";
        e.tags = {"graph", "spacelike-plane", "mixed-type"};
        e.graph = graph_C2_def();
        e.implicit = implicit_C2();
        e.notes = "space-like exactly where |x| < cosh(y)";
        add(e);
    }
    {
        CatalogEntry e;
        e.name = "graph_K4";
        e.title = "entire graph t = -arcsinh(exp(y)*sin(x))";
        e.tags = {"graph", "spacelike-plane", "mixed-type"};
        e.graph = graph_K4_def();
        e.implicit = implicit_K(4);
        e.notes = "x -> x + pi/2 turns this into the graph of "
                  "-arcsinh(exp(y)*cos(x))";
        add(e);
    }
    return m;
}

const std::map<std::string, CatalogEntry>& catalog_map() {
    static const std::map<std::string, CatalogEntry> m = build_catalog();
    return m;
}

} // namespace

const CatalogEntry& get(const std::string& name) {
    const auto& m = catalog_map();
    auto it = m.find(name);
    if (it == m.end())
        throw UnknownEntry("no catalog entry named '" + name + "'");
    return it->second;
}

std::vector<std::string> list() {
    std::vector<std::string> names;
    for (const auto& [k, v] : catalog_map()) names.push_back(k);
    return names;
}

std::string resolve_entry(const std::string& surface,
                          const std::string& formula,
                          const std::string& region) {
    if (catalog_map().count(surface)) return surface;
    const std::string f = formula.empty() ? "F1" : formula;
    const Formula fid = parse_formula(f);
    if (surface == "enneper") {
        switch (fid) {
            case Formula::F1: return "enneper_timelike_F1";
            case Formula::F2: return "enneper_timelike_F2";
            case Formula::F3: return "enneper_E3";
            case Formula::F4: return "enneper_E4";
        }
    }
    if (surface == "scherk") {
        if (!region.empty() && region != "dplus" && region != "dminus")
            throw Error("region for scherk must be dplus or dminus, got '" +
                        region + "'");
        const bool plus = region.empty() || region == "dplus";
        switch (fid) {
            case Formula::F1: return plus ? "scherk_S1" : "scherk_S1p";
            case Formula::F2: return plus ? "scherk_S2" : "scherk_S2p";
            case Formula::F3: return plus ? "scherk_S3" : "scherk_S3p";
            case Formula::F4: return plus ? "scherk_S4" : "scherk_S4p";
        }
    }
    if (surface == "catenoid") {
        if (!region.empty() && region != "normpos" && region != "normneg")
            throw Error("region for catenoid must be normpos or normneg, "
                        "got '" + region + "'");
        const bool pos = region.empty() || region == "normpos";
        if (fid == Formula::F1) return pos ? "catenoid_C1" : "catenoid_C1p";
        if (fid == Formula::F2) return pos ? "catenoid_C2" : "catenoid_C2p";
        throw Error("catenoid entries exist for F1 and F2 only");
    }
    throw UnknownEntry("no catalog entry or family named '" + surface + "'");
}

} // namespace zmc

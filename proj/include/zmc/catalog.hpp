#pragma once

// The library's named surfaces: Weierstrass data with closed-form
// antiderivatives, implicit target equations, and entire-graph presentations,
// all as queryable read-only data.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "zmc/isometry.hpp"
#include "zmc/weierstrass.hpp"

namespace zmc {

struct ImplicitSurface {
    // Display form of one component equation, e.g. "sinh(t) - exp(y)*cos(x)".
    std::string formula;
    // Membership residual; for two-sheet sets this is the smooth squared
    // form, for single-equation sets the component itself.
    std::function<double(const Point3&)> residual;
    std::string components;  // component structure of the zero set
    std::string causal;      // causal-type notes
};

struct EntireGraph {
    enum class Plane {
        Spacelike,  // graph t = f(x, y) over the (x, y) plane
        Lightlike,  // graph zeta = f(x, eta) over the light-like (x, eta) plane
    };
    struct Partials {
        std::function<double(double, double)> fa, fb, faa, fab, fbb;
    };

    Plane plane{Plane::Spacelike};
    std::function<double(double, double)> f;
    std::optional<Partials> partials;  // closed-form partials when registered
    Rect window;                       // default sampling window
};

// Light-like coordinates of R^3_1: eta = t + y, zeta = t - y.
struct LightlikeCoords {
    double x{}, eta{}, zeta{};
};
LightlikeCoords lightlike_coords(const Point3& p);
Point3 from_lightlike(const LightlikeCoords& c);

// Point of the graph in (t, x, y) coordinates.
Point3 graph_eval(const EntireGraph& g, double a, double b);

struct CatalogEntry {
    std::string name;
    std::string title;
    std::vector<std::string> tags;

    std::optional<SurfacePatch> patch;
    // Points compared against `implicit` are scale * raw_immersion followed
    // by patch_to_implicit; raw (not base-normalized) because the implicit
    // equations hold for one specific representative of the translation
    // class.
    double scale{1.0};
    Isometry patch_to_implicit;

    std::optional<ImplicitSurface> implicit;
    std::optional<EntireGraph> graph;
    std::string notes;

    Point3 implicit_point(const ParaComplexd& z) const;
};

const CatalogEntry& get(const std::string& name);  // throws UnknownEntry
std::vector<std::string> list();

// Resolves a family name plus formula/region hints ("enneper" + F4,
// "scherk" + F1 + "dminus") to an entry name; full entry names pass through.
std::string resolve_entry(const std::string& surface,
                          const std::string& formula,
                          const std::string& region);

} // namespace zmc

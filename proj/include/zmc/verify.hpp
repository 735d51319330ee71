#pragma once

// Numerical verification engine: graph PDE residuals, causal classification
// and component census, implicit membership, singular-locus scans, congruence
// search, umbilic scans, and the arithmetic identity suite.

#include <string>
#include <vector>

#include "zmc/catalog.hpp"

namespace zmc {

inline constexpr double kLightTol = 1e-9;

enum class CausalLabel { Spacelike, Timelike, Lightlike };
const char* causal_name(CausalLabel l);

enum class DerivMode { Analytic, FiniteDifference };

// Left side of the zero-mean-curvature graph equation at (a, b):
//   G*f_aa - 2 F*f_ab + E*f_bb
// with E, F, G the induced first fundamental form of the graph embedding and
// the second-form entries taken against the unnormalized normal.  For graphs
// over a space-like plane this is exactly
//   (1 - f_y^2) f_xx + 2 f_x f_y f_xy + (1 - f_x^2) f_yy.
// Analytic mode needs registered partials; FD mode uses central differences
// with step h.
double zmc_residual(const EntireGraph& g, double a, double b, DerivMode mode,
                    double h = 1e-3);

struct Classified {
    CausalLabel label{CausalLabel::Spacelike};
    double disc{};   // induced-metric discriminant (det of the first form
                     // for light-like-plane graphs, 1 - f_x^2 - f_y^2 else)
    double scale{};  // positive magnitude reference for the light band
};

Classified causal_classify(const EntireGraph& g, double a, double b,
                           double tol_light = kLightTol);

struct ComponentInfo {
    CausalLabel label{};
    long cells{};
    double amin{}, amax{}, bmin{}, bmax{};
};

struct CensusReport {
    Rect window{};
    int na{}, nb{};
    double tol_light{};
    int spacelike_components{};
    int timelike_components{};
    long boundary_cells{};
    std::vector<ComponentInfo> components;
};

// Classifies an inclusive na x nb grid over the window and counts connected
// components per causal label (4-neighbor flood fill, deterministic
// row-major order; eight_connected switches to 8-neighbor for sensitivity
// checks).  A node is boundary - belonging to no component - when its
// discriminant is within tol_light (relative) of zero OR smaller than the
// discriminant's variation to a grid neighbor, i.e. whenever the sign is
// not resolved at cell scale.
CensusReport component_census(const EntireGraph& g, const Rect& window,
                              int na, int nb, double tol_light = kLightTol,
                              bool eight_connected = false);

// max |s.residual(p)| over the points.
double membership_residual(const std::vector<Point3>& pts,
                           const ImplicitSurface& s);

struct SingularPoint {
    double u{}, v{}, lambda{};
};

// In-region grid points where |conformal factor| < threshold.
std::vector<SingularPoint> singular_locus_scan(const WeierstrassData& d,
                                               Formula f, const Rect& window,
                                               int nu, int nv,
                                               double threshold);

// Two-sided discrete Hausdorff distance between flagged points and the
// hyperbola u^2 - v^2 = 1 clipped to the window.
struct HausdorffCheck {
    double flagged_to_curve{};
    double curve_to_flagged{};
};
HausdorffCheck hyperbola_hausdorff(const std::vector<SingularPoint>& pts,
                                   const Rect& window);

// max |target residual| over iso-mapped samples.
double congruence_residual(const std::vector<Point3>& samples,
                           const ImplicitSurface& target, const Isometry& iso);

struct CongruenceResult {
    Isometry iso;
    double residual{};
};

// Searches the finite family (16 signed axis maps x translation lattice
// {0, +/-pi/2, +/-pi} in x and y) for the isometry minimizing the max
// residual; deterministic tie-break by enumeration order.
CongruenceResult find_congruence(const std::vector<Point3>& samples,
                                 const ImplicitSurface& target);

// Deterministic sample points on an entry: implicit-aligned patch points for
// patch entries, graph points otherwise.  At most max_points.
std::vector<Point3> entry_samples(const CatalogEntry& e, int max_points);

struct UmbilicScan {
    double min_residual{};
    double a{}, b{};
    long cells{};
};

// Frobenius norm of the trace-free part of the second fundamental form
// (FD partials, step h) minimized over space-like grid nodes with
// discriminant >= min_disc.  Space-like-plane graphs only.
UmbilicScan umbilic_scan(const EntireGraph& g, const Rect& window, int na,
                         int nb, double min_disc = 0.05, double h = 1e-4);

// One named property check of the arithmetic identity suite.
struct CheckResult {
    std::string name;
    long samples{};
    double max_error{};
    double tolerance{};
    bool pass{};
};

// Randomized identity checks (fixed seed; `count` samples per family):
// log(exp z) = z, tilde extension vs rational substitution, the arctan
// derivative, quotient identities for cosh/sinh of log ratios and of the
// hyperbolic angle, arctan addition, and positivity of norm2(1 + z^2).
std::vector<CheckResult> identities_suite(long count);

} // namespace zmc

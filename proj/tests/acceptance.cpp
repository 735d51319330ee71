// Acceptance gate: nine end-to-end criteria over the whole toolkit, each
// printed as one PASS/FAIL line with its runtime.  Exits nonzero if any
// criterion fails.  Tolerances and time budgets are pinned here on purpose;
// loosening them is a contract change, not a tuning knob.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <iomanip>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "zmc/catalog.hpp"
#include "zmc/errors.hpp"
#include "zmc/expr.hpp"
#include "zmc/paracomplex.hpp"
#include "zmc/verify.hpp"
#include "zmc/weierstrass.hpp"

namespace {

using zmc::CatalogEntry;
using zmc::EntireGraph;
using zmc::Formula;
using zmc::ParaComplexd;
using zmc::ParaExpr;
using zmc::Point3;
using zmc::Rect;
using zmc::RegionSpec;
using zmc::SurfacePatch;
using zmc::WeierstrassData;

std::string sci(double x) {
  std::ostringstream ss;
  ss << std::scientific << std::setprecision(3) << x;
  return ss.str();
}

double pc_abs(const ParaComplexd& w) { return std::hypot(w.re(), w.im()); }

// Uniform rejection sample of `want` points inside the region (margin and
// sign constraints included), deterministic per seed.
std::vector<ParaComplexd> region_points(const RegionSpec& r, std::size_t want,
                                        std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> du(r.rect.umin, r.rect.umax);
  std::uniform_real_distribution<double> dv(r.rect.vmin, r.rect.vmax);
  std::vector<ParaComplexd> pts;
  pts.reserve(want);
  for (std::size_t attempts = 0; pts.size() < want && attempts < want * 400;
       ++attempts) {
    const ParaComplexd z(du(rng), dv(rng));
    if (r.contains(z)) pts.push_back(z);
  }
  return pts;
}

// --------------------------------------------------------------------------
// 1. Arithmetic identity suite: >= 10^4 random samples per identity, max
//    error <= 1e-9.

bool crit_identities(std::string& detail) {
  const long samples = 10000;
  const double tol = 1e-9;
  const auto checks = zmc::identities_suite(samples);
  double worst = 0;
  std::string worst_name;
  bool ok = !checks.empty();
  for (const auto& c : checks) {
    ok = ok && c.pass && c.max_error <= tol && c.samples >= samples;
    if (c.max_error > worst) {
      worst = c.max_error;
      worst_name = c.name;
    }
  }
  std::ostringstream ss;
  ss << checks.size() << " identities x " << samples
     << " samples, worst error " << sci(worst) << " (" << worst_name
     << "), tol " << sci(tol);
  detail = ss.str();
  return ok;
}

// --------------------------------------------------------------------------
// 2. Para-holomorphy and derivative consistency of every catalog expression:
//    FD Cauchy-Riemann residual <= 1e-6 at h=1e-5 on 500 in-region points
//    per expression; closed-form primitive derivatives match the integrands.

bool crit_catalog_cr(std::string& detail) {
  const double h = 1e-5;
  const double cr_tol = 1e-6;
  const std::size_t n_points = 500;
  double worst_cr = 0, worst_deriv = 0;
  std::string worst_at;
  int entries = 0, exprs = 0;
  std::uint64_t seed = 20260815;
  for (const std::string& name : zmc::list()) {
    const CatalogEntry& e = zmc::get(name);
    if (!e.patch) continue;
    ++entries;
    const WeierstrassData& d = e.patch->data;
    const auto pts = region_points(d.region, n_points, seed++);
    if (pts.size() < n_points) {
      detail = "could only sample " + std::to_string(pts.size()) +
               " in-region points on " + name;
      return false;
    }
    const auto parts = zmc::integrand(d, e.patch->formula);
    if (!e.patch->primitive) {
      detail = "catalog entry " + name + " has no closed-form primitive";
      return false;
    }
    std::vector<ParaExpr> named = {d.g, d.omega};
    for (const auto& p : parts) named.push_back(p);
    for (const auto& p : *e.patch->primitive) named.push_back(p);
    exprs += static_cast<int>(named.size());
    for (const ParaExpr& ex : named) {
      for (const ParaComplexd& z : pts) {
        const double r = zmc::cr_residual(ex, z, h);
        if (r > worst_cr) {
          worst_cr = r;
          worst_at = name;
        }
      }
    }
    for (int k = 0; k < 3; ++k) {
      const ParaExpr dk = zmc::deriv((*e.patch->primitive)[k]);
      for (const ParaComplexd& z : pts) {
        const ParaComplexd diff = zmc::eval(dk, z) - zmc::eval(parts[k], z);
        const double rel =
            pc_abs(diff) / (1 + pc_abs(zmc::eval(parts[k], z)));
        worst_deriv = std::max(worst_deriv, rel);
      }
    }
  }
  std::ostringstream ss;
  ss << entries << " patch entries, " << exprs << " expressions x "
     << n_points << " points: worst CR residual " << sci(worst_cr) << " ("
     << worst_at << ", tol " << sci(cr_tol) << "), worst primitive-derivative "
     << "mismatch " << sci(worst_deriv);
  detail = ss.str();
  return entries == 16 && worst_cr <= cr_tol && worst_deriv <= cr_tol;
}

// --------------------------------------------------------------------------
// 3. Enneper fourth-formula reproduction: patch samples on [-3,3]^2 satisfy
//    the quartic implicit equation to 1e-10; the light-like-plane graph is
//    defined everywhere and its classified samples mix space-like and
//    time-like labels.

bool crit_enneper_e4(std::string& detail) {
  const CatalogEntry& e4 = zmc::get("enneper_E4");
  const Rect r = e4.patch->data.region.rect;
  const int n = 40;
  double worst = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const ParaComplexd z(r.umin + i * (r.umax - r.umin) / (n - 1),
                           r.vmin + j * (r.vmax - r.vmin) / (n - 1));
      worst = std::max(worst, std::abs(e4.implicit->residual(
                                  e4.implicit_point(z))));
    }
  }

  const EntireGraph& g = zmc::get("graph_E4").graph.value();
  bool entire = g.plane == EntireGraph::Plane::Lightlike;
  for (int i = 0; i < 30 && entire; ++i) {
    for (int j = 0; j < 30; ++j) {
      const double a = -20 + 40.0 * i / 29, b = -20 + 40.0 * j / 29;
      const Point3 p = zmc::graph_eval(g, a, b);
      if (!p.allFinite()) {
        entire = false;
        break;
      }
    }
  }
  long nspace = 0, ntime = 0;
  for (int i = 0; i < 60; ++i) {
    for (int j = 0; j < 60; ++j) {
      const double a = g.window.umin + i * (g.window.umax - g.window.umin) / 59;
      const double b = g.window.vmin + j * (g.window.vmax - g.window.vmin) / 59;
      const auto c = zmc::causal_classify(g, a, b);
      if (c.label == zmc::CausalLabel::Spacelike) ++nspace;
      if (c.label == zmc::CausalLabel::Timelike) ++ntime;
    }
  }
  std::ostringstream ss;
  ss << "implicit residual " << sci(worst) << " on " << n << "x" << n
     << " (tol 1e-10); graph finite on [-20,20]^2; labels space-like "
     << nspace << " / time-like " << ntime;
  detail = ss.str();
  return worst <= 1e-10 && entire && nspace > 0 && ntime > 0;
}

// --------------------------------------------------------------------------
// 4. Mixed-type entire-graph reproduction at desk scale: (a) analytic graph
//    residual of graph_S1p <= 1e-10 at 10^3 random points; (b) 600x600
//    census on [-4pi,4pi]x[-6,6] has exactly 1 space-like and > 4 time-like
//    components, equal to the recorded golden counts and stable across a
//    rerun; (c) umbilic scan minimum stays above the recorded positive floor.

bool crit_s1p_theorem(std::string& detail) {
  const EntireGraph& g = zmc::get("graph_S1p").graph.value();
  const Rect window{-4 * M_PI, 4 * M_PI, -6, 6};

  std::mt19937_64 rng(424243);
  std::uniform_real_distribution<double> da(window.umin, window.umax);
  std::uniform_real_distribution<double> db(window.vmin, window.vmax);
  double worst = 0;
  for (int k = 0; k < 1000; ++k) {
    const double r =
        std::abs(zmc::zmc_residual(g, da(rng), db(rng), zmc::DerivMode::Analytic));
    worst = std::max(worst, r);
  }

  const auto census = zmc::component_census(g, window, 600, 600);
  const auto rerun = zmc::component_census(g, window, 600, 600);
  const bool census_ok =
      census.spacelike_components == 1 && census.timelike_components > 4 &&
      census.timelike_components == 8 && census.boundary_cells == 18344 &&
      rerun.spacelike_components == census.spacelike_components &&
      rerun.timelike_components == census.timelike_components &&
      rerun.boundary_cells == census.boundary_cells;

  const auto umb = zmc::umbilic_scan(g, Rect{-M_PI, M_PI, -2, 2}, 200, 200);
  const double golden_min = 0.18967958356041453;
  const bool umb_ok = umb.cells > 0 && umb.min_residual > 0 &&
                      umb.min_residual >= 0.18 &&
                      std::abs(umb.min_residual - golden_min) <= 1e-9;

  std::ostringstream ss;
  ss << "graph residual " << sci(worst) << " at 1000 random points (tol "
     << "1e-10); census " << census.spacelike_components << " space-like / "
     << census.timelike_components << " time-like, boundary "
     << census.boundary_cells << " (golden 1/8/18344, rerun stable); "
     << "umbilic floor " << std::setprecision(17) << umb.min_residual
     << " over " << umb.cells << " cells";
  detail = ss.str();
  return worst <= 1e-10 && census_ok && umb_ok;
}

// --------------------------------------------------------------------------
// 5. Scherk implicit-membership family: all eight patch entries satisfy
//    their implicit equations to 1e-7 on 50x50 in-region grids.

bool crit_scherk_membership(std::string& detail) {
  const std::array<const char*, 8> names = {
      "scherk_S1", "scherk_S1p", "scherk_S2", "scherk_S2p",
      "scherk_S3", "scherk_S3p", "scherk_S4", "scherk_S4p"};
  double worst = 0;
  std::string worst_name;
  long total_used = 0;
  for (const char* name : names) {
    const CatalogEntry& e = zmc::get(name);
    const Rect r = e.patch->data.region.rect;
    long used = 0;
    for (int i = 0; i < 50; ++i) {
      for (int j = 0; j < 50; ++j) {
        const ParaComplexd z(r.umin + i * (r.umax - r.umin) / 49,
                             r.vmin + j * (r.vmax - r.vmin) / 49);
        if (!e.patch->data.region.contains(z)) continue;
        ++used;
        const double res = std::abs(e.implicit->residual(e.implicit_point(z)));
        if (res > worst) {
          worst = res;
          worst_name = name;
        }
      }
    }
    if (used < 400) {
      detail = std::string("only ") + std::to_string(used) +
               " in-region grid points on " + name;
      return false;
    }
    total_used += used;
  }
  std::ostringstream ss;
  ss << "8 entries, " << total_used << " grid points, worst residual "
     << sci(worst) << " (" << worst_name << ", tol 1e-7)";
  detail = ss.str();
  return worst <= 1e-7;
}

// --------------------------------------------------------------------------
// 6. Representation cross-checks: the two-leg null-profile immersion matches
//    checked line-integral evaluation to 1e-6; the dual transform rebuilds
//    the second-kind real immersion from first-kind data up to a constant
//    (component spread <= 1e-7); conjugation flips the induced metric sign
//    to 1e-6.

bool crit_cross_checks(std::string& detail) {
  const WeierstrassData enneper = zmc::get("enneper_timelike_F1").patch->data;
  const WeierstrassData scherk = zmc::get("scherk_S1").patch->data;

  double worst_null = 0;
  const auto null_vs_line = [&](const WeierstrassData& d, Formula f,
                                double span) {
    const SurfacePatch line_patch{d, f, std::nullopt};  // force quadrature
    for (double x = -span; x <= span + 1e-12; x += span) {
      for (double y = -span; y <= span + 1e-12; y += span) {
        const Point3 a = zmc::null_form_immersion(d, f, x, y);
        const Point3 b = zmc::evaluate_immersion(
            line_patch, zmc::from_null(2 * x, 2 * y));
        worst_null = std::max(worst_null, (a - b).cwiseAbs().maxCoeff());
      }
    }
  };
  for (Formula f : {Formula::F1, Formula::F2, Formula::F3, Formula::F4})
    null_vs_line(enneper, f, 0.45);
  null_vs_line(scherk, Formula::F1, 0.25);
  null_vs_line(scherk, Formula::F3, 0.25);

  const WeierstrassData dual = zmc::dual_transform(enneper);
  const SurfacePatch dual_f1{dual, Formula::F1, std::nullopt};
  const SurfacePatch orig_f3 = zmc::make_patch(enneper, Formula::F3);
  Point3 lo = Point3::Constant(1e300), hi = Point3::Constant(-1e300);
  for (int i = 0; i < 5; ++i) {
    for (int j = 0; j < 5; ++j) {
      const ParaComplexd z(-0.4 + 0.2 * i, -0.4 + 0.2 * j);
      const Point3 diff = zmc::evaluate_immersion(dual_f1, z) -
                          zmc::evaluate_immersion(orig_f3, z);
      lo = lo.cwiseMin(diff);
      hi = hi.cwiseMax(diff);
    }
  }
  const double spread = (hi - lo).maxCoeff();

  const SurfacePatch f1 = zmc::make_patch(enneper, Formula::F1);
  const SurfacePatch f2 = zmc::make_patch(enneper, Formula::F2);
  double worst_flip = 0;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const ParaComplexd z(-0.8 + 0.8 * i, -0.8 + 0.8 * j);
      const double lam1 = zmc::conformal_factor(enneper, Formula::F1, z);
      const double lam2 = zmc::conformal_factor(enneper, Formula::F2, z);
      worst_flip = std::max(worst_flip,
                            std::abs(lam1 + lam2) / (1 + std::abs(lam1)));
      const Eigen::Matrix2d m1 = zmc::first_fundamental_form_fd(f1, z, 1e-4);
      const Eigen::Matrix2d m2 = zmc::first_fundamental_form_fd(f2, z, 1e-4);
      worst_flip = std::max(
          worst_flip, (m1 + m2).cwiseAbs().maxCoeff() / (1 + m1.norm()));
    }
  }

  std::ostringstream ss;
  ss << "null-profile vs line integral " << sci(worst_null)
     << " (tol 1e-6); dual-vs-second-kind spread " << sci(spread)
     << " (tol 1e-7); metric sign flip " << sci(worst_flip) << " (tol 1e-6)";
  detail = ss.str();
  return worst_null <= 1e-6 && spread <= 1e-7 && worst_flip <= 1e-6;
}

// --------------------------------------------------------------------------
// 7. Congruence search: each of the five known pairs is matched by an
//    explicit signed-axis isometry with residual <= 1e-9.

bool crit_congruences(std::string& detail) {
  const std::array<std::pair<const char*, const char*>, 5> pairs = {{
      {"scherk_S4", "scherk_S1p"},
      {"scherk_S4p", "scherk_S1"},
      {"scherk_S3", "scherk_S2p"},
      {"scherk_S3p", "scherk_S2"},
      {"graph_K4", "scherk_S4"},
  }};
  double worst = 0;
  std::string rows;
  for (const auto& [src, dst] : pairs) {
    const auto samples = zmc::entry_samples(zmc::get(src), 200);
    const auto result =
        zmc::find_congruence(samples, zmc::get(dst).implicit.value());
    worst = std::max(worst, result.residual);
    if (!rows.empty()) rows += "; ";
    rows += std::string(src) + "->" + dst + " " + sci(result.residual);
  }
  detail = rows + " (tol 1e-9)";
  return worst <= 1e-9;
}

// --------------------------------------------------------------------------
// 8. Catenoid-family suite: graph_C2 solves the graph equation to 1e-10 and
//    its census is mixed-type; the three polar-form patch entries satisfy
//    their implicit equations to 1e-7.

bool crit_catenoid(std::string& detail) {
  const EntireGraph& g = zmc::get("graph_C2").graph.value();
  double worst_zmc = 0;
  for (int i = 0; i < 50; ++i) {
    for (int j = 0; j < 50; ++j) {
      const double a = g.window.umin + i * (g.window.umax - g.window.umin) / 49;
      const double b = g.window.vmin + j * (g.window.vmax - g.window.vmin) / 49;
      worst_zmc = std::max(worst_zmc, std::abs(zmc::zmc_residual(
                                          g, a, b, zmc::DerivMode::Analytic)));
    }
  }
  const auto census = zmc::component_census(g, g.window, 150, 150);
  const bool mixed =
      census.spacelike_components >= 1 && census.timelike_components >= 1;

  double worst_member = 0;
  std::string worst_name;
  for (const char* name : {"catenoid_C1", "catenoid_C1p", "catenoid_C2p"}) {
    const CatalogEntry& e = zmc::get(name);
    const auto pts = zmc::entry_samples(e, 2500);
    const double res = zmc::membership_residual(pts, e.implicit.value());
    if (res > worst_member) {
      worst_member = res;
      worst_name = name;
    }
  }
  std::ostringstream ss;
  ss << "graph residual " << sci(worst_zmc) << " (tol 1e-10); census "
     << census.spacelike_components << " space-like / "
     << census.timelike_components << " time-like; membership "
     << sci(worst_member) << " (" << worst_name << ", tol 1e-7)";
  detail = ss.str();
  return worst_zmc <= 1e-10 && mixed && worst_member <= 1e-7;
}

// --------------------------------------------------------------------------
// 9. Singular-locus scan: the degenerate set of the time-like Enneper
//    first/second-kind patches matches u^2 - v^2 = 1 within 2 grid steps on
//    [-2,2]^2 at 400x400.

bool crit_singular_locus(std::string& detail) {
  const Rect window{-2, 2, -2, 2};
  const int n = 400;
  const double step = (window.umax - window.umin) / (n - 1);
  const double threshold = std::pow(3.5 * step, 2);
  std::ostringstream ss;
  bool ok = true;
  for (const char* name : {"enneper_timelike_F1", "enneper_timelike_F2"}) {
    const CatalogEntry& e = zmc::get(name);
    const auto pts = zmc::singular_locus_scan(
        e.patch->data, e.patch->formula, window, n, n, threshold);
    const auto hd = zmc::hyperbola_hausdorff(pts, window);
    const bool this_ok = !pts.empty() && hd.flagged_to_curve <= 2 * step &&
                         hd.curve_to_flagged <= 2 * step;
    ok = ok && this_ok;
    if (ss.tellp() > 0) ss << "; ";
    ss << name << " " << pts.size() << " flagged, hausdorff "
       << sci(std::max(hd.flagged_to_curve, hd.curve_to_flagged));
  }
  ss << " (bound " << sci(2 * step) << ")";
  detail = ss.str();
  return ok;
}

struct Criterion {
  int id;
  const char* label;
  double budget_s;
  std::function<bool(std::string&)> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "arithmetic identity suite", 5, crit_identities},
      {2, "catalog para-holomorphy and derivative consistency", 10,
       crit_catalog_cr},
      {3, "Enneper fourth-formula membership and light-like graph mix", 5,
       crit_enneper_e4},
      {4, "mixed-type entire graph: residual, census, umbilic floor", 60,
       crit_s1p_theorem},
      {5, "Scherk implicit membership (all eight regions)", 30,
       crit_scherk_membership},
      {6, "null-profile, dual, and conjugate cross-checks", 20,
       crit_cross_checks},
      {7, "congruence search over the five known pairs", 10,
       crit_congruences},
      {8, "catenoid family: graph residual, census, membership", 10,
       crit_catenoid},
      {9, "Enneper singular locus matches the unit hyperbola", 10,
       crit_singular_locus},
  };

  int failed = 0;
  for (const Criterion& c : criteria) {
    std::string detail;
    bool ok = false;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      ok = c.run(detail);
    } catch (const std::exception& ex) {
      ok = false;
      detail = std::string("exception: ") + ex.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    if (secs >= c.budget_s) {
      ok = false;
      detail += " [exceeded time budget]";
    }
    failed += ok ? 0 : 1;
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << c.id << ". " << c.label
              << " (" << std::fixed << std::setprecision(2) << secs << "s / "
              << std::setprecision(0) << c.budget_s << "s) -- " << detail
              << "\n";
    std::cout.unsetf(std::ios::fixed);
  }
  std::cout << "acceptance: " << (criteria.size() - failed) << "/"
            << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}

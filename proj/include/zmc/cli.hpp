#pragma once

// Command-line front end: catalog queries, mesh generation, verification
// suites, and CSV export, with JSON reports on stdout.
//
// Subcommands
//   catalog list            JSON array of all entries
//   catalog show <name>     full JSON record of one entry
//   generate                sample an entry to OBJ / PLY / CSV (+ sidecar)
//   verify <suite>          one of: zmc, membership, census, singular,
//                           congruence, umbilic, identities
//   export                  generate with CSV defaults (plot-data table)
//
// Flags: --surface, --graph, --formula, --region, --implicit, --window,
// --grid, --tol, --out, --format, --config, and for census
// --expect-spacelike / --expect-timelike-min.  --config names a JSON file
// mirroring these keys; explicit flags override file values.  Window bounds
// accept a "pi" suffix ("-4pi,4pi,-6,6").
//
// Exit codes: 0 pass, 1 verification failure, 2 usage/config error.  All
// output is deterministic for a fixed invocation; the ZMC_SEED environment
// variable is reserved but unused (sampling is deterministic by design).

#include <array>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace zmc::cli {

/// Everything a run needs; JSON-serializable both ways, so a config file
/// can stand in for the whole command line.
struct RunConfig {
  std::string command;   // generate | verify | export
  std::string suite;     // verify only
  std::string surface;   // entry or family name
  std::string graph;     // entry name (synonym channel for graph entries)
  std::string formula;   // F1..F4 (family resolution)
  std::string region;    // family region selector (dplus, dminus, ...)
  std::string implicit;  // implicit-set entry for membership targets
  std::optional<std::array<double, 4>> window;  // umin, umax, vmin, vmax
  int grid{0};           // 0 = suite default
  double tol{0};         // 0 = suite default
  std::string out;       // output path ("" = derived from entry name)
  std::string format;    // "" = command default (obj; csv for export)
  int expect_spacelike{1};
  int expect_timelike_min{1};
};

/// Runs the tool on the given argument list (no program name), writing
/// normal output to `out` and diagnostics to `err`.  Never throws; returns
/// the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

/// Canonical JSON text of a config (the config-file format); the inverse
/// throws zmc::Error on unknown keys or malformed values.  Window bounds in
/// files may be numbers or strings with a "pi" suffix.
std::string config_to_json_text(const RunConfig& cfg);
RunConfig config_from_json_text(const std::string& text);

/// Parses "umin,umax,vmin,vmax" with optional "pi" suffixes ("-4pi,4pi,-6,6").
std::array<double, 4> parse_window(const std::string& text);

}  // namespace zmc::cli

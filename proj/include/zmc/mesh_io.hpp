#pragma once

// Structured-grid meshes sampled from catalog entries, and deterministic
// writers for OBJ, binary little-endian PLY, and CSV.  Vertices carry the
// parameter location, the ambient point (t, x, y), a causal label, and a
// per-vertex scalar (conformal factor for patches, classifier discriminant
// for graphs).  Invalid vertices (outside the region of definition, or on
// an excluded locus) are kept in the grid for indexing but skipped by the
// writers; faces are emitted only where all four corners are valid.

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "zmc/verify.hpp"
#include "zmc/weierstrass.hpp"

namespace zmc {

struct MeshVertex {
  double u{0};       ///< first parameter (or first graph coordinate)
  double v{0};       ///< second parameter (or second graph coordinate)
  Point3 point{0, 0, 0};  ///< ambient point, ordered (t, x, y)
  CausalLabel label{CausalLabel::Spacelike};
  double lambda{0};  ///< conformal factor (patch) or discriminant (graph)
  bool valid{false};
};

/// Row-major nu-by-nv structured grid.  Vertex (i, j) sits at index
/// i * nv + j; quads join four grid-adjacent vertices.
struct SurfaceMesh {
  std::size_t nu{0};
  std::size_t nv{0};
  std::vector<MeshVertex> vertices;
  std::vector<std::array<std::size_t, 4>> quads;

  const MeshVertex& at(std::size_t i, std::size_t j) const {
    return vertices[i * nv + j];
  }
};

/// Builds the list of quads whose four corners are all valid.  Corner order
/// is counter-clockwise in parameter space.
void build_quads(SurfaceMesh& mesh);

/// Wavefront OBJ.  Vertices are written as "v x y t" (the time coordinate
/// goes last so generic viewers treat it as height); invalid vertices are
/// dropped and face indices are remapped to the surviving 1-based order.
void write_obj(std::ostream& out, const SurfaceMesh& mesh);

/// Binary little-endian PLY: per-vertex double x, y, z (= t) plus a uchar
/// causal label (0 spacelike, 1 timelike, 2 lightlike); faces as uchar
/// count + int32 indices.
void write_ply(std::ostream& out, const SurfaceMesh& mesh);

/// CSV with header u,v,t,x,y,label,lambda; one row per valid vertex, all
/// floating-point fields printed with %.17g so reruns are byte-identical.
void write_csv(std::ostream& out, const SurfaceMesh& mesh);

/// Writes `mesh` to `path` in the given format ("obj", "ply", or "csv").
/// Unless the format is already csv, a sidecar "<path>.attrs.csv" carrying
/// the per-vertex attribute table is written next to the main file.
void write_mesh(const std::string& path, const SurfaceMesh& mesh,
                const std::string& format);

}  // namespace zmc

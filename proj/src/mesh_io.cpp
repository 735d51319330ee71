#include "zmc/mesh_io.hpp"

#include <array>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>

#include "zmc/errors.hpp"

namespace zmc {

namespace {

std::string fmt_g17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::uint8_t label_code(CausalLabel label) {
  switch (label) {
    case CausalLabel::Spacelike: return 0;
    case CausalLabel::Timelike: return 1;
    case CausalLabel::Lightlike: return 2;
  }
  return 2;
}

template <typename T>
void put_le(std::ostream& out, T value) {
  // All sandbox and CI targets are little-endian; memcpy keeps this UB-free.
  char buf[sizeof(T)];
  std::memcpy(buf, &value, sizeof(T));
  out.write(buf, sizeof(T));
}

}  // namespace

void build_quads(SurfaceMesh& mesh) {
  mesh.quads.clear();
  if (mesh.nu < 2 || mesh.nv < 2) return;
  for (std::size_t i = 0; i + 1 < mesh.nu; ++i) {
    for (std::size_t j = 0; j + 1 < mesh.nv; ++j) {
      const std::size_t a = i * mesh.nv + j;
      const std::size_t b = (i + 1) * mesh.nv + j;
      const std::size_t c = (i + 1) * mesh.nv + (j + 1);
      const std::size_t d = i * mesh.nv + (j + 1);
      if (mesh.vertices[a].valid && mesh.vertices[b].valid &&
          mesh.vertices[c].valid && mesh.vertices[d].valid) {
        mesh.quads.push_back({a, b, c, d});
      }
    }
  }
}

void write_obj(std::ostream& out, const SurfaceMesh& mesh) {
  std::vector<std::size_t> remap(mesh.vertices.size(), 0);
  std::size_t next = 1;  // OBJ indices are 1-based
  for (std::size_t k = 0; k < mesh.vertices.size(); ++k) {
    const MeshVertex& vtx = mesh.vertices[k];
    if (!vtx.valid) continue;
    remap[k] = next++;
    out << "v " << fmt_g17(vtx.point[1]) << ' ' << fmt_g17(vtx.point[2])
        << ' ' << fmt_g17(vtx.point[0]) << '\n';
  }
  for (const auto& q : mesh.quads) {
    out << "f " << remap[q[0]] << ' ' << remap[q[1]] << ' ' << remap[q[2]]
        << ' ' << remap[q[3]] << '\n';
  }
}

void write_ply(std::ostream& out, const SurfaceMesh& mesh) {
  std::vector<std::size_t> remap(mesh.vertices.size(), 0);
  std::size_t count = 0;
  for (std::size_t k = 0; k < mesh.vertices.size(); ++k) {
    if (mesh.vertices[k].valid) remap[k] = count++;
  }
  out << "ply\n"
      << "format binary_little_endian 1.0\n"
      << "element vertex " << count << "\n"
      << "property double x\n"
      << "property double y\n"
      << "property double z\n"
      << "property uchar label\n"
      << "element face " << mesh.quads.size() << "\n"
      << "property list uchar int vertex_indices\n"
      << "end_header\n";
  for (const MeshVertex& vtx : mesh.vertices) {
    if (!vtx.valid) continue;
    put_le(out, vtx.point[1]);
    put_le(out, vtx.point[2]);
    put_le(out, vtx.point[0]);
    put_le(out, label_code(vtx.label));
  }
  for (const auto& q : mesh.quads) {
    put_le<std::uint8_t>(out, 4);
    for (std::size_t corner : q) {
      put_le<std::int32_t>(out, static_cast<std::int32_t>(remap[corner]));
    }
  }
}

void write_csv(std::ostream& out, const SurfaceMesh& mesh) {
  out << "u,v,t,x,y,label,lambda\n";
  for (const MeshVertex& vtx : mesh.vertices) {
    if (!vtx.valid) continue;
    out << fmt_g17(vtx.u) << ',' << fmt_g17(vtx.v) << ','
        << fmt_g17(vtx.point[0]) << ',' << fmt_g17(vtx.point[1]) << ','
        << fmt_g17(vtx.point[2]) << ',' << causal_name(vtx.label) << ','
        << fmt_g17(vtx.lambda) << '\n';
  }
}

void write_mesh(const std::string& path, const SurfaceMesh& mesh,
                const std::string& format) {
  const auto open = [](const std::string& p,
                       std::ios::openmode mode) -> std::ofstream {
    std::ofstream file(p, mode);
    if (!file) throw Error("cannot open output file: " + p);
    return file;
  };
  if (format == "obj") {
    auto file = open(path, std::ios::out);
    write_obj(file, mesh);
  } else if (format == "ply") {
    auto file = open(path, std::ios::out | std::ios::binary);
    write_ply(file, mesh);
  } else if (format == "csv") {
    auto file = open(path, std::ios::out);
    write_csv(file, mesh);
    return;  // the csv already carries every attribute; no sidecar
  } else {
    throw Error("unknown mesh format: " + format +
                " (expected obj, ply, or csv)");
  }
  auto sidecar = open(path + ".attrs.csv", std::ios::out);
  write_csv(sidecar, mesh);
}

}  // namespace zmc

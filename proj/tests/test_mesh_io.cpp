#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "zmc/errors.hpp"
#include "zmc/mesh_io.hpp"

using zmc::CausalLabel;
using zmc::MeshVertex;
using zmc::SurfaceMesh;

namespace {

SurfaceMesh square_mesh() {
  SurfaceMesh m;
  m.nu = 2;
  m.nv = 2;
  m.vertices.resize(4);
  auto set = [&m](std::size_t i, std::size_t j, double t, double x, double y,
                  CausalLabel label, double lambda) {
    MeshVertex& v = m.vertices[i * m.nv + j];
    v.u = double(i);
    v.v = double(j);
    v.point = zmc::Point3(t, x, y);
    v.label = label;
    v.lambda = lambda;
    v.valid = true;
  };
  set(0, 0, 1, 2, 3, CausalLabel::Spacelike, 0);
  set(0, 1, 0, 0.5, -1, CausalLabel::Timelike, 1.0 / 3);
  set(1, 0, 2, -2, 0.25, CausalLabel::Lightlike, -4);
  set(1, 1, 1.0 / 3, 4, 5, CausalLabel::Spacelike, 2);
  zmc::build_quads(m);
  return m;
}

std::string render_obj(const SurfaceMesh& m) {
  std::ostringstream os;
  zmc::write_obj(os, m);
  return os.str();
}

}  // namespace

TEST_CASE("quad construction") {
  SurfaceMesh m = square_mesh();
  REQUIRE(m.quads.size() == 1);
  // Counter-clockwise in parameter space: (0,0) (1,0) (1,1) (0,1).
  CHECK(m.quads[0] == std::array<std::size_t, 4>{0, 2, 3, 1});
  CHECK(m.at(1, 0).point[0] == 2.0);

  // Any invalid corner kills the quad but stays in the grid.
  m.vertices[1].valid = false;
  zmc::build_quads(m);
  CHECK(m.quads.empty());

  SurfaceMesh thin;
  thin.nu = 1;
  thin.nv = 4;
  thin.vertices.resize(4);
  for (auto& v : thin.vertices) v.valid = true;
  zmc::build_quads(thin);
  CHECK(thin.quads.empty());
}

TEST_CASE("obj text golden") {
  const SurfaceMesh m = square_mesh();
  CHECK(render_obj(m) ==
        "v 2 3 1\n"
        "v 0.5 -1 0\n"
        "v -2 0.25 2\n"
        "v 4 5 0.33333333333333331\n"
        "f 1 3 4 2\n");

  // Dropping a vertex remaps the surviving indices densely.
  SurfaceMesh holed = square_mesh();
  holed.vertices[1].valid = false;
  zmc::build_quads(holed);
  CHECK(render_obj(holed) ==
        "v 2 3 1\n"
        "v -2 0.25 2\n"
        "v 4 5 0.33333333333333331\n");
}

TEST_CASE("binary ply layout") {
  const SurfaceMesh m = square_mesh();
  std::ostringstream os;
  zmc::write_ply(os, m);
  const std::string blob = os.str();

  const std::string expected_header =
      "ply\n"
      "format binary_little_endian 1.0\n"
      "element vertex 4\n"
      "property double x\n"
      "property double y\n"
      "property double z\n"
      "property uchar label\n"
      "element face 1\n"
      "property list uchar int vertex_indices\n"
      "end_header\n";
  REQUIRE(blob.substr(0, expected_header.size()) == expected_header);

  // 4 vertices x (3 doubles + label byte) + 1 face x (count + 4 int32).
  CHECK(blob.size() == expected_header.size() + 4 * 25 + 17);

  const char* v0 = blob.data() + expected_header.size();
  double x = 0, y = 0, z = 0;
  std::memcpy(&x, v0, 8);
  std::memcpy(&y, v0 + 8, 8);
  std::memcpy(&z, v0 + 16, 8);
  CHECK(x == 2.0);   // spatial x first
  CHECK(y == 3.0);
  CHECK(z == 1.0);   // time goes to z
  CHECK(static_cast<unsigned char>(v0[24]) == 0);       // spacelike
  CHECK(static_cast<unsigned char>(v0[25 + 24]) == 1);  // timelike
  CHECK(static_cast<unsigned char>(v0[50 + 24]) == 2);  // lightlike

  const char* face = v0 + 4 * 25;
  CHECK(static_cast<unsigned char>(face[0]) == 4);
  std::int32_t idx[4];
  std::memcpy(idx, face + 1, 16);
  CHECK(idx[0] == 0);
  CHECK(idx[1] == 2);
  CHECK(idx[2] == 3);
  CHECK(idx[3] == 1);
}

TEST_CASE("csv rows") {
  const SurfaceMesh m = square_mesh();
  std::ostringstream os;
  zmc::write_csv(os, m);
  CHECK(os.str() ==
        "u,v,t,x,y,label,lambda\n"
        "0,0,1,2,3,spacelike,0\n"
        "0,1,0,0.5,-1,timelike,0.33333333333333331\n"
        "1,0,2,-2,0.25,lightlike,-4\n"
        "1,1,0.33333333333333331,4,5,spacelike,2\n");

  // Reruns are byte-identical.
  std::ostringstream again;
  zmc::write_csv(again, m);
  CHECK(os.str() == again.str());
}

TEST_CASE("file writing and sidecars") {
  namespace fs = std::filesystem;
  const fs::path dir =
      fs::temp_directory_path() / "zmc_mesh_io_test";
  fs::create_directories(dir);
  const SurfaceMesh m = square_mesh();

  const fs::path obj = dir / "m.obj";
  zmc::write_mesh(obj.string(), m, "obj");
  CHECK(fs::exists(obj));
  CHECK(fs::exists(dir / "m.obj.attrs.csv"));

  const fs::path csv = dir / "m.csv";
  zmc::write_mesh(csv.string(), m, "csv");
  CHECK(fs::exists(csv));
  CHECK(!fs::exists(dir / "m.csv.attrs.csv"));  // csv needs no sidecar

  const fs::path ply = dir / "m.ply";
  zmc::write_mesh(ply.string(), m, "ply");
  CHECK(fs::file_size(ply) > 0);

  CHECK_THROWS_AS(zmc::write_mesh((dir / "m.stl").string(), m, "stl"),
                  zmc::Error);
  CHECK_THROWS_AS(
      zmc::write_mesh((dir / "no_such_dir" / "m.obj").string(), m, "obj"),
      zmc::Error);

  fs::remove_all(dir);
}

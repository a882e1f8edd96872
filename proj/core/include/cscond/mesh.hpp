#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace cscond {

/// Oriented reference to an edge: `sign` is +1 when the edge is traversed
/// along its stored orientation, -1 against it.
struct SignedEdge {
  int edge = -1;
  int sign = +1;
};

/// Closed or open chain of oriented edges.
using EdgePath = std::vector<SignedEdge>;

/// Face incident to an edge, with the sign the edge carries in the
/// face's boundary loop.
struct FaceRef {
  int face = -1;
  int sign = +1;
};

/// Rectangular block of excluded faces, in cell indices: faces with
/// i0 <= i < i0+w and j0 <= j < j0+h are removed from the complex.
struct HoleSpec {
  int i0 = 0, j0 = 0, w = 0, h = 0;
};

/// Two-dimensional cell complex over an axis-aligned rectangular grid,
/// optionally with rectangular holes (annulus-like topology).
///
/// Orientation conventions, fixed once for the whole library:
///   - horizontal edges point +x, vertical edges point +y;
///   - face boundary loops run counterclockwise, listed in the order
///     bottom, right, top, left;
///   - hole loops circle the hole counterclockwise.
///
/// Each cell carries a primal volume (1 for vertices, length for edges,
/// area for faces) and a dual volume (area of the dual cell for vertices,
/// length of the dual edge for edges, 1 for faces). Boundary cells have
/// clipped duals: a boundary edge sees only half of the usual dual length.
class Mesh2D {
 public:
  struct Edge {
    int tail = -1, head = -1;
  };
  struct Face {
    std::array<SignedEdge, 4> loop;  // bottom, right, top, left
  };

  int vertex_count() const { return static_cast<int>(vertex_xy_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int face_count() const { return static_cast<int>(faces_.size()); }
  int cell_count(int degree) const;

  const std::array<double, 2>& vertex_xy(int v) const { return vertex_xy_[v]; }
  const Edge& edge(int e) const { return edges_[e]; }
  const Face& face(int f) const { return faces_[f]; }
  std::array<double, 2> edge_midpoint(int e) const;
  std::array<double, 2> face_center(int f) const;

  /// Faces incident to an edge together with the sign the edge carries in
  /// that face's loop. Interior edges have two entries, boundary edges one.
  std::span<const FaceRef> edge_cofaces(int e) const;

  bool edge_on_boundary(int e) const { return boundary_edge_[e] != 0; }
  const std::vector<EdgePath>& hole_loops() const { return hole_loops_; }

  double primal_volume(int degree, int index) const;
  double dual_volume(int degree, int index) const;

  // Lattice structure. All meshes in this library are grid-generated;
  // the maps below return -1 for cells removed by a hole.
  int grid_nx() const { return nx_; }
  int grid_ny() const { return ny_; }
  double grid_hx() const { return hx_; }
  double grid_hy() const { return hy_; }
  const std::vector<HoleSpec>& holes() const { return holes_; }
  int vertex_at(int i, int j) const;    // i in [0,nx], j in [0,ny]
  int h_edge_at(int i, int j) const;    // from (i,j) to (i+1,j)
  int v_edge_at(int i, int j) const;    // from (i,j) to (i,j+1)
  int face_at(int i, int j) const;      // cell (i,j)
  bool edge_is_horizontal(int e) const { return horizontal_edge_[e] != 0; }

  /// Shortest distance from a point to the mesh boundary (outer walls and
  /// hole walls), measured to the boundary edge segments.
  double distance_to_boundary(double x, double y) const;

  /// Structural sanity: face loops closed and consistently oriented,
  /// boundary-of-boundary empty, hole loops closed and face-free,
  /// all volumes positive. Throws on violation.
  void validate() const;

  friend Mesh2D make_grid(int nx, int ny, double hx, double hy,
                          std::vector<HoleSpec> holes);

 private:
  Mesh2D() = default;

  int nx_ = 0, ny_ = 0;
  double hx_ = 0, hy_ = 0;
  std::vector<HoleSpec> holes_;

  std::vector<std::array<double, 2>> vertex_xy_;
  std::vector<Edge> edges_;
  std::vector<Face> faces_;
  std::vector<std::uint8_t> boundary_edge_;
  std::vector<std::uint8_t> horizontal_edge_;
  std::vector<EdgePath> hole_loops_;

  std::vector<double> vertex_dual_area_;
  std::vector<double> edge_primal_len_;
  std::vector<double> edge_dual_len_;
  std::vector<double> face_area_;

  // edge -> incident (face, sign) pairs, flattened
  std::vector<FaceRef> coface_data_;
  std::vector<int> coface_offset_;

  // lattice index maps (full-lattice slot -> compact id or -1)
  std::vector<int> vmap_, hmap_, vvmap_, fmap_;
};

/// Build an nx-by-ny grid of faces with spacing (hx, hy). Holes must be
/// strictly interior and pairwise separated by at least one cell so each
/// hole loop is a disjoint cycle.
Mesh2D make_grid(int nx, int ny, double hx, double hy,
                 std::vector<HoleSpec> holes = {});

/// Plain-text mesh serialization, one record per line (documented in the
/// README). Round-trips all coordinates exactly.
void write_mesh(std::ostream& out, const Mesh2D& mesh);
Mesh2D read_mesh(std::istream& in);
void write_mesh_file(const std::string& path, const Mesh2D& mesh);
Mesh2D read_mesh_file(const std::string& path);

}  // namespace cscond

#include "cscond/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "cscond/errors.hpp"
#include "cscond/numfmt.hpp"

namespace cscond {

namespace {

bool rects_overlap(const HoleSpec& a, const HoleSpec& b) {
  return a.i0 < b.i0 + b.w && b.i0 < a.i0 + a.w &&
         a.j0 < b.j0 + b.h && b.j0 < a.j0 + a.h;
}

double point_segment_distance(double px, double py, double ax, double ay,
                              double bx, double by) {
  const double vx = bx - ax, vy = by - ay;
  const double wx = px - ax, wy = py - ay;
  const double vv = vx * vx + vy * vy;
  double t = vv > 0 ? (wx * vx + wy * vy) / vv : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  const double dx = px - (ax + t * vx), dy = py - (ay + t * vy);
  return std::hypot(dx, dy);
}

}  // namespace

int Mesh2D::cell_count(int degree) const {
  switch (degree) {
    case 0: return vertex_count();
    case 1: return edge_count();
    case 2: return face_count();
    default: throw DegreeError("cell_count: degree must be 0, 1 or 2");
  }
}

std::array<double, 2> Mesh2D::edge_midpoint(int e) const {
  const auto& a = vertex_xy_[edges_[e].tail];
  const auto& b = vertex_xy_[edges_[e].head];
  return {0.5 * (a[0] + b[0]), 0.5 * (a[1] + b[1])};
}

std::array<double, 2> Mesh2D::face_center(int f) const {
  // bottom edge midpoint, lifted half a cell
  const auto mid = edge_midpoint(faces_[f].loop[0].edge);
  return {mid[0], mid[1] + 0.5 * hy_};
}

std::span<const FaceRef> Mesh2D::edge_cofaces(int e) const {
  const int a = coface_offset_[e], b = coface_offset_[e + 1];
  return {coface_data_.data() + a, static_cast<std::size_t>(b - a)};
}

double Mesh2D::primal_volume(int degree, int index) const {
  switch (degree) {
    case 0: return 1.0;
    case 1: return edge_primal_len_[index];
    case 2: return face_area_[index];
    default: throw DegreeError("primal_volume: degree must be 0, 1 or 2");
  }
}

double Mesh2D::dual_volume(int degree, int index) const {
  switch (degree) {
    case 0: return vertex_dual_area_[index];
    case 1: return edge_dual_len_[index];
    case 2: return 1.0;
    default: throw DegreeError("dual_volume: degree must be 0, 1 or 2");
  }
}

int Mesh2D::vertex_at(int i, int j) const {
  if (i < 0 || i > nx_ || j < 0 || j > ny_) return -1;
  return vmap_[j * (nx_ + 1) + i];
}

int Mesh2D::h_edge_at(int i, int j) const {
  if (i < 0 || i >= nx_ || j < 0 || j > ny_) return -1;
  return hmap_[j * nx_ + i];
}

int Mesh2D::v_edge_at(int i, int j) const {
  if (i < 0 || i > nx_ || j < 0 || j >= ny_) return -1;
  return vvmap_[j * (nx_ + 1) + i];
}

int Mesh2D::face_at(int i, int j) const {
  if (i < 0 || i >= nx_ || j < 0 || j >= ny_) return -1;
  return fmap_[j * nx_ + i];
}

double Mesh2D::distance_to_boundary(double x, double y) const {
  double best = std::numeric_limits<double>::infinity();
  for (int e = 0; e < edge_count(); ++e) {
    if (!boundary_edge_[e]) continue;
    const auto& a = vertex_xy_[edges_[e].tail];
    const auto& b = vertex_xy_[edges_[e].head];
    best = std::min(best, point_segment_distance(x, y, a[0], a[1], b[0], b[1]));
  }
  return best;
}

void Mesh2D::validate() const {
  for (int f = 0; f < face_count(); ++f) {
    // closed, consistently oriented loop
    const auto& loop = faces_[f].loop;
    int cursor = loop[0].sign > 0 ? edges_[loop[0].edge].tail
                                  : edges_[loop[0].edge].head;
    const int start = cursor;
    std::map<int, int> vertex_net;
    for (const auto& se : loop) {
      const auto& ed = edges_[se.edge];
      const int from = se.sign > 0 ? ed.tail : ed.head;
      const int to = se.sign > 0 ? ed.head : ed.tail;
      if (from != cursor) throw TopologyError("face loop not closed");
      cursor = to;
      // boundary-of-boundary accumulation
      vertex_net[ed.head] += se.sign;
      vertex_net[ed.tail] -= se.sign;
    }
    if (cursor != start) throw TopologyError("face loop not closed");
    for (const auto& [v, net] : vertex_net)
      if (net != 0) throw TopologyError("boundary-of-boundary nonzero");
  }
  for (const auto& loop : hole_loops_) {
    if (loop.empty()) throw TopologyError("empty hole loop");
    int cursor = loop[0].sign > 0 ? edges_[loop[0].edge].tail
                                  : edges_[loop[0].edge].head;
    const int start = cursor;
    for (const auto& se : loop) {
      if (!boundary_edge_[se.edge])
        throw TopologyError("hole loop crosses interior edge");
      const auto& ed = edges_[se.edge];
      const int from = se.sign > 0 ? ed.tail : ed.head;
      const int to = se.sign > 0 ? ed.head : ed.tail;
      if (from != cursor) throw TopologyError("hole loop not closed");
      cursor = to;
    }
    if (cursor != start) throw TopologyError("hole loop not closed");
  }
  for (int v = 0; v < vertex_count(); ++v)
    if (!(vertex_dual_area_[v] > 0)) throw TopologyError("nonpositive dual area");
  for (int e = 0; e < edge_count(); ++e)
    if (!(edge_primal_len_[e] > 0 && edge_dual_len_[e] > 0))
      throw TopologyError("nonpositive edge volume");
  for (int f = 0; f < face_count(); ++f)
    if (!(face_area_[f] > 0)) throw TopologyError("nonpositive face area");
}

Mesh2D make_grid(int nx, int ny, double hx, double hy,
                 std::vector<HoleSpec> holes) {
  if (nx < 1 || ny < 1) throw DomainError("make_grid: nx, ny must be >= 1");
  if (!(hx > 0) || !(hy > 0)) throw DomainError("make_grid: hx, hy must be > 0");
  for (std::size_t k = 0; k < holes.size(); ++k) {
    const auto& h = holes[k];
    if (h.w < 1 || h.h < 1) throw DomainError("make_grid: hole extent must be >= 1");
    if (h.i0 < 1 || h.j0 < 1 || h.i0 + h.w > nx - 1 || h.j0 + h.h > ny - 1)
      throw DomainError("make_grid: hole must be strictly interior");
    for (std::size_t m = k + 1; m < holes.size(); ++m) {
      HoleSpec grown{h.i0 - 1, h.j0 - 1, h.w + 2, h.h + 2};
      if (rects_overlap(grown, holes[m]))
        throw DomainError("make_grid: holes must be separated by a cell");
    }
  }

  Mesh2D m;
  m.nx_ = nx;
  m.ny_ = ny;
  m.hx_ = hx;
  m.hy_ = hy;
  m.holes_ = holes;

  auto in_hole = [&](int i, int j) {
    for (const auto& h : holes)
      if (i >= h.i0 && i < h.i0 + h.w && j >= h.j0 && j < h.j0 + h.h) return true;
    return false;
  };
  auto face_kept = [&](int i, int j) {
    return i >= 0 && i < nx && j >= 0 && j < ny && !in_hole(i, j);
  };

  // compact ids, lattice scan order
  m.fmap_.assign(static_cast<std::size_t>(nx) * ny, -1);
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < nx; ++i)
      if (face_kept(i, j)) {
        m.fmap_[j * nx + i] = static_cast<int>(m.faces_.size());
        m.faces_.push_back({});
        m.face_area_.push_back(hx * hy);
      }

  m.vmap_.assign(static_cast<std::size_t>(nx + 1) * (ny + 1), -1);
  for (int j = 0; j <= ny; ++j)
    for (int i = 0; i <= nx; ++i) {
      const bool keep = face_kept(i - 1, j - 1) || face_kept(i, j - 1) ||
                        face_kept(i - 1, j) || face_kept(i, j);
      if (!keep) continue;
      m.vmap_[j * (nx + 1) + i] = static_cast<int>(m.vertex_xy_.size());
      m.vertex_xy_.push_back({i * hx, j * hy});
      double area = 0;
      if (face_kept(i - 1, j - 1)) area += hx * hy / 4;
      if (face_kept(i, j - 1)) area += hx * hy / 4;
      if (face_kept(i - 1, j)) area += hx * hy / 4;
      if (face_kept(i, j)) area += hx * hy / 4;
      m.vertex_dual_area_.push_back(area);
    }

  m.hmap_.assign(static_cast<std::size_t>(nx) * (ny + 1), -1);
  m.vvmap_.assign(static_cast<std::size_t>(nx + 1) * ny, -1);
  auto add_edge = [&](int tail_i, int tail_j, int head_i, int head_j,
                      bool horizontal, int below_kept, int above_kept) {
    const int id = static_cast<int>(m.edges_.size());
    m.edges_.push_back({m.vmap_[tail_j * (nx + 1) + tail_i],
                        m.vmap_[head_j * (nx + 1) + head_i]});
    m.horizontal_edge_.push_back(horizontal ? 1 : 0);
    m.edge_primal_len_.push_back(horizontal ? hx : hy);
    const double half = horizontal ? hy / 2 : hx / 2;
    m.edge_dual_len_.push_back(half * (below_kept + above_kept));
    m.boundary_edge_.push_back(below_kept + above_kept < 2 ? 1 : 0);
    return id;
  };
  // horizontal edges: H(i,j) from (i,j) to (i+1,j); faces below (i,j-1), above (i,j)
  for (int j = 0; j <= ny; ++j)
    for (int i = 0; i < nx; ++i) {
      const bool below = face_kept(i, j - 1), above = face_kept(i, j);
      if (!below && !above) continue;
      m.hmap_[j * nx + i] = add_edge(i, j, i + 1, j, true, below, above);
    }
  // vertical edges: V(i,j) from (i,j) to (i,j+1); faces left (i-1,j), right (i,j)
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i <= nx; ++i) {
      const bool left = face_kept(i - 1, j), right = face_kept(i, j);
      if (!left && !right) continue;
      m.vvmap_[j * (nx + 1) + i] = add_edge(i, j, i, j + 1, false, left, right);
    }

  // face loops: counterclockwise, bottom right top left
  std::vector<std::vector<FaceRef>> cofaces(m.edges_.size());
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < nx; ++i) {
      const int f = m.fmap_[j * nx + i];
      if (f < 0) continue;
      const int bottom = m.hmap_[j * nx + i];
      const int right = m.vvmap_[j * (nx + 1) + i + 1];
      const int top = m.hmap_[(j + 1) * nx + i];
      const int left = m.vvmap_[j * (nx + 1) + i];
      m.faces_[f].loop = {SignedEdge{bottom, +1}, SignedEdge{right, +1},
                          SignedEdge{top, -1}, SignedEdge{left, -1}};
      for (const auto& se : m.faces_[f].loop)
        cofaces[se.edge].push_back({f, se.sign});
    }
  m.coface_offset_.assign(m.edges_.size() + 1, 0);
  for (std::size_t e = 0; e < m.edges_.size(); ++e)
    m.coface_offset_[e + 1] =
        m.coface_offset_[e] + static_cast<int>(cofaces[e].size());
  m.coface_data_.reserve(m.coface_offset_.back());
  for (auto& v : cofaces)
    for (auto& fr : v) m.coface_data_.push_back(fr);

  // hole loops: counterclockwise around each hole
  for (const auto& h : holes) {
    EdgePath loop;
    for (int i = h.i0; i < h.i0 + h.w; ++i)
      loop.push_back({m.hmap_[h.j0 * nx + i], +1});
    for (int j = h.j0; j < h.j0 + h.h; ++j)
      loop.push_back({m.vvmap_[j * (nx + 1) + h.i0 + h.w], +1});
    for (int i = h.i0 + h.w - 1; i >= h.i0; --i)
      loop.push_back({m.hmap_[(h.j0 + h.h) * nx + i], -1});
    for (int j = h.j0 + h.h - 1; j >= h.j0; --j)
      loop.push_back({m.vvmap_[j * (nx + 1) + h.i0], -1});
    m.hole_loops_.push_back(std::move(loop));
  }

  m.validate();
  return m;
}

void write_mesh(std::ostream& out, const Mesh2D& mesh) {
  out << "# cscond-mesh 1\n";
  out << "grid " << mesh.grid_nx() << ' ' << mesh.grid_ny() << ' '
      << format_double(mesh.grid_hx()) << ' ' << format_double(mesh.grid_hy())
      << '\n';
  for (const auto& h : mesh.holes())
    out << "hole " << h.i0 << ' ' << h.j0 << ' ' << h.w << ' ' << h.h << '\n';
  for (int v = 0; v < mesh.vertex_count(); ++v) {
    const auto& xy = mesh.vertex_xy(v);
    out << "vertex " << v << ' ' << format_double(xy[0]) << ' '
        << format_double(xy[1]) << '\n';
  }
  for (int e = 0; e < mesh.edge_count(); ++e) {
    const auto& ed = mesh.edge(e);
    out << "edge " << e << ' ' << ed.tail << ' ' << ed.head << ' '
        << (mesh.edge_on_boundary(e) ? 1 : 0) << '\n';
  }
  for (int f = 0; f < mesh.face_count(); ++f) {
    out << "face " << f;
    for (const auto& se : mesh.face(f).loop)
      out << ' ' << se.edge << ' ' << se.sign;
    out << '\n';
  }
  for (std::size_t k = 0; k < mesh.hole_loops().size(); ++k) {
    const auto& loop = mesh.hole_loops()[k];
    out << "loop " << k << ' ' << loop.size();
    for (const auto& se : loop) out << ' ' << se.edge << ' ' << se.sign;
    out << '\n';
  }
}

Mesh2D read_mesh(std::istream& in) {
  std::string line;
  int nx = 0, ny = 0;
  double hx = 0, hy = 0;
  bool have_grid = false;
  std::vector<HoleSpec> holes;
  struct VRec {
    int id;
    double x, y;
  };
  struct ERec {
    int id, tail, head, boundary;
  };
  std::vector<VRec> vrecs;
  std::vector<ERec> erecs;

  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    if (tag == "grid") {
      std::string sx, sy;
      ls >> nx >> ny >> sx >> sy;
      hx = parse_double(sx);
      hy = parse_double(sy);
      have_grid = true;
    } else if (tag == "hole") {
      HoleSpec h;
      ls >> h.i0 >> h.j0 >> h.w >> h.h;
      holes.push_back(h);
    } else if (tag == "vertex") {
      VRec r;
      std::string sx, sy;
      ls >> r.id >> sx >> sy;
      r.x = parse_double(sx);
      r.y = parse_double(sy);
      vrecs.push_back(r);
    } else if (tag == "edge") {
      ERec r;
      ls >> r.id >> r.tail >> r.head >> r.boundary;
      erecs.push_back(r);
    } else if (tag == "face" || tag == "loop") {
      // regenerated from the grid record; nothing to capture
    } else {
      throw ShapeError("read_mesh: unknown record '" + tag + "'");
    }
    if (ls.fail()) throw ShapeError("read_mesh: malformed record '" + line + "'");
  }
  if (!have_grid) throw ShapeError("read_mesh: missing grid record");

  Mesh2D mesh = make_grid(nx, ny, hx, hy, holes);
  if (static_cast<int>(vrecs.size()) != mesh.vertex_count() ||
      static_cast<int>(erecs.size()) != mesh.edge_count())
    throw ShapeError("read_mesh: cell counts disagree with grid record");
  for (const auto& r : vrecs) {
    const auto& xy = mesh.vertex_xy(r.id);
    if (xy[0] != r.x || xy[1] != r.y)
      throw ShapeError("read_mesh: vertex record disagrees with grid");
  }
  for (const auto& r : erecs) {
    const auto& ed = mesh.edge(r.id);
    if (ed.tail != r.tail || ed.head != r.head ||
        (mesh.edge_on_boundary(r.id) ? 1 : 0) != r.boundary)
      throw ShapeError("read_mesh: edge record disagrees with grid");
  }
  return mesh;
}

void write_mesh_file(const std::string& path, const Mesh2D& mesh) {
  std::ofstream out(path);
  if (!out) throw ShapeError("write_mesh_file: cannot open " + path);
  write_mesh(out, mesh);
}

Mesh2D read_mesh_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ShapeError("read_mesh_file: cannot open " + path);
  return read_mesh(in);
}

}  // namespace cscond

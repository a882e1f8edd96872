#include "cscond/dec.hpp"

#include <complex>
#include <map>
#include <queue>

namespace cscond {

namespace {

template <typename T>
T signed_value(const T& v, int sign) {
  return sign > 0 ? v : -v;
}

template <typename T>
T face_loop_sum(const Mesh2D& mesh, const std::vector<T>& edge_values, int f) {
  // Accumulate in loop order (bottom, right, top, left); the telescoping
  // partial sums then cancel exactly for coboundaries of one-binade data.
  T acc{};
  for (const auto& se : mesh.face(f).loop)
    acc += signed_value(edge_values[se.edge], se.sign);
  return acc;
}

}  // namespace

template <typename T>
CochainT<T> exterior_derivative(const CochainT<T>& c) {
  if (c.is_dual())
    throw DegreeError("exterior_derivative: dual cochains unsupported");
  const Mesh2D& mesh = c.mesh();
  if (c.degree() == 0) {
    CochainT<T> out(mesh, 1);
    for (int e = 0; e < mesh.edge_count(); ++e) {
      const auto& ed = mesh.edge(e);
      out[e] = c[ed.head] - c[ed.tail];
    }
    return out;
  }
  if (c.degree() == 1) {
    CochainT<T> out(mesh, 2);
    for (int f = 0; f < mesh.face_count(); ++f)
      out[f] = face_loop_sum(mesh, c.values(), f);
    return out;
  }
  throw DegreeError("exterior_derivative: degree-2 input has no coboundary");
}

template <typename T>
CochainT<T> hodge_star(const CochainT<T>& c) {
  const Mesh2D& mesh = c.mesh();
  if (!c.is_dual()) {
    const int k = c.degree();
    CochainT<T> out(mesh, 2 - k, /*dual=*/true);
    for (int i = 0; i < c.size(); ++i)
      out[i] = c[i] * (mesh.dual_volume(k, i) / mesh.primal_volume(k, i));
    return out;
  }
  // dual degree m lives on duals of primal (2-m)-cells
  const int k = 2 - c.degree();
  const double sign = (k == 1) ? -1.0 : 1.0;  // (-1)^{k(2-k)}
  CochainT<T> out(mesh, k, /*dual=*/false);
  for (int i = 0; i < c.size(); ++i)
    out[i] = c[i] * (sign * mesh.primal_volume(k, i) / mesh.dual_volume(k, i));
  return out;
}

template <typename T>
CochainT<T> codifferential(const CochainT<T>& c) {
  if (c.is_dual()) throw DegreeError("codifferential: dual cochains unsupported");
  const Mesh2D& mesh = c.mesh();
  const int k = c.degree();
  if (k == 0)
    throw DegreeError("codifferential: degree-0 input has no codifferential");

  std::vector<T> weighted(c.size());
  for (int i = 0; i < c.size(); ++i)
    weighted[i] = c[i] * (mesh.dual_volume(k, i) / mesh.primal_volume(k, i));

  CochainT<T> out(mesh, k - 1);
  if (k == 1) {
    for (int e = 0; e < mesh.edge_count(); ++e) {
      const auto& ed = mesh.edge(e);
      out[ed.head] += weighted[e];
      out[ed.tail] -= weighted[e];
    }
  } else {
    for (int f = 0; f < mesh.face_count(); ++f)
      for (const auto& se : mesh.face(f).loop)
        out[se.edge] += signed_value(weighted[f], se.sign);
  }
  for (int i = 0; i < out.size(); ++i)
    out[i] *= mesh.primal_volume(k - 1, i) / mesh.dual_volume(k - 1, i);
  return out;
}

template <typename T>
T inner_product(const CochainT<T>& a, const CochainT<T>& b) {
  a.require_same_shape(b);
  const Mesh2D& mesh = a.mesh();
  const int k = a.degree();
  T acc{};
  for (int i = 0; i < a.size(); ++i) {
    T ai = a[i];
    if constexpr (std::is_same_v<T, std::complex<double>>) ai = std::conj(ai);
    acc += ai * b[i] * (mesh.dual_volume(k, i) / mesh.primal_volume(k, i));
  }
  return acc;
}

template <typename T>
T loop_sum(const CochainT<T>& c, const EdgePath& loop) {
  if (c.degree() != 1 || c.is_dual())
    throw DegreeError("loop_sum: requires a primal 1-cochain");
  if (loop.empty()) throw LoopError("loop_sum: empty path");
  const Mesh2D& mesh = c.mesh();
  auto endpoint = [&](const SignedEdge& se, bool start) {
    const auto& ed = mesh.edge(se.edge);
    return (se.sign > 0) == start ? ed.tail : ed.head;
  };
  int cursor = endpoint(loop.front(), true);
  const int start = cursor;
  T acc{};
  for (const auto& se : loop) {
    if (se.edge < 0 || se.edge >= mesh.edge_count())
      throw LoopError("loop_sum: edge index out of range");
    if (endpoint(se, true) != cursor)
      throw LoopError("loop_sum: path is not connected");
    cursor = endpoint(se, false);
    acc += signed_value(c[se.edge], se.sign);
  }
  if (cursor != start) throw LoopError("loop_sum: path is not closed");
  return acc;
}

template <typename T>
std::pair<T, T> stokes_check(const CochainT<T>& c,
                             const std::vector<int>& face_region) {
  if (c.degree() != 1 || c.is_dual())
    throw DegreeError("stokes_check: requires a primal 1-cochain");
  if (face_region.empty()) throw RegionError("stokes_check: empty region");
  const Mesh2D& mesh = c.mesh();

  std::map<int, int> in_region;
  for (int f : face_region) {
    if (f < 0 || f >= mesh.face_count())
      throw RegionError("stokes_check: face index out of range");
    in_region[f] = 0;
  }
  // connectivity over shared edges
  std::queue<int> frontier;
  frontier.push(face_region.front());
  in_region[face_region.front()] = 1;
  int reached = 1;
  while (!frontier.empty()) {
    const int f = frontier.front();
    frontier.pop();
    for (const auto& se : mesh.face(f).loop)
      for (const auto& cf : mesh.edge_cofaces(se.edge)) {
        auto it = in_region.find(cf.face);
        if (it != in_region.end() && it->second == 0) {
          it->second = 1;
          ++reached;
          frontier.push(it->first);
        }
      }
  }
  if (reached != static_cast<int>(in_region.size()))
    throw RegionError("stokes_check: region is not connected");

  std::map<int, int> boundary_sign;
  for (const auto& [f, seen] : in_region)
    for (const auto& se : mesh.face(f).loop) boundary_sign[se.edge] += se.sign;

  T lhs{};
  for (const auto& [e, s] : boundary_sign) {
    if (s == 0) continue;
    lhs += static_cast<double>(s) * c[e];
  }
  T rhs{};
  for (const auto& [f, seen] : in_region)
    rhs += face_loop_sum(mesh, c.values(), f);
  return {lhs, rhs};
}

Cochain rotated_gradient(const Cochain& two_form) {
  if (two_form.degree() != 2 || two_form.is_dual())
    throw DegreeError("rotated_gradient: requires a primal 2-cochain");
  const Mesh2D& mesh = two_form.mesh();
  Cochain out(mesh, 1);
  for (int e = 0; e < mesh.edge_count(); ++e) {
    double acc = 0;
    for (const auto& cf : mesh.edge_cofaces(e))
      acc += cf.sign * (two_form[cf.face] / mesh.primal_volume(2, cf.face));
    out[e] = acc;
  }
  return out;
}

template CochainT<double> exterior_derivative(const CochainT<double>&);
template CochainT<std::complex<double>> exterior_derivative(
    const CochainT<std::complex<double>>&);
template CochainT<double> hodge_star(const CochainT<double>&);
template CochainT<std::complex<double>> hodge_star(
    const CochainT<std::complex<double>>&);
template CochainT<double> codifferential(const CochainT<double>&);
template CochainT<std::complex<double>> codifferential(
    const CochainT<std::complex<double>>&);
template double inner_product(const CochainT<double>&, const CochainT<double>&);
template std::complex<double> inner_product(
    const CochainT<std::complex<double>>&, const CochainT<std::complex<double>>&);
template double loop_sum(const CochainT<double>&, const EdgePath&);
template std::complex<double> loop_sum(const CochainT<std::complex<double>>&,
                                       const EdgePath&);
template std::pair<double, double> stokes_check(const CochainT<double>&,
                                                const std::vector<int>&);

}  // namespace cscond

#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include "cscond/errors.hpp"
#include "cscond/mesh.hpp"

namespace cscond {

/// Discrete k-form: one value per k-cell of the owning mesh.
///
/// Values follow the integrated convention: 0-cochains are point samples
/// at vertices, 1-cochains are line integrals along (oriented) edges, and
/// 2-cochains are integrals over (counterclockwise) faces. A cochain can
/// live on the primal complex or, after a Hodge star, on the dual complex;
/// dual degree-k values are indexed by their primal (2-k)-cell.
template <typename T>
class CochainT {
 public:
  CochainT(const Mesh2D& mesh, int degree, bool dual = false)
      : mesh_(&mesh), degree_(degree), dual_(dual) {
    if (degree < 0 || degree > 2)
      throw DegreeError("cochain degree must be 0, 1 or 2");
    values_.assign(mesh.cell_count(dual ? 2 - degree : degree), T{});
  }

  const Mesh2D& mesh() const { return *mesh_; }
  int degree() const { return degree_; }
  bool is_dual() const { return dual_; }
  int size() const { return static_cast<int>(values_.size()); }

  T& operator[](int i) { return values_[i]; }
  const T& operator[](int i) const { return values_[i]; }
  std::vector<T>& values() { return values_; }
  const std::vector<T>& values() const { return values_; }

  CochainT& operator+=(const CochainT& o) {
    require_same_shape(o);
    for (int i = 0; i < size(); ++i) values_[i] += o.values_[i];
    return *this;
  }
  CochainT& operator-=(const CochainT& o) {
    require_same_shape(o);
    for (int i = 0; i < size(); ++i) values_[i] -= o.values_[i];
    return *this;
  }
  CochainT& operator*=(T s) {
    for (auto& v : values_) v *= s;
    return *this;
  }
  friend CochainT operator+(CochainT a, const CochainT& b) { return a += b; }
  friend CochainT operator-(CochainT a, const CochainT& b) { return a -= b; }
  friend CochainT operator*(T s, CochainT a) { return a *= s; }

  double max_norm() const {
    double m = 0;
    for (const auto& v : values_) m = std::max(m, std::abs(v));
    return m;
  }

  void require_same_shape(const CochainT& o) const {
    if (mesh_ != o.mesh_ || degree_ != o.degree_ || dual_ != o.dual_)
      throw ShapeError("cochain shape mismatch");
  }

 private:
  const Mesh2D* mesh_;
  int degree_;
  bool dual_;
  std::vector<T> values_;
};

using Cochain = CochainT<double>;
using ComplexCochain = CochainT<std::complex<double>>;

}  // namespace cscond

#pragma once

#include <utility>
#include <vector>

#include "cscond/cochain.hpp"

namespace cscond {

/// Discrete exterior calculus on Mesh2D.
///
/// d is the signed-incidence coboundary; the Hodge star is the diagonal
/// star value * dual_volume / primal_volume, with the involution
/// convention  ** = (-1)^{k(2-k)}  on degree-k cochains (so 1-forms pick
/// up a sign, 0- and 2-forms do not). The codifferential is realized as
/// M_{k-1}^{-1} d^T M_k, which makes it the exact adjoint of d under the
/// dual-volume inner product below.

/// Coboundary of a primal k-cochain (k = 0 or 1); degree-2 input throws.
template <typename T>
CochainT<T> exterior_derivative(const CochainT<T>& c);

/// Diagonal Hodge star, primal degree k -> dual degree 2-k and back.
template <typename T>
CochainT<T> hodge_star(const CochainT<T>& c);

/// Adjoint of d: primal degree k -> k-1 (k = 1 or 2); degree-0 throws.
template <typename T>
CochainT<T> codifferential(const CochainT<T>& c);

/// Dual-volume inner product of two primal k-cochains:
/// sum_i a_i b_i (dual_i / primal_i), conjugating the first argument.
template <typename T>
T inner_product(const CochainT<T>& a, const CochainT<T>& b);

/// Orientation-signed sum of a 1-cochain along a closed edge cycle.
/// For exact forms this vanishes on contractible loops; around a hole it
/// returns the holonomy. Throws LoopError unless the path is a connected
/// closed cycle.
template <typename T>
T loop_sum(const CochainT<T>& c, const EdgePath& loop);

/// Both sides of the discrete Stokes identity on a connected face region:
/// first the boundary chain sum of c, then the interior sum of dc.
/// The two are the same numbers summed two ways.
template <typename T>
std::pair<T, T> stokes_check(const CochainT<T>& c,
                             const std::vector<int>& face_region);

/// 1-cochain with the across-edge difference of a face scalar: for a
/// 2-cochain w this is the rotated gradient of the pointwise field
/// w/area, the discrete  eps_mn d_n  of a scalar living on faces.
Cochain rotated_gradient(const Cochain& two_form);

extern template CochainT<double> exterior_derivative(const CochainT<double>&);
extern template CochainT<std::complex<double>> exterior_derivative(
    const CochainT<std::complex<double>>&);
extern template CochainT<double> hodge_star(const CochainT<double>&);
extern template CochainT<std::complex<double>> hodge_star(
    const CochainT<std::complex<double>>&);
extern template CochainT<double> codifferential(const CochainT<double>&);
extern template CochainT<std::complex<double>> codifferential(
    const CochainT<std::complex<double>>&);
extern template double inner_product(const CochainT<double>&,
                                     const CochainT<double>&);
extern template std::complex<double> inner_product(
    const CochainT<std::complex<double>>&, const CochainT<std::complex<double>>&);
extern template double loop_sum(const CochainT<double>&, const EdgePath&);
extern template std::complex<double> loop_sum(
    const CochainT<std::complex<double>>&, const EdgePath&);
extern template std::pair<double, double> stokes_check(
    const CochainT<double>&, const std::vector<int>&);

}  // namespace cscond

// SPDX-License-Identifier: Apache-2.0
//
// Discretization of the product space H = L^2([-tau, 0], X) x X.
//
// A history segment is sampled on M+1 uniform nodes s_i = -tau + i tau/M.
// The head of a ProductState is the node at s = 0, so h = phi(0) holds by
// construction rather than by bookkeeping.
#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "delaylab/space.hpp"

namespace delaylab {

class HistorySegment {
 public:
  HistorySegment(double tau, std::size_t intervals, std::size_t n_modes);

  double tau() const noexcept { return tau_; }
  /// M: number of grid intervals; there are M+1 nodes.
  std::size_t intervals() const noexcept { return intervals_; }
  std::size_t node_count() const noexcept { return intervals_ + 1; }
  std::size_t n_modes() const noexcept { return n_modes_; }
  double spacing() const noexcept { return tau_ / static_cast<double>(intervals_); }
  double node_time(std::size_t i) const;

  std::span<double> node(std::size_t i);
  std::span<const double> node(std::size_t i) const;
  ModalVector node_vector(std::size_t i) const;
  void set_node(std::size_t i, const ModalVector& value);

  std::span<double> data() noexcept { return nodes_; }
  std::span<const double> data() const noexcept { return nodes_; }

  /// Piecewise-linear interpolant; exact at nodes.
  ModalVector eval(double s) const;

  /// Drops the oldest node, moves every node one slot towards -tau and
  /// stores `head` at s = 0.
  void shift_append(std::span<const double> head);

  bool same_grid(const HistorySegment& other) const noexcept;
  /// Trapezoid weight of node i for the L^2 factor.
  double quadrature_weight(std::size_t i) const;

  friend bool operator==(const HistorySegment&, const HistorySegment&) = default;

 private:
  double tau_;
  std::size_t intervals_;
  std::size_t n_modes_;
  std::vector<double> nodes_;  // node-major: nodes_[i * n_modes + k]
};

/// Element (phi, h) of H with h = phi(0).
class ProductState {
 public:
  explicit ProductState(HistorySegment segment) : segment_(std::move(segment)) {}

  static ProductState zero(double tau, std::size_t intervals, std::size_t n_modes);
  /// phi(s) = value for all s.
  static ProductState constant(double tau, std::size_t intervals, const ModalVector& value);

  const HistorySegment& segment() const noexcept { return segment_; }
  HistorySegment& segment() noexcept { return segment_; }
  std::span<const double> head() const { return segment_.node(segment_.intervals()); }
  std::span<double> head() { return segment_.node(segment_.intervals()); }
  ModalVector head_vector() const { return segment_.node_vector(segment_.intervals()); }

  std::size_t size() const noexcept { return segment_.data().size(); }
  std::span<double> data() noexcept { return segment_.data(); }
  std::span<const double> data() const noexcept { return segment_.data(); }

  ProductState& operator+=(const ProductState& other);
  ProductState& operator-=(const ProductState& other);
  ProductState& operator*=(double s);
  /// this += s * other
  ProductState& axpy(double s, const ProductState& other);

  friend ProductState operator+(ProductState a, const ProductState& b) { return a += b; }
  friend ProductState operator-(ProductState a, const ProductState& b) { return a -= b; }
  friend ProductState operator*(double s, ProductState a) { return a *= s; }
  friend bool operator==(const ProductState&, const ProductState&) = default;

 private:
  HistorySegment segment_;
};

double h_inner(const ProductState& a, const ProductState& b);
double h_norm(const ProductState& a);
/// ||a - b||_H without forming the difference.
double h_distance(const ProductState& a, const ProductState& b);

HistorySegment project_P1(const ProductState& x);
ModalVector project_P2(const ProductState& x);

/// Delay semigroup: the head evolves by S(t) and the segment is shifted
/// left, with the vacated part filled by S(t + xi) h. t must be a multiple
/// of the node spacing.
ProductState tilde_semigroup_apply(const SpectralDomain& dom, double t, const ProductState& x);

/// Number of grid steps represented by duration t; throws AlignmentError if
/// t is not a nonnegative multiple of `spacing` (relative tolerance 1e-9).
std::size_t aligned_steps(double t, double spacing);

}  // namespace delaylab

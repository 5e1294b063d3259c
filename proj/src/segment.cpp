// SPDX-License-Identifier: Apache-2.0
#include "delaylab/segment.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "delaylab/errors.hpp"

namespace delaylab {

HistorySegment::HistorySegment(double tau, std::size_t intervals, std::size_t n_modes)
    : tau_(tau), intervals_(intervals), n_modes_(n_modes) {
  if (!(tau > 0.0)) throw ConfigError("tau must be positive");
  if (intervals < 2) throw ConfigError("history grid needs M >= 2 intervals");
  if (n_modes == 0) throw ConfigError("n_modes must be at least 1");
  nodes_.assign((intervals + 1) * n_modes, 0.0);
}

double HistorySegment::node_time(std::size_t i) const {
  if (i > intervals_) throw IndexError("history node " + std::to_string(i) + " out of range");
  // Written so that node M is exactly 0 and node 0 exactly -tau.
  return -tau_ * static_cast<double>(intervals_ - i) / static_cast<double>(intervals_);
}

std::span<double> HistorySegment::node(std::size_t i) {
  if (i > intervals_) throw IndexError("history node " + std::to_string(i) + " out of range");
  return {nodes_.data() + i * n_modes_, n_modes_};
}

std::span<const double> HistorySegment::node(std::size_t i) const {
  if (i > intervals_) throw IndexError("history node " + std::to_string(i) + " out of range");
  return {nodes_.data() + i * n_modes_, n_modes_};
}

ModalVector HistorySegment::node_vector(std::size_t i) const {
  auto n = node(i);
  return ModalVector(std::vector<double>(n.begin(), n.end()));
}

void HistorySegment::set_node(std::size_t i, const ModalVector& value) {
  if (value.size() != n_modes_) throw DimensionError("node value has wrong mode count");
  std::ranges::copy(value.coeffs(), node(i).begin());
}

ModalVector HistorySegment::eval(double s) const {
  if (!(s >= -tau_ && s <= 0.0)) throw DomainError("segment_eval: s outside [-tau, 0]");
  const double pos = (s + tau_) / spacing();
  auto left = static_cast<std::size_t>(std::floor(pos));
  if (left >= intervals_) return node_vector(intervals_);
  const double frac = pos - static_cast<double>(left);
  if (frac == 0.0) return node_vector(left);
  ModalVector out(n_modes_);
  auto a = node(left);
  auto b = node(left + 1);
  for (std::size_t k = 0; k < n_modes_; ++k) out[k] = (1.0 - frac) * a[k] + frac * b[k];
  return out;
}

void HistorySegment::shift_append(std::span<const double> head) {
  if (head.size() != n_modes_) throw DimensionError("appended head has wrong mode count");
  std::copy(nodes_.begin() + static_cast<std::ptrdiff_t>(n_modes_), nodes_.end(), nodes_.begin());
  std::ranges::copy(head, nodes_.end() - static_cast<std::ptrdiff_t>(n_modes_));
}

bool HistorySegment::same_grid(const HistorySegment& other) const noexcept {
  return tau_ == other.tau_ && intervals_ == other.intervals_ && n_modes_ == other.n_modes_;
}

double HistorySegment::quadrature_weight(std::size_t i) const {
  if (i > intervals_) throw IndexError("history node out of range");
  return (i == 0 || i == intervals_) ? 0.5 * spacing() : spacing();
}

ProductState ProductState::zero(double tau, std::size_t intervals, std::size_t n_modes) {
  return ProductState(HistorySegment(tau, intervals, n_modes));
}

ProductState ProductState::constant(double tau, std::size_t intervals, const ModalVector& value) {
  HistorySegment seg(tau, intervals, value.size());
  for (std::size_t i = 0; i <= intervals; ++i) seg.set_node(i, value);
  return ProductState(std::move(seg));
}

namespace {
void require_same_grid(const ProductState& a, const ProductState& b) {
  if (!a.segment().same_grid(b.segment())) {
    throw DimensionError("product states live on different grids");
  }
}
}  // namespace

ProductState& ProductState::operator+=(const ProductState& other) {
  require_same_grid(*this, other);
  auto dst = data();
  auto src = other.data();
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] += src[i];
  return *this;
}

ProductState& ProductState::operator-=(const ProductState& other) {
  require_same_grid(*this, other);
  auto dst = data();
  auto src = other.data();
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] -= src[i];
  return *this;
}

ProductState& ProductState::operator*=(double s) {
  for (double& x : data()) x *= s;
  return *this;
}

ProductState& ProductState::axpy(double s, const ProductState& other) {
  require_same_grid(*this, other);
  auto dst = data();
  auto src = other.data();
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] += s * src[i];
  return *this;
}

double h_inner(const ProductState& a, const ProductState& b) {
  require_same_grid(a, b);
  const auto& seg = a.segment();
  const std::size_t n = seg.n_modes();
  const std::size_t last = seg.intervals();
  auto da = a.data();
  auto db = b.data();
  double integral = 0.0;
  for (std::size_t i = 0; i <= last; ++i) {
    double dot = 0.0;
    for (std::size_t k = 0; k < n; ++k) dot += da[i * n + k] * db[i * n + k];
    integral += seg.quadrature_weight(i) * dot;
  }
  double head = 0.0;
  for (std::size_t k = 0; k < n; ++k) head += da[last * n + k] * db[last * n + k];
  return integral + head;
}

double h_norm(const ProductState& a) { return std::sqrt(h_inner(a, a)); }

double h_distance(const ProductState& a, const ProductState& b) {
  require_same_grid(a, b);
  const auto& seg = a.segment();
  const std::size_t n = seg.n_modes();
  const std::size_t last = seg.intervals();
  auto da = a.data();
  auto db = b.data();
  double acc = 0.0;
  for (std::size_t i = 0; i <= last; ++i) {
    double sq = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      const double d = da[i * n + k] - db[i * n + k];
      sq += d * d;
    }
    acc += (i == last ? seg.quadrature_weight(i) + 1.0 : seg.quadrature_weight(i)) * sq;
  }
  return std::sqrt(acc);
}

HistorySegment project_P1(const ProductState& x) { return x.segment(); }

ModalVector project_P2(const ProductState& x) { return x.head_vector(); }

std::size_t aligned_steps(double t, double spacing) {
  if (t < 0.0) throw DomainError("duration must be nonnegative");
  const double ratio = t / spacing;
  const double rounded = std::round(ratio);
  if (std::abs(ratio - rounded) > 1e-9 * std::max(1.0, rounded)) {
    throw AlignmentError("duration " + std::to_string(t) + " is not a multiple of the grid step " +
                         std::to_string(spacing));
  }
  return static_cast<std::size_t>(rounded);
}

ProductState tilde_semigroup_apply(const SpectralDomain& dom, double t, const ProductState& x) {
  const auto& seg = x.segment();
  if (dom.n_modes() != seg.n_modes()) throw DimensionError("domain and state mode counts differ");
  const std::size_t shift = aligned_steps(t, seg.spacing());
  const std::size_t m = seg.intervals();
  const std::size_t n = seg.n_modes();
  const ModalVector head = x.head_vector();
  HistorySegment out(seg.tau(), m, n);
  for (std::size_t i = 0; i <= m; ++i) {
    if (i + shift <= m) {
      std::ranges::copy(seg.node(i + shift), out.node(i).begin());
    } else {
      const double elapsed = static_cast<double>(i + shift - m) * seg.spacing();
      out.set_node(i, dom.semigroup_apply(elapsed, head));
    }
  }
  return ProductState(std::move(out));
}

}  // namespace delaylab

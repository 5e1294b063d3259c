// SPDX-License-Identifier: Apache-2.0
//
// Galerkin truncation of the spatial operator A on X. States are stored as
// coefficients in an orthonormal eigenbasis, so A and its semigroup act
// diagonally. Pointwise nonlinearities go through a collocation transform.
#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace delaylab {

/// Coefficients of an element of X in the orthonormal eigenbasis of A.
class ModalVector {
 public:
  ModalVector() = default;
  explicit ModalVector(std::size_t n) : coeffs_(n, 0.0) {}
  explicit ModalVector(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {}

  /// Unit vector along eigenmode `mode` (1-based, as in sin(mode x)).
  static ModalVector unit(std::size_t n, std::size_t mode);

  std::size_t size() const noexcept { return coeffs_.size(); }
  double& operator[](std::size_t k) { return coeffs_[k]; }
  double operator[](std::size_t k) const { return coeffs_[k]; }
  std::span<double> coeffs() noexcept { return coeffs_; }
  std::span<const double> coeffs() const noexcept { return coeffs_; }

  double dot(const ModalVector& other) const;
  double norm() const;

  ModalVector& operator+=(const ModalVector& other);
  ModalVector& operator-=(const ModalVector& other);
  ModalVector& operator*=(double s);

  friend ModalVector operator+(ModalVector a, const ModalVector& b) { return a += b; }
  friend ModalVector operator-(ModalVector a, const ModalVector& b) { return a -= b; }
  friend ModalVector operator*(double s, ModalVector a) { return a *= s; }
  friend bool operator==(const ModalVector&, const ModalVector&) = default;

 private:
  std::vector<double> coeffs_;
};

/// Diagonal spectral truncation of A on (0, pi) with the sine eigenbasis
/// e_k(x) = sqrt(2/pi) sin(k x) and collocation points x_i = i pi / (N+1).
class SpectralDomain {
 public:
  /// A = d^2/dx^2 with Dirichlet conditions: lambda_k = -k^2.
  static SpectralDomain dirichlet_laplacian(std::size_t n_modes);
  /// Arbitrary diagonal spectrum on the same basis; must be strictly decreasing.
  static SpectralDomain with_eigenvalues(std::vector<double> eigenvalues);

  std::size_t n_modes() const noexcept { return eigenvalues_.size(); }
  double eigenvalue(std::size_t index) const { return eigenvalues_.at(index); }
  std::span<const double> eigenvalues() const noexcept { return eigenvalues_; }
  /// s(A): the largest eigenvalue.
  double spectral_bound() const noexcept { return eigenvalues_.front(); }

  std::span<const double> collocation_points() const noexcept { return points_; }
  /// Weight w such that ||v||^2 = w * sum_i u(x_i)^2.
  double quadrature_weight() const noexcept { return weight_; }

  ModalVector semigroup_apply(double t, const ModalVector& v) const;
  ModalVector apply_A(const ModalVector& v) const;

  std::vector<double> to_collocation(std::span<const double> coeffs) const;
  ModalVector to_modal(std::span<const double> samples) const;

  /// Allocation-free variants used by the integrators.
  void to_collocation(std::span<const double> coeffs, std::span<double> out) const;
  void to_modal(std::span<const double> samples, std::span<double> out) const;

 private:
  explicit SpectralDomain(std::vector<double> eigenvalues);

  std::vector<double> eigenvalues_;
  std::vector<double> points_;
  std::vector<double> synthesis_;  // row i, column k: e_k(x_i)
  double weight_ = 0.0;
};

}  // namespace delaylab

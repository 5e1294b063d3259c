// SPDX-License-Identifier: Apache-2.0
#include "delaylab/space.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "delaylab/errors.hpp"

namespace delaylab {

ModalVector ModalVector::unit(std::size_t n, std::size_t mode) {
  if (mode == 0 || mode > n) {
    throw IndexError("mode " + std::to_string(mode) + " outside 1.." + std::to_string(n));
  }
  ModalVector v(n);
  v[mode - 1] = 1.0;
  return v;
}

double ModalVector::dot(const ModalVector& other) const {
  if (other.size() != size()) throw DimensionError("modal vector size mismatch");
  double acc = 0.0;
  for (std::size_t k = 0; k < size(); ++k) acc += coeffs_[k] * other.coeffs_[k];
  return acc;
}

double ModalVector::norm() const { return std::sqrt(dot(*this)); }

ModalVector& ModalVector::operator+=(const ModalVector& other) {
  if (other.size() != size()) throw DimensionError("modal vector size mismatch");
  for (std::size_t k = 0; k < size(); ++k) coeffs_[k] += other.coeffs_[k];
  return *this;
}

ModalVector& ModalVector::operator-=(const ModalVector& other) {
  if (other.size() != size()) throw DimensionError("modal vector size mismatch");
  for (std::size_t k = 0; k < size(); ++k) coeffs_[k] -= other.coeffs_[k];
  return *this;
}

ModalVector& ModalVector::operator*=(double s) {
  for (double& c : coeffs_) c *= s;
  return *this;
}

SpectralDomain SpectralDomain::dirichlet_laplacian(std::size_t n_modes) {
  if (n_modes == 0) throw ConfigError("n_modes must be at least 1");
  std::vector<double> eig(n_modes);
  for (std::size_t k = 0; k < n_modes; ++k) {
    const double wave = static_cast<double>(k + 1);
    eig[k] = -wave * wave;
  }
  return SpectralDomain(std::move(eig));
}

SpectralDomain SpectralDomain::with_eigenvalues(std::vector<double> eigenvalues) {
  if (eigenvalues.empty()) throw ConfigError("eigenvalue list is empty");
  for (std::size_t k = 1; k < eigenvalues.size(); ++k) {
    if (!(eigenvalues[k] < eigenvalues[k - 1])) {
      throw ConfigError("eigenvalues must be strictly decreasing");
    }
  }
  return SpectralDomain(std::move(eigenvalues));
}

SpectralDomain::SpectralDomain(std::vector<double> eigenvalues)
    : eigenvalues_(std::move(eigenvalues)) {
  const std::size_t n = eigenvalues_.size();
  const double pi = std::numbers::pi;
  weight_ = pi / static_cast<double>(n + 1);
  points_.resize(n);
  synthesis_.resize(n * n);
  const double norm = std::sqrt(2.0 / pi);
  for (std::size_t i = 0; i < n; ++i) {
    points_[i] = static_cast<double>(i + 1) * weight_;
    for (std::size_t k = 0; k < n; ++k) {
      synthesis_[i * n + k] = norm * std::sin(static_cast<double>(k + 1) * points_[i]);
    }
  }
}

ModalVector SpectralDomain::semigroup_apply(double t, const ModalVector& v) const {
  if (t < 0.0) throw DomainError("semigroup time must be nonnegative");
  if (v.size() != n_modes()) throw DimensionError("modal vector size mismatch");
  ModalVector out(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) out[k] = std::exp(eigenvalues_[k] * t) * v[k];
  return out;
}

ModalVector SpectralDomain::apply_A(const ModalVector& v) const {
  if (v.size() != n_modes()) throw DimensionError("modal vector size mismatch");
  ModalVector out(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) out[k] = eigenvalues_[k] * v[k];
  return out;
}

void SpectralDomain::to_collocation(std::span<const double> coeffs, std::span<double> out) const {
  const std::size_t n = n_modes();
  if (coeffs.size() != n || out.size() != n) throw DimensionError("collocation size mismatch");
  for (std::size_t i = 0; i < n; ++i) {
    const double* row = &synthesis_[i * n];
    double acc = 0.0;
    for (std::size_t k = 0; k < n; ++k) acc += row[k] * coeffs[k];
    out[i] = acc;
  }
}

void SpectralDomain::to_modal(std::span<const double> samples, std::span<double> out) const {
  const std::size_t n = n_modes();
  if (samples.size() != n || out.size() != n) throw DimensionError("collocation size mismatch");
  for (std::size_t k = 0; k < n; ++k) out[k] = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double* row = &synthesis_[i * n];
    const double s = weight_ * samples[i];
    for (std::size_t k = 0; k < n; ++k) out[k] += row[k] * s;
  }
}

std::vector<double> SpectralDomain::to_collocation(std::span<const double> coeffs) const {
  std::vector<double> out(n_modes());
  to_collocation(coeffs, out);
  return out;
}

ModalVector SpectralDomain::to_modal(std::span<const double> samples) const {
  ModalVector out(n_modes());
  to_modal(samples, out.coeffs());
  return out;
}

}  // namespace delaylab

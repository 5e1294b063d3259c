// SPDX-License-Identifier: Apache-2.0
#include "delaylab/noise.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "delaylab/errors.hpp"

namespace delaylab {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

std::uint64_t splitmix64(std::uint64_t x) {
  x += kGolden;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Uniform in (0, 1].
double to_unit_open(std::uint64_t bits) {
  return (static_cast<double>(bits >> 11) + 1.0) * 0x1.0p-53;
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

struct OUCoefficients {
  double decay;
  double spread;
};

OUCoefficients ou_coefficients(double mu, double step) {
  // Variance of the exact transition noise: (1 - e^{-2 mu h}) / (2 mu).
  const double var = (mu > 0.0) ? -std::expm1(-2.0 * mu * step) / (2.0 * mu) : step;
  return {std::exp(-mu * step), std::sqrt(var)};
}

// One exact OU transition over cell n, in place.
void ou_advance(std::span<double> z, const NoisePath& path, std::int64_t n, const OUCoefficients& c) {
  for (std::size_t j = 0; j < z.size(); ++j) {
    z[j] = c.decay * z[j] + c.spread * path.standard_increment(j, n);
  }
}

// Integrates from zero at cell n - cells up to cell n.
void ou_burn(std::span<double> z, const NoisePath& path, std::int64_t n, std::int64_t cells,
             const OUCoefficients& c) {
  std::ranges::fill(z, 0.0);
  for (std::int64_t i = n - cells; i < n; ++i) ou_advance(z, path, i, c);
}

}  // namespace

double keyed_normal(std::uint64_t seed, std::uint64_t a, std::int64_t b) {
  std::uint64_t key = splitmix64(seed ^ splitmix64(a * kGolden + 0x632BE59BD9B4E019ULL));
  key = splitmix64(key ^ static_cast<std::uint64_t>(b));
  const double u1 = to_unit_open(splitmix64(key));
  const double u2 = to_unit_open(splitmix64(key ^ 0xD1B54A32D192ED03ULL));
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

double keyed_uniform(std::uint64_t seed, std::uint64_t a, std::int64_t b) {
  std::uint64_t key = splitmix64(seed ^ splitmix64(a * kGolden + 0x1B873593ULL));
  key = splitmix64(key ^ static_cast<std::uint64_t>(b));
  return to_unit_open(splitmix64(key));
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  return splitmix64(splitmix64(seed) ^ (stream * 0xA24BAED4963EE407ULL));
}

NoisePath::NoisePath(std::uint64_t seed, double step, std::size_t components, std::int64_t origin)
    : seed_(seed), step_(step), components_(components), origin_(origin) {
  if (!(step > 0.0)) throw ConfigError("noise step must be positive");
}

NoisePath NoisePath::silent(double step, std::size_t components) {
  NoisePath p(0, step, components);
  p.silent_ = true;
  return p;
}

double NoisePath::standard_increment(std::size_t j, std::int64_t n) const {
  if (j >= components_) {
    throw IndexError("noise component " + std::to_string(j) + " out of range (m = " +
                     std::to_string(components_) + ")");
  }
  if (silent_) return 0.0;
  return keyed_normal(seed_, j, n + origin_);
}

double NoisePath::wiener_increment(std::size_t j, std::int64_t n) const {
  return std::sqrt(step_) * standard_increment(j, n);
}

std::int64_t NoisePath::grid_index(double t) const {
  const double ratio = t / step_;
  const double rounded = std::round(ratio);
  if (std::abs(ratio - rounded) > 1e-9 * std::max(1.0, std::abs(rounded))) {
    throw AlignmentError("time " + std::to_string(t) + " is not on the noise grid (step " +
                         std::to_string(step_) + ")");
  }
  return static_cast<std::int64_t>(rounded);
}

NoisePath NoisePath::shifted_cells(std::int64_t cells) const {
  NoisePath p = *this;
  p.origin_ += cells;
  return p;
}

NoisePath shift(const NoisePath& path, double s) { return path.shifted_cells(path.grid_index(s)); }

OUState ou_step(const OUState& z, const NoisePath& path) {
  if (z.values.size() != path.components()) {
    throw DimensionError("OU state has " + std::to_string(z.values.size()) +
                         " components, path has " + std::to_string(path.components()));
  }
  const std::int64_t n = path.grid_index(z.time);
  OUState out = z;
  ou_advance(out.values, path, n, ou_coefficients(z.mu, path.step()));
  out.time = static_cast<double>(n + 1) * path.step();
  return out;
}

std::int64_t burn_cells(double burn, double step) {
  if (burn < 0.0) throw DomainError("burn-in must be nonnegative");
  return static_cast<std::int64_t>(std::ceil(burn / step - 1e-9));
}

OUState ou_pullback_init(const NoisePath& path, double t0, double burn, double mu) {
  const std::int64_t n = path.grid_index(t0);
  OUState z{std::vector<double>(path.components(), 0.0), mu, static_cast<double>(n) * path.step()};
  ou_burn(z.values, path, n, burn_cells(burn, path.step()), ou_coefficients(mu, path.step()));
  return z;
}

OUTrace::OUTrace(const NoisePath& path, double mu, double burn, std::int64_t first, std::int64_t last)
    : first_(first), last_(last), m_(path.components()), mu_(mu) {
  if (last < first) throw DomainError("empty OU trace window");
  const std::int64_t cells = burn_cells(burn, path.step());
  const OUCoefficients c = ou_coefficients(mu, path.step());
  values_.assign(static_cast<std::size_t>(last - first + 1) * m_, 0.0);
  std::vector<double> z(m_, 0.0);

  const std::int64_t absolute_first = path.origin() + first;
  const std::int64_t anchor = floor_div(absolute_first, kAnchorPeriod) * kAnchorPeriod - path.origin();
  ou_burn(z, path, anchor, cells, c);
  for (std::int64_t n = anchor; n < first; ++n) ou_advance(z, path, n, c);

  for (std::int64_t n = first; n <= last; ++n) {
    if (n > first) {
      if ((path.origin() + n) % kAnchorPeriod == 0) {
        ou_burn(z, path, n, cells, c);
      } else {
        ou_advance(z, path, n - 1, c);
      }
    }
    std::ranges::copy(z, values_.begin() + static_cast<std::ptrdiff_t>((n - first) * static_cast<std::int64_t>(m_)));
  }
}

std::span<const double> OUTrace::at(std::int64_t n) const {
  if (n < first_ || n > last_) {
    throw IndexError("OU trace index " + std::to_string(n) + " outside [" + std::to_string(first_) +
                     ", " + std::to_string(last_) + "]");
  }
  return {values_.data() + static_cast<std::size_t>(n - first_) * m_, m_};
}

double OUTrace::value(std::size_t j, std::int64_t n) const {
  if (j >= m_) throw IndexError("noise component out of range");
  return at(n)[j];
}

OUState OUTrace::state(std::int64_t n, double step) const {
  auto v = at(n);
  return OUState{std::vector<double>(v.begin(), v.end()), mu_, static_cast<double>(n) * step};
}

NoiseShape NoiseShape::from_modes(
    const SpectralDomain& dom, const std::vector<std::vector<std::pair<std::size_t, double>>>& modes) {
  NoiseShape shapes;
  for (const auto& entry : modes) {
    ModalVector g(dom.n_modes());
    for (const auto& [mode, amplitude] : entry) {
      if (mode == 0 || mode > dom.n_modes()) {
        throw ConfigError("noise shape mode " + std::to_string(mode) + " outside 1.." +
                          std::to_string(dom.n_modes()));
      }
      g[mode - 1] += amplitude;
    }
    shapes.Ag.push_back(dom.apply_A(g));
    shapes.g.push_back(std::move(g));
  }
  return shapes;
}

std::pair<ModalVector, ModalVector> z_field(std::span<const double> z, const NoiseShape& shapes) {
  if (z.size() != shapes.components()) {
    throw DimensionError("OU state has " + std::to_string(z.size()) + " components, " +
                         std::to_string(shapes.components()) + " noise shapes given");
  }
  if (shapes.g.empty()) return {};
  const std::size_t n = shapes.g.front().size();
  ModalVector zf(n);
  ModalVector azf(n);
  for (std::size_t j = 0; j < z.size(); ++j) {
    if (shapes.g[j].size() != n || shapes.Ag[j].size() != n) {
      throw DimensionError("noise shapes have inconsistent mode counts");
    }
    for (std::size_t k = 0; k < n; ++k) {
      zf[k] += z[j] * shapes.g[j][k];
      azf[k] += z[j] * shapes.Ag[j][k];
    }
  }
  return {std::move(zf), std::move(azf)};
}

TemperedRadiusReport tempered_radius(const NoisePath& path, double mu, double tau, double horizon,
                                     double burn) {
  if (!(horizon > 0.0)) throw DomainError("horizon must be positive");
  if (horizon < 2.0 * tau) {
    throw InsufficientWindowError("tempered_radius: horizon " + std::to_string(horizon) +
                                  " is shorter than 2 tau = " + std::to_string(2.0 * tau));
  }
  const double h = path.step();
  const auto half = static_cast<std::int64_t>(std::floor(horizon / h + 1e-9));
  const auto delay = static_cast<std::int64_t>(std::floor(tau / h + 1e-9));
  OUTrace trace(path, mu, burn, -half, half);

  TemperedRadiusReport rep;
  for (std::int64_t n = -half; n <= half; ++n) {
    double s = 0.0;
    for (double zj : trace.at(n)) s += zj * zj;
    rep.times.push_back(static_cast<double>(n) * h);
    rep.sums.push_back(s);
    rep.r_hat = std::max(rep.r_hat, s);
    if (n == 0) rep.at_origin = s;
  }
  double kappa = 0.0;
  for (std::size_t i = 0; i < rep.times.size(); ++i) {
    const double t = rep.times[i];
    const double s = rep.sums[i];
    if (s > std::exp(0.5 * mu * std::abs(t)) * rep.r_hat) ++rep.window_violations;
    const auto n = static_cast<std::int64_t>(i) - half;
    if (n >= -delay && n <= 0 && s > std::exp(0.5 * mu * tau) * rep.r_hat) ++rep.delay_violations;
    if (n != 0 && s > rep.at_origin) {
      kappa = (rep.at_origin > 0.0) ? std::max(kappa, std::log(s / rep.at_origin) / std::abs(t))
                                    : std::numeric_limits<double>::infinity();
    }
  }
  rep.min_exponent = kappa;
  return rep;
}

std::vector<double> tempering_scan(const NoisePath& path, double mu, double tau, double horizon,
                                   double burn, double beta, std::span<const double> times) {
  std::vector<double> out;
  out.reserve(times.size());
  for (double t : times) {
    const double r = tempered_radius(shift(path, -t), mu, tau, horizon, burn).r_hat;
    out.push_back(std::exp(-beta * t) * r);
  }
  return out;
}

}  // namespace delaylab

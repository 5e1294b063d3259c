// SPDX-License-Identifier: Apache-2.0
#include "delaylab/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "delaylab/errors.hpp"

namespace delaylab {

double ModelParams::lipschitz_f() const { return std::abs(b) / std::sqrt(tau); }

Model::Model(ModelParams params, SpectralDomain domain, NoiseShape shapes, std::size_t intervals,
             double burn)
    : params_(params),
      domain_(std::move(domain)),
      shapes_(std::move(shapes)),
      intervals_(intervals),
      burn_(burn) {
  if (!(params_.tau > 0.0)) throw ConfigError("tau must be positive");
  if (!(params_.mu > 0.0)) throw ConfigError("Hypothesis A1: mu must be positive");
  if (intervals_ < 2) throw ConfigError("history_nodes must be at least 2");
  if (burn_ < 0.0) throw ConfigError("burn_in must be nonnegative");
  for (const auto& g : shapes_.g) {
    if (g.size() != domain_.n_modes()) throw DimensionError("noise shape has wrong mode count");
  }
  const double h = step();
  for (double lambda : domain_.eigenvalues()) {
    const double rate = lambda - params_.mu;
    decay_.push_back(std::exp(rate * h));
    phi1_.push_back(rate == 0.0 ? h : std::expm1(rate * h) / rate);
  }
}

double Model::rho_op() const {
  return std::max(0.0, 0.5 + domain_.spectral_bound()) - params_.mu;
}

void Model::validate_hypotheses() const {
  std::ostringstream msg;
  if (!(params_.mu > 0.0)) {
    msg << "Hypothesis A1 violated: mu = " << params_.mu << " must be positive";
    throw ConfigError(msg.str());
  }
  if (std::abs(params_.a) > params_.mu) {
    msg << "Hypothesis A1 violated: ||L|| <= mu fails, |a| = " << std::abs(params_.a)
        << " > mu = " << params_.mu;
    throw ConfigError(msg.str());
  }
  if (!std::isfinite(params_.b)) {
    msg << "Hypothesis A2 violated: f must be Lipschitz, b = " << params_.b;
    throw ConfigError(msg.str());
  }
}

void Model::validate_attractor_preconditions() const {
  validate_hypotheses();
  const double rho = rho_op();
  const double lf = lipschitz_f();
  std::ostringstream msg;
  if (!(rho < -0.5 * params_.mu)) {
    msg << "Absorbing-set precondition violated: rho < -mu/2 fails, rho = " << rho
        << ", -mu/2 = " << -0.5 * params_.mu;
    throw ConfigError(msg.str());
  }
  if (!(rho + lf < 0.0)) {
    msg << "Absorbing-set precondition violated: rho + L_f < 0 fails, rho + L_f = " << rho + lf;
    throw ConfigError(msg.str());
  }
}

NoisePath Model::make_path(std::uint64_t seed) const {
  return NoisePath(seed, step(), noise_components());
}

ProductState Model::zero_state() const {
  return ProductState::zero(params_.tau, intervals_, n_modes());
}

std::size_t Model::steps_per_unit() const { return aligned_steps(1.0, step()); }

NoiseLift::NoiseLift(const Model& model, const NoisePath& path, std::int64_t first,
                     std::int64_t last)
    : trace_(path, model.params().mu, model.burn(), first, last),
      n_modes_(model.n_modes()),
      intervals_(model.intervals()),
      tau_(model.params().tau) {
  if (path.components() != model.noise_components()) {
    throw DimensionError("path has " + std::to_string(path.components()) +
                         " components, model has " + std::to_string(model.noise_components()) +
                         " noise shapes");
  }
  const auto count = static_cast<std::size_t>(last - first + 1);
  z_.assign(count * n_modes_, 0.0);
  az_.assign(count * n_modes_, 0.0);
  const auto& shapes = model.shapes();
  for (std::size_t i = 0; i < count; ++i) {
    auto zj = trace_.at(first + static_cast<std::int64_t>(i));
    double* zrow = &z_[i * n_modes_];
    double* arow = &az_[i * n_modes_];
    for (std::size_t j = 0; j < zj.size(); ++j) {
      for (std::size_t k = 0; k < n_modes_; ++k) {
        zrow[k] += zj[j] * shapes.g[j][k];
        arow[k] += zj[j] * shapes.Ag[j][k];
      }
    }
  }
}

std::span<const double> NoiseLift::z(std::int64_t n) const {
  if (n < first() || n > last()) throw IndexError("noise lift index " + std::to_string(n) + " out of window");
  return {z_.data() + static_cast<std::size_t>(n - first()) * n_modes_, n_modes_};
}

std::span<const double> NoiseLift::Az(std::int64_t n) const {
  if (n < first() || n > last()) throw IndexError("noise lift index " + std::to_string(n) + " out of window");
  return {az_.data() + static_cast<std::size_t>(n - first()) * n_modes_, n_modes_};
}

ProductState NoiseLift::lift(std::int64_t n) const {
  ProductState out = ProductState::zero(tau_, intervals_, n_modes_);
  add_lift(out, n, 1.0);
  return out;
}

void NoiseLift::add_lift(ProductState& x, std::int64_t n, double s) const {
  const auto m = static_cast<std::int64_t>(intervals_);
  auto& seg = x.segment();
  for (std::int64_t i = 0; i <= m; ++i) {
    auto zi = z(n - m + i);
    auto node = seg.node(static_cast<std::size_t>(i));
    for (std::size_t k = 0; k < n_modes_; ++k) node[k] += s * zi[k];
  }
}

NoiseLift make_lift(const Model& model, const NoisePath& path, std::size_t steps) {
  return NoiseLift(model, path, -static_cast<std::int64_t>(model.intervals()),
                   static_cast<std::int64_t>(steps));
}

Stepper::Stepper(const Model& model)
    : model_(&model),
      mean_(model.n_modes()),
      mean2_(model.n_modes()),
      colloc_(model.n_modes()),
      colloc2_(model.n_modes()),
      fval_(model.n_modes()),
      head_(model.n_modes()) {}

void Stepper::segment_mean(const ProductState& x, std::span<double> out) const {
  const auto& seg = x.segment();
  const std::size_t n = seg.n_modes();
  const std::size_t m = seg.intervals();
  auto d = x.data();
  std::ranges::fill(out, 0.0);
  // Interior nodes carry weight h, the two ends h/2; the 1/tau factor
  // turns h into 1/M.
  for (std::size_t i = 1; i < m; ++i) {
    for (std::size_t k = 0; k < n; ++k) out[k] += d[i * n + k];
  }
  const double inv_m = 1.0 / static_cast<double>(m);
  for (std::size_t k = 0; k < n; ++k) {
    out[k] = (out[k] + 0.5 * (d[k] + d[m * n + k])) * inv_m;
  }
}

void Stepper::f_of_mean(std::span<const double> mean, std::span<double> out) {
  const auto& dom = model_->domain();
  const double b = model_->params().b;
  dom.to_collocation(mean, colloc_);
  for (double& c : colloc_) c = b * std::tanh(c);
  dom.to_modal(colloc_, out);
}

void Stepper::df_of_mean(std::span<const double> base_mean, std::span<const double> mean,
                         std::span<double> out) {
  const auto& dom = model_->domain();
  const double b = model_->params().b;
  dom.to_collocation(base_mean, colloc_);
  dom.to_collocation(mean, colloc2_);
  for (std::size_t i = 0; i < colloc_.size(); ++i) {
    const double sech = 1.0 / std::cosh(colloc_[i]);
    colloc2_[i] *= b * sech * sech;
  }
  dom.to_modal(colloc2_, out);
}

void Stepper::phi_step(ProductState& v, const NoiseLift& lift, std::int64_t n) {
  const std::size_t nm = model_->n_modes();
  const auto m = static_cast<std::int64_t>(model_->intervals());
  const double a = model_->params().a;
  // mean of v_t + z(theta_{t+.} omega), by linearity of the mean
  segment_mean(v, mean_);
  const double inv_m = 1.0 / static_cast<double>(m);
  for (std::int64_t i = 0; i <= m; ++i) {
    const double w = (i == 0 || i == m) ? 0.5 * inv_m : inv_m;
    auto zi = lift.z(n - m + i);
    for (std::size_t k = 0; k < nm; ++k) mean_[k] += w * zi[k];
  }
  f_of_mean(mean_, fval_);
  auto oldest = v.segment().node(0);
  auto z_old = lift.z(n - m);
  auto az = lift.Az(n);
  auto decay = model_->decay();
  auto phi1 = model_->phi1();
  auto head = v.head();
  for (std::size_t k = 0; k < nm; ++k) {
    const double drift = -a * (oldest[k] + z_old[k]) + az[k] + fval_[k];
    head_[k] = decay[k] * head[k] + phi1[k] * drift;
  }
  v.segment().shift_append(head_);
}

void Stepper::psi_step(ProductState& u, const NoiseLift& lift, std::int64_t n) {
  const std::size_t nm = model_->n_modes();
  const double a = model_->params().a;
  segment_mean(u, mean_);
  f_of_mean(mean_, fval_);
  auto oldest = u.segment().node(0);
  auto head = u.head();
  auto z_now = lift.z(n);
  auto z_next = lift.z(n + 1);
  auto az = lift.Az(n);
  auto decay = model_->decay();
  auto phi1 = model_->phi1();
  for (std::size_t k = 0; k < nm; ++k) {
    const double drift = -a * oldest[k] + az[k] + fval_[k];
    head_[k] = decay[k] * (head[k] - z_now[k]) + phi1[k] * drift + z_next[k];
  }
  u.segment().shift_append(head_);
}

void Stepper::tangent_step(ProductState& w, const ProductState& base) {
  const std::size_t nm = model_->n_modes();
  const double a = model_->params().a;
  segment_mean(base, mean_);
  segment_mean(w, mean2_);
  df_of_mean(mean_, mean2_, fval_);
  auto oldest = w.segment().node(0);
  auto head = w.head();
  auto decay = model_->decay();
  auto phi1 = model_->phi1();
  for (std::size_t k = 0; k < nm; ++k) {
    head_[k] = decay[k] * head[k] + phi1[k] * (-a * oldest[k] + fval_[k]);
  }
  w.segment().shift_append(head_);
}

ModalVector nonlinearity_f(const Model& model, const HistorySegment& seg) {
  if (seg.n_modes() != model.n_modes()) throw DimensionError("segment mode count mismatch");
  Stepper stepper(model);
  ProductState x(seg);
  ModalVector mean(model.n_modes());
  stepper.segment_mean(x, mean.coeffs());
  ModalVector out(model.n_modes());
  stepper.f_of_mean(mean.coeffs(), out.coeffs());
  return out;
}

ModalVector delay_operator_L(const ModelParams& params, const HistorySegment& seg) {
  ModalVector out = seg.node_vector(0);
  out *= params.a;
  return out;
}

ModalVector conjugated_drift(const Model& model, const std::pair<ModalVector, ModalVector>& z_now,
                             const HistorySegment& z_seg, const HistorySegment& v_seg) {
  if (!z_seg.same_grid(v_seg) || v_seg.n_modes() != model.n_modes()) {
    throw DimensionError("conjugated_drift: noise and state segments are on different grids");
  }
  if (z_now.first.size() != model.n_modes() || z_now.second.size() != model.n_modes()) {
    throw DimensionError("conjugated_drift: noise field has wrong mode count");
  }
  ProductState sum(v_seg);
  sum += ProductState(z_seg);
  ModalVector out = z_now.second;
  out -= delay_operator_L(model.params(), z_seg);
  out += nonlinearity_f(model, sum.segment());
  return out;
}

ProductState mild_step(const Model& model, const ProductState& state, const NoiseLift& lift,
                       std::int64_t n, double h) {
  if (std::abs(h - model.step()) > 1e-12 * model.step()) {
    throw AlignmentError("mild_step: step " + std::to_string(h) + " differs from grid step " +
                         std::to_string(model.step()));
  }
  if (!state.segment().same_grid(model.zero_state().segment())) {
    throw DimensionError("mild_step: state grid does not match the model");
  }
  ProductState out = state;
  Stepper stepper(model);
  stepper.phi_step(out, lift, n);
  return out;
}

namespace {

void check_init(const Model& model, const ProductState& init) {
  model.validate_hypotheses();
  if (!init.segment().same_grid(model.zero_state().segment())) {
    throw DimensionError("initial state grid does not match the model");
  }
}

}  // namespace

ProductState cocycle_phi(const Model& model, const NoisePath& path, double t,
                         const ProductState& init) {
  check_init(model, init);
  const std::size_t steps = aligned_steps(t, model.step());
  ProductState v = init;
  if (steps == 0) return v;
  NoiseLift lift = make_lift(model, path, steps);
  Stepper stepper(model);
  for (std::size_t n = 0; n < steps; ++n) stepper.phi_step(v, lift, static_cast<std::int64_t>(n));
  return v;
}

ProductState cocycle_psi(const Model& model, const NoisePath& path, double t,
                         const ProductState& init) {
  check_init(model, init);
  const std::size_t steps = aligned_steps(t, model.step());
  ProductState u = init;
  if (steps == 0) return u;
  NoiseLift lift = make_lift(model, path, steps);
  Stepper stepper(model);
  for (std::size_t n = 0; n < steps; ++n) stepper.psi_step(u, lift, static_cast<std::int64_t>(n));
  return u;
}

ProductState noise_lift_state(const Model& model, const NoisePath& path, double t) {
  const std::size_t steps = aligned_steps(t, model.step());
  NoiseLift lift = make_lift(model, path, steps);
  return lift.lift(static_cast<std::int64_t>(steps));
}

Trajectory integrate_psi(const Model& model, const NoisePath& path, double t,
                         const ProductState& init) {
  check_init(model, init);
  const std::size_t steps = aligned_steps(t, model.step());
  NoiseLift lift = make_lift(model, path, steps);
  Stepper stepper(model);
  Trajectory traj;
  traj.t0 = 0.0;
  traj.t1 = static_cast<double>(steps) * model.step();
  traj.states.reserve(steps + 1);
  traj.ou_trace.reserve(steps + 1);
  ProductState u = init;
  traj.states.push_back(u);
  traj.ou_trace.push_back(lift.trace().state(0, model.step()));
  for (std::size_t n = 0; n < steps; ++n) {
    stepper.psi_step(u, lift, static_cast<std::int64_t>(n));
    traj.states.push_back(u);
    traj.ou_trace.push_back(lift.trace().state(static_cast<std::int64_t>(n + 1), model.step()));
  }
  return traj;
}

}  // namespace delaylab

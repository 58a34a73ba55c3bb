#include "tqd/qsl.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "tqd/errors.hpp"
#include "tqd/simd/kernels.hpp"

namespace tqd {

QslSpeed QslSpeed::finite(double v) {
  if (!std::isfinite(v) || v < 0.0) {
    throw DomainError("QslSpeed::finite: speed must be finite and >= 0");
  }
  return QslSpeed(v, false);
}

double QslSpeed::value() const {
  if (unbounded_) throw DomainError("QslSpeed::value: speed is unbounded");
  return value_;
}

double QslSpeed::as_double() const noexcept {
  return unbounded_ ? std::numeric_limits<double>::infinity() : value_;
}

double Protocol::energy_norm(double t) const {
  const double e = level_energy(t);
  const double c = cost_rate(t);
  return std::sqrt(e * e + c * c);
}

namespace {

double half_sin_double_angle(double angle) {
  // cos L · sin L; exact zeros at the endpoints
  if (angle == 0.0 || angle == std::numbers::pi / 2) return 0.0;
  return std::cos(angle) * std::sin(angle);
}

void check_angle(double angle) {
  if (!(angle >= 0.0 && angle <= std::numbers::pi / 2)) {
    std::ostringstream msg;
    msg << "qsl_speed: angle " << angle << " outside [0, pi/2]";
    throw DomainError(msg.str());
  }
}

QslSpeed speed_from_double(double v) {
  return std::isinf(v) ? QslSpeed::unbounded() : QslSpeed::finite(v);
}

}  // namespace

QslSpeed qsl_speed(double epsilon, double angle) {
  check_angle(angle);
  if (!(epsilon >= 0.0)) throw DomainError("qsl_speed: epsilon must be >= 0");
  const double denom = half_sin_double_angle(angle);
  if (denom == 0.0) return epsilon > 0.0 ? QslSpeed::unbounded() : QslSpeed::finite(0.0);
  return QslSpeed::finite(epsilon / denom);
}

QslSpeed tqd_speed(double level_energy, double cost_rate, double angle) {
  return qsl_speed(std::sqrt(level_energy * level_energy + cost_rate * cost_rate), angle);
}

double total_cost(const Protocol& p, const QuadratureOptions& opts) {
  return adaptive_simpson([&p](double t) { return p.cost_rate(t); }, 0.0, p.duration(), opts)
      .value;
}

double time_averaged_energy(const Protocol& p, const QuadratureOptions& opts) {
  const double tau = p.duration();
  return adaptive_simpson([&p](double t) { return p.energy_norm(t); }, 0.0, tau, opts).value /
         tau;
}

double qsl_time(const Protocol& p, const QuadratureOptions& opts) {
  const double tau = p.duration();
  const double final_angle = p.angle(tau);
  if (final_angle == 0.0) return 0.0;
  const double integral =
      adaptive_simpson([&p](double t) { return p.energy_norm(t); }, 0.0, tau, opts).value;
  const double s = std::sin(final_angle);
  return tau * s * s / (2.0 * integral);
}

std::vector<SpeedSample> sample_protocol(const Protocol& p, std::size_t grid_points) {
  if (grid_points < 3) throw ValidationError("grid_points: must be >= 3");
  const double tau = p.duration();
  const double last = static_cast<double>(grid_points - 1);
  std::vector<SpeedSample> samples(grid_points);
  std::vector<double> energy(grid_points), rate(grid_points), denom(grid_points),
      speed(grid_points);
  for (std::size_t k = 0; k < grid_points; ++k) {
    const double t = tau * (static_cast<double>(k) / last);
    SpeedSample& s = samples[k];
    s.t = t;
    s.control = p.control(t);
    energy[k] = p.level_energy(t);
    rate[k] = p.cost_rate(t);
    s.cost_rate = rate[k];
    s.angle = p.angle(t);
    check_angle(s.angle);
    denom[k] = half_sin_double_angle(s.angle);
  }
  simd::tqd_speed(energy, rate, denom, speed);
  for (std::size_t k = 0; k < grid_points; ++k) {
    samples[k].epsilon = std::sqrt(energy[k] * energy[k] + rate[k] * rate[k]);
    samples[k].speed = speed_from_double(speed[k]);
  }
  return samples;
}

ProtocolReport build_report(const Protocol& p, std::size_t grid_points,
                            const QuadratureOptions& opts) {
  ProtocolReport r;
  r.samples = sample_protocol(p, grid_points);
  r.tau = p.duration();
  r.total_cost = total_cost(p, opts);
  r.E_tau = time_averaged_energy(p, opts);
  r.tau_qsl = qsl_time(p, opts);
  return r;
}

namespace {

template <class Better>
std::size_t arg_best_speed(const std::vector<SpeedSample>& samples, std::size_t first,
                           std::size_t last, Better better) {
  last = std::min(last, samples.size());
  std::size_t best = last;
  for (std::size_t k = first; k < last; ++k) {
    if (samples[k].speed.is_unbounded()) continue;
    if (best == last || better(samples[k].speed.value(), samples[best].speed.value())) best = k;
  }
  if (best == last) throw DomainError("no finite speed in the requested sample range");
  return best;
}

}  // namespace

std::size_t argmin_speed(const std::vector<SpeedSample>& samples, std::size_t first,
                         std::size_t last) {
  return arg_best_speed(samples, first, last, std::less<>{});
}

std::size_t argmax_speed(const std::vector<SpeedSample>& samples, std::size_t first,
                         std::size_t last) {
  return arg_best_speed(samples, first, last, std::greater<>{});
}

}  // namespace tqd

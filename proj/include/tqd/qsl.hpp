#pragma once

// Quantum-speed-limit quantities for transitionless driving of a tracked level.
// Units: ħ = 1.

#include <cstddef>
#include <vector>

#include "tqd/quadrature.hpp"

namespace tqd {

/// v_QSL, which is unbounded when the Bures angle sits at 0 or π/2 while the
/// generator is non-zero. The unbounded case is a marker, never a float overflow.
class QslSpeed {
 public:
  static QslSpeed finite(double v);
  static QslSpeed unbounded() { return QslSpeed(0.0, true); }

  bool is_unbounded() const noexcept { return unbounded_; }
  bool is_finite() const noexcept { return !unbounded_; }
  // Throws DomainError on the unbounded marker.
  double value() const;
  // +inf for the unbounded marker; for plotting and comparisons only.
  double as_double() const noexcept;

  friend bool operator==(const QslSpeed&, const QslSpeed&) = default;

 private:
  QslSpeed(double v, bool unbounded) : value_(v), unbounded_(unbounded) {}
  double value_;
  bool unbounded_;
};

/// A driven protocol seen from its tracked eigenstate |n_t⟩ on t ∈ [0, τ].
/// Implementations are read-only and safe to share across threads.
class Protocol {
 public:
  virtual ~Protocol() = default;

  virtual double duration() const = 0;
  // The physical control value (ω_t, g(t), ...) for report output.
  virtual double control(double t) const = 0;
  // ε_n(t), eigenvalue of the tracked level.
  virtual double level_energy(double t) const = 0;
  // ∂ₜC = ‖H₁(t)‖ = √⟨∂ₜn|∂ₜn⟩.
  virtual double cost_rate(double t) const = 0;
  // L_t = arccos|⟨n_0|n_t⟩|.
  virtual double angle(double t) const = 0;

  // ε_t = √(ε_n² + (∂ₜC)²)
  double energy_norm(double t) const;
};

// |ε|/(cos L sin L). Throws DomainError for angle ∉ [0, π/2] or ε < 0.
QslSpeed qsl_speed(double epsilon, double angle);

// qsl_speed(√(ε_n² + (∂ₜC)²), angle).
QslSpeed tqd_speed(double level_energy, double cost_rate, double angle);

struct SpeedSample {
  double t = 0.0;
  double control = 0.0;
  double epsilon = 0.0;    // ε_t
  double cost_rate = 0.0;  // ∂ₜC
  double angle = 0.0;      // L_t
  QslSpeed speed = QslSpeed::unbounded();
};

struct ProtocolReport {
  std::vector<SpeedSample> samples;  // uniform grid over [0, τ], endpoints included
  double total_cost = 0.0;
  double E_tau = 0.0;
  double tau_qsl = 0.0;
  double tau = 0.0;
};

// C = ∫₀^τ ∂ₜC dt
double total_cost(const Protocol& p, const QuadratureOptions& opts = {});

// E_τ = (1/τ) ∫₀^τ ε_t dt
double time_averaged_energy(const Protocol& p, const QuadratureOptions& opts = {});

// τ·sin²(L_τ) / (2∫₀^τ ε_t dt); exactly 0 when L_τ = 0.
double qsl_time(const Protocol& p, const QuadratureOptions& opts = {});

// Grid t_k = τ·k/(n−1), k = 0..n−1 (n ≥ 3). Speeds go through the SIMD batch kernel.
std::vector<SpeedSample> sample_protocol(const Protocol& p, std::size_t grid_points);

ProtocolReport build_report(const Protocol& p, std::size_t grid_points,
                            const QuadratureOptions& opts = {});

// Index of the smallest / largest finite speed among samples[first, last).
// Unbounded samples are skipped; throws DomainError if none is finite.
std::size_t argmin_speed(const std::vector<SpeedSample>& samples, std::size_t first = 0,
                         std::size_t last = static_cast<std::size_t>(-1));
std::size_t argmax_speed(const std::vector<SpeedSample>& samples, std::size_t first = 0,
                         std::size_t last = static_cast<std::size_t>(-1));

}  // namespace tqd

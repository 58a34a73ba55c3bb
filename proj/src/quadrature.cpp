#include "tqd/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include "tqd/errors.hpp"

namespace tqd {
namespace {

struct Panel {
  double a, m, b;
  double fa, fm, fb;
  double whole;  // Simpson estimate over [a, b]
};

class Simpson {
 public:
  Simpson(const std::function<double(double)>& f, int max_depth)
      : f_(f), max_depth_(max_depth) {}

  double eval(double x) {
    const double y = f_(x);
    ++evaluations_;
    if (!std::isfinite(y)) {
      std::ostringstream msg;
      msg << "adaptive_quadrature: integrand not finite at x = " << x;
      throw NumericError(msg.str(), value_, error_);
    }
    return y;
  }

  Panel make_panel(double a, double b, double fa, double fb) {
    const double m = 0.5 * (a + b);
    const double fm = eval(m);
    return {a, m, b, fa, fm, fb, (b - a) / 6.0 * (fa + 4.0 * fm + fb)};
  }

  void refine(const Panel& p, double tol, int depth) {
    const double flm = eval(0.5 * (p.a + p.m));
    const double frm = eval(0.5 * (p.m + p.b));
    const Panel left{p.a, 0.5 * (p.a + p.m), p.m, p.fa, flm, p.fm,
                     (p.m - p.a) / 6.0 * (p.fa + 4.0 * flm + p.fm)};
    const Panel right{p.m, 0.5 * (p.m + p.b), p.b, p.fm, frm, p.fb,
                      (p.b - p.m) / 6.0 * (p.fm + 4.0 * frm + p.fb)};
    const double diff = left.whole + right.whole - p.whole;
    if (std::abs(diff) <= 15.0 * tol) {
      value_ += left.whole + right.whole + diff / 15.0;
      error_ += std::abs(diff) / 15.0;
      return;
    }
    if (depth >= max_depth_) {
      value_ += left.whole + right.whole + diff / 15.0;
      error_ += std::abs(diff) / 15.0;
      exhausted_ = true;
      return;
    }
    refine(left, 0.5 * tol, depth + 1);
    refine(right, 0.5 * tol, depth + 1);
  }

  double value() const { return value_; }
  double error() const { return error_; }
  bool exhausted() const { return exhausted_; }
  std::size_t evaluations() const { return evaluations_; }

 private:
  const std::function<double(double)>& f_;
  int max_depth_;
  double value_ = 0.0;
  double error_ = 0.0;
  bool exhausted_ = false;
  std::size_t evaluations_ = 0;
};

}  // namespace

QuadratureResult adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                                  const QuadratureOptions& opts) {
  if (!(a < b)) throw ValidationError("adaptive_quadrature: requires a < b");
  if (!(opts.abs_tol > 0.0) || !(opts.rel_tol > 0.0)) {
    throw ValidationError("adaptive_quadrature: tolerances must be > 0");
  }
  if (opts.initial_panels == 0 || opts.max_depth < 1) {
    throw ValidationError("adaptive_quadrature: need at least one panel and depth >= 1");
  }
  Simpson s(f, opts.max_depth);
  const std::size_t n = opts.initial_panels;
  std::vector<double> nodes(n + 1);
  std::vector<double> values(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    nodes[k] = k == n ? b : a + (b - a) * (static_cast<double>(k) / static_cast<double>(n));
    values[k] = s.eval(nodes[k]);
  }
  std::vector<Panel> panels;
  panels.reserve(n);
  double coarse = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    panels.push_back(s.make_panel(nodes[k], nodes[k + 1], values[k], values[k + 1]));
    coarse += panels.back().whole;
  }
  const double tol = std::max(opts.abs_tol, opts.rel_tol * std::abs(coarse));
  for (const auto& p : panels) s.refine(p, tol * (p.b - p.a) / (b - a), 1);

  QuadratureResult result{s.value(), s.error(), s.evaluations()};
  if (s.exhausted()) {
    const double target = std::max(opts.abs_tol, opts.rel_tol * std::abs(result.value));
    if (result.error_estimate > target) {
      std::ostringstream msg;
      msg << "adaptive_quadrature: max depth " << opts.max_depth
          << " reached on [" << a << ", " << b << "], estimate " << result.value
          << " +/- " << result.error_estimate;
      throw NumericError(msg.str(), result.value, result.error_estimate);
    }
  }
  return result;
}

}  // namespace tqd

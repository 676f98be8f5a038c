#pragma once

// Moebius-invariant Q_K spaces. For phi_a(z) = (a - z)/(1 - conj(a) z) the
// local quantity
//
//     integral over D of |f'(z)|^2 K(log 1/|phi_a(z)|) dA(z)
//   = integral over D of |f'(phi_a(w))|^2 |phi_a'(w)|^2 K(log 1/|w|) dA(w)
//
// is evaluated in the second (pulled-back) form, so the kernel singularity
// sits at w = 0, which the open radial rules never touch. The integrand only
// sees |phi|, so the unimodular factor lambda is fixed to 1.

#include <cmath>
#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "oscillometer/family.hpp"
#include "oscillometer/funcrep.hpp"
#include "oscillometer/spaces/tag.hpp"

namespace oscillometer {

struct KKernel {
  std::string name;
  std::function<double(double)> eval;

  double operator()(double t) const { return eval(t); }
};

/// K(t) = t^p.
inline KKernel power_kernel(double exponent = 1.0) {
  if (!(exponent > 0.0)) throw ConfigError("power kernel exponent must be positive");
  return {"power", [exponent](double t) { return exponent == 1.0 ? t : std::pow(t, exponent); }};
}

/// K(t) = min(t^p, 1).
inline KKernel truncated_power_kernel(double exponent = 1.0) {
  if (!(exponent > 0.0)) throw ConfigError("kernel exponent must be positive");
  return {"truncated_power", [exponent](double t) { return std::min(std::pow(t, exponent), 1.0); }};
}

/// K = 1 (Dirichlet integral); used in tests.
inline KKernel constant_kernel() {
  return {"constant", [](double) { return 1.0; }};
}

/// Checks by sampling that K is non-negative, non-decreasing, right-continuous
/// and not identically zero, and that K(log 1/|z|) has a finite disc integral.
inline void validate_kernel(const KKernel& k, const QuadratureRule& rule = {}) {
  if (!k.eval) throw ConfigError("kernel evaluator missing");
  double prev = k(0.0);
  bool nonzero = prev != 0.0;
  if (!(prev >= 0.0)) throw ConfigError("kernel must be non-negative");
  for (int i = 1; i <= 4000; ++i) {
    const double t = 0.01 * i;
    const double v = k(t);
    if (!(v >= 0.0) || !std::isfinite(v)) throw ConfigError("kernel must be finite and non-negative");
    if (v < prev - 1e-12 * std::max(1.0, prev)) throw ConfigError("kernel must be non-decreasing");
    const double right = k(t + 1e-10);
    if (std::abs(right - v) > 1e-6 * std::max(1.0, v)) throw ConfigError("kernel must be right-continuous");
    nonzero = nonzero || v != 0.0;
    prev = v;
  }
  if (!nonzero) throw ConfigError("kernel must not vanish identically");
  const double mass = disk_quadrature([&](complex z) { return k(std::log(1.0 / std::abs(z))); }, rule);
  if (!std::isfinite(mass)) throw ConfigError("K(log 1/|z|) is not integrable on the disc");
}

class QK {
 public:
  using function_type = TaylorFunction;
  using param_type = complex;
  static constexpr SpaceTag tag = SpaceTag::qk;

  /// `rule` is used at a = 0. Elsewhere the pulled-back integrand peaks at
  /// the boundary point a/|a| with width 1 - |a|, so a rule graded towards
  /// that point is built per |a| (composite Gauss-Legendre panels of
  /// `panel_order` nodes on dyadic ranges of 1 - |w| and of the angle).
  QK(KKernel kernel, QuadratureRule rule = {}, std::size_t panel_order = 6)
      : kernel_(std::move(kernel)), rule_(rule), panel_order_(panel_order), cache_(std::make_shared<Cache>()) {
    validate_kernel(kernel_, rule_);
    if (panel_order_ == 0) throw ConfigError("qk: panel order must be positive");
    auto centre = std::make_shared<Tables>();
    const DiskQuadrature q(rule_);
    centre->points.assign(q.nodes().begin(), q.nodes().end());
    centre->weights.resize(centre->points.size());
    for (std::size_t i = 0; i < centre->points.size(); ++i)
      centre->weights[i] = q.weights()[i] * kernel_value(centre->points[i]);
    centre_ = std::move(centre);
  }

  const KKernel& kernel() const { return kernel_; }
  const QuadratureRule& rule() const { return rule_; }

  /// The squared local quantity for phi_{a,1}.
  double local(const TaylorFunction& f, complex a) const {
    const double s = std::abs(a);
    if (!(s < 1.0)) throw ConfigError("qk: |a| must be < 1");
    const auto& t = s == 0.0 ? *centre_ : tables(s);
    const complex turn = s == 0.0 ? complex(1.0) : a / s;
    double sum = 0.0;
    for (std::size_t i = 0; i < t.points.size(); ++i) {
      const double v = std::norm(f.derivative(turn * t.points[i])) * t.weights[i];
      if (!std::isfinite(v)) throw NumericalError("singular node");
      sum += v;
    }
    return sum;
  }

  /// Square root of the local quantity, so the seminorm is 1-homogeneous.
  auto bind(const TaylorFunction& f) const {
    return [&f, this](complex a) { return std::sqrt(local(f, a)); };
  }

  /// X_K norm: the local quantity at a = 0.
  double x_norm(const TaylorFunction& f) const { return std::sqrt(local(f, complex{})); }

 private:
  // For a = s > 0: points z_i = phi_s(w_i), weights q_i K(log 1/|w_i|) |phi_s'(w_i)|^2.
  // A general a = s e^{i arg a} rotates the points.
  struct Tables {
    std::vector<complex> points;
    std::vector<double> weights;
  };
  struct Cache {
    std::mutex mutex;
    std::map<double, std::shared_ptr<const Tables>> by_radius;
  };

  double kernel_value(complex w) const {
    const double kv = kernel_(std::log(1.0 / std::abs(w)));
    if (!std::isfinite(kv)) throw NumericalError("singular node");
    return kv;
  }

  /// Composite Gauss-Legendre nodes and weights on [0, hi], split at width * 2^k / 4.
  std::vector<std::pair<double, double>> graded(double hi, double width) const {
    std::vector<double> edges{0.0, 0.25 * width};
    while (2.0 * edges.back() < hi * (1.0 - 1e-6)) edges.push_back(2.0 * edges.back());
    edges.push_back(hi);
    const auto gl = gauss_legendre(panel_order_);
    std::vector<std::pair<double, double>> out;
    for (std::size_t p = 0; p + 1 < edges.size(); ++p) {
      const double mid = 0.5 * (edges[p] + edges[p + 1]), half = 0.5 * (edges[p + 1] - edges[p]);
      for (std::size_t i = 0; i < panel_order_; ++i) out.push_back({mid + half * gl.nodes[i], half * gl.weights[i]});
    }
    return out;
  }

  const Tables& tables(double s) const {
    std::lock_guard lock(cache_->mutex);
    auto& slot = cache_->by_radius[s];
    if (!slot) {
      const double delta = 1.0 - s;
      const auto radial = graded(1.0, delta);  // in u = 1 - |w|
      const auto angular = graded(pi, delta);  // in |theta|
      auto t = std::make_shared<Tables>();
      for (const auto& [u, wu] : radial) {
        const double r = 1.0 - u;
        for (const auto& [th, wt] : angular) {
          for (double sign : {1.0, -1.0}) {
            const complex w = std::polar(r, sign * th);
            const auto m = mobius_apply(s, 1.0, w);
            t->points.push_back(m.value);
            t->weights.push_back(wu * wt * r * kernel_value(w) * std::norm(m.derivative));
          }
        }
      }
      slot = std::move(t);
    }
    return *slot;
  }

  KKernel kernel_;
  QuadratureRule rule_;
  std::size_t panel_order_;
  std::shared_ptr<const Tables> centre_;
  std::shared_ptr<Cache> cache_;
};

/// integral over D of |f'(z)|^2 K(log 1/|phi_a(z)|) dA(z).
inline double qk_local(const TaylorFunction& f, complex a, const KKernel& kernel, const QuadratureRule& rule = {}) {
  return QK(kernel, rule).local(f, a);
}

/// Parameter grid for Q_K: the origin plus shells with 1 - |a| = 2^(-k/subdivisions),
/// k = 1..shells*subdivisions, and uniform angles. With angular_nodes of the
/// quadrature a multiple of `angles`, the grid and the rule share rotations.
struct QkResolution {
  std::size_t shells = 8;
  std::size_t subdivisions = 2;
  std::size_t angles = 32;
  bool include_origin = true;
};

inline OperatorFamilyGrid<QK> build_family(const QK& space, const QkResolution& res) {
  if (res.subdivisions == 0) throw ConfigError("qk: subdivisions must be >= 1");
  std::vector<complex> pts;
  std::vector<double> rho;
  if (res.include_origin) {
    pts.emplace_back(0.0, 0.0);
    rho.push_back(1.0);
  }
  const std::size_t steps = res.shells * res.subdivisions;
  for (std::size_t k = 1; k <= steps; ++k) {
    const double d = std::exp2(-static_cast<double>(k) / static_cast<double>(res.subdivisions));
    for (std::size_t j = 0; j < res.angles; ++j) {
      pts.push_back(std::polar(1.0 - d, two_pi * static_cast<double>(j) / static_cast<double>(res.angles)));
      rho.push_back(d);
    }
  }
  if (pts.empty() || dyadic_levels(rho) < 6) throw ConfigError("resolution too coarse: need >= 6 dyadic levels");
  return {space, std::move(pts), std::move(rho)};
}

}  // namespace oscillometer

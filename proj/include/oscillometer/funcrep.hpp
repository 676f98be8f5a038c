#pragma once

// Function representations shared by all spaces: periodic samples on the
// circle and the torus, truncated Taylor series on the disc, samples on a box
// in R^n; arc averages via prefix sums, Moebius maps and polar quadrature.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <numbers>
#include <optional>
#include <span>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "oscillometer/error.hpp"
#include "oscillometer/fourier.hpp"

namespace oscillometer {

using complex = std::complex<double>;
inline constexpr double pi = std::numbers::pi;
inline constexpr double two_pi = 2.0 * std::numbers::pi;

inline bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

inline void require_grid_size(std::size_t n, const char* what) {
  if (n < 8 || !is_power_of_two(n))
    throw ConfigError(std::string(what) + ": grid size must be a power of two >= 8");
}

// ---------------------------------------------------------------------------
// Circle
// ---------------------------------------------------------------------------

/// Samples f(theta_j), theta_j = 2*pi*j/N, of a function on the circle.
/// Each sample stands for the grid cell [theta_j, theta_j + 2*pi/N).
class PeriodicSamples {
 public:
  explicit PeriodicSamples(std::vector<complex> values) : values_(std::move(values)) {
    require_grid_size(values_.size(), "PeriodicSamples");
  }

  template <class F>
  static PeriodicSamples from_function(std::size_t n, F&& f) {
    require_grid_size(n, "PeriodicSamples");
    std::vector<complex> v(n);
    for (std::size_t j = 0; j < n; ++j) v[j] = complex(f(two_pi * static_cast<double>(j) / n));
    return PeriodicSamples(std::move(v));
  }

  std::size_t size() const { return values_.size(); }
  double step() const { return two_pi / static_cast<double>(values_.size()); }
  double node(std::size_t j) const { return step() * static_cast<double>(j); }
  complex operator[](std::size_t j) const { return values_[j]; }
  std::span<const complex> values() const { return values_; }

 private:
  std::vector<complex> values_;
};

/// An arc of the circle given by its midpoint and length in (0, 2*pi].
struct Arc {
  double midpoint = 0.0;
  double length = two_pi;

  Arc() = default;
  Arc(double mid, double len) : midpoint(std::fmod(mid, two_pi)), length(len) {
    if (!(len > 0.0) || len > two_pi * (1.0 + 1e-12))
      throw ConfigError("arc length must lie in (0, 2*pi]");
    if (midpoint < 0.0) midpoint += two_pi;
    if (length > two_pi) length = two_pi;
  }

  bool full() const { return length >= two_pi * (1.0 - 1e-12); }
};

/// An arc snapped to grid cells: `count` consecutive cells starting at `start`
/// (indices taken modulo the grid size).
struct GridArc {
  std::size_t start = 0;
  std::size_t count = 0;
};

/// Snaps both endpoints of `arc` to the nearest grid nodes of an n-point grid.
/// Arcs covering fewer than two cells are rejected.
inline GridArc snap_arc(const Arc& arc, std::size_t n) {
  const double h = two_pi / static_cast<double>(n);
  if (arc.full()) return {0, n};
  auto count = static_cast<long long>(std::llround(arc.length / h));
  count = std::min<long long>(count, static_cast<long long>(n));
  if (count < 2) throw NumericalError("arc under-resolved");
  const auto first = std::llround((arc.midpoint - 0.5 * arc.length) / h);
  const auto nn = static_cast<long long>(n);
  const auto start = ((first % nn) + nn) % nn;
  return {static_cast<std::size_t>(start), static_cast<std::size_t>(count)};
}

/// Prefix sums of f and |f|^2 over a doubled grid, so the sum over any
/// snapped arc costs O(1). Accumulated in extended precision.
class ArcMoments {
 public:
  using wide = std::complex<long double>;

  explicit ArcMoments(const PeriodicSamples& f) : n_(f.size()), first_(2 * n_ + 1), second_(2 * n_ + 1) {
    for (std::size_t i = 0; i < 2 * n_; ++i) {
      const complex v = f[i % n_];
      first_[i + 1] = first_[i] + wide(v.real(), v.imag());
      second_[i + 1] = second_[i] + static_cast<long double>(std::norm(v));
    }
  }

  std::size_t size() const { return n_; }

  wide sum(const GridArc& a) const { return first_[a.start + a.count] - first_[a.start]; }
  long double sum_squares(const GridArc& a) const { return second_[a.start + a.count] - second_[a.start]; }

  complex average(const GridArc& a) const {
    const wide s = sum(a) / static_cast<long double>(a.count);
    return {static_cast<double>(s.real()), static_cast<double>(s.imag())};
  }

 private:
  std::size_t n_;
  std::vector<wide> first_;
  std::vector<long double> second_;
};

/// (1/|I|) * integral over I of f, with I snapped to the grid of f.
inline complex arc_average(const PeriodicSamples& f, const Arc& arc) {
  return ArcMoments(f).average(snap_arc(arc, f.size()));
}

// ---------------------------------------------------------------------------
// Torus
// ---------------------------------------------------------------------------

/// Samples F(theta_j, psi_k) on an N x N grid of the torus, row-major in j.
class TorusSamples {
 public:
  TorusSamples(std::size_t n, std::vector<complex> values) : n_(n), values_(std::move(values)) {
    require_grid_size(n_, "TorusSamples");
    if (values_.size() != n_ * n_) throw ConfigError("TorusSamples: expected N*N values");
  }

  template <class F>
  static TorusSamples from_function(std::size_t n, F&& f) {
    require_grid_size(n, "TorusSamples");
    std::vector<complex> v(n * n);
    const double h = two_pi / static_cast<double>(n);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) v[j * n + k] = complex(f(h * j, h * k));
    return TorusSamples(n, std::move(v));
  }

  std::size_t size() const { return n_; }
  double step() const { return two_pi / static_cast<double>(n_); }
  complex operator()(std::size_t j, std::size_t k) const { return values_[j * n_ + k]; }
  std::span<const complex> values() const { return values_; }

 private:
  std::size_t n_;
  std::vector<complex> values_;
};

// ---------------------------------------------------------------------------
// Disc
// ---------------------------------------------------------------------------

/// Closed-form evaluators of an analytic function and its derivative.
struct ClosedForm {
  std::function<complex(complex)> value;
  std::function<complex(complex)> derivative;
};

/// Radius up to which a truncated series with last retained coefficients
/// `coeffs` is trusted: the geometric tail bound of the derivative,
/// |a_N| (N+1) r^N / (1-r), stays below `tolerance`.
inline double truncation_radius(std::span<const complex> coeffs, double tolerance = 1e-8) {
  const std::size_t n = coeffs.size();
  if (n == 0) return 1.0;
  double last = 0.0;
  for (std::size_t k = n - std::min<std::size_t>(n, 4); k < n; ++k) last = std::max(last, std::abs(coeffs[k]));
  if (last == 0.0) return 1.0;
  auto bound = [&](double r) {
    return last * static_cast<double>(n + 1) * std::pow(r, static_cast<double>(n)) / (1.0 - r);
  };
  double lo = 0.0, hi = 1.0;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    (bound(mid) <= tolerance ? lo : hi) = mid;
  }
  return lo;
}

/// Analytic function on the unit disc with f(0) = 0, stored as Taylor
/// coefficients a_1..a_N plus optional closed-form evaluators.
///
/// A `complete` series is a polynomial: evaluation is exact everywhere in the
/// disc. Otherwise, without a closed form, evaluation beyond radius_cap()
/// is refused.
class TaylorFunction {
 public:
  TaylorFunction() = default;

  explicit TaylorFunction(std::vector<complex> coeffs, std::optional<ClosedForm> closed = std::nullopt,
                          bool complete = false, std::optional<double> radius_cap = std::nullopt)
      : coeffs_(std::move(coeffs)), closed_(std::move(closed)), complete_(complete) {
    if (closed_ && (!closed_->value || !closed_->derivative))
      throw ConfigError("TaylorFunction: closed form needs both value and derivative");
    if (radius_cap) {
      if (!(*radius_cap > 0.0 && *radius_cap <= 1.0)) throw ConfigError("TaylorFunction: radius_cap must lie in (0,1]");
      radius_cap_ = *radius_cap;
    } else {
      radius_cap_ = complete_ ? 1.0 : truncation_radius(coeffs_);
    }
  }

  static TaylorFunction polynomial(std::vector<complex> coeffs) {
    return TaylorFunction(std::move(coeffs), std::nullopt, true);
  }

  /// Coefficients a_1..a_N (entry k-1 holds a_k).
  std::span<const complex> coefficients() const { return coeffs_; }
  std::size_t degree() const { return coeffs_.size(); }
  complex coefficient(std::size_t k) const {
    return (k >= 1 && k <= coeffs_.size()) ? coeffs_[k - 1] : complex{};
  }
  bool complete() const { return complete_; }
  bool has_closed_form() const { return closed_.has_value(); }
  const std::optional<ClosedForm>& closed_form() const { return closed_; }
  double radius_cap() const { return radius_cap_; }

  complex value(complex z) const {
    check_point(z);
    if (closed_) return closed_->value(z);
    complex acc{};
    for (std::size_t k = coeffs_.size(); k >= 1; --k) acc = acc * z + coeffs_[k - 1];
    return acc * z;
  }

  complex derivative(complex z) const {
    check_point(z);
    if (closed_) return closed_->derivative(z);
    complex acc{};
    for (std::size_t k = coeffs_.size(); k >= 1; --k) acc = acc * z + static_cast<double>(k) * coeffs_[k - 1];
    return acc;
  }

 private:
  void check_point(complex z) const {
    const double r = std::abs(z);
    if (!(r < 1.0)) throw NumericalError("outside unit disc");
    if (!closed_ && !complete_ && r > radius_cap_)
      throw NumericalError("evaluation beyond trusted radius of truncated series");
  }

  std::vector<complex> coeffs_;
  std::optional<ClosedForm> closed_;
  bool complete_ = false;
  double radius_cap_ = 1.0;
};

/// f'(w) for f in Taylor form (closed form preferred).
inline complex eval_deriv(const TaylorFunction& f, complex w) { return f.derivative(w); }

/// c * f.
inline TaylorFunction scale(complex c, const TaylorFunction& f) {
  std::vector<complex> coeffs(f.coefficients().begin(), f.coefficients().end());
  for (auto& a : coeffs) a *= c;
  std::optional<ClosedForm> closed;
  if (const auto& cf = f.closed_form()) {
    closed = ClosedForm{[c, v = cf->value](complex z) { return c * v(z); },
                        [c, d = cf->derivative](complex z) { return c * d(z); }};
  }
  return TaylorFunction(std::move(coeffs), std::move(closed), f.complete(),
                        f.complete() ? std::nullopt : std::optional<double>(f.radius_cap()));
}

/// f - g. Closed forms survive when every operand can be evaluated exactly.
inline TaylorFunction difference(const TaylorFunction& f, const TaylorFunction& g) {
  const std::size_t n = std::max(f.degree(), g.degree());
  std::vector<complex> coeffs(n);
  for (std::size_t k = 1; k <= n; ++k) coeffs[k - 1] = f.coefficient(k) - g.coefficient(k);
  const bool exact_f = f.has_closed_form() || f.complete();
  const bool exact_g = g.has_closed_form() || g.complete();
  std::optional<ClosedForm> closed;
  if ((f.has_closed_form() || g.has_closed_form()) && exact_f && exact_g) {
    closed = ClosedForm{[f, g](complex z) { return f.value(z) - g.value(z); },
                        [f, g](complex z) { return f.derivative(z) - g.derivative(z); }};
  }
  const bool complete = f.complete() && g.complete();
  std::optional<double> cap;
  if (!complete && !closed) cap = std::min(f.radius_cap(), g.radius_cap());
  return TaylorFunction(std::move(coeffs), std::move(closed), complete, cap);
}

/// Taylor coefficients a_1..a_count of an analytic function with f(0) = 0,
/// from samples of `value` on the circle of the given radius.
inline std::vector<complex> taylor_coefficients(const std::function<complex(complex)>& value,
                                                std::size_t count, double radius = 0.5) {
  std::size_t m = 16;
  while (m < 4 * (count + 1)) m *= 2;
  std::vector<complex> samples(m);
  for (std::size_t j = 0; j < m; ++j) samples[j] = value(std::polar(radius, two_pi * j / m));
  fourier::transform(samples, fourier::Direction::forward);
  std::vector<complex> coeffs(count);
  for (std::size_t k = 1; k <= count; ++k)
    coeffs[k - 1] = samples[k] / (static_cast<double>(m) * std::pow(radius, static_cast<double>(k)));
  return coeffs;
}

/// Value and derivative of phi_{a,lambda}(z) = lambda (a - z) / (1 - conj(a) z).
struct MobiusValue {
  complex value;
  complex derivative;
};

inline MobiusValue mobius_apply(complex a, complex lambda, complex z) {
  if (!(std::abs(a) < 1.0)) throw ConfigError("mobius: |a| must be < 1");
  if (std::abs(std::abs(lambda) - 1.0) > 1e-12) throw ConfigError("mobius: lambda must be unimodular");
  if (std::abs(z) > 1.0 + 1e-12) throw ConfigError("mobius: z outside the closed disc");
  const complex denom = 1.0 - std::conj(a) * z;
  return {lambda * (a - z) / denom, lambda * (std::norm(a) - 1.0) / (denom * denom)};
}

/// g = f o phi_{a,lambda} - f(phi_{a,lambda}(0)), so g(0) = 0. Carries closed
/// forms built from f and `terms` Taylor coefficients computed from them.
inline TaylorFunction compose_mobius(const TaylorFunction& f, complex a, complex lambda, std::size_t terms = 64) {
  const complex base = f.value(mobius_apply(a, lambda, 0.0).value);
  auto value = [f, a, lambda, base](complex z) { return f.value(mobius_apply(a, lambda, z).value) - base; };
  auto derivative = [f, a, lambda](complex z) {
    const auto m = mobius_apply(a, lambda, z);
    return f.derivative(m.value) * m.derivative;
  };
  auto coeffs = taylor_coefficients(value, terms);
  return TaylorFunction(std::move(coeffs), ClosedForm{value, derivative});
}

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussLegendre {
  std::vector<double> nodes;
  std::vector<double> weights;
};

inline GaussLegendre gauss_legendre(std::size_t n) {
  if (n == 0) throw ConfigError("gauss_legendre: need at least one node");
  GaussLegendre rule{std::vector<double>(n), std::vector<double>(n)};
  const std::size_t half = (n + 1) / 2;
  for (std::size_t i = 1; i <= half; ++i) {
    double z = std::cos(pi * (static_cast<double>(i) - 0.25) / (static_cast<double>(n) + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p1 = 1.0, p2 = 0.0;
      for (std::size_t j = 1; j <= n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j - 1.0) * z * p2 - (j - 1.0) * p3) / static_cast<double>(j);
      }
      pp = static_cast<double>(n) * (z * p1 - p2) / (z * z - 1.0);
      const double z1 = z;
      z = z1 - p1 / pp;
      if (std::abs(z - z1) < 1e-15) break;
    }
    rule.nodes[i - 1] = -z;
    rule.nodes[n - i] = z;
    rule.weights[i - 1] = rule.weights[n - i] = 2.0 / ((1.0 - z * z) * pp * pp);
  }
  return rule;
}

/// Tensor rule on the disc: Gauss-Legendre in r on (0,1) (open, so r = 0 is
/// never a node) times uniform angles theta_j = 2*pi*j/angular_nodes.
struct QuadratureRule {
  std::size_t radial_nodes = 32;
  std::size_t angular_nodes = 64;
};

/// Nodes and weights approximating integral over the disc of g dA in polar form.
class DiskQuadrature {
 public:
  explicit DiskQuadrature(const QuadratureRule& rule) : rule_(rule) {
    if (rule.radial_nodes == 0 || rule.angular_nodes == 0) throw ConfigError("quadrature rule needs nodes");
    const auto gl = gauss_legendre(rule.radial_nodes);
    const double dtheta = two_pi / static_cast<double>(rule.angular_nodes);
    nodes_.reserve(rule.radial_nodes * rule.angular_nodes);
    weights_.reserve(rule.radial_nodes * rule.angular_nodes);
    for (std::size_t i = 0; i < rule.radial_nodes; ++i) {
      const double r = 0.5 * (gl.nodes[i] + 1.0);
      const double w = 0.5 * gl.weights[i] * r * dtheta;
      for (std::size_t j = 0; j < rule.angular_nodes; ++j) {
        nodes_.push_back(std::polar(r, dtheta * static_cast<double>(j)));
        weights_.push_back(w);
      }
    }
  }

  const QuadratureRule& rule() const { return rule_; }
  std::span<const complex> nodes() const { return nodes_; }
  std::span<const double> weights() const { return weights_; }

  template <class G>
  double integrate(G&& g) const {
    double sum = 0.0;
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
      const double v = g(nodes_[i]);
      if (!std::isfinite(v)) throw NumericalError("singular node");
      sum += weights_[i] * v;
    }
    return sum;
  }

 private:
  QuadratureRule rule_;
  std::vector<complex> nodes_;
  std::vector<double> weights_;
};

template <class G>
double disk_quadrature(G&& g, const QuadratureRule& rule) {
  return DiskQuadrature(rule).integrate(std::forward<G>(g));
}

// ---------------------------------------------------------------------------
// Euclidean box
// ---------------------------------------------------------------------------

/// Real samples on a uniform grid (common step in every axis) covering an
/// axis-aligned box in R^1 or R^2, together with the Hoelder exponent.
class EuclideanSamples {
 public:
  EuclideanSamples(std::vector<double> lower, std::vector<std::size_t> shape, double step,
                   std::vector<double> values, double alpha)
      : lower_(std::move(lower)), shape_(std::move(shape)), step_(step), values_(std::move(values)), alpha_(alpha) {
    if (lower_.empty() || lower_.size() > 2 || shape_.size() != lower_.size())
      throw ConfigError("EuclideanSamples: dimension must be 1 or 2");
    if (!(step_ > 0.0)) throw ConfigError("EuclideanSamples: grid step must be positive");
    if (!(alpha_ > 0.0 && alpha_ <= 1.0)) throw ConfigError("EuclideanSamples: alpha must lie in (0,1]");
    std::size_t total = 1;
    for (auto s : shape_) {
      if (s < 2) throw ConfigError("EuclideanSamples: need at least two nodes per axis");
      total *= s;
    }
    if (values_.size() != total) throw ConfigError("EuclideanSamples: value count does not match shape");
  }

  /// Samples of f on the box [lower, upper] with `nodes` per axis; the box
  /// must admit a common step in every axis.
  template <class F>
  static EuclideanSamples on_box(std::vector<double> lower, std::vector<double> upper,
                                 std::vector<std::size_t> nodes, double alpha, F&& f) {
    if (lower.size() != upper.size() || lower.size() != nodes.size())
      throw ConfigError("EuclideanSamples: box and node counts disagree");
    if (lower.empty() || lower.size() > 2) throw ConfigError("EuclideanSamples: dimension must be 1 or 2");
    for (auto n : nodes)
      if (n < 2) throw ConfigError("EuclideanSamples: need at least two nodes per axis");
    const double h = (upper[0] - lower[0]) / static_cast<double>(nodes[0] - 1);
    for (std::size_t d = 1; d < lower.size(); ++d) {
      const double hd = (upper[d] - lower[d]) / static_cast<double>(nodes[d] - 1);
      if (std::abs(hd - h) > 1e-12 * std::max(1.0, std::abs(h)))
        throw ConfigError("EuclideanSamples: grid must cover the box with a common step");
    }
    std::size_t total = 1;
    for (auto n : nodes) total *= n;
    std::vector<double> values(total);
    for (std::size_t i = 0; i < total; ++i) {
      std::array<double, 2> x{};
      std::size_t rest = i;
      for (std::size_t d = nodes.size(); d-- > 0;) {
        x[d] = lower[d] + h * static_cast<double>(rest % nodes[d]);
        rest /= nodes[d];
      }
      if constexpr (std::is_invocable_v<F, double>) {
        values[i] = f(x[0]);
      } else {
        values[i] = f(x);
      }
    }
    return EuclideanSamples(std::move(lower), std::move(nodes), h, std::move(values), alpha);
  }

  std::size_t dimension() const { return shape_.size(); }
  std::span<const std::size_t> shape() const { return shape_; }
  std::span<const double> lower() const { return lower_; }
  double step() const { return step_; }
  double alpha() const { return alpha_; }
  std::size_t size() const { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }
  std::span<const double> values() const { return values_; }

  /// Integer grid coordinates of node i (row-major, last axis fastest).
  std::array<long, 2> index(std::size_t i) const {
    std::array<long, 2> idx{};
    for (std::size_t d = shape_.size(); d-- > 0;) {
      idx[d] = static_cast<long>(i % shape_[d]);
      i /= shape_[d];
    }
    return idx;
  }

  std::array<double, 2> position(std::size_t i) const {
    const auto idx = index(i);
    std::array<double, 2> x{};
    for (std::size_t d = 0; d < shape_.size(); ++d) x[d] = lower_[d] + step_ * static_cast<double>(idx[d]);
    return x;
  }

  double distance(std::size_t i, std::size_t j) const {
    const auto a = index(i), b = index(j);
    double s = 0.0;
    for (std::size_t d = 0; d < shape_.size(); ++d) {
      const double diff = static_cast<double>(a[d] - b[d]);
      s += diff * diff;
    }
    return step_ * std::sqrt(s);
  }

  /// Largest distance between two nodes.
  double diameter() const {
    double s = 0.0;
    for (auto n : shape_) s += std::pow(step_ * static_cast<double>(n - 1), 2);
    return std::sqrt(s);
  }

  bool same_grid(const EuclideanSamples& other) const {
    return shape_ == other.shape_ && lower_ == other.lower_ && step_ == other.step_;
  }

  EuclideanSamples with_values(std::vector<double> values) const {
    return EuclideanSamples(lower_, shape_, step_, std::move(values), alpha_);
  }

 private:
  std::vector<double> lower_;
  std::vector<std::size_t> shape_;
  double step_;
  std::vector<double> values_;
  double alpha_;
};

// ---------------------------------------------------------------------------
// Ambient (X) norms
// ---------------------------------------------------------------------------

/// L^2(T) norm modulo constants: (h * sum |f_j - mean|^2)^{1/2}.
inline double l2_circle_norm(const PeriodicSamples& f) {
  complex mean{};
  for (auto v : f.values()) mean += v;
  mean /= static_cast<double>(f.size());
  double s = 0.0;
  for (auto v : f.values()) s += std::norm(v - mean);
  return std::sqrt(f.step() * s);
}

/// L^2(T^2) norm modulo constants.
inline double l2_torus_norm(const TorusSamples& f) {
  complex mean{};
  for (auto v : f.values()) mean += v;
  mean /= static_cast<double>(f.values().size());
  double s = 0.0;
  for (auto v : f.values()) s += std::norm(v - mean);
  return std::sqrt(f.step() * f.step() * s);
}

/// Bergman norm (pi * sum |a_k|^2 / (k+1))^{1/2} from the stored coefficients.
inline double bergman_norm(const TaylorFunction& f) {
  double s = 0.0;
  for (std::size_t k = 1; k <= f.degree(); ++k) s += std::norm(f.coefficient(k)) / static_cast<double>(k + 1);
  return std::sqrt(pi * s);
}

/// Hardy norm (sum |a_k|^2)^{1/2}.
inline double hardy_norm(const TaylorFunction& f) {
  double s = 0.0;
  for (auto a : f.coefficients()) s += std::norm(a);
  return std::sqrt(s);
}

/// Sup norm over the grid nodes; stands in for the Sobolev quotient norm.
inline double sup_norm(const EuclideanSamples& f) {
  double m = 0.0;
  for (auto v : f.values()) m = std::max(m, std::abs(v));
  return m;
}

// ---------------------------------------------------------------------------
// Pointwise arithmetic on sampled representations
// ---------------------------------------------------------------------------

inline PeriodicSamples scale(complex c, const PeriodicSamples& f) {
  std::vector<complex> v(f.values().begin(), f.values().end());
  for (auto& x : v) x *= c;
  return PeriodicSamples(std::move(v));
}

inline PeriodicSamples difference(const PeriodicSamples& f, const PeriodicSamples& g) {
  if (f.size() != g.size()) throw ConfigError("difference: grid sizes differ");
  std::vector<complex> v(f.size());
  for (std::size_t j = 0; j < v.size(); ++j) v[j] = f[j] - g[j];
  return PeriodicSamples(std::move(v));
}

inline TorusSamples scale(complex c, const TorusSamples& f) {
  std::vector<complex> v(f.values().begin(), f.values().end());
  for (auto& x : v) x *= c;
  return TorusSamples(f.size(), std::move(v));
}

inline TorusSamples difference(const TorusSamples& f, const TorusSamples& g) {
  if (f.size() != g.size()) throw ConfigError("difference: grid sizes differ");
  std::vector<complex> v(f.values().size());
  for (std::size_t j = 0; j < v.size(); ++j) v[j] = f.values()[j] - g.values()[j];
  return TorusSamples(f.size(), std::move(v));
}

inline EuclideanSamples scale(double c, const EuclideanSamples& f) {
  std::vector<double> v(f.values().begin(), f.values().end());
  for (auto& x : v) x *= c;
  return f.with_values(std::move(v));
}

inline EuclideanSamples difference(const EuclideanSamples& f, const EuclideanSamples& g) {
  if (!f.same_grid(g)) throw ConfigError("difference: grids differ");
  std::vector<double> v(f.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = f[i] - g[i];
  return f.with_values(std::move(v));
}

}  // namespace oscillometer

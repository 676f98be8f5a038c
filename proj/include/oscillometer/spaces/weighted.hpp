#pragma once

// Weighted sup-norm spaces Hv(Omega): L_z f = v(z) f(z), z -> infinity means
// escaping every compact subset of Omega.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "oscillometer/family.hpp"
#include "oscillometer/funcrep.hpp"
#include "oscillometer/spaces/bloch.hpp"
#include "oscillometer/spaces/tag.hpp"

namespace oscillometer {

/// Omega is the unit disc (inner = 0) or the annulus inner < |z| < 1.
struct WeightDomain {
  double inner = 0.0;

  bool contains(complex z) const {
    const double r = std::abs(z);
    return r < 1.0 && (inner == 0.0 ? true : r > inner);
  }
  double boundary_distance(complex z) const {
    const double r = std::abs(z);
    return inner == 0.0 ? 1.0 - r : std::min(1.0 - r, r - inner);
  }
};

struct WeightV {
  std::string name;
  std::function<double(complex)> eval;
  WeightDomain domain;

  double operator()(complex z) const { return eval(z); }
  /// min(dist(z, boundary), 1/(1+|z|)).
  double boundary_remoteness(complex z) const {
    return std::min(domain.boundary_distance(z), 1.0 / (1.0 + std::abs(z)));
  }
};

/// v(z) = (1 - |z|^2)^s.
inline WeightV power_weight(double s = 1.0, WeightDomain domain = {}) {
  if (!(s > 0.0)) throw ConfigError("weight exponent must be positive");
  std::string name = s == 1.0 ? "one_minus_r2" : "power";
  return {std::move(name), [s](complex z) { return std::pow(1.0 - std::norm(z), s); }, domain};
}

/// An analytic function that need not vanish at 0: constant + Taylor part.
struct WeightedFunction {
  complex constant{};
  TaylorFunction part;

  complex value(complex z) const { return constant + part.value(z); }
};

inline WeightedFunction scale(complex c, const WeightedFunction& f) { return {c * f.constant, scale(c, f.part)}; }
inline WeightedFunction difference(const WeightedFunction& f, const WeightedFunction& g) {
  return {f.constant - g.constant, difference(f.part, g.part)};
}

/// v(z) |f(z)|.
inline double weighted_term(const WeightedFunction& f, const WeightV& v, complex z) {
  if (!v.domain.contains(z)) throw NumericalError("point outside the weight domain");
  return v(z) * std::abs(f.value(z));
}

class Weighted {
 public:
  using function_type = WeightedFunction;
  using param_type = complex;
  static constexpr SpaceTag tag = SpaceTag::weighted;

  explicit Weighted(WeightV v) : v_(std::move(v)) {
    if (!v_.eval) throw ConfigError("weighted: weight evaluator missing");
  }

  const WeightV& weight() const { return v_; }

  auto bind(const WeightedFunction& f) const {
    return [&f, this](complex z) { return weighted_term(f, v_, z); };
  }

  /// Weighted Bergman norm (integral of |f|^2 v^2 dA)^{1/2} with auxiliary weight w = 1.
  double x_norm(const WeightedFunction& f, const QuadratureRule& rule = {48, 96}) const {
    const DiskQuadrature q(rule);
    const double s = q.integrate([&](complex z) {
      if (!v_.domain.contains(z)) return 0.0;
      const double vz = v_(z);
      return std::norm(f.value(z)) * vz * vz;
    });
    return std::sqrt(s);
  }

 private:
  WeightV v_;
};

inline OperatorFamilyGrid<Weighted> build_family(const Weighted& space, const DiscResolution& res) {
  const auto& domain = space.weight().domain;
  std::vector<complex> pts;
  if (domain.inner == 0.0) {
    pts = disc_grid(res);
  } else {
    // Shells at dyadic distances from both boundary circles.
    const double half = 0.5 * (1.0 - domain.inner);
    std::vector<double> radii{domain.inner + half};
    for (std::size_t k = 1; k < res.shells; ++k) {
      const double d = std::ldexp(half, -static_cast<int>(k));
      radii.push_back(domain.inner + d);
      radii.push_back(1.0 - d);
    }
    for (double r : radii)
      for (std::size_t j = 0; j < res.angles; ++j)
        pts.push_back(std::polar(r, two_pi * static_cast<double>(j) / static_cast<double>(res.angles)));
  }
  std::vector<double> rho;
  rho.reserve(pts.size());
  for (auto z : pts) {
    const double vz = space.weight()(z);
    if (!(vz > 0.0)) throw ConfigError("weight must be strictly positive on the grid");
    rho.push_back(space.weight().boundary_remoteness(z));
  }
  if (pts.empty() || dyadic_levels(rho) < 6) throw ConfigError("resolution too coarse: need >= 6 dyadic levels");
  return {space, std::move(pts), std::move(rho)};
}

}  // namespace oscillometer

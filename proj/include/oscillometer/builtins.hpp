#pragma once

// Built-in test functions, one family per representation.

#include <cmath>
#include <complex>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "oscillometer/funcrep.hpp"
#include "oscillometer/spaces.hpp"

namespace oscillometer::builtin {

// --- Taylor series on the disc (f(0) = 0) ---

/// log 1/(1 - z) = sum z^k / k, with closed forms.
inline TaylorFunction log_singular(std::size_t terms = 4096) {
  std::vector<complex> a(terms);
  for (std::size_t k = 1; k <= terms; ++k) a[k - 1] = 1.0 / static_cast<double>(k);
  return TaylorFunction(std::move(a), ClosedForm{[](complex z) { return -std::log(1.0 - z); },
                                                 [](complex z) { return 1.0 / (1.0 - z); }});
}

inline TaylorFunction monomial(std::size_t k) {
  if (k == 0) throw ConfigError("monomial: degree must be >= 1 (f(0) = 0)");
  std::vector<complex> a(k);
  a[k - 1] = 1.0;
  return TaylorFunction::polynomial(std::move(a));
}

inline TaylorFunction identity() { return monomial(1); }

/// sum_{k=0}^{K} z^(2^k).
inline TaylorFunction lacunary(std::size_t levels) {
  if (levels > 20) throw ConfigError("lacunary: at most 20 levels");
  std::vector<complex> a(std::size_t{1} << levels);
  for (std::size_t k = 0; k <= levels; ++k) a[(std::size_t{1} << k) - 1] = 1.0;
  return TaylorFunction::polynomial(std::move(a));
}

/// 1/(1 - z) = 1 + z/(1 - z); for the weighted space, which allows f(0) != 0.
inline WeightedFunction cauchy_kernel(std::size_t terms = 4096) {
  std::vector<complex> a(terms, complex(1.0));
  TaylorFunction part(std::move(a), ClosedForm{[](complex z) { return z / (1.0 - z); },
                                               [](complex z) { return 1.0 / ((1.0 - z) * (1.0 - z)); }});
  return {complex(1.0), std::move(part)};
}

// --- Periodic samples on the circle ---

/// Indicator of the upper half circle, theta in [0, pi).
inline PeriodicSamples step_half(std::size_t n) {
  return PeriodicSamples::from_function(n, [](double t) { return t < pi ? 1.0 : 0.0; });
}

inline PeriodicSamples cosine(std::size_t n, std::size_t k = 1) {
  return PeriodicSamples::from_function(n, [k](double t) { return std::cos(static_cast<double>(k) * t); });
}

// --- Torus ---

inline TorusSamples step_product(std::size_t n) {
  return TorusSamples::from_function(n, [](double a, double b) { return (a < pi ? 1.0 : 0.0) * (b < pi ? 1.0 : 0.0); });
}

/// The one-variable function F(zeta, lambda) = step_half(zeta).
inline TorusSamples step_first(std::size_t n) {
  return TorusSamples::from_function(n, [](double a, double) { return a < pi ? 1.0 : 0.0; });
}

/// F(zeta, lambda) = step_half(zeta) + cos(lambda).
inline TorusSamples separable_sum(std::size_t n) {
  return TorusSamples::from_function(n, [](double a, double b) { return (a < pi ? 1.0 : 0.0) + std::cos(b); });
}

// --- Samples on a box ---

/// |x|^exponent (Euclidean norm in 2-D).
inline EuclideanSamples holder_cusp(const LipDomain& dom, double alpha, double exponent) {
  return EuclideanSamples::on_box(dom.lower, dom.upper, dom.nodes, alpha, [exponent](std::array<double, 2> x) {
    return std::pow(std::hypot(x[0], x[1]), exponent);
  });
}

inline EuclideanSamples linear(const LipDomain& dom, double alpha) {
  return EuclideanSamples::on_box(dom.lower, dom.upper, dom.nodes, alpha, [](std::array<double, 2> x) { return x[0]; });
}

inline EuclideanSamples square(const LipDomain& dom, double alpha) {
  return EuclideanSamples::on_box(dom.lower, dom.upper, dom.nodes, alpha,
                                  [](std::array<double, 2> x) { return x[0] * x[0] + x[1] * x[1]; });
}

// --- Registry ---

/// Names of the parameter-free builtins usable with a space.
inline std::vector<std::string> names_for(SpaceTag tag) {
  switch (tag) {
    case SpaceTag::bmo_circle: return {"step_half", "cos"};
    case SpaceTag::bloch: return {"z", "square", "polynomial", "lacunary", "log_singular"};
    case SpaceTag::qk: return {"z", "square", "polynomial", "lacunary", "log_singular"};
    case SpaceTag::weighted: return {"cauchy_kernel", "z", "log_singular"};
    case SpaceTag::lip: return {"holder_cusp", "linear", "square"};
    case SpaceTag::rect_bmo: return {"step_product", "step_first", "separable_sum"};
  }
  return {};
}

/// Builtin `name` with default parameters, in the representation `d` expects.
/// Analytic names also resolve for the weighted space (zero constant term).
inline AnyFunction make(std::string_view name, const SpaceDescriptor& d) {
  const bool analytic = d.tag == SpaceTag::bloch || d.tag == SpaceTag::qk || d.tag == SpaceTag::weighted;
  auto analytic_result = [&](TaylorFunction f) -> AnyFunction {
    if (d.tag == SpaceTag::weighted) return WeightedFunction{complex{}, std::move(f)};
    return f;
  };
  if (analytic) {
    if (name == "z") return analytic_result(identity());
    if (name == "square") return analytic_result(monomial(2));
    if (name == "polynomial") return analytic_result(TaylorFunction::polynomial({1.0, 0.0, 1.0}));
    if (name == "lacunary") return analytic_result(lacunary(4));
    if (name == "log_singular") return analytic_result(log_singular());
    if (name == "cauchy_kernel" && d.tag == SpaceTag::weighted) return cauchy_kernel();
  }
  if (d.tag == SpaceTag::bmo_circle) {
    if (name == "step_half") return step_half(d.bmo.samples);
    if (name == "cos") return cosine(d.bmo.samples);
  }
  if (d.tag == SpaceTag::rect_bmo) {
    if (name == "step_product") return step_product(d.rect.samples);
    if (name == "step_first") return step_first(d.rect.samples);
    if (name == "separable_sum") return separable_sum(d.rect.samples);
  }
  if (d.tag == SpaceTag::lip) {
    if (name == "holder_cusp") return holder_cusp(d.lip_domain, d.alpha, d.alpha);
    if (name == "linear") return linear(d.lip_domain, d.alpha);
    if (name == "square") return square(d.lip_domain, d.alpha);
  }
  throw ConfigError("unknown builtin '" + std::string(name) + "' for space " + std::string(to_string(d.tag)));
}

// --- Kernels and weights ---

inline KKernel kernel(std::string_view name, double exponent = 1.0) {
  if (name == "power") return power_kernel(exponent);
  if (name == "truncated_power") return truncated_power_kernel(exponent);
  if (name == "constant") return constant_kernel();
  throw ConfigError("unknown kernel '" + std::string(name) + "'");
}

inline WeightV weight(std::string_view name, double exponent = 1.0, double inner = 0.0) {
  if (!(inner >= 0.0 && inner < 1.0)) throw ConfigError("weight domain: inner radius must lie in [0,1)");
  if (name == "one_minus_r2") return power_weight(1.0, WeightDomain{inner});
  if (name == "power") return power_weight(exponent, WeightDomain{inner});
  throw ConfigError("unknown weight '" + std::string(name) + "'");
}

}  // namespace oscillometer::builtin

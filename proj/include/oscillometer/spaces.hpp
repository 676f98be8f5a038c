#pragma once

// Runtime selection of a space: a descriptor holding every per-space
// parameter, a variant over the function representations, and a dispatcher
// that builds the typed family and hands it, with the matching function, to
// a visitor.

#include <cstddef>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "oscillometer/family.hpp"
#include "oscillometer/funcrep.hpp"
#include "oscillometer/spaces/bloch.hpp"
#include "oscillometer/spaces/bmo_circle.hpp"
#include "oscillometer/spaces/lip.hpp"
#include "oscillometer/spaces/qk.hpp"
#include "oscillometer/spaces/rect_bmo.hpp"
#include "oscillometer/spaces/tag.hpp"
#include "oscillometer/spaces/weighted.hpp"

namespace oscillometer {

/// Box Omega for the Lip space and its node counts per axis.
struct LipDomain {
  std::vector<double> lower{-1.0};
  std::vector<double> upper{1.0};
  std::vector<std::size_t> nodes{65537};
};

struct SpaceDescriptor {
  SpaceTag tag = SpaceTag::bloch;
  double p = 1.0;                       // bmo_circle
  KKernel kernel = power_kernel(1.0);   // qk
  QuadratureRule rule{};                // qk
  WeightV weight = power_weight(1.0);   // weighted
  double alpha = 0.5;                   // lip
  LipDomain lip_domain;

  BmoResolution bmo;
  DiscResolution disc;
  QkResolution qk;
  LipResolution lip;
  RectResolution rect;

  std::size_t tail_levels = 10;
  double allowance = 0.02;
};

inline SpaceDescriptor default_descriptor(SpaceTag tag) {
  SpaceDescriptor d;
  d.tag = tag;
  return d;
}

using AnyFunction = std::variant<PeriodicSamples, TaylorFunction, WeightedFunction, EuclideanSamples, TorusSamples>;

inline std::string representation_name(const AnyFunction& f) {
  static const char* names[] = {"periodic samples", "taylor series", "weighted analytic function",
                                "euclidean samples", "torus samples"};
  return names[f.index()];
}

template <class F>
const F& expect_representation(const AnyFunction& f, SpaceTag tag) {
  if (const auto* p = std::get_if<F>(&f)) return *p;
  throw ConfigError("representation mismatch: space " + std::string(to_string(tag)) + " cannot take " +
                    representation_name(f));
}

inline void check_descriptor(const SpaceDescriptor& d) {
  if (!(d.p >= 1.0)) throw ConfigError("bmo_circle: p must lie in [1, inf)");
  if (!(d.alpha > 0.0 && d.alpha <= 1.0)) throw ConfigError("lip: alpha must lie in (0,1]");
  if (d.tail_levels < 3) throw ConfigError("tail_levels must be >= 3");
  if (!(d.allowance >= 0.0)) throw ConfigError("allowance must be non-negative");
}

/// Builds the family for `d` and calls vis(family, typed_function).
template <class Visitor>
decltype(auto) with_family(const SpaceDescriptor& d, const AnyFunction& f, Visitor&& vis) {
  check_descriptor(d);
  switch (d.tag) {
    case SpaceTag::bmo_circle: {
      const auto& g = expect_representation<PeriodicSamples>(f, d.tag);
      return vis(build_family(BmoCircle(d.p), d.bmo), g);
    }
    case SpaceTag::bloch: {
      const auto& g = expect_representation<TaylorFunction>(f, d.tag);
      return vis(build_family(Bloch{}, d.disc), g);
    }
    case SpaceTag::qk: {
      const auto& g = expect_representation<TaylorFunction>(f, d.tag);
      return vis(build_family(QK(d.kernel, d.rule), d.qk), g);
    }
    case SpaceTag::weighted: {
      const auto& g = expect_representation<WeightedFunction>(f, d.tag);
      return vis(build_family(Weighted(d.weight), d.disc), g);
    }
    case SpaceTag::lip: {
      const auto& g = expect_representation<EuclideanSamples>(f, d.tag);
      if (g.alpha() != d.alpha) throw ConfigError("lip: function alpha differs from the space alpha");
      return vis(build_family(Lip(d.alpha, LipGrid::of(g)), d.lip), g);
    }
    case SpaceTag::rect_bmo: {
      const auto& g = expect_representation<TorusSamples>(f, d.tag);
      return vis(build_family(RectBmo{}, d.rect), g);
    }
  }
  throw ConfigError("unknown space");
}

/// Ambient X-norm of f for the space described by `d`.
inline double x_norm(const SpaceDescriptor& d, const AnyFunction& f) {
  check_descriptor(d);
  switch (d.tag) {
    case SpaceTag::bmo_circle: return BmoCircle(d.p).x_norm(expect_representation<PeriodicSamples>(f, d.tag));
    case SpaceTag::bloch: return Bloch{}.x_norm(expect_representation<TaylorFunction>(f, d.tag));
    case SpaceTag::qk: return QK(d.kernel, d.rule).x_norm(expect_representation<TaylorFunction>(f, d.tag));
    case SpaceTag::weighted: return Weighted(d.weight).x_norm(expect_representation<WeightedFunction>(f, d.tag));
    case SpaceTag::lip: return sup_norm(expect_representation<EuclideanSamples>(f, d.tag));
    case SpaceTag::rect_bmo: return l2_torus_norm(expect_representation<TorusSamples>(f, d.tag));
  }
  throw ConfigError("unknown space");
}

inline double x_norm(SpaceTag tag, const AnyFunction& f) { return x_norm(default_descriptor(tag), f); }

}  // namespace oscillometer

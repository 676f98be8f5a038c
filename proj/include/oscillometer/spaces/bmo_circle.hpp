#pragma once

// BMO on the circle: L_I f = chi_I |I|^{-1/p} (f - f_I), so ||L_I f||_{L^p}
// is the p-mean oscillation of f over the arc I. Remoteness rho = |I|.

#include <cmath>
#include <cstddef>
#include <vector>

#include "oscillometer/family.hpp"
#include "oscillometer/funcrep.hpp"
#include "oscillometer/spaces/tag.hpp"

namespace oscillometer {

namespace detail {

/// ((1/m) sum_{j in arc} |f_j - f_I|^p)^{1/p}, summed directly.
inline double direct_oscillation(const PeriodicSamples& f, const GridArc& arc, complex mean, double p) {
  const std::size_t n = f.size();
  double s = 0.0;
  for (std::size_t i = 0; i < arc.count; ++i) {
    const double d = std::abs(f[(arc.start + i) % n] - mean);
    s += (p == 1.0) ? d : (p == 2.0 ? d * d : std::pow(d, p));
  }
  s /= static_cast<double>(arc.count);
  return (p == 1.0) ? s : (p == 2.0 ? std::sqrt(s) : std::pow(s, 1.0 / p));
}

/// p-mean oscillation using prefix sums for the mean and, for p = 2, for the
/// second moment. Near-constant arcs (variance below 1e-8 of the second
/// moment) are recomputed directly to avoid cancellation.
inline double arc_oscillation(const PeriodicSamples& f, const ArcMoments& moments, const GridArc& arc, double p) {
  const complex mean = moments.average(arc);
  if (p != 2.0) return direct_oscillation(f, arc, mean, p);
  const long double m = static_cast<long double>(arc.count);
  const auto s1 = moments.sum(arc) / m;
  const long double s2 = moments.sum_squares(arc) / m;
  const long double var = s2 - std::norm(s1);
  if (var <= 1e-8L * s2) return direct_oscillation(f, arc, mean, p);
  return std::sqrt(static_cast<double>(var));
}

}  // namespace detail

class BmoCircle {
 public:
  using function_type = PeriodicSamples;
  using param_type = Arc;
  static constexpr SpaceTag tag = SpaceTag::bmo_circle;

  explicit BmoCircle(double p = 1.0) : p_(p) {
    if (!(p >= 1.0) || !std::isfinite(p)) throw ConfigError("bmo_circle: exponent p must lie in [1, inf)");
  }

  double exponent() const { return p_; }

  class Bound {
   public:
    Bound(const PeriodicSamples& f, double p) : f_(&f), moments_(f), p_(p) {}
    double operator()(const Arc& arc) const {
      return detail::arc_oscillation(*f_, moments_, snap_arc(arc, f_->size()), p_);
    }

   private:
    const PeriodicSamples* f_;
    ArcMoments moments_;
    double p_;
  };

  Bound bind(const PeriodicSamples& f) const { return Bound(f, p_); }

  double x_norm(const PeriodicSamples& f) const { return l2_circle_norm(f); }

 private:
  double p_;
};

/// ((1/|I|) integral over I of |f - f_I|^p ds)^{1/p}.
inline double bmo_oscillation(const PeriodicSamples& f, const Arc& arc, double p) {
  if (!(p >= 1.0)) throw ConfigError("bmo_oscillation: p must be >= 1");
  const ArcMoments moments(f);
  return detail::arc_oscillation(f, moments, snap_arc(arc, f.size()), p);
}

struct BmoResolution {
  std::size_t samples = 4096;   // grid size of sampled inputs
  std::size_t midpoints = 256;  // uniform arc midpoints
  std::size_t levels = 11;      // arc lengths 2*pi*2^-k, k = 0..levels-1
};

inline OperatorFamilyGrid<BmoCircle> build_family(const BmoCircle& space, const BmoResolution& res) {
  if (res.midpoints == 0) throw ConfigError("bmo_circle: need at least one midpoint");
  std::vector<Arc> arcs;
  std::vector<double> rho;
  arcs.reserve(res.midpoints * res.levels);
  for (std::size_t k = 0; k < res.levels; ++k) {
    const double len = std::ldexp(two_pi, -static_cast<int>(k));
    for (std::size_t j = 0; j < res.midpoints; ++j) {
      arcs.emplace_back(two_pi * static_cast<double>(j) / static_cast<double>(res.midpoints), len);
      rho.push_back(len);
    }
  }
  if (rho.empty() || dyadic_levels(rho) < 6) throw ConfigError("resolution too coarse: need >= 6 dyadic levels");
  return {space, std::move(arcs), std::move(rho)};
}

}  // namespace oscillometer

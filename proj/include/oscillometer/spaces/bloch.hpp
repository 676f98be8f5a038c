#pragma once

// Bloch space: L_w f = (1 - |w|^2) f'(w), remoteness rho = 1 - |w|.

#include <cmath>
#include <cstddef>
#include <vector>

#include "oscillometer/family.hpp"
#include "oscillometer/funcrep.hpp"
#include "oscillometer/spaces/tag.hpp"

namespace oscillometer {

/// Polar grid of the disc: radii 1 - 2^-k (k = 1..shells) times uniform
/// angles 2*pi*j/angles, optionally with the origin prepended.
struct DiscResolution {
  std::size_t shells = 12;
  std::size_t angles = 256;
  bool include_origin = true;
};

inline std::vector<complex> disc_grid(const DiscResolution& res) {
  std::vector<complex> pts;
  pts.reserve(res.shells * res.angles + 1);
  if (res.include_origin) pts.emplace_back(0.0, 0.0);
  for (std::size_t k = 1; k <= res.shells; ++k) {
    const double r = 1.0 - std::ldexp(1.0, -static_cast<int>(k));
    for (std::size_t j = 0; j < res.angles; ++j)
      pts.push_back(std::polar(r, two_pi * static_cast<double>(j) / static_cast<double>(res.angles)));
  }
  return pts;
}

/// (1 - |w|^2) |f'(w)|.
inline double bloch_term(const TaylorFunction& f, complex w) {
  if (!(std::abs(w) < 1.0)) throw NumericalError("outside unit disc");
  return (1.0 - std::norm(w)) * std::abs(f.derivative(w));
}

class Bloch {
 public:
  using function_type = TaylorFunction;
  using param_type = complex;
  static constexpr SpaceTag tag = SpaceTag::bloch;

  auto bind(const TaylorFunction& f) const {
    return [&f](complex w) { return bloch_term(f, w); };
  }

  /// Bergman norm of L^2_a modulo constants.
  double x_norm(const TaylorFunction& f) const { return bergman_norm(f); }
};

inline OperatorFamilyGrid<Bloch> build_family(const Bloch& space, const DiscResolution& res) {
  auto pts = disc_grid(res);
  std::vector<double> rho;
  rho.reserve(pts.size());
  for (auto w : pts) rho.push_back(1.0 - std::abs(w));
  if (pts.empty() || dyadic_levels(rho) < 6) throw ConfigError("resolution too coarse: need >= 6 dyadic levels");
  return {space, std::move(pts), std::move(rho)};
}

}  // namespace oscillometer

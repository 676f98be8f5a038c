#pragma once

// Rectangular BMO on the torus. For arcs I, J the double difference
//   D = F(zeta, lambda) - F_J(zeta) - F_I(lambda) + F_{I x J}
// is averaged in mean square over I x J; remoteness rho = min(|I|, |J|).
//
// The quantity vanishes on every F = g(zeta) + h(lambda), so it is a seminorm
// with that kernel on L^2(T^2)/C.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

#include "oscillometer/family.hpp"
#include "oscillometer/funcrep.hpp"
#include "oscillometer/spaces/tag.hpp"

namespace oscillometer {

struct ArcPair {
  Arc first;   // I, acting on the first variable zeta
  Arc second;  // J, acting on the second variable lambda
};

namespace detail {

/// Row prefix sums (along lambda, for each zeta) and column prefix sums
/// (along zeta, for each lambda) over doubled index ranges.
class TorusPrefix {
 public:
  using wide = std::complex<long double>;

  explicit TorusPrefix(const TorusSamples& f)
      : f_(&f), n_(f.size()), rows_(n_ * (2 * n_ + 1)), cols_(n_ * (2 * n_ + 1)) {
    const std::size_t w = 2 * n_ + 1;
    for (std::size_t j = 0; j < n_; ++j) {
      for (std::size_t k = 0; k < 2 * n_; ++k) {
        const complex v = f(j, k % n_);
        rows_[j * w + k + 1] = rows_[j * w + k] + wide(v.real(), v.imag());
      }
    }
    for (std::size_t k = 0; k < n_; ++k) {
      for (std::size_t j = 0; j < 2 * n_; ++j) {
        const complex v = f(j % n_, k);
        cols_[k * w + j + 1] = cols_[k * w + j] + wide(v.real(), v.imag());
      }
    }
  }

  double oscillation(const GridArc& I, const GridArc& J) const {
    const std::size_t w = 2 * n_ + 1;
    const long double mi = static_cast<long double>(I.count), mj = static_cast<long double>(J.count);
    // F_J(zeta) for zeta in I, F_I(lambda) for lambda in J.
    std::vector<complex> row_mean(I.count), col_mean(J.count);
    wide total{};
    for (std::size_t a = 0; a < I.count; ++a) {
      const std::size_t j = (I.start + a) % n_;
      const wide s = rows_[j * w + J.start + J.count] - rows_[j * w + J.start];
      total += s;
      const wide m = s / mj;
      row_mean[a] = {static_cast<double>(m.real()), static_cast<double>(m.imag())};
    }
    for (std::size_t b = 0; b < J.count; ++b) {
      const std::size_t k = (J.start + b) % n_;
      const wide m = (cols_[k * w + I.start + I.count] - cols_[k * w + I.start]) / mi;
      col_mean[b] = {static_cast<double>(m.real()), static_cast<double>(m.imag())};
    }
    const wide tm = total / (mi * mj);
    const complex box_mean{static_cast<double>(tm.real()), static_cast<double>(tm.imag())};
    double s = 0.0;
    for (std::size_t a = 0; a < I.count; ++a) {
      const std::size_t j = (I.start + a) % n_;
      const complex shift = box_mean - row_mean[a];
      for (std::size_t b = 0; b < J.count; ++b) {
        const std::size_t k = (J.start + b) % n_;
        s += std::norm((*f_)(j, k) + shift - col_mean[b]);
      }
    }
    return std::sqrt(s / static_cast<double>(I.count * J.count));
  }

 private:
  const TorusSamples* f_;
  std::size_t n_;
  std::vector<wide> rows_;
  std::vector<wide> cols_;
};

}  // namespace detail

class RectBmo {
 public:
  using function_type = TorusSamples;
  using param_type = ArcPair;
  static constexpr SpaceTag tag = SpaceTag::rect_bmo;

  class Bound {
   public:
    explicit Bound(const TorusSamples& f) : n_(f.size()), prefix_(f) {}
    double operator()(const ArcPair& p) const {
      return prefix_.oscillation(snap_arc(p.first, n_), snap_arc(p.second, n_));
    }

   private:
    std::size_t n_;
    detail::TorusPrefix prefix_;
  };

  Bound bind(const TorusSamples& f) const { return Bound(f); }

  double x_norm(const TorusSamples& f) const { return l2_torus_norm(f); }
};

/// ((1/(|I||J|)) double integral over I x J of |F - F_J - F_I + F_{IxJ}|^2)^{1/2}.
inline double rect_oscillation(const TorusSamples& f, const Arc& I, const Arc& J) {
  return detail::TorusPrefix(f).oscillation(snap_arc(I, f.size()), snap_arc(J, f.size()));
}

struct RectResolution {
  std::size_t samples = 64;    // grid size per axis of sampled inputs
  std::size_t midpoints = 16;  // uniform midpoints per axis
  std::size_t levels = 6;      // arc lengths 2*pi*2^-k, k = 0..levels-1
};

inline OperatorFamilyGrid<RectBmo> build_family(const RectBmo& space, const RectResolution& res) {
  std::vector<Arc> arcs;
  for (std::size_t k = 0; k < res.levels; ++k) {
    const double len = std::ldexp(two_pi, -static_cast<int>(k));
    for (std::size_t j = 0; j < res.midpoints; ++j)
      arcs.emplace_back(two_pi * static_cast<double>(j) / static_cast<double>(res.midpoints), len);
  }
  std::vector<ArcPair> params;
  std::vector<double> rho;
  params.reserve(arcs.size() * arcs.size());
  for (const auto& I : arcs) {
    for (const auto& J : arcs) {
      params.push_back({I, J});
      rho.push_back(std::min(I.length, J.length));
    }
  }
  if (params.empty() || dyadic_levels(rho) < 6) throw ConfigError("resolution too coarse: need >= 6 dyadic levels");
  return {space, std::move(params), std::move(rho)};
}

}  // namespace oscillometer

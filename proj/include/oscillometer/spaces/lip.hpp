#pragma once

// Lipschitz-Hoelder space Lip_alpha(Omega): L_{x,y} f = |f(x) - f(y)| / |x - y|^alpha
// over pairs of grid nodes, remoteness rho = |x - y|.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "oscillometer/family.hpp"
#include "oscillometer/funcrep.hpp"
#include "oscillometer/spaces/tag.hpp"

namespace oscillometer {

struct NodePair {
  std::size_t first = 0;
  std::size_t second = 0;
};

/// |f(x) - f(y)| / |x - y|^alpha for grid nodes x != y.
inline double lip_quotient(const EuclideanSamples& f, std::size_t x, std::size_t y, double alpha) {
  if (x == y) throw ConfigError("lip_quotient: nodes must differ");
  if (x >= f.size() || y >= f.size()) throw ConfigError("lip_quotient: node index out of range");
  return std::abs(f[x] - f[y]) / std::pow(f.distance(x, y), alpha);
}

/// Geometry of the node grid a Lip family is built on.
struct LipGrid {
  std::vector<double> lower;
  std::vector<std::size_t> shape;
  double step = 1.0;

  static LipGrid of(const EuclideanSamples& f) {
    return {{f.lower().begin(), f.lower().end()}, {f.shape().begin(), f.shape().end()}, f.step()};
  }
  std::size_t nodes() const {
    std::size_t n = 1;
    for (auto s : shape) n *= s;
    return n;
  }
};

class Lip {
 public:
  using function_type = EuclideanSamples;
  using param_type = NodePair;
  static constexpr SpaceTag tag = SpaceTag::lip;

  Lip(double alpha, LipGrid grid) : alpha_(alpha), grid_(std::move(grid)) {
    if (!(alpha_ > 0.0 && alpha_ <= 1.0)) throw ConfigError("lip: alpha must lie in (0,1]");
    if (grid_.shape.empty() || grid_.shape.size() > 2 || grid_.lower.size() != grid_.shape.size())
      throw ConfigError("lip: grid must be 1- or 2-dimensional");
  }

  double alpha() const { return alpha_; }
  const LipGrid& grid() const { return grid_; }

  class Bound {
   public:
    Bound(const EuclideanSamples& f, double alpha) : f_(&f), alpha_(alpha) {}
    double operator()(const NodePair& p) const {
      return std::abs((*f_)[p.first] - (*f_)[p.second]) / std::pow(f_->distance(p.first, p.second), alpha_);
    }

   private:
    const EuclideanSamples* f_;
    double alpha_;
  };

  Bound bind(const EuclideanSamples& f) const {
    if (!std::equal(grid_.shape.begin(), grid_.shape.end(), f.shape().begin(), f.shape().end()) ||
        !std::equal(grid_.lower.begin(), grid_.lower.end(), f.lower().begin(), f.lower().end()) ||
        grid_.step != f.step())
      throw ConfigError("lip: function is not sampled on the family grid");
    return Bound(f, alpha_);
  }

  /// Sup norm over Omega's nodes, standing in for the Sobolev quotient norm.
  double x_norm(const EuclideanSamples& f) const { return sup_norm(f); }

 private:
  double alpha_;
  LipGrid grid_;
};

struct LipResolution {
  std::size_t pair_cap = 1'000'000;
};

/// Node pairs grouped by integer offset vector. When the full set exceeds
/// `pair_cap`, offsets are thinned per dyadic band of |offset| with an even
/// stride, so every band keeps pairs; each band retains at least its
/// shortest offset with all of its base points.
inline std::vector<NodePair> lip_pairs(const LipGrid& grid, std::size_t pair_cap) {
  const std::size_t dim = grid.shape.size();
  const long n0 = static_cast<long>(grid.shape[0]);
  const long n1 = dim == 2 ? static_cast<long>(grid.shape[1]) : 1;

  struct Offset {
    long d0, d1;
    double length;
    std::size_t count;
  };
  std::vector<Offset> offsets;
  for (long d0 = 0; d0 < n0; ++d0) {
    for (long d1 = (dim == 2 ? -(n1 - 1) : 0); d1 <= (dim == 2 ? n1 - 1 : 0); ++d1) {
      if (d0 == 0 && d1 <= 0) continue;
      const auto count = static_cast<std::size_t>((n0 - d0) * (n1 - std::labs(d1)));
      offsets.push_back({d0, d1, std::hypot(static_cast<double>(d0), static_cast<double>(d1)), count});
    }
  }
  std::sort(offsets.begin(), offsets.end(), [](const Offset& a, const Offset& b) {
    return a.length != b.length ? a.length < b.length : (a.d0 != b.d0 ? a.d0 < b.d0 : a.d1 < b.d1);
  });

  std::size_t total = 0;
  for (const auto& o : offsets) total += o.count;

  std::vector<const Offset*> chosen;
  if (total <= pair_cap) {
    for (const auto& o : offsets) chosen.push_back(&o);
  } else {
    std::map<long, std::vector<const Offset*>> bands;
    for (const auto& o : offsets) bands[static_cast<long>(std::floor(std::log2(o.length) + 1e-12))].push_back(&o);
    const std::size_t budget = std::max<std::size_t>(1, pair_cap / bands.size());
    for (const auto& [band, members] : bands) {
      std::size_t band_total = 0;
      for (auto* o : members) band_total += o->count;
      const std::size_t stride = std::max<std::size_t>(1, (band_total + budget - 1) / budget);
      for (std::size_t i = 0; i < members.size(); i += stride) chosen.push_back(members[i]);
    }
  }

  std::vector<NodePair> pairs;
  for (const auto* o : chosen) {
    for (long i0 = 0; i0 + o->d0 < n0; ++i0) {
      for (long i1 = std::max(0L, -o->d1); i1 < n1 && i1 + o->d1 < n1; ++i1) {
        const auto a = static_cast<std::size_t>(i0 * n1 + i1);
        const auto b = static_cast<std::size_t>((i0 + o->d0) * n1 + (i1 + o->d1));
        pairs.push_back({a, b});
      }
    }
  }
  return pairs;
}

inline OperatorFamilyGrid<Lip> build_family(const Lip& space, const LipResolution& res = {}) {
  auto pairs = lip_pairs(space.grid(), res.pair_cap);
  const LipGrid& g = space.grid();
  const long n1 = g.shape.size() == 2 ? static_cast<long>(g.shape[1]) : 1;
  std::vector<double> rho;
  rho.reserve(pairs.size());
  for (const auto& p : pairs) {
    const long a0 = static_cast<long>(p.first) / n1, a1 = static_cast<long>(p.first) % n1;
    const long b0 = static_cast<long>(p.second) / n1, b1 = static_cast<long>(p.second) % n1;
    rho.push_back(g.step * std::hypot(static_cast<double>(a0 - b0), static_cast<double>(a1 - b1)));
  }
  if (pairs.empty() || dyadic_levels(rho) < 6) throw ConfigError("resolution too coarse: need >= 6 dyadic levels");
  return {space, std::move(pairs), std::move(rho)};
}

/// Lip_alpha seminorm over all node pairs (no subsampling).
inline double lip_seminorm_exact(const EuclideanSamples& f) {
  double best = 0.0;
  const double alpha = f.alpha();
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = i + 1; j < f.size(); ++j)
      best = std::max(best, std::abs(f[i] - f[j]) / std::pow(f.distance(i, j), alpha));
  return best;
}

}  // namespace oscillometer

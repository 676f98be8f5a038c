#pragma once

// Discretized operator families: the seminorm sup_L ||L f|| over a grid of
// operators, and the tail profile used to estimate limsup ||L f|| as the
// operator escapes to infinity (remoteness -> 0).

#include <algorithm>
#include <cmath>
#include <concepts>
#include <cstddef>
#include <limits>
#include <numeric>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "oscillometer/error.hpp"
#include "oscillometer/parallel.hpp"

namespace oscillometer {

/// A concrete space: a parameter type for the operators L, a function
/// representation, and `bind(f)` producing param -> ||L f||_Y.
template <class S>
concept OperatorSpace = requires(const S& s, const typename S::function_type& f,
                                 const typename S::param_type& p) {
  typename S::function_type;
  typename S::param_type;
  { s.bind(f)(p) } -> std::convertible_to<double>;
};

/// Number of distinct dyadic levels floor(log2 rho) among the remoteness values.
inline std::size_t dyadic_levels(const std::vector<double>& remoteness) {
  std::set<long> levels;
  for (double r : remoteness) levels.insert(static_cast<long>(std::floor(std::log2(r) + 1e-12)));
  return levels.size();
}

template <OperatorSpace Space>
class OperatorFamilyGrid {
 public:
  using param_type = typename Space::param_type;
  using function_type = typename Space::function_type;

  OperatorFamilyGrid(Space space, std::vector<param_type> params, std::vector<double> remoteness)
      : space_(std::move(space)), params_(std::move(params)), remoteness_(std::move(remoteness)) {
    if (params_.size() != remoteness_.size()) throw ConfigError("family: parameter/remoteness count mismatch");
    for (double r : remoteness_)
      if (!(r > 0.0) || !std::isfinite(r)) throw ConfigError("family: remoteness must be positive and finite");
  }

  const Space& space() const { return space_; }
  std::size_t size() const { return params_.size(); }
  bool empty() const { return params_.empty(); }
  const std::vector<param_type>& params() const { return params_; }
  const std::vector<double>& remoteness() const { return remoteness_; }
  double min_remoteness() const { return *std::min_element(remoteness_.begin(), remoteness_.end()); }

  /// ||L f||_Y for every entry, in grid order.
  std::vector<double> evaluate(const function_type& f) const {
    const auto bound = space_.bind(f);
    std::vector<double> out(params_.size());
    parallel_for(params_.size(), [&](std::size_t i) {
      const double v = bound(params_[i]);
      if (!(v >= 0.0) || !std::isfinite(v)) throw NumericalError("operator norm is not a finite non-negative number");
      out[i] = v;
    });
    return out;
  }

 private:
  Space space_;
  std::vector<param_type> params_;
  std::vector<double> remoteness_;
};

template <class Param>
struct SeminormReport {
  double value = 0.0;
  std::size_t argmax_index = 0;
  Param argmax_param{};
  std::size_t grid_size = 0;
};

/// Exact maximum over the grid; ties go to the first entry in grid order.
template <OperatorSpace Space>
SeminormReport<typename Space::param_type> seminorm_from_values(const OperatorFamilyGrid<Space>& fam,
                                                                const std::vector<double>& values) {
  if (fam.empty()) throw NumericalError("empty operator family");
  const auto it = std::max_element(values.begin(), values.end());
  const auto idx = static_cast<std::size_t>(it - values.begin());
  return {*it, idx, fam.params()[idx], fam.size()};
}

template <OperatorSpace Space>
SeminormReport<typename Space::param_type> seminorm_sup(const OperatorFamilyGrid<Space>& fam,
                                                        const typename Space::function_type& f) {
  if (fam.empty()) throw NumericalError("empty operator family");
  return seminorm_from_values(fam, fam.evaluate(f));
}

struct TailProfile {
  std::vector<double> scales;                     // t_1 > t_2 > ... > t_K
  std::vector<std::optional<double>> tail_sups;   // S(t_k); empty if no entry has rho <= t_k

  std::size_t non_empty_levels() const {
    return static_cast<std::size_t>(std::count_if(tail_sups.begin(), tail_sups.end(),
                                                  [](const auto& s) { return s.has_value(); }));
  }
};

/// Dyadic ladder t_k = finest * 2^(levels-k), k = 1..levels.
inline std::vector<double> dyadic_scales(double finest, std::size_t levels) {
  if (!(finest > 0.0) || levels == 0) throw ConfigError("scale ladder needs a positive finest scale and >= 1 level");
  std::vector<double> t(levels);
  for (std::size_t k = 0; k < levels; ++k) t[k] = std::ldexp(finest, static_cast<int>(levels - 1 - k));
  return t;
}

/// The default ladder for a family: `levels` dyadic scales ending at its
/// smallest remoteness.
template <OperatorSpace Space>
std::vector<double> default_scales(const OperatorFamilyGrid<Space>& fam, std::size_t levels = 10) {
  if (fam.empty()) throw NumericalError("empty operator family");
  return dyadic_scales(fam.min_remoteness(), levels);
}

inline void validate_scales(const std::vector<double>& scales) {
  if (scales.empty()) throw ConfigError("tail profile needs at least one scale");
  for (std::size_t k = 0; k < scales.size(); ++k) {
    if (!(scales[k] > 0.0)) throw ConfigError("tail scales must be positive");
    if (k > 0) {
      const double ratio = scales[k - 1] / scales[k];
      if (std::abs(ratio - 2.0) > 1e-9) throw ConfigError("tail scales must halve from level to level");
    }
  }
}

/// S(t_k) = max{ value_i : rho_i <= t_k }. The level sets are nested, so S is
/// non-increasing in k by construction.
inline TailProfile tail_profile_from_values(const std::vector<double>& remoteness, const std::vector<double>& values,
                                            const std::vector<double>& scales) {
  validate_scales(scales);
  std::vector<std::size_t> order(remoteness.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return remoteness[a] < remoteness[b]; });

  TailProfile profile{scales, std::vector<std::optional<double>>(scales.size())};
  // Sweep from the finest level outwards, accumulating a running maximum.
  std::size_t pos = 0;
  std::optional<double> running;
  for (std::size_t k = scales.size(); k-- > 0;) {
    const double t = scales[k] * (1.0 + 1e-12);
    while (pos < order.size() && remoteness[order[pos]] <= t) {
      const double v = values[order[pos]];
      running = running ? std::max(*running, v) : v;
      ++pos;
    }
    profile.tail_sups[k] = running;
  }
  return profile;
}

template <OperatorSpace Space>
TailProfile tail_profile(const OperatorFamilyGrid<Space>& fam, const typename Space::function_type& f,
                         const std::vector<double>& scales) {
  return tail_profile_from_values(fam.remoteness(), fam.evaluate(f), scales);
}

struct LimsupEstimate {
  double estimate = 0.0;
  double uncertainty = 0.0;
};

/// Finest non-empty tail level, with uncertainty |S_K - S_{K-1}| plus a
/// resolution allowance of `allowance_fraction * estimate`.
inline LimsupEstimate limsup_estimate(const TailProfile& profile, double allowance_fraction = 0.02) {
  std::vector<double> levels;
  for (const auto& s : profile.tail_sups)
    if (s) levels.push_back(*s);
  if (levels.size() < 3) throw NumericalError("insufficient tail");
  const double last = levels.back();
  const double prev = levels[levels.size() - 2];
  return {last, std::abs(last - prev) + allowance_fraction * last};
}

/// Tail estimates below this count as "little" for a function of M-norm `norm`.
inline double little_threshold(double norm) { return std::max(1e-2, 0.05 * norm); }

/// CSV with columns scale,tail_sup; empty levels leave tail_sup blank.
inline void write_csv(std::ostream& out, const TailProfile& profile) {
  const auto old_precision = out.precision(17);
  out << "scale,tail_sup\n";
  for (std::size_t k = 0; k < profile.scales.size(); ++k) {
    out << profile.scales[k] << ',';
    if (profile.tail_sups[k]) out << *profile.tail_sups[k];
    out << '\n';
  }
  out.precision(old_precision);
}

}  // namespace oscillometer

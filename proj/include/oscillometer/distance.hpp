#pragma once

// The distance to the little space estimated as limsup ||L f|| at infinity,
// confronted with the lower bound ||f - g||_M >= limsup ||L f|| that holds
// for every little g.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "oscillometer/family.hpp"

namespace oscillometer {

struct DistanceOptions {
  std::size_t tail_levels = 10;
  double allowance = 0.02;  // resolution allowance, fraction of the estimate
  double slack = 1e-3;      // absolute slack of the sandwich comparison
};

struct DistanceEstimate {
  double estimate = 0.0;
  double uncertainty = 0.0;
  TailProfile profile;
};

template <OperatorSpace Space>
DistanceEstimate distance_estimate(const OperatorFamilyGrid<Space>& fam, const typename Space::function_type& f,
                                   const DistanceOptions& opt = {}) {
  auto profile = tail_profile(fam, f, default_scales(fam, opt.tail_levels));
  const auto est = limsup_estimate(profile, opt.allowance);
  return {est.estimate, est.uncertainty, std::move(profile)};
}

struct UpperBound {
  std::string id;
  double value = 0.0;  // ||f - g||_M on the grid
  double tail = 0.0;   // limsup estimate of g
};

struct RejectedApproximant {
  std::string id;
  double tail = 0.0;
  std::string reason;
};

struct DistanceReport {
  double norm = 0.0;  // ||f||_M on the grid
  double limsup_estimate = 0.0;
  double uncertainty = 0.0;
  TailProfile tail_profile;
  std::vector<UpperBound> upper_bounds;
  std::vector<RejectedApproximant> rejected;
  std::optional<double> best_upper;
  double little_threshold = 0.0;
  double slack = 0.0;
  bool sandwich_ok = true;
};

template <class F>
struct NamedApproximant {
  std::string id;
  F function;
};

/// Certifies each approximant as little (tail estimate below
/// little_threshold(||f||_M) and below uncertainty + slack), then checks limsup_estimate <= ||f - g||_M +
/// uncertainty + slack for every certified g. Entries are sorted by id.
template <OperatorSpace Space>
DistanceReport sandwich_check(const OperatorFamilyGrid<Space>& fam, const typename Space::function_type& f,
                              const std::vector<NamedApproximant<typename Space::function_type>>& approximants,
                              const DistanceOptions& opt = {}) {
  const auto scales = default_scales(fam, opt.tail_levels);
  const auto values = fam.evaluate(f);
  DistanceReport rep;
  rep.norm = seminorm_from_values(fam, values).value;
  rep.tail_profile = tail_profile_from_values(fam.remoteness(), values, scales);
  const auto est = limsup_estimate(rep.tail_profile, opt.allowance);
  rep.limsup_estimate = est.estimate;
  rep.uncertainty = est.uncertainty;
  rep.little_threshold = little_threshold(rep.norm);
  rep.slack = opt.slack;

  for (const auto& g : approximants) {
    const double tail =
        limsup_estimate(tail_profile_from_values(fam.remoteness(), fam.evaluate(g.function), scales), opt.allowance)
            .estimate;
    if (!(tail < rep.little_threshold)) {
      rep.rejected.push_back({g.id, tail, "not certified little: tail estimate " + std::to_string(tail) +
                                              " >= threshold " + std::to_string(rep.little_threshold)});
      continue;
    }
    // On the grid only limsup(f) <= ||f - g||_M + tail(g) holds, so a member
    // whose own tail exceeds the comparison tolerance cannot stand in for an
    // element of the little space.
    if (tail > rep.uncertainty + opt.slack) {
      rep.rejected.push_back({g.id, tail, "tail estimate " + std::to_string(tail) +
                                              " exceeds the comparison tolerance " +
                                              std::to_string(rep.uncertainty + opt.slack)});
      continue;
    }
    const double upper = seminorm_sup(fam, difference(f, g.function)).value;
    rep.upper_bounds.push_back({g.id, upper, tail});
    if (rep.limsup_estimate > upper + rep.uncertainty + opt.slack) rep.sandwich_ok = false;
  }
  auto by_id = [](const auto& a, const auto& b) { return a.id < b.id; };
  std::sort(rep.upper_bounds.begin(), rep.upper_bounds.end(), by_id);
  std::sort(rep.rejected.begin(), rep.rejected.end(), by_id);
  for (const auto& u : rep.upper_bounds) rep.best_upper = rep.best_upper ? std::min(*rep.best_upper, u.value) : u.value;
  return rep;
}

}  // namespace oscillometer

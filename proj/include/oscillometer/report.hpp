#pragma once

// JSON serialization of reports. Objects are insertion-ordered, so output is
// byte-stable for identical inputs.

#include <string>
#include <vector>

#include <json.hpp>

#include "oscillometer/approx.hpp"
#include "oscillometer/distance.hpp"
#include "oscillometer/family.hpp"
#include "oscillometer/spaces.hpp"

namespace oscillometer::report {

using ojson = nlohmann::ordered_json;

inline ojson to_json(complex z) { return ojson::array({z.real(), z.imag()}); }

inline ojson param_json(const BmoCircle&, const Arc& a) {
  return ojson{{"midpoint", a.midpoint}, {"length", a.length}};
}
inline ojson param_json(const Bloch&, complex w) { return ojson{{"w", to_json(w)}}; }
inline ojson param_json(const QK&, complex a) { return ojson{{"a", to_json(a)}}; }
inline ojson param_json(const Weighted&, complex z) { return ojson{{"z", to_json(z)}}; }
inline ojson param_json(const RectBmo&, const ArcPair& p) {
  return ojson{{"I", param_json(BmoCircle{}, p.first)}, {"J", param_json(BmoCircle{}, p.second)}};
}
inline ojson param_json(const Lip& space, const NodePair& p) {
  const auto& g = space.grid();
  const std::size_t n1 = g.shape.size() == 2 ? g.shape[1] : 1;
  auto position = [&](std::size_t i) {
    ojson x = ojson::array();
    x.push_back(g.lower[0] + g.step * static_cast<double>(i / n1));
    if (g.shape.size() == 2) x.push_back(g.lower[1] + g.step * static_cast<double>(i % n1));
    return x;
  };
  return ojson{{"x", position(p.first)}, {"y", position(p.second)}};
}

template <OperatorSpace Space>
ojson seminorm_json(const OperatorFamilyGrid<Space>& fam, const SeminormReport<typename Space::param_type>& r) {
  return ojson{{"value", r.value},
               {"argmax_index", r.argmax_index},
               {"argmax_param", param_json(fam.space(), r.argmax_param)},
               {"grid_size", r.grid_size}};
}

inline ojson profile_json(const TailProfile& p) {
  ojson tails = ojson::array();
  for (const auto& s : p.tail_sups) tails.push_back(s ? ojson(*s) : ojson(nullptr));
  return ojson{{"scales", p.scales}, {"tail_sups", tails}};
}

inline ojson distance_json(const DistanceReport& r) {
  ojson uppers = ojson::array();
  for (const auto& u : r.upper_bounds) uppers.push_back(ojson{{"id", u.id}, {"value", u.value}, {"tail", u.tail}});
  ojson rejected = ojson::array();
  for (const auto& x : r.rejected) rejected.push_back(ojson{{"id", x.id}, {"tail", x.tail}, {"reason", x.reason}});
  return ojson{{"norm", r.norm},
               {"limsup_estimate", r.limsup_estimate},
               {"uncertainty", r.uncertainty},
               {"tail_profile", profile_json(r.tail_profile)},
               {"upper_bounds", uppers},
               {"rejected", rejected},
               {"best_upper", r.best_upper ? ojson(*r.best_upper) : ojson(nullptr)},
               {"little_threshold", r.little_threshold},
               {"slack", r.slack},
               {"sandwich_ok", r.sandwich_ok}};
}

template <class F>
ojson assumption_json(const ApproxFamily<F>& fam, const AssumptionReport& r) {
  std::vector<bool> little(r.little.begin(), r.little.end());
  return ojson{{"family", std::string(to_string(fam.kind))},
               {"parameters", fam.parameters},
               {"member_norms", r.member_norms},
               {"input_norm", r.input_norm},
               {"x_distances", r.x_distances},
               {"input_x_norm", r.input_x_norm},
               {"member_tails", r.member_tails},
               {"little", little},
               {"little_threshold", r.little_threshold},
               {"slack_used", r.slack_used},
               {"truncation_mass", fam.truncation_mass},
               {"norms_ok", r.norms_ok},
               {"convergence_ok", r.convergence_ok},
               {"verdict", r.verdict ? "pass" : "fail"}};
}

}  // namespace oscillometer::report

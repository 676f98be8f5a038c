#pragma once

// JSON configuration: space descriptors, function specs, approximation
// families and the run config read by the command-line tool.

#include <cmath>
#include <concepts>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "oscillometer/approx.hpp"
#include "oscillometer/builtins.hpp"
#include "oscillometer/spaces.hpp"

namespace oscillometer::config {

using nlohmann::json;

namespace detail {

inline void require_object(const json& j, const std::string& where) {
  if (!j.is_object()) throw ConfigError(where + ": expected a JSON object");
}

/// Rejects keys outside `allowed`, so misspelled options do not pass silently.
inline void allow_keys(const json& j, const std::string& where, std::initializer_list<const char*> allowed) {
  require_object(j, where);
  for (const auto& [key, _] : j.items()) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || key == a;
    if (!ok) throw ConfigError(where + ": unknown key '" + key + "'");
  }
}

inline double number(const json& j, const std::string& where) {
  if (!j.is_number()) throw ConfigError(where + ": expected a number");
  return j.get<double>();
}

inline std::size_t natural(const json& j, const std::string& where) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 0) throw ConfigError(where + ": expected a non-negative integer");
  return j.get<std::size_t>();
}

inline bool boolean(const json& j, const std::string& where) {
  if (!j.is_boolean()) throw ConfigError(where + ": expected true or false");
  return j.get<bool>();
}

inline std::string text(const json& j, const std::string& where) {
  if (!j.is_string()) throw ConfigError(where + ": expected a string");
  return j.get<std::string>();
}

/// A complex number as [re, im] or a plain real.
inline complex complex_value(const json& j, const std::string& where) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return {j[0].get<double>(), j[1].get<double>()};
  throw ConfigError(where + ": expected a number or [re, im]");
}

inline std::vector<complex> complex_array(const json& j, const std::string& where) {
  if (!j.is_array()) throw ConfigError(where + ": expected an array");
  std::vector<complex> out;
  out.reserve(j.size());
  for (const auto& v : j) out.push_back(complex_value(v, where));
  return out;
}

inline std::vector<double> real_array(const json& j, const std::string& where) {
  if (!j.is_array()) throw ConfigError(where + ": expected an array");
  std::vector<double> out;
  for (const auto& v : j) out.push_back(number(v, where));
  return out;
}

template <class T, class Get>
void optional_field(const json& j, const char* key, T& target, Get get) {
  if (j.contains(key)) target = get(j.at(key), key);
}

}  // namespace detail

inline json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError("invalid JSON in " + path.string() + ": " + e.what());
  }
}

inline SpaceDescriptor parse_space(const json& j) {
  using namespace detail;
  allow_keys(j, "space", {"space", "p", "K", "quadrature", "weight", "alpha", "domain", "resolution", "tail_levels",
                          "allowance"});
  if (!j.contains("space")) throw ConfigError("space: missing 'space' name");
  SpaceDescriptor d = default_descriptor(space_tag_from_string(text(j.at("space"), "space")));
  optional_field(j, "p", d.p, number);
  optional_field(j, "alpha", d.alpha, number);
  optional_field(j, "tail_levels", d.tail_levels, natural);
  optional_field(j, "allowance", d.allowance, number);
  if (j.contains("K")) {
    const auto& k = j.at("K");
    allow_keys(k, "K", {"name", "exponent"});
    double exponent = 1.0;
    optional_field(k, "exponent", exponent, number);
    d.kernel = builtin::kernel(k.contains("name") ? text(k.at("name"), "K.name") : "power", exponent);
  }
  if (j.contains("quadrature")) {
    const auto& q = j.at("quadrature");
    allow_keys(q, "quadrature", {"radial", "angular"});
    optional_field(q, "radial", d.rule.radial_nodes, natural);
    optional_field(q, "angular", d.rule.angular_nodes, natural);
  }
  if (j.contains("weight")) {
    const auto& w = j.at("weight");
    allow_keys(w, "weight", {"name", "exponent", "inner"});
    double exponent = 1.0, inner = 0.0;
    optional_field(w, "exponent", exponent, number);
    optional_field(w, "inner", inner, number);
    d.weight = builtin::weight(w.contains("name") ? text(w.at("name"), "weight.name") : "one_minus_r2", exponent, inner);
  }
  if (j.contains("domain")) {
    const auto& dom = j.at("domain");
    allow_keys(dom, "domain", {"lower", "upper", "nodes"});
    optional_field(dom, "lower", d.lip_domain.lower, real_array);
    optional_field(dom, "upper", d.lip_domain.upper, real_array);
    if (dom.contains("nodes")) {
      d.lip_domain.nodes.clear();
      for (const auto& n : dom.at("nodes")) d.lip_domain.nodes.push_back(natural(n, "domain.nodes"));
    }
  }
  if (j.contains("resolution")) {
    const auto& r = j.at("resolution");
    switch (d.tag) {
      case SpaceTag::bmo_circle:
        allow_keys(r, "resolution", {"samples", "midpoints", "levels"});
        optional_field(r, "samples", d.bmo.samples, natural);
        optional_field(r, "midpoints", d.bmo.midpoints, natural);
        optional_field(r, "levels", d.bmo.levels, natural);
        break;
      case SpaceTag::bloch:
      case SpaceTag::weighted:
        allow_keys(r, "resolution", {"shells", "angles", "include_origin"});
        optional_field(r, "shells", d.disc.shells, natural);
        optional_field(r, "angles", d.disc.angles, natural);
        optional_field(r, "include_origin", d.disc.include_origin, boolean);
        break;
      case SpaceTag::qk:
        allow_keys(r, "resolution", {"shells", "subdivisions", "angles", "include_origin"});
        optional_field(r, "shells", d.qk.shells, natural);
        optional_field(r, "subdivisions", d.qk.subdivisions, natural);
        optional_field(r, "angles", d.qk.angles, natural);
        optional_field(r, "include_origin", d.qk.include_origin, boolean);
        break;
      case SpaceTag::lip:
        allow_keys(r, "resolution", {"pair_cap"});
        optional_field(r, "pair_cap", d.lip.pair_cap, natural);
        break;
      case SpaceTag::rect_bmo:
        allow_keys(r, "resolution", {"samples", "midpoints", "levels"});
        optional_field(r, "samples", d.rect.samples, natural);
        optional_field(r, "midpoints", d.rect.midpoints, natural);
        optional_field(r, "levels", d.rect.levels, natural);
        break;
    }
  }
  check_descriptor(d);
  return d;
}

namespace detail {

inline AnyFunction parse_builtin(const json& j, const SpaceDescriptor& d) {
  const std::string name = text(j.at("name"), "function.name");
  const bool analytic = d.tag == SpaceTag::bloch || d.tag == SpaceTag::qk || d.tag == SpaceTag::weighted;
  auto lift = [&](TaylorFunction f) -> AnyFunction {
    if (d.tag == SpaceTag::weighted) return WeightedFunction{complex{}, std::move(f)};
    return f;
  };
  if (analytic && name == "monomial") {
    allow_keys(j, "function", {"kind", "name", "degree"});
    return lift(builtin::monomial(j.contains("degree") ? natural(j.at("degree"), "degree") : 1));
  }
  if (analytic && name == "lacunary") {
    allow_keys(j, "function", {"kind", "name", "levels"});
    return lift(builtin::lacunary(j.contains("levels") ? natural(j.at("levels"), "levels") : 4));
  }
  if (analytic && name == "polynomial" && j.contains("coeffs")) {
    allow_keys(j, "function", {"kind", "name", "coeffs"});
    return lift(TaylorFunction::polynomial(complex_array(j.at("coeffs"), "coeffs")));
  }
  if (analytic && name == "log_singular" && j.contains("terms")) {
    allow_keys(j, "function", {"kind", "name", "terms"});
    return lift(builtin::log_singular(natural(j.at("terms"), "terms")));
  }
  if (d.tag == SpaceTag::bmo_circle && name == "cos" && j.contains("frequency")) {
    allow_keys(j, "function", {"kind", "name", "frequency"});
    return builtin::cosine(d.bmo.samples, natural(j.at("frequency"), "frequency"));
  }
  if (d.tag == SpaceTag::lip && name == "holder_cusp" && j.contains("exponent")) {
    allow_keys(j, "function", {"kind", "name", "exponent"});
    return builtin::holder_cusp(d.lip_domain, d.alpha, number(j.at("exponent"), "exponent"));
  }
  allow_keys(j, "function", {"kind", "name"});
  return builtin::make(name, d);
}

inline AnyFunction parse_taylor(const json& j, const SpaceDescriptor& d) {
  allow_keys(j, "function", {"kind", "coeffs", "complete", "constant"});
  if (!j.contains("coeffs")) throw ConfigError("function: taylor input needs 'coeffs' (a_1..a_N)");
  auto coeffs = complex_array(j.at("coeffs"), "coeffs");
  const bool complete = j.contains("complete") ? boolean(j.at("complete"), "complete") : true;
  TaylorFunction f(std::move(coeffs), std::nullopt, complete);
  if (d.tag == SpaceTag::weighted) {
    const complex c = j.contains("constant") ? complex_value(j.at("constant"), "constant") : complex{};
    return WeightedFunction{c, std::move(f)};
  }
  if (j.contains("constant")) throw ConfigError("function: 'constant' is only allowed for the weighted space");
  return f;
}

inline AnyFunction parse_samples(const json& j, const SpaceDescriptor& d) {
  allow_keys(j, "function", {"kind", "values"});
  if (!j.contains("values")) throw ConfigError("function: samples input needs 'values'");
  const auto& v = j.at("values");
  switch (d.tag) {
    case SpaceTag::bmo_circle: return PeriodicSamples(complex_array(v, "values"));
    case SpaceTag::rect_bmo: {
      // Either N rows of N samples or a flat row-major list of N*N.
      std::vector<complex> flat;
      std::size_t n = 0;
      if (v.is_array() && !v.empty() && v[0].is_array() && !(v[0].size() == 2 && v[0][0].is_number())) {
        n = v.size();
        for (const auto& row : v) {
          auto r = complex_array(row, "values");
          if (r.size() != n) throw ConfigError("function: torus samples must be N x N");
          flat.insert(flat.end(), r.begin(), r.end());
        }
      } else {
        flat = complex_array(v, "values");
        n = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(flat.size()))));
      }
      return TorusSamples(n, std::move(flat));
    }
    case SpaceTag::lip: {
      auto flat = real_array(v, "values");
      const auto& dom = d.lip_domain;
      const auto grid = EuclideanSamples::on_box(dom.lower, dom.upper, dom.nodes, d.alpha, [](double) { return 0.0; });
      if (flat.size() != grid.size()) throw ConfigError("function: sample count does not match the domain nodes");
      return grid.with_values(std::move(flat));
    }
    default: throw ConfigError("function: samples input is not available for space " + std::string(to_string(d.tag)));
  }
}

}  // namespace detail

/// Function block: {"kind": "builtin"|"taylor"|"samples", ...} or
/// {"file": path} naming a JSON file with such a block (relative to `base`).
inline AnyFunction parse_function(const json& j, const SpaceDescriptor& d, const std::filesystem::path& base = {}) {
  using namespace detail;
  require_object(j, "function");
  if (j.contains("file")) {
    allow_keys(j, "function", {"file"});
    std::filesystem::path p = text(j.at("file"), "function.file");
    if (p.is_relative()) p = base / p;
    return parse_function(read_json_file(p), d, p.parent_path());
  }
  if (!j.contains("kind")) throw ConfigError("function: missing 'kind'");
  const std::string kind = text(j.at("kind"), "function.kind");
  if (kind == "builtin") {
    if (!j.contains("name")) throw ConfigError("function: builtin needs 'name'");
    return parse_builtin(j, d);
  }
  if (kind == "taylor") return parse_taylor(j, d);
  if (kind == "samples") return parse_samples(j, d);
  throw ConfigError("function: unknown kind '" + kind + "'");
}

struct LadderSpec {
  std::string type;               // dyadic_r | dyadic_n | dyadic_t | values
  std::size_t levels = 0;
  std::optional<double> finest;   // dyadic_t; default: the grid step
  std::vector<double> values;
};

struct FamilySpec {
  ApproxKind kind{};
  LadderSpec ladder;
  LipSmoothOptions lip;
};

inline LadderSpec default_ladder(ApproxKind kind) {
  switch (kind) {
    case ApproxKind::fejer: return {"dyadic_n", 10, std::nullopt, {}};
    case ApproxKind::lip_smooth: return {"dyadic_t", 10, std::nullopt, {}};
    default: return {"dyadic_r", 16, std::nullopt, {}};
  }
}

inline FamilySpec parse_family(const json& j) {
  using namespace detail;
  allow_keys(j, "family", {"kind", "ladder", "padding_factor"});
  if (!j.contains("kind")) throw ConfigError("family: missing 'kind'");
  FamilySpec spec;
  spec.kind = approx_kind_from_string(text(j.at("kind"), "family.kind"));
  spec.ladder = default_ladder(spec.kind);
  optional_field(j, "padding_factor", spec.lip.padding_factor, number);
  if (j.contains("ladder")) {
    const auto& l = j.at("ladder");
    allow_keys(l, "ladder", {"type", "levels", "finest", "values"});
    optional_field(l, "type", spec.ladder.type, text);
    optional_field(l, "levels", spec.ladder.levels, natural);
    if (l.contains("finest")) spec.ladder.finest = number(l.at("finest"), "ladder.finest");
    optional_field(l, "values", spec.ladder.values, real_array);
  }
  const auto& t = spec.ladder.type;
  if (t != "dyadic_r" && t != "dyadic_n" && t != "dyadic_t" && t != "values")
    throw ConfigError("ladder: unknown type '" + t + "'");
  if (t == "values" && spec.ladder.values.empty()) throw ConfigError("ladder: 'values' ladder needs values");
  return spec;
}

inline std::vector<double> ladder_values(const LadderSpec& l, double grid_step) {
  if (l.type == "values") return l.values;
  if (l.levels == 0) throw ConfigError("ladder: levels must be positive");
  if (l.type == "dyadic_r") return dyadic_r_ladder(l.levels);
  if (l.type == "dyadic_n") return dyadic_n_ladder(l.levels);
  return dyadic_t_ladder(l.finest ? *l.finest : grid_step, l.levels);
}

namespace detail {

inline void check_kind(const FamilySpec& spec, std::initializer_list<ApproxKind> allowed, const char* repr) {
  for (auto k : allowed)
    if (k == spec.kind) return;
  throw ConfigError("family " + std::string(to_string(spec.kind)) + " does not apply to " + repr);
}

}  // namespace detail

inline ApproxFamily<PeriodicSamples> build_approx(const FamilySpec& s, const PeriodicSamples& f) {
  detail::check_kind(s, {ApproxKind::poisson_circle}, "periodic samples");
  return poisson_circle_family(f, ladder_values(s.ladder, 0.0));
}

inline ApproxFamily<TorusSamples> build_approx(const FamilySpec& s, const TorusSamples& f) {
  detail::check_kind(s, {ApproxKind::poisson_torus}, "torus samples");
  return poisson_torus_family(f, ladder_values(s.ladder, 0.0));
}

template <class F>
  requires std::same_as<F, TaylorFunction> || std::same_as<F, WeightedFunction>
ApproxFamily<F> build_approx(const FamilySpec& s, const F& f) {
  detail::check_kind(s, {ApproxKind::dilation, ApproxKind::fejer}, "analytic functions");
  if (s.kind == ApproxKind::dilation) return dilation_family(f, ladder_values(s.ladder, 0.0));
  return fejer_family(f, ladder_values(s.ladder, 0.0));
}

inline ApproxFamily<EuclideanSamples> build_approx(const FamilySpec& s, const EuclideanSamples& f) {
  detail::check_kind(s, {ApproxKind::lip_smooth}, "euclidean samples");
  return lip_smooth_family(f, ladder_values(s.ladder, f.step()), s.lip);
}

/// The family used for a space when a check asks for its default approximants.
inline FamilySpec default_family(SpaceTag tag) {
  FamilySpec s;
  switch (tag) {
    case SpaceTag::bmo_circle: s.kind = ApproxKind::poisson_circle; break;
    case SpaceTag::bloch:
    case SpaceTag::qk:
    case SpaceTag::weighted: s.kind = ApproxKind::dilation; break;
    case SpaceTag::lip: s.kind = ApproxKind::lip_smooth; break;
    case SpaceTag::rect_bmo: s.kind = ApproxKind::poisson_torus; break;
  }
  s.ladder = default_ladder(s.kind);
  return s;
}

struct InvarianceSpec {
  complex a{0.3, 0.2};
  complex lambda{1.0, 0.0};
  double tolerance = 0.02;
};

struct ContractivitySpec {
  std::size_t count = 50;
  std::size_t degree = 12;
  std::vector<std::size_t> n{2, 4, 8};
};

struct RunConfig {
  std::string task;   // norm | distance | assumption-check | invariance-check | fejer-contractivity
  json space;
  json function;
  std::optional<json> family;
  double slack = 1e-3;
  double x_tolerance = 1e-2;
  InvarianceSpec invariance;
  ContractivitySpec contractivity;
  std::string report_name;
  std::string profile_name;
  std::optional<std::uint64_t> seed;
  std::filesystem::path base;   // directory of the config file
};

inline RunConfig parse_run(const json& j, const std::filesystem::path& base = {}) {
  using namespace detail;
  allow_keys(j, "config", {"task", "space", "function", "family", "slack", "x_tolerance", "invariance",
                           "contractivity", "output", "seed"});
  RunConfig rc;
  rc.base = base;
  optional_field(j, "task", rc.task, text);
  if (!j.contains("space")) throw ConfigError("config: missing 'space' block");
  rc.space = j.at("space");
  if (j.contains("function")) rc.function = j.at("function");
  if (j.contains("family")) rc.family = j.at("family");
  optional_field(j, "slack", rc.slack, number);
  optional_field(j, "x_tolerance", rc.x_tolerance, number);
  if (!(rc.slack >= 0.0)) throw ConfigError("config: slack must be non-negative");
  if (!(rc.x_tolerance > 0.0)) throw ConfigError("config: x_tolerance must be positive");
  if (j.contains("invariance")) {
    const auto& v = j.at("invariance");
    allow_keys(v, "invariance", {"a", "lambda", "tolerance"});
    optional_field(v, "a", rc.invariance.a, complex_value);
    optional_field(v, "lambda", rc.invariance.lambda, complex_value);
    optional_field(v, "tolerance", rc.invariance.tolerance, number);
  }
  if (j.contains("contractivity")) {
    const auto& c = j.at("contractivity");
    allow_keys(c, "contractivity", {"count", "degree", "n"});
    optional_field(c, "count", rc.contractivity.count, natural);
    optional_field(c, "degree", rc.contractivity.degree, natural);
    if (c.contains("n")) {
      rc.contractivity.n.clear();
      for (const auto& n : c.at("n")) rc.contractivity.n.push_back(natural(n, "contractivity.n"));
    }
  }
  if (j.contains("output")) {
    const auto& o = j.at("output");
    allow_keys(o, "output", {"report", "profile"});
    optional_field(o, "report", rc.report_name, text);
    optional_field(o, "profile", rc.profile_name, text);
  }
  if (j.contains("seed")) {
    if (!j.at("seed").is_number_unsigned()) throw ConfigError("config: seed must be a non-negative integer");
    rc.seed = j.at("seed").get<std::uint64_t>();
  }
  return rc;
}

}  // namespace oscillometer::config

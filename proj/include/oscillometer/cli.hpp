#pragma once

// Command implementations behind the oscillometer tool. Each command builds
// its report in memory; files are written only after the computation
// succeeded, each through a temporary file and an atomic rename.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include <json.hpp>

#include "oscillometer/approx.hpp"
#include "oscillometer/config.hpp"
#include "oscillometer/distance.hpp"
#include "oscillometer/report.hpp"
#include "oscillometer/spaces.hpp"

namespace oscillometer::cli {

using report::ojson;

enum ExitCode : int { ok = 0, config_error = 2, numerical_error = 3, check_failed = 4 };

struct Outcome {
  int code = ok;
  ojson report;
  std::optional<std::string> profile_csv;
};

namespace detail {

inline AnyFunction load_function(const config::RunConfig& rc, const SpaceDescriptor& d) {
  if (rc.function.is_null()) throw ConfigError("config: missing 'function' block");
  return config::parse_function(rc.function, d, rc.base);
}

inline ojson header(const std::string& task, const SpaceDescriptor& d) {
  return ojson{{"task", task}, {"space", std::string(to_string(d.tag))}};
}

inline std::string csv(const TailProfile& p) {
  std::ostringstream out;
  write_csv(out, p);
  return out.str();
}

template <class F>
std::vector<NamedApproximant<F>> named_members(const ApproxFamily<F>& fam) {
  std::vector<NamedApproximant<F>> out;
  for (std::size_t i = 0; i < fam.members.size(); ++i) {
    char id[64];
    std::snprintf(id, sizeof id, "%s[%02zu]", std::string(to_string(fam.kind)).c_str(), i);
    out.push_back({id, fam.members[i]});
  }
  return out;
}

}  // namespace detail

inline Outcome cmd_norm(const config::RunConfig& rc) {
  const auto d = config::parse_space(rc.space);
  const auto f = detail::load_function(rc, d);
  Outcome out;
  out.report = detail::header("norm", d);
  with_family(d, f, [&](const auto& fam, const auto& g) {
    out.report.update(report::seminorm_json(fam, seminorm_sup(fam, g)));
    out.report["x_norm"] = fam.space().x_norm(g);
  });
  return out;
}

inline Outcome cmd_distance(const config::RunConfig& rc) {
  const auto d = config::parse_space(rc.space);
  const auto f = detail::load_function(rc, d);
  const DistanceOptions opt{d.tail_levels, d.allowance, rc.slack};
  Outcome out;
  out.report = detail::header("distance", d);
  with_family(d, f, [&](const auto& fam, const auto& g) {
    using F = std::decay_t<decltype(g)>;
    std::vector<NamedApproximant<F>> approximants;
    if (rc.family) {
      const auto spec = config::parse_family(*rc.family);
      const auto approx = config::build_approx(spec, g);
      approximants = detail::named_members(approx);
      out.report["family"] = std::string(to_string(approx.kind));
      out.report["parameters"] = approx.parameters;
    }
    const auto rep = sandwich_check(fam, g, approximants, opt);
    out.report.update(report::distance_json(rep));
    out.profile_csv = detail::csv(rep.tail_profile);
    if (!rep.sandwich_ok) out.code = check_failed;
  });
  return out;
}

namespace detail {

inline Outcome assumption_check_task(const config::RunConfig& rc) {
  const auto d = config::parse_space(rc.space);
  const auto f = load_function(rc, d);
  const auto spec = rc.family ? config::parse_family(*rc.family) : config::default_family(d.tag);
  const AssumptionOptions opt{rc.slack, rc.x_tolerance, d.tail_levels, d.allowance};
  Outcome out;
  out.report = header("assumption-check", d);
  with_family(d, f, [&](const auto& fam, const auto& g) {
    const auto approx = config::build_approx(spec, g);
    const auto rep = assumption_check(fam, g, approx, opt);
    out.report.update(report::assumption_json(approx, rep));
    if (d.tag == SpaceTag::lip)
      out.report["note"] = "X-convergence is measured in the sup norm on the domain grid, not in a Sobolev norm";
    if (!rep.verdict) out.code = check_failed;
  });
  return out;
}

inline QK qk_space(const SpaceDescriptor& d) {
  if (d.tag != SpaceTag::qk) throw ConfigError("this check needs space 'qk'");
  return QK(d.kernel, d.rule);
}

inline Outcome invariance_check_task(const config::RunConfig& rc) {
  const auto d = config::parse_space(rc.space);
  const auto space = qk_space(d);
  const auto f = expect_representation<TaylorFunction>(load_function(rc, d), d.tag);
  const auto& inv = rc.invariance;
  const auto g = compose_mobius(f, inv.a, inv.lambda);
  const auto fam = build_family(space, d.qk);
  const double nf = seminorm_sup(fam, f).value;
  const double ng = seminorm_sup(fam, g).value;
  const double deviation = nf > 0.0 ? std::abs(ng - nf) / nf : std::abs(ng);
  Outcome out;
  out.report = header("invariance-check", d);
  out.report.update(ojson{{"a", report::to_json(inv.a)},
                          {"lambda", report::to_json(inv.lambda)},
                          {"norm", nf},
                          {"composed_norm", ng},
                          {"relative_deviation", deviation},
                          {"tolerance", inv.tolerance},
                          {"verdict", deviation <= inv.tolerance ? "pass" : "fail"}});
  if (deviation > inv.tolerance) out.code = check_failed;
  return out;
}

/// Random polynomials with coefficients uniform in the unit box, degree 1..max.
inline std::vector<TaylorFunction> random_polynomials(std::uint64_t seed, std::size_t count, std::size_t max_degree) {
  if (max_degree == 0) throw ConfigError("contractivity: degree must be >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> degree(1, max_degree);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::vector<TaylorFunction> out;
  for (std::size_t i = 0; i < count; ++i) {
    std::vector<complex> a(degree(rng));
    for (auto& c : a) {
      const double re = unit(rng);
      c = {re, unit(rng)};
    }
    out.push_back(TaylorFunction::polynomial(std::move(a)));
  }
  return out;
}

inline Outcome fejer_contractivity_task(const config::RunConfig& rc, std::uint64_t seed) {
  const auto d = config::parse_space(rc.space);
  const auto fam = build_family(qk_space(d), d.qk);
  const auto& c = rc.contractivity;
  std::size_t violations = 0, checks = 0;
  double worst = 0.0;
  for (const auto& f : random_polynomials(seed, c.count, c.degree)) {
    const double nf = seminorm_sup(fam, f).value;
    for (auto n : c.n) {
      const double nn = seminorm_sup(fam, fejer_taylor(f, n)).value;
      ++checks;
      if (nf > 0.0) worst = std::max(worst, nn / nf);
      if (nn > nf * (1.0 + rc.slack)) ++violations;
    }
  }
  Outcome out;
  out.report = header("fejer-contractivity", d);
  out.report.update(ojson{{"seed", seed},
                          {"polynomials", c.count},
                          {"max_degree", c.degree},
                          {"n", c.n},
                          {"checks", checks},
                          {"violations", violations},
                          {"worst_ratio", worst},
                          {"slack", rc.slack},
                          {"verdict", violations == 0 ? "pass" : "fail"}});
  if (violations > 0) out.code = check_failed;
  return out;
}

}  // namespace detail

inline Outcome cmd_check(const config::RunConfig& rc, std::uint64_t seed = 0) {
  const std::string task = rc.task.empty() ? "assumption-check" : rc.task;
  if (task == "assumption-check") return detail::assumption_check_task(rc);
  if (task == "invariance-check") return detail::invariance_check_task(rc);
  if (task == "fejer-contractivity") return detail::fejer_contractivity_task(rc, seed);
  throw ConfigError("check: unknown task '" + task + "'");
}

/// Writes `content` to `path` via a temporary file in the same directory.
inline void write_atomic(const std::filesystem::path& path, const std::string& content) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw ConfigError("cannot write " + tmp.string());
    out << content;
    out.flush();
    if (!out) {
      std::filesystem::remove(tmp);
      throw ConfigError("cannot write " + tmp.string());
    }
  }
  std::filesystem::rename(tmp, path);
}

struct Invocation {
  std::string command;   // norm | distance | check
  std::filesystem::path config;
  std::filesystem::path out_dir = ".";
  std::optional<std::uint64_t> seed;
};

/// Runs one command and returns its exit code; diagnostics go to `err`.
inline int run(const Invocation& inv, std::ostream& err) {
  try {
    auto rc = config::parse_run(config::read_json_file(inv.config), inv.config.parent_path());
    const std::uint64_t seed = inv.seed ? *inv.seed : rc.seed.value_or(0);

    Outcome out;
    std::string default_name;
    if (inv.command == "norm" || inv.command == "distance") {
      if (!rc.task.empty() && rc.task != inv.command)
        throw ConfigError("config task '" + rc.task + "' does not match command '" + inv.command + "'");
      out = inv.command == "norm" ? cmd_norm(rc) : cmd_distance(rc);
      default_name = inv.command + "_report.json";
    } else if (inv.command == "check") {
      if (rc.task == "norm" || rc.task == "distance")
        throw ConfigError("config task '" + rc.task + "' does not match command 'check'");
      out = cmd_check(rc, seed);
      default_name = "check_report.json";
    } else {
      throw ConfigError("unknown command '" + inv.command + "'");
    }

    std::filesystem::create_directories(inv.out_dir);
    write_atomic(inv.out_dir / (rc.report_name.empty() ? default_name : rc.report_name), out.report.dump(2) + "\n");
    if (out.profile_csv)
      write_atomic(inv.out_dir / (rc.profile_name.empty() ? "tail_profile.csv" : rc.profile_name), *out.profile_csv);
    if (out.code == check_failed) err << "oscillometer: check failed\n";
    return out.code;
  } catch (const ConfigError& e) {
    err << "oscillometer: " << e.what() << '\n';
    return config_error;
  } catch (const nlohmann::json::exception& e) {
    err << "oscillometer: " << e.what() << '\n';
    return config_error;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "oscillometer: " << e.what() << '\n';
    return config_error;
  } catch (const NumericalError& e) {
    err << "oscillometer: " << e.what() << '\n';
    return numerical_error;
  } catch (const std::exception& e) {
    err << "oscillometer: " << e.what() << '\n';
    return numerical_error;
  }
}

}  // namespace oscillometer::cli

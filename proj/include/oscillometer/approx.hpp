#pragma once

// Approximation families f_n -> f whose members lie in the little space:
// Poisson smoothing on the circle and torus, dilations and Fejer means of
// Taylor series, and McShane extension + Poisson mollification on a box.
// assumption_check() tests sup_n ||f_n||_M <= ||f||_M and f_n -> f in X.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "oscillometer/family.hpp"
#include "oscillometer/fourier.hpp"
#include "oscillometer/funcrep.hpp"
#include "oscillometer/parallel.hpp"
#include "oscillometer/spaces/lip.hpp"
#include "oscillometer/spaces/weighted.hpp"

namespace oscillometer {

// ---------------------------------------------------------------------------
// Poisson smoothing on the circle and the torus
// ---------------------------------------------------------------------------

/// f * P_r via the multiplier r^|k| on DFT mode k. The Nyquist mode gets r^(N/2).
inline PeriodicSamples poisson_circle(const PeriodicSamples& f, double r) {
  if (!(r >= 0.0 && r < 1.0)) throw ConfigError("poisson_circle: r must lie in [0,1)");
  const std::size_t n = f.size();
  std::vector<complex> v(f.values().begin(), f.values().end());
  fourier::transform(v, fourier::Direction::forward);
  for (std::size_t k = 0; k < n; ++k)
    v[k] *= std::pow(r, static_cast<double>(std::labs(fourier::signed_frequency(k, n)))) / static_cast<double>(n);
  fourier::transform(v, fourier::Direction::backward);
  return PeriodicSamples(std::move(v));
}

/// P_r(zeta) * P_r(lambda) * F via the multiplier r^(|j|+|k|).
inline TorusSamples poisson_torus2(const TorusSamples& f, double r) {
  if (!(r >= 0.0 && r < 1.0)) throw ConfigError("poisson_torus2: r must lie in [0,1)");
  const std::size_t n = f.size();
  std::vector<complex> v(f.values().begin(), f.values().end());
  fourier::transform_2d(v, n, n, fourier::Direction::forward);
  std::vector<double> mult(n);
  for (std::size_t k = 0; k < n; ++k)
    mult[k] = std::pow(r, static_cast<double>(std::labs(fourier::signed_frequency(k, n))));
  const double norm = 1.0 / static_cast<double>(n * n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) v[j * n + k] *= mult[j] * mult[k] * norm;
  fourier::transform_2d(v, n, n, fourier::Direction::backward);
  return TorusSamples(n, std::move(v));
}

// ---------------------------------------------------------------------------
// Dilations and Fejer means
// ---------------------------------------------------------------------------

/// f_r(z) = f(rz): a_k -> r^k a_k, closed forms composed with z -> rz.
inline TaylorFunction dilate(const TaylorFunction& f, double r) {
  if (!(r >= 0.0 && r <= 1.0)) throw ConfigError("dilate: r must lie in [0,1]");
  if (r == 1.0) return f;
  std::vector<complex> coeffs(f.coefficients().begin(), f.coefficients().end());
  double rk = 1.0;
  for (auto& a : coeffs) {
    rk *= r;
    a *= rk;
  }
  if (r == 0.0) return TaylorFunction::polynomial(std::vector<complex>(coeffs.size()));
  std::optional<ClosedForm> closed;
  if (const auto& cf = f.closed_form()) {
    closed = ClosedForm{[r, v = cf->value](complex z) { return v(r * z); },
                        [r, d = cf->derivative](complex z) { return r * d(r * z); }};
  }
  return TaylorFunction(std::move(coeffs), std::move(closed), f.complete());
}

inline WeightedFunction dilate(const WeightedFunction& f, double r) { return {f.constant, dilate(f.part, r)}; }

/// f_n(z) = sum_{k=1}^n (1 - k/(n+1)) a_k z^k.
inline TaylorFunction fejer_taylor(const TaylorFunction& f, std::size_t n) {
  if (n == 0) throw ConfigError("fejer_taylor: n must be positive");
  if (!f.complete() && f.degree() < n)
    throw ConfigError("fejer_taylor: coefficients unavailable up to n = " + std::to_string(n));
  // Terms beyond the degree of a polynomial are zero; drop them.
  const std::size_t m = f.complete() ? std::min(n, f.degree()) : n;
  std::vector<complex> coeffs(m);
  for (std::size_t k = 1; k <= m; ++k)
    coeffs[k - 1] = (1.0 - static_cast<double>(k) / static_cast<double>(n + 1)) * f.coefficient(k);
  return TaylorFunction::polynomial(std::move(coeffs));
}

inline WeightedFunction fejer_taylor(const WeightedFunction& f, std::size_t n) {
  return {f.constant, fejer_taylor(f.part, n)};
}

// ---------------------------------------------------------------------------
// McShane extension and Poisson mollification on R^n, n = 1, 2
// ---------------------------------------------------------------------------

struct LipSmoothOptions {
  double padding_factor = 4.0;    // padding width per side, in domain diameters
  std::optional<double> lambda;   // Hoelder constant of the extension; default: grid seminorm
  std::size_t pair_cap = 1'000'000;
};

struct LipSmoothed {
  EuclideanSamples samples;
  double truncation_mass = 0.0;   // Poisson kernel mass outside the padded support
  double lambda = 0.0;
  std::size_t padding_nodes = 0;
};

namespace detail {

/// Values of the McShane extension at the `pad` nodes right of a 1-D grid,
/// x_i = last node + (i+1) h. The cost f_j + lambda (x - y_j)^alpha is
/// inverse-Monge for the concave power, so the leftmost minimizer moves left
/// as x moves right; divide and conquer needs O((n + pad) log pad) evaluations.
inline std::vector<double> mcshane_right(const std::vector<double>& f, std::size_t pad, double lambda,
                                         double alpha, double h) {
  const long n = static_cast<long>(f.size());
  std::vector<double> out(pad);
  auto cost = [&](long i, long j) {
    return f[static_cast<std::size_t>(j)] + lambda * std::pow(static_cast<double>(n + i - j) * h, alpha);
  };
  struct Task {
    long lo, hi, jlo, jhi;
  };
  std::vector<Task> stack{{0, static_cast<long>(pad), 0, n - 1}};
  while (!stack.empty()) {
    const Task t = stack.back();
    stack.pop_back();
    if (t.lo >= t.hi) continue;
    const long mid = t.lo + (t.hi - t.lo) / 2;
    long best_j = t.jlo;
    double best = cost(mid, t.jlo);
    for (long j = t.jlo + 1; j <= t.jhi; ++j) {
      const double c = cost(mid, j);
      if (c < best) best = c, best_j = j;
    }
    out[static_cast<std::size_t>(mid)] = best;
    stack.push_back({t.lo, mid, best_j, t.jhi});
    stack.push_back({mid + 1, t.hi, t.jlo, best_j});
  }
  return out;
}

}  // namespace detail

/// The McShane extension f^(x) = min_y (f(y) + lambda |x - y|^alpha) on the
/// grid padded by `pad` nodes per side; f^ = f on the original nodes.
/// Row-major over the padded shape.
inline std::vector<double> mcshane_extend(const EuclideanSamples& f, std::size_t pad, double lambda) {
  const double alpha = f.alpha(), h = f.step();
  if (f.dimension() == 1) {
    std::vector<double> vals(f.values().begin(), f.values().end());
    const auto right = detail::mcshane_right(vals, pad, lambda, alpha, h);
    std::reverse(vals.begin(), vals.end());
    auto left = detail::mcshane_right(vals, pad, lambda, alpha, h);
    std::reverse(left.begin(), left.end());
    std::vector<double> out;
    out.reserve(f.size() + 2 * pad);
    out.insert(out.end(), left.begin(), left.end());
    out.insert(out.end(), f.values().begin(), f.values().end());
    out.insert(out.end(), right.begin(), right.end());
    return out;
  }
  const std::size_t n0 = f.shape()[0], n1 = f.shape()[1];
  const std::size_t m0 = n0 + 2 * pad, m1 = n1 + 2 * pad;
  std::vector<double> out(m0 * m1);
  parallel_for(m0 * m1, [&](std::size_t idx) {
    const long i0 = static_cast<long>(idx / m1) - static_cast<long>(pad);
    const long i1 = static_cast<long>(idx % m1) - static_cast<long>(pad);
    if (i0 >= 0 && i1 >= 0 && i0 < static_cast<long>(n0) && i1 < static_cast<long>(n1)) {
      out[idx] = f[static_cast<std::size_t>(i0) * n1 + static_cast<std::size_t>(i1)];
      return;
    }
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < f.size(); ++j) {
      const double d0 = static_cast<double>(i0 - static_cast<long>(j / n1));
      const double d1 = static_cast<double>(i1 - static_cast<long>(j % n1));
      best = std::min(best, f[j] + lambda * std::pow(h * std::hypot(d0, d1), alpha));
    }
    out[idx] = best;
  });
  return out;
}

/// Lip_alpha seminorm over the pairs a default Lip family would use.
inline double lip_grid_seminorm(const EuclideanSamples& f, std::size_t pair_cap = 1'000'000) {
  double best = 0.0;
  for (const auto& p : lip_pairs(LipGrid::of(f), pair_cap))
    best = std::max(best, std::abs(f[p.first] - f[p.second]) / std::pow(f.distance(p.first, p.second), f.alpha()));
  return best;
}

/// chi * (P_t * f^) restricted to the grid of f.
///
/// The kernel P_t(x) = c t / (t^2 + |x|^2)^{(n+1)/2} is sampled on offsets
/// |k| <= pad per axis and renormalized to unit mass, so every node of the
/// domain sees the whole truncated kernel inside the padded box. The cutoff
/// chi equals 1 on the domain, so the restriction is unaffected by it. The
/// continuous kernel mass beyond radius pad*h is returned as truncation_mass.
inline LipSmoothed lip_smooth_detailed(const EuclideanSamples& f, double t, const LipSmoothOptions& opt = {}) {
  if (f.alpha() >= 1.0) throw ConfigError("little space may be trivial");
  if (!(t >= f.step() * (1.0 - 1e-12))) throw ConfigError("kernel under-resolved");
  if (!(opt.padding_factor > 0.0)) throw ConfigError("lip_smooth: padding factor must be positive");

  const double h = f.step();
  const auto pad = static_cast<std::size_t>(std::ceil(opt.padding_factor * f.diameter() / h - 1e-9));
  const double lambda = opt.lambda ? *opt.lambda : lip_grid_seminorm(f, opt.pair_cap);
  const auto ext = mcshane_extend(f, pad, lambda);
  const std::size_t dim = f.dimension();

  std::vector<std::size_t> padded(dim), fft(dim);
  for (std::size_t d = 0; d < dim; ++d) {
    padded[d] = f.shape()[d] + 2 * pad;
    std::size_t m = 1;
    while (m < padded[d]) m *= 2;
    fft[d] = m;
  }
  const std::size_t f0 = fft[0], f1 = dim == 2 ? fft[1] : 1;
  const std::size_t p1 = dim == 2 ? padded[1] : 1;

  std::vector<complex> data(f0 * f1), kernel(f0 * f1);
  for (std::size_t i = 0; i < ext.size(); ++i) data[(i / p1) * f1 + i % p1] = ext[i];

  const long P = static_cast<long>(pad);
  const double c = dim == 1 ? 1.0 / pi : 1.0 / two_pi;
  double mass = 0.0;
  for (long k0 = -P; k0 <= P; ++k0) {
    for (long k1 = (dim == 2 ? -P : 0); k1 <= (dim == 2 ? P : 0); ++k1) {
      const double r2 = h * h * static_cast<double>(k0 * k0 + k1 * k1);
      const double w = c * t / std::pow(t * t + r2, 0.5 * static_cast<double>(dim + 1)) * std::pow(h, dim);
      const auto i0 = static_cast<std::size_t>((k0 + static_cast<long>(f0)) % static_cast<long>(f0));
      const auto i1 = static_cast<std::size_t>((k1 + static_cast<long>(f1)) % static_cast<long>(f1));
      kernel[i0 * f1 + i1] = w;
      mass += w;
    }
  }

  if (dim == 1) {
    fourier::transform(data, fourier::Direction::forward);
    fourier::transform(kernel, fourier::Direction::forward);
  } else {
    fourier::transform_2d(data, f0, f1, fourier::Direction::forward);
    fourier::transform_2d(kernel, f0, f1, fourier::Direction::forward);
  }
  const double scale = 1.0 / (mass * static_cast<double>(f0 * f1));
  for (std::size_t i = 0; i < data.size(); ++i) data[i] *= kernel[i] * scale;
  if (dim == 1)
    fourier::transform(data, fourier::Direction::backward);
  else
    fourier::transform_2d(data, f0, f1, fourier::Direction::backward);

  std::vector<double> out(f.size());
  const std::size_t n1 = dim == 2 ? f.shape()[1] : 1;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const std::size_t a = i / n1 + pad, b = dim == 2 ? i % n1 + pad : 0;
    out[i] = data[a * f1 + b].real();
  }

  const double radius = h * static_cast<double>(pad);
  const double dropped = dim == 1 ? 1.0 - (2.0 / pi) * std::atan(radius / t) : t / std::hypot(t, radius);
  return {f.with_values(std::move(out)), dropped, lambda, pad};
}

inline EuclideanSamples lip_smooth(const EuclideanSamples& f, double t, const LipSmoothOptions& opt = {}) {
  return lip_smooth_detailed(f, t, opt).samples;
}

// ---------------------------------------------------------------------------
// Families and the assumption checker
// ---------------------------------------------------------------------------

enum class ApproxKind { poisson_circle, dilation, fejer, poisson_torus, lip_smooth };

inline constexpr std::string_view to_string(ApproxKind k) {
  switch (k) {
    case ApproxKind::poisson_circle: return "poisson_circle";
    case ApproxKind::dilation: return "dilation";
    case ApproxKind::fejer: return "fejer";
    case ApproxKind::poisson_torus: return "poisson_torus";
    case ApproxKind::lip_smooth: return "lip_smooth";
  }
  return "unknown";
}

inline ApproxKind approx_kind_from_string(std::string_view name) {
  for (auto k : {ApproxKind::poisson_circle, ApproxKind::dilation, ApproxKind::fejer, ApproxKind::poisson_torus,
                 ApproxKind::lip_smooth})
    if (to_string(k) == name) return k;
  throw ConfigError("unknown approximation family '" + std::string(name) + "'");
}

template <class F>
struct ApproxFamily {
  ApproxKind kind{};
  std::vector<double> parameters;
  std::vector<F> members;
  double truncation_mass = 0.0;  // largest kernel mass dropped by any member (lip_smooth)
};

/// r_m = 1 - 2^-m, m = 1..levels.
inline std::vector<double> dyadic_r_ladder(std::size_t levels) {
  std::vector<double> r(levels);
  for (std::size_t m = 1; m <= levels; ++m) r[m - 1] = 1.0 - std::ldexp(1.0, -static_cast<int>(m));
  return r;
}

/// n_m = 2^m, m = 1..levels.
inline std::vector<double> dyadic_n_ladder(std::size_t levels) {
  std::vector<double> n(levels);
  for (std::size_t m = 1; m <= levels; ++m) n[m - 1] = std::ldexp(1.0, static_cast<int>(m));
  return n;
}

/// t_m = finest * 2^(levels-m), m = 1..levels.
inline std::vector<double> dyadic_t_ladder(double finest, std::size_t levels) {
  return dyadic_scales(finest, levels);
}

inline ApproxFamily<PeriodicSamples> poisson_circle_family(const PeriodicSamples& f, std::vector<double> ladder) {
  ApproxFamily<PeriodicSamples> fam{ApproxKind::poisson_circle, std::move(ladder), {}};
  for (double r : fam.parameters) fam.members.push_back(poisson_circle(f, r));
  return fam;
}

inline ApproxFamily<TorusSamples> poisson_torus_family(const TorusSamples& f, std::vector<double> ladder) {
  ApproxFamily<TorusSamples> fam{ApproxKind::poisson_torus, std::move(ladder), {}};
  for (double r : fam.parameters) fam.members.push_back(poisson_torus2(f, r));
  return fam;
}

template <class F>
ApproxFamily<F> dilation_family(const F& f, std::vector<double> ladder) {
  ApproxFamily<F> fam{ApproxKind::dilation, std::move(ladder), {}};
  for (double r : fam.parameters) fam.members.push_back(dilate(f, r));
  return fam;
}

template <class F>
ApproxFamily<F> fejer_family(const F& f, std::vector<double> ladder) {
  ApproxFamily<F> fam{ApproxKind::fejer, std::move(ladder), {}};
  for (double n : fam.parameters) {
    if (!(n >= 1.0) || n != std::floor(n)) throw ConfigError("fejer ladder entries must be positive integers");
    fam.members.push_back(fejer_taylor(f, static_cast<std::size_t>(n)));
  }
  return fam;
}

inline ApproxFamily<EuclideanSamples> lip_smooth_family(const EuclideanSamples& f, std::vector<double> ladder,
                                                        LipSmoothOptions opt = {}) {
  ApproxFamily<EuclideanSamples> fam{ApproxKind::lip_smooth, std::move(ladder), {}};
  if (!opt.lambda && !fam.parameters.empty()) {
    if (f.alpha() >= 1.0) throw ConfigError("little space may be trivial");
    opt.lambda = lip_grid_seminorm(f, opt.pair_cap);
  }
  for (double t : fam.parameters) {
    auto s = lip_smooth_detailed(f, t, opt);
    fam.truncation_mass = std::max(fam.truncation_mass, s.truncation_mass);
    fam.members.push_back(std::move(s.samples));
  }
  return fam;
}

struct AssumptionOptions {
  double slack = 1e-3;
  double x_tolerance = 1e-2;   // final X-distance relative to ||f||_X
  std::size_t tail_levels = 10;
  double allowance = 0.02;
};

struct AssumptionReport {
  std::vector<double> member_norms;
  double input_norm = 0.0;
  std::vector<double> x_distances;
  double input_x_norm = 0.0;
  std::vector<double> member_tails;   // limsup estimate of each member
  std::vector<bool> little;           // member tail below little_threshold(input_norm)
  double little_threshold = 0.0;
  double slack_used = 0.0;
  bool norms_ok = false;
  bool convergence_ok = false;
  bool verdict = false;
};

/// Verdict: max ||f_n||_M <= ||f||_M (1 + slack_used), the last X-distance is
/// below x_tolerance * ||f||_X and the last three are non-increasing.
/// slack_used adds the family's kernel truncation mass to the configured slack.
/// Littleness of each member is reported but does not enter the verdict.
template <OperatorSpace Space>
AssumptionReport assumption_check(const OperatorFamilyGrid<Space>& fam, const typename Space::function_type& f,
                                  const ApproxFamily<typename Space::function_type>& approx,
                                  const AssumptionOptions& opt = {}) {
  if (approx.members.size() < 3) throw ConfigError("assumption check needs at least 3 family members");
  AssumptionReport rep;
  rep.slack_used = opt.slack + approx.truncation_mass;
  rep.input_norm = seminorm_sup(fam, f).value;
  rep.input_x_norm = fam.space().x_norm(f);
  rep.little_threshold = little_threshold(rep.input_norm);
  const auto scales = default_scales(fam, opt.tail_levels);

  for (const auto& g : approx.members) {
    const auto values = fam.evaluate(g);
    rep.member_norms.push_back(seminorm_from_values(fam, values).value);
    const double tail = limsup_estimate(tail_profile_from_values(fam.remoteness(), values, scales), opt.allowance).estimate;
    rep.member_tails.push_back(tail);
    rep.little.push_back(tail < rep.little_threshold);
    rep.x_distances.push_back(fam.space().x_norm(difference(f, g)));
  }

  // Rounding floor, so inputs of zero seminorm (one-variable functions on the
  // torus, constants) do not fail on 1e-16 residues of their smoothings.
  const double noise = 1e-12 * std::max(1.0, rep.input_x_norm);
  const double max_norm = *std::max_element(rep.member_norms.begin(), rep.member_norms.end());
  rep.norms_ok = max_norm <= rep.input_norm * (1.0 + rep.slack_used) + noise;

  const auto& d = rep.x_distances;
  const std::size_t n = d.size();
  const bool settled = d[n - 1] <= d[n - 2] + noise && d[n - 2] <= d[n - 3] + noise;
  const bool small = d[n - 1] == 0.0 || d[n - 1] < opt.x_tolerance * rep.input_x_norm;
  rep.convergence_ok = settled && small;
  rep.verdict = rep.norms_ok && rep.convergence_ok;
  return rep;
}

}  // namespace oscillometer

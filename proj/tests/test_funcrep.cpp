#include <cmath>
#include <random>

#include "catch_amalgamated.hpp"
#include "oscillometer/builtins.hpp"
#include "oscillometer/funcrep.hpp"
#include "oscillometer/spaces.hpp"

using namespace oscillometer;
using Catch::Approx;

TEST_CASE("arc_average of constant, cosine and step") {
  const auto one = PeriodicSamples::from_function(1024, [](double) { return 1.0; });
  CHECK(std::abs(arc_average(one, Arc(1.0, 0.5)) - 1.0) < 1e-14);
  CHECK(std::abs(arc_average(builtin::cosine(1024), Arc(0.3, two_pi))) < 1e-14);
  CHECK(std::abs(arc_average(builtin::step_half(1024), Arc(0.0, pi)) - 0.5) < 1e-14);
}

TEST_CASE("arcs shorter than two cells are rejected") {
  const auto f = builtin::cosine(64);
  CHECK_THROWS_AS(arc_average(f, Arc(0.0, 0.01)), NumericalError);
  CHECK_THROWS_AS(Arc(0.0, 0.0), ConfigError);
}

TEST_CASE("grid sizes must be powers of two") {
  CHECK_THROWS_AS(PeriodicSamples(std::vector<complex>(100)), ConfigError);
}

TEST_CASE("prefix-sum arc averages match direct sums") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-1.0, 1.0), mid(0.0, two_pi), len(0.05, two_pi);
  std::vector<complex> v(2048);
  for (auto& x : v) x = {u(rng), u(rng)};
  const PeriodicSamples f(v);
  for (int i = 0; i < 100; ++i) {
    const Arc arc(mid(rng), len(rng));
    const auto g = snap_arc(arc, f.size());
    complex s{};
    for (std::size_t k = 0; k < g.count; ++k) s += f[(g.start + k) % f.size()];
    s /= static_cast<double>(g.count);
    CHECK(std::abs(arc_average(f, arc) - s) <= 1e-12 * std::max(1.0, std::abs(s)));
  }
}

TEST_CASE("circle L2 norm obeys Parseval") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const std::size_t n = 256;
  std::vector<std::pair<int, complex>> modes;
  for (int k = -20; k <= 20; ++k) modes.push_back({k, {u(rng), u(rng)}});
  const auto f = PeriodicSamples::from_function(n, [&](double t) {
    complex s{};
    for (auto [k, c] : modes) s += c * std::polar(1.0, k * t);
    return s;
  });
  double energy = 0.0;
  for (auto [k, c] : modes)
    if (k != 0) energy += std::norm(c);
  CHECK(l2_circle_norm(f) == Approx(std::sqrt(two_pi * energy)).epsilon(1e-12));
  CHECK(l2_circle_norm(builtin::cosine(n)) == Approx(std::sqrt(pi)).epsilon(1e-12));
}

TEST_CASE("Mobius map is an involution and fixes the boundary circle") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-0.7, 0.7), t(0.0, two_pi);
  for (int i = 0; i < 100; ++i) {
    const complex a(u(rng), u(rng)), z(u(rng), u(rng));
    const auto w = mobius_apply(a, 1.0, z);
    CHECK(std::abs(mobius_apply(a, 1.0, w.value).value - z) < 1e-12);
    CHECK(std::abs(std::abs(mobius_apply(a, 1.0, std::polar(1.0, t(rng))).value) - 1.0) < 1e-12);
  }
  const auto m = mobius_apply(0.5, 1.0, 0.0);
  CHECK(std::abs(m.value - 0.5) < 1e-15);
  CHECK(std::abs(m.derivative + 0.75) < 1e-15);
  CHECK_THROWS_AS(mobius_apply(1.0, 1.0, 0.0), ConfigError);
}

TEST_CASE("Mobius derivative matches a finite difference") {
  const complex a(0.3, -0.2), lambda = std::polar(1.0, 0.7), z(0.1, 0.4);
  const double h = 1e-6;
  const complex fd = (mobius_apply(a, lambda, z + h).value - mobius_apply(a, lambda, z - h).value) / (2 * h);
  CHECK(std::abs(mobius_apply(a, lambda, z).derivative - fd) < 1e-8);
}

TEST_CASE("disc quadrature integrates radial monomials") {
  for (int m = 0; m <= 6; ++m) {
    const double v = disk_quadrature([m](complex z) { return std::pow(std::norm(z), m); }, QuadratureRule{});
    CHECK(v == Approx(pi / (m + 1)).epsilon(1e-12));
  }
  const double lg = disk_quadrature([](complex z) { return std::log(1.0 / std::abs(z)); }, QuadratureRule{});
  CHECK(lg == Approx(pi / 2).epsilon(1e-4));
}

TEST_CASE("eval_deriv on polynomials and closed forms") {
  const auto p = TaylorFunction::polynomial({1.0, 0.0, 1.0});
  const complex w(0.3, 0.4);
  CHECK(std::abs(eval_deriv(p, w) - (1.0 + 3.0 * w * w)) < 1e-15);
  CHECK(std::abs(eval_deriv(builtin::log_singular(), w) - 1.0 / (1.0 - w)) < 1e-14);
  CHECK_THROWS_AS(eval_deriv(p, 1.0), NumericalError);
}

TEST_CASE("truncated series refuse evaluation beyond their radius") {
  std::vector<complex> a(64);
  for (std::size_t k = 0; k < a.size(); ++k) a[k] = 1.0 / double(k + 1);
  const TaylorFunction f(a);
  CHECK(f.radius_cap() < 1.0);
  CHECK_NOTHROW(f.derivative(0.5 * f.radius_cap()));
  CHECK_THROWS_AS(f.derivative(0.5 * (1.0 + f.radius_cap())), NumericalError);
}

TEST_CASE("taylor_coefficients recovers a known series") {
  // Sampling on |z| = 1/2 amplifies rounding by 2^k.
  const auto c = taylor_coefficients([](complex z) { return -std::log(1.0 - z); }, 20);
  for (std::size_t k = 1; k <= 20; ++k) CHECK(std::abs(c[k - 1] - 1.0 / double(k)) < 1e-15 * std::ldexp(1.0, int(k)) * 10);
}

TEST_CASE("compose_mobius vanishes at the origin and matches f o phi") {
  const auto f = builtin::monomial(2);
  const complex a(0.3, 0.2);
  const auto g = compose_mobius(f, a, 1.0);
  CHECK(std::abs(g.value(0.0)) < 1e-15);
  const complex z(0.2, -0.1), phi = mobius_apply(a, 1.0, z).value;
  CHECK(std::abs(g.value(z) - (phi * phi - a * a)) < 1e-14);
}

TEST_CASE("x_norm examples") {
  CHECK(x_norm(SpaceTag::bloch, builtin::identity()) == Approx(std::sqrt(pi / 2)).epsilon(1e-14));
  CHECK(hardy_norm(builtin::identity()) == Approx(1.0));
  const auto d = default_descriptor(SpaceTag::bmo_circle);
  CHECK(x_norm(d, builtin::cosine(1024)) == Approx(std::sqrt(pi)).epsilon(1e-12));
  CHECK_THROWS_AS(x_norm(d, builtin::identity()), ConfigError);
}

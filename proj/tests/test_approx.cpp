#include <cmath>
#include <limits>
#include <random>

#include "catch_amalgamated.hpp"
#include "oscillometer/approx.hpp"
#include "oscillometer/builtins.hpp"
#include "oscillometer/cli.hpp"
#include "oscillometer/config.hpp"

using namespace oscillometer;
using Catch::Approx;

TEST_CASE("Poisson smoothing on the circle") {
  const auto f = builtin::cosine(256, 3);
  const auto g = poisson_circle(f, 0.5);
  for (std::size_t j = 0; j < 256; j += 17) CHECK(std::abs(g[j] - 0.125 * f[j]) < 1e-14);
  const auto m = poisson_circle(builtin::step_half(256), 0.0);
  for (std::size_t j = 0; j < 256; j += 31) CHECK(std::abs(m[j] - 0.5) < 1e-14);
  CHECK_THROWS_AS(poisson_circle(f, 1.0), ConfigError);
}

TEST_CASE("Poisson smoothing on the torus acts per variable") {
  const std::size_t n = 32;
  const auto f = TorusSamples::from_function(n, [](double a, double b) { return std::cos(a) * std::cos(2 * b); });
  const auto g = poisson_torus2(f, 0.5);
  for (std::size_t i = 0; i < f.values().size(); i += 37) CHECK(std::abs(g.values()[i] - 0.125 * f.values()[i]) < 1e-14);
}

TEST_CASE("dilation and Fejer means on coefficients") {
  const auto f = TaylorFunction::polynomial({1.0, 2.0, 3.0});
  const auto d = dilate(f, 0.5);
  CHECK(d.coefficient(3) == complex(0.375));
  const auto fn = fejer_taylor(f, 2);
  CHECK(fn.degree() == 2);
  CHECK(std::abs(fn.coefficient(1) - 2.0 / 3.0) < 1e-15);
  CHECK(std::abs(fn.coefficient(2) - 2.0 / 3.0) < 1e-15);
  CHECK(std::abs(dilate(builtin::log_singular(), 0.5).derivative(0.5) - 0.5 / 0.75) < 1e-14);
  std::vector<complex> a(8, 1.0);
  CHECK_THROWS_WITH(fejer_taylor(TaylorFunction(a), 16), Catch::Matchers::ContainsSubstring("coefficients unavailable"));
}

TEST_CASE("Fejer means do not increase the Q_K seminorm") {
  const auto fam = build_family(QK(power_kernel()), QkResolution{});
  for (const auto& f : cli::detail::random_polynomials(99, 20, 12)) {
    const double nf = seminorm_sup(fam, f).value;
    for (std::size_t n : {2, 4, 8}) CHECK(seminorm_sup(fam, fejer_taylor(f, n)).value <= nf * (1 + 1e-3));
  }
}

TEST_CASE("Poisson smoothing does not increase the BMO seminorm") {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const auto fam = build_family(BmoCircle(1.0), BmoResolution{1024, 64, 8});
  for (int i = 0; i < 10; ++i) {
    std::vector<complex> v(1024);
    for (auto& x : v) x = {u(rng), u(rng)};
    const PeriodicSamples f(v);
    const double nf = seminorm_sup(fam, f).value;
    for (double r : {0.5, 0.9, 0.99}) CHECK(seminorm_sup(fam, poisson_circle(f, r)).value <= nf * (1 + 1e-3));
  }
}

TEST_CASE("McShane divide and conquer matches brute force") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (double alpha : {0.25, 0.5, 0.9}) {
    std::vector<double> v(50);
    for (auto& x : v) x = u(rng);
    const EuclideanSamples f({0.0}, {50}, 0.02, v, alpha);
    const double lambda = lip_seminorm_exact(f);
    const std::size_t pad = 30;
    const auto ext = mcshane_extend(f, pad, lambda);
    REQUIRE(ext.size() == 110);
    for (std::size_t i = 0; i < ext.size(); ++i) {
      const double x = (static_cast<double>(i) - pad) * 0.02;
      double best = std::numeric_limits<double>::infinity();
      for (std::size_t j = 0; j < 50; ++j) best = std::min(best, v[j] + lambda * std::pow(std::abs(x - j * 0.02), alpha));
      CHECK(ext[i] == Approx(best).epsilon(1e-12));
    }
  }
}

TEST_CASE("McShane extension keeps the Hoelder constant in 2-D") {
  const auto f = EuclideanSamples::on_box({0.0, 0.0}, {1.0, 1.0}, {9, 9}, 0.5,
                                          [](std::array<double, 2> x) { return std::sqrt(std::hypot(x[0], x[1])); });
  const double lambda = lip_seminorm_exact(f);
  const std::size_t pad = 4;
  const auto ext = mcshane_extend(f, pad, lambda);
  const EuclideanSamples g({-0.5, -0.5}, {17, 17}, f.step(), ext, 0.5);
  CHECK(lip_seminorm_exact(g) <= lambda * (1 + 1e-12));
  CHECK(g[pad * 17 + pad] == f[0]);
}

TEST_CASE("lip_smooth preserves constants") {
  const auto f = EuclideanSamples::on_box({-1.0}, {1.0}, {257}, 0.5, [](double) { return 2.5; });
  const auto s = lip_smooth(f, 0.05);
  for (auto v : s.values()) CHECK(v == Approx(2.5).epsilon(1e-12));
}

TEST_CASE("lip_smooth damps cos x by e^-t away from the boundary") {
  // The McShane extension differs from cos x outside [-20, 20]; the kernel
  // mass out there is about t / (pi * 19), which bounds the discrepancy.
  const auto f = EuclideanSamples::on_box({-20.0}, {20.0}, {20001}, 0.5, [](double x) { return std::cos(x); });
  const double t = 0.02;
  const auto s = lip_smooth_detailed(f, t, {4.0, std::nullopt, 200'000});
  for (std::size_t i = 0; i < f.size(); i += 10) {
    const double x = f.position(i)[0];
    if (std::abs(x) <= 1.0) CHECK(std::abs(s.samples[i] - std::exp(-t) * std::cos(x)) < 5e-3);
  }
  CHECK(s.truncation_mass == Approx(1.0 - (2.0 / pi) * std::atan(s.padding_nodes * f.step() / t)));
}

TEST_CASE("lip_smooth rejects alpha = 1 and kernels below the grid step") {
  const auto f = EuclideanSamples::on_box({-1.0}, {1.0}, {65}, 1.0, [](double x) { return x; });
  CHECK_THROWS_WITH(lip_smooth(f, 0.1), "little space may be trivial");
  const auto g = EuclideanSamples::on_box({-1.0}, {1.0}, {65}, 0.5, [](double x) { return x; });
  CHECK_THROWS_WITH(lip_smooth(g, 0.001), "kernel under-resolved");
}

TEST_CASE("assumption check passes for built-in functions with their default families") {
  for (auto tag : {SpaceTag::bmo_circle, SpaceTag::bloch, SpaceTag::qk, SpaceTag::weighted, SpaceTag::rect_bmo}) {
    auto d = default_descriptor(tag);
    for (const auto& name : builtin::names_for(tag)) {
      const auto f = builtin::make(name, d);
      const auto spec = config::default_family(tag);
      with_family(d, f, [&](const auto& fam, const auto& g) {
        const auto approx = config::build_approx(spec, g);
        const auto rep = assumption_check(fam, g, approx);
        INFO(std::string(to_string(tag)) << "/" << name);
        CHECK(rep.verdict);
      });
    }
  }
}

TEST_CASE("Lip smoothing stays within the input norm on a coarser grid") {
  auto d = default_descriptor(SpaceTag::lip);
  d.lip_domain.nodes = {8193};
  for (const auto& name : builtin::names_for(SpaceTag::lip)) {
    const auto f = std::get<EuclideanSamples>(builtin::make(name, d));
    const auto fam = build_family(Lip(d.alpha, LipGrid::of(f)), d.lip);
    const auto approx = lip_smooth_family(f, dyadic_t_ladder(f.step(), 10));
    const auto rep = assumption_check(fam, f, approx);
    INFO(name);
    CHECK(rep.norms_ok);
    CHECK(std::is_sorted(rep.x_distances.rbegin(), rep.x_distances.rend()));
  }
}

TEST_CASE("assumption check passes for Lip builtins on the default grid") {
  const auto d = default_descriptor(SpaceTag::lip);
  for (const auto& name : builtin::names_for(SpaceTag::lip)) {
    const auto f = std::get<EuclideanSamples>(builtin::make(name, d));
    const auto fam = build_family(Lip(d.alpha, LipGrid::of(f)), d.lip);
    const auto approx = lip_smooth_family(f, dyadic_t_ladder(f.step(), 10));
    INFO(name);
    CHECK(assumption_check(fam, f, approx).verdict);
  }
}

TEST_CASE("assumption check needs three members") {
  const auto fam = build_family(Bloch{}, DiscResolution{});
  const auto f = builtin::identity();
  CHECK_THROWS_AS(assumption_check(fam, f, dilation_family(f, dyadic_r_ladder(2))), ConfigError);
}

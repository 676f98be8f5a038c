#include <cmath>
#include <random>

#include "catch_amalgamated.hpp"
#include "oscillometer/builtins.hpp"
#include "oscillometer/spaces.hpp"

using namespace oscillometer;
using Catch::Approx;

namespace {

std::vector<complex> random_values(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<complex> v(n);
  for (auto& x : v) x = {u(rng), u(rng)};
  return v;
}

}  // namespace

TEST_CASE("BMO oscillation of a half step is 1/2 for p = 1 and 2") {
  const auto f = builtin::step_half(1024);
  for (double p : {1.0, 2.0, 3.0}) CHECK(bmo_oscillation(f, Arc(pi, two_pi), p) == Approx(0.5).epsilon(1e-13));
  const auto one = PeriodicSamples::from_function(1024, [](double) { return 3.0; });
  CHECK(bmo_oscillation(one, Arc(1.0, 0.4), 1.0) < 1e-14);
  CHECK_THROWS_AS(BmoCircle(0.5), ConfigError);
}

TEST_CASE("BMO seminorm is rotation invariant on grid-aligned rotations") {
  std::mt19937_64 rng(17);
  const auto v = random_values(rng, 1024);
  std::vector<complex> w(v.size());
  const std::size_t shift = 64;  // a multiple of samples/midpoints
  for (std::size_t j = 0; j < v.size(); ++j) w[(j + shift) % v.size()] = v[j];
  const BmoResolution res{1024, 256, 9};
  const auto fam = build_family(BmoCircle(1.0), res);
  CHECK(seminorm_sup(fam, PeriodicSamples(w)).value ==
        Approx(seminorm_sup(fam, PeriodicSamples(v)).value).epsilon(1e-12));
}

TEST_CASE("family sizes") {
  CHECK(build_family(BmoCircle(), BmoResolution{}).size() == 2816);
  CHECK(build_family(Bloch{}, DiscResolution{}).size() == 3073);
  CHECK(build_family(Bloch{}, DiscResolution{12, 256, false}).size() == 3072);
  CHECK(build_family(RectBmo{}, RectResolution{}).size() == 9216);
  CHECK(build_family(QK(power_kernel()), QkResolution{}).size() == 513);
  const auto f = EuclideanSamples::on_box({0.0}, {1.0}, {101}, 0.5, [](double x) { return x; });
  CHECK(build_family(Lip(0.5, LipGrid::of(f))).size() == 5050);
}

TEST_CASE("families with fewer than six dyadic levels are rejected") {
  CHECK_THROWS_WITH(build_family(Bloch{}, DiscResolution{4, 16, true}), "resolution too coarse: need >= 6 dyadic levels");
  CHECK_THROWS_AS(build_family(BmoCircle(), BmoResolution{1024, 16, 5}), ConfigError);
}

TEST_CASE("Bloch term examples") {
  CHECK(bloch_term(builtin::identity(), 0.0) == 1.0);
  CHECK(bloch_term(builtin::identity(), 0.5) == Approx(0.75));
  CHECK(bloch_term(builtin::log_singular(), 0.5) == Approx(1.5));
  CHECK_THROWS_AS(bloch_term(builtin::identity(), 1.0), NumericalError);
}

TEST_CASE("Q_K local quantity examples") {
  const auto z = builtin::identity();
  CHECK(qk_local(z, 0.0, power_kernel(1.0)) == Approx(pi / 2).epsilon(1e-6));
  CHECK(qk_local(z, 0.0, constant_kernel()) == Approx(pi).epsilon(1e-10));
  CHECK(qk_local(z, 0.99, power_kernel(1.0)) < 0.05);
  // Oracle: the disc integral of the Green function is (pi/2)(1 - |a|^2).
  for (double s : {0.3, 0.9, 0.99, 1.0 - 1.0 / 256})
    CHECK(qk_local(z, std::polar(s, 1.0), power_kernel(1.0)) == Approx(pi / 2 * (1 - s * s)).epsilon(1e-4));
  for (double s : {0.5, 0.99}) CHECK(qk_local(z, s, constant_kernel()) == Approx(pi).epsilon(1e-8));
}

TEST_CASE("Q_K kernels must be non-decreasing and positive") {
  KKernel bad{"decreasing", [](double t) { return 1.0 / (1.0 + t); }};
  CHECK_THROWS_AS(validate_kernel(bad), ConfigError);
  CHECK_NOTHROW(validate_kernel(truncated_power_kernel(0.5)));
}

TEST_CASE("Q_K seminorm is Mobius invariant within two percent") {
  const QK space(power_kernel(1.0));
  const auto fam = build_family(space, QkResolution{});
  const auto f = builtin::monomial(2);
  const auto g = compose_mobius(f, complex(0.3, 0.2), 1.0);
  const double a = seminorm_sup(fam, f).value, b = seminorm_sup(fam, g).value;
  CHECK(std::abs(a - b) / a <= 0.02);
}

TEST_CASE("weighted term examples") {
  const auto v = power_weight(1.0);
  const WeightedFunction one{1.0, TaylorFunction::polynomial({})};
  CHECK(weighted_term(one, v, 0.0) == 1.0);
  CHECK(weighted_term(builtin::cauchy_kernel(), v, 0.9) == Approx(1.9).epsilon(1e-12));
  CHECK(weighted_term(builtin::cauchy_kernel(), v, -0.5) == Approx(0.5).epsilon(1e-12));
  const auto annulus = power_weight(1.0, WeightDomain{0.5});
  CHECK_THROWS_AS(weighted_term(one, annulus, 0.25), NumericalError);
}

TEST_CASE("Lip quotient examples") {
  const auto f = EuclideanSamples::on_box({-1.0}, {1.0}, {5}, 0.5, [](double x) { return std::sqrt(std::abs(x)); });
  CHECK(lip_quotient(f, 2, 4, 0.5) == Approx(1.0));
  CHECK(lip_quotient(f, 0, 4, 0.5) == 0.0);
  CHECK_THROWS(lip_quotient(f, 1, 1, 0.5));
}

TEST_CASE("Lip pair cap keeps every dyadic band") {
  const auto f = EuclideanSamples::on_box({0.0}, {1.0}, {4097}, 0.5, [](double x) { return x; });
  const auto all = lip_pairs(LipGrid::of(f), 100'000'000);
  const auto capped = lip_pairs(LipGrid::of(f), 200'000);
  CHECK(all.size() == 4097u * 4096u / 2u);
  CHECK(capped.size() < all.size());
  std::vector<double> ra, rc;
  for (auto& p : all) ra.push_back(f.distance(p.first, p.second));
  for (auto& p : capped) rc.push_back(f.distance(p.first, p.second));
  CHECK(dyadic_levels(rc) == dyadic_levels(ra));
}

TEST_CASE("rectangular oscillation examples") {
  const std::size_t n = 64;
  const Arc full(pi, two_pi);
  CHECK(rect_oscillation(builtin::step_product(n), full, full) == Approx(0.25).epsilon(1e-12));
  CHECK(rect_oscillation(builtin::step_first(n), full, Arc(1.0, 1.0)) < 1e-12);
  CHECK(rect_oscillation(builtin::separable_sum(n), Arc(0.5, 2.0), Arc(2.0, 0.8)) < 1e-12);
}

TEST_CASE("rectangular oscillation of a product factorizes") {
  std::mt19937_64 rng(23);
  const std::size_t n = 32;
  const auto g = random_values(rng, n), h = random_values(rng, n);
  const TorusSamples F = TorusSamples::from_function(n, [&](double a, double b) {
    return g[std::size_t(std::lround(a / (two_pi / n))) % n] * h[std::size_t(std::lround(b / (two_pi / n))) % n];
  });
  std::uniform_real_distribution<double> mid(0.0, two_pi), len(0.5, two_pi);
  for (int i = 0; i < 20; ++i) {
    const Arc I(mid(rng), len(rng)), J(mid(rng), len(rng));
    const double lhs = rect_oscillation(F, I, J);
    const double rhs = bmo_oscillation(PeriodicSamples(g), I, 2.0) * bmo_oscillation(PeriodicSamples(h), J, 2.0);
    CHECK(lhs == Approx(rhs).epsilon(1e-10).margin(1e-12));
  }
}

TEST_CASE("every seminorm is absolutely homogeneous") {
  std::mt19937_64 rng(29);
  const complex c(1.25, -2.5);
  SECTION("bmo") {
    const PeriodicSamples f(random_values(rng, 1024));
    const auto fam = build_family(BmoCircle(2.0), BmoResolution{1024, 64, 8});
    CHECK(seminorm_sup(fam, scale(c, f)).value == Approx(std::abs(c) * seminorm_sup(fam, f).value).epsilon(1e-12));
  }
  SECTION("qk") {
    const auto f = TaylorFunction::polynomial(random_values(rng, 6));
    const auto fam = build_family(QK(power_kernel()), QkResolution{});
    CHECK(seminorm_sup(fam, scale(c, f)).value == Approx(std::abs(c) * seminorm_sup(fam, f).value).epsilon(1e-12));
  }
  SECTION("weighted") {
    const WeightedFunction f{0.5, TaylorFunction::polynomial(random_values(rng, 6))};
    const auto fam = build_family(Weighted(power_weight()), DiscResolution{});
    CHECK(seminorm_sup(fam, scale(c, f)).value == Approx(std::abs(c) * seminorm_sup(fam, f).value).epsilon(1e-12));
  }
  SECTION("rect") {
    const TorusSamples f(64, random_values(rng, 64 * 64));
    const auto fam = build_family(RectBmo{}, RectResolution{});
    CHECK(seminorm_sup(fam, scale(c, f)).value == Approx(std::abs(c) * seminorm_sup(fam, f).value).epsilon(1e-12));
  }
  SECTION("lip") {
    const auto f = EuclideanSamples::on_box({0.0, 0.0}, {1.0, 1.0}, {33, 33}, 0.5,
                                            [](std::array<double, 2> x) { return std::sin(3 * x[0]) * x[1]; });
    const auto fam = build_family(Lip(0.5, LipGrid::of(f)));
    CHECK(seminorm_sup(fam, scale(-3.0, f)).value == Approx(3.0 * seminorm_sup(fam, f).value).epsilon(1e-12));
    CHECK(seminorm_sup(fam, f).value == Approx(lip_seminorm_exact(f)).epsilon(1e-12));
  }
}

TEST_CASE("descriptor dispatch checks representations") {
  const auto d = default_descriptor(SpaceTag::bloch);
  CHECK_THROWS_WITH(with_family(d, AnyFunction(builtin::step_half(64)), [](const auto&, const auto&) {}),
                    Catch::Matchers::ContainsSubstring("representation mismatch"));
  CHECK(builtin::names_for(SpaceTag::lip).size() == 3);
}

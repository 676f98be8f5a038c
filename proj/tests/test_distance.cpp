#include <cmath>

#include "catch_amalgamated.hpp"
#include "oscillometer/approx.hpp"
#include "oscillometer/builtins.hpp"
#include "oscillometer/distance.hpp"

using namespace oscillometer;
using Catch::Approx;

namespace {

template <class F>
std::vector<NamedApproximant<F>> named(const ApproxFamily<F>& fam) {
  std::vector<NamedApproximant<F>> out;
  for (std::size_t i = 0; i < fam.members.size(); ++i) out.push_back({"m" + std::to_string(100 + i), fam.members[i]});
  return out;
}

}  // namespace

TEST_CASE("distance of polynomials to the little Bloch space is small") {
  const auto fam = build_family(Bloch{}, DiscResolution{});
  CHECK(distance_estimate(fam, TaylorFunction::polynomial({1.0, 0.0, 1.0})).estimate <= 1e-2);
  const auto e = distance_estimate(fam, builtin::log_singular());
  CHECK(std::abs(e.estimate - 2.0) <= e.uncertainty);
}

TEST_CASE("distance of the half step in BMO") {
  const auto fam = build_family(BmoCircle(1.0), BmoResolution{});
  const auto e = distance_estimate(fam, builtin::step_half(4096));
  CHECK(e.estimate == Approx(0.5).margin(0.02));
}

TEST_CASE("sandwich holds for dilations of log 1/(1-z)") {
  const auto fam = build_family(Bloch{}, DiscResolution{});
  const auto f = builtin::log_singular();
  const auto rep = sandwich_check(fam, f, named(dilation_family(f, dyadic_r_ladder(16))));
  CHECK(rep.sandwich_ok);
  REQUIRE(rep.best_upper);
  CHECK(*rep.best_upper >= rep.limsup_estimate - rep.uncertainty - rep.slack);
  CHECK(*rep.best_upper <= rep.norm * (1 + 1e-12) + 1e-12);
  CHECK(std::is_sorted(rep.upper_bounds.begin(), rep.upper_bounds.end(),
                       [](const auto& a, const auto& b) { return a.id < b.id; }));
}

TEST_CASE("sandwich with g = f for a polynomial gives a zero upper bound") {
  const auto fam = build_family(Bloch{}, DiscResolution{});
  const auto f = TaylorFunction::polynomial({1.0, 0.0, 1.0});
  const auto rep = sandwich_check(fam, f, {{"self", f}});
  CHECK(rep.sandwich_ok);
  REQUIRE(rep.best_upper);
  CHECK(*rep.best_upper == 0.0);
}

TEST_CASE("approximants that are not little are rejected") {
  const auto fam = build_family(Bloch{}, DiscResolution{});
  const auto f = builtin::log_singular();
  const auto rep = sandwich_check(fam, f, {{"self", f}});
  CHECK(rep.upper_bounds.empty());
  REQUIRE(rep.rejected.size() == 1);
  CHECK_FALSE(rep.best_upper);
}

TEST_CASE("sandwich holds for Poisson means of the half step") {
  const auto fam = build_family(BmoCircle(1.0), BmoResolution{});
  const auto f = builtin::step_half(4096);
  const auto rep = sandwich_check(fam, f, named(poisson_circle_family(f, dyadic_r_ladder(16))));
  CHECK(rep.sandwich_ok);
}

TEST_CASE("distance is homogeneous and bounded by the seminorm") {
  const auto fam = build_family(Bloch{}, DiscResolution{});
  const auto f = builtin::log_singular();
  const auto e = distance_estimate(fam, f);
  CHECK(e.estimate <= seminorm_sup(fam, f).value + 1e-12);
  CHECK(distance_estimate(fam, scale(complex(0, -3), f)).estimate == Approx(3 * e.estimate).epsilon(1e-12));
}

TEST_CASE("adding a little element barely moves the distance") {
  const auto fam = build_family(Bloch{}, DiscResolution{});
  const auto f = builtin::log_singular();
  const auto h = TaylorFunction::polynomial({0.2, -0.1, 0.05});
  const auto g = difference(f, scale(-1.0, h));
  const auto ef = distance_estimate(fam, f), eg = distance_estimate(fam, g), eh = distance_estimate(fam, h);
  CHECK(std::abs(eg.estimate - ef.estimate) <= eh.estimate + 1e-12);
}

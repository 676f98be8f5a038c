#include <cmath>
#include <sstream>

#include "catch_amalgamated.hpp"
#include "oscillometer/builtins.hpp"
#include "oscillometer/family.hpp"
#include "oscillometer/spaces.hpp"

using namespace oscillometer;
using Catch::Approx;

namespace {
OperatorFamilyGrid<Bloch> bloch_family() { return build_family(Bloch{}, DiscResolution{}); }
}  // namespace

TEST_CASE("seminorm of z on the Bloch grid is attained at the origin") {
  const auto r = seminorm_sup(bloch_family(), builtin::identity());
  CHECK(r.value == 1.0);
  CHECK(r.argmax_index == 0);
  CHECK(r.argmax_param == complex(0.0));
  CHECK(r.grid_size == 3073);
}

TEST_CASE("empty family is a numerical error") {
  const OperatorFamilyGrid<Bloch> empty(Bloch{}, {}, {});
  CHECK_THROWS_AS(seminorm_sup(empty, builtin::identity()), NumericalError);
}

TEST_CASE("ties go to the first entry in grid order") {
  const OperatorFamilyGrid<Bloch> fam(Bloch{}, {0.5, -0.5, complex(0, 0.5)}, {0.5, 0.5, 0.5});
  const auto r = seminorm_sup(fam, builtin::identity());
  CHECK(r.argmax_index == 0);
}

TEST_CASE("tail profile of z follows 2t - t^2 on the shells") {
  const auto fam = bloch_family();
  const auto scales = default_scales(fam);
  const auto p = tail_profile(fam, builtin::identity(), scales);
  REQUIRE(p.tail_sups.size() == 10);
  for (std::size_t k = 0; k < scales.size(); ++k) {
    const double t = std::ldexp(1.0, -3 - static_cast<int>(k));  // the shell inside level k
    REQUIRE(p.tail_sups[k]);
    CHECK(*p.tail_sups[k] == Approx(2 * t - t * t).epsilon(1e-12));
  }
}

TEST_CASE("tail profile of log 1/(1-z) is flat at 2 - 2^-12") {
  // Every level contains the outermost shell, where (1 - r^2) / (1 - r) = 1 + r.
  const auto fam = bloch_family();
  const auto p = tail_profile(fam, builtin::log_singular(), default_scales(fam));
  const double top = 2.0 - std::ldexp(1.0, -12);
  for (const auto& s : p.tail_sups) CHECK(*s == Approx(top).epsilon(1e-13));
  const auto e = limsup_estimate(p);
  CHECK(e.estimate == Approx(top).epsilon(1e-13));
  CHECK(e.uncertainty == Approx(0.02 * top).epsilon(1e-10));
}

TEST_CASE("limsup estimate examples") {
  TailProfile p{dyadic_scales(0.01, 4), {0.5, 0.5, 0.5, 0.5}};
  const auto e = limsup_estimate(p);
  CHECK(e.estimate == 0.5);
  CHECK(e.uncertainty == Approx(0.01));
  TailProfile two{dyadic_scales(0.01, 4), {std::nullopt, std::nullopt, 0.4, 0.3}};
  CHECK_THROWS_WITH(limsup_estimate(two), "insufficient tail");
}

TEST_CASE("empty levels stay empty and are skipped") {
  const std::vector<double> rho{0.5, 0.25, 0.125};
  const auto p = tail_profile_from_values(rho, {3.0, 2.0, 1.0}, dyadic_scales(0.03125, 6));
  // scales 1, 1/2, ..., 1/32
  CHECK(p.tail_sups[0] == 3.0);
  CHECK(p.tail_sups[1] == 3.0);
  CHECK(p.tail_sups[2] == 2.0);
  CHECK(p.tail_sups[3] == 1.0);
  CHECK_FALSE(p.tail_sups[4]);
  CHECK_FALSE(p.tail_sups[5]);
  CHECK(p.non_empty_levels() == 4);
  CHECK(limsup_estimate(p).estimate == 1.0);
}

TEST_CASE("tail profile is non-increasing and bounded by the seminorm") {
  const auto fam = bloch_family();
  for (const auto& f : {builtin::log_singular(), builtin::lacunary(6), TaylorFunction::polynomial({0.3, -1.0, 0.2})}) {
    const auto p = tail_profile(fam, f, default_scales(fam));
    const double norm = seminorm_sup(fam, f).value;
    for (std::size_t k = 0; k < p.tail_sups.size(); ++k) {
      CHECK(*p.tail_sups[k] <= norm);
      if (k > 0) CHECK(*p.tail_sups[k] <= *p.tail_sups[k - 1]);
    }
  }
}

TEST_CASE("seminorm and tail are homogeneous") {
  const auto fam = bloch_family();
  const auto f = builtin::log_singular();
  const complex c(-1.5, 2.0);
  const auto g = scale(c, f);
  CHECK(seminorm_sup(fam, g).value == Approx(std::abs(c) * seminorm_sup(fam, f).value).epsilon(1e-12));
  const auto pf = tail_profile(fam, f, default_scales(fam));
  const auto pg = tail_profile(fam, g, default_scales(fam));
  for (std::size_t k = 0; k < pf.tail_sups.size(); ++k)
    CHECK(*pg.tail_sups[k] == Approx(std::abs(c) * *pf.tail_sups[k]).epsilon(1e-12));
}

TEST_CASE("scale ladders must halve") {
  CHECK_THROWS_AS(tail_profile_from_values({0.5}, {1.0}, {0.5, 0.3}), ConfigError);
  CHECK_THROWS_AS(dyadic_scales(0.0, 4), ConfigError);
}

TEST_CASE("CSV output has one row per level and blank empty cells") {
  TailProfile p{{0.5, 0.25}, {0.75, std::nullopt}};
  std::ostringstream out;
  write_csv(out, p);
  CHECK(out.str() == "scale,tail_sup\n0.5,0.75\n0.25,\n");
}

TEST_CASE("dyadic levels count") {
  CHECK(dyadic_levels({0.5, 0.4, 0.25, 0.1}) == 3);
  CHECK(little_threshold(0.1) == 1e-2);
  CHECK(little_threshold(2.0) == Approx(0.1));
}

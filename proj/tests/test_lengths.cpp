#include "doctest.h"

#include "chainex/associahedron.hpp"
#include "chainex/lengths.hpp"
#include "chainex/permutahedron.hpp"
#include "chainex/rational.hpp"

using namespace chainex;

TEST_CASE("alpha/beta conversion") {
  CHECK(core::beta_from_alpha(Rational(0), 2) == Rational(1));
  CHECK(core::beta_from_alpha(Rational(0), 7) == Rational(1));
  CHECK(core::beta_from_alpha(Rational(1), 3) == Rational(3));
  CHECK(core::alpha_from_beta(Rational(2), 3) == Rational(1, 2));
  CHECK_FALSE(core::alpha_from_beta(Rational(2), 1).has_value());
  // round trip
  for (int k = 2; k <= 6; ++k) {
    const Rational alpha(3, 7);
    CHECK(*core::alpha_from_beta(core::beta_from_alpha(alpha, k), k) == alpha);
  }
}

TEST_CASE("upper bound on longer chain lengths") {
  // tight at l = k
  CHECK(core::alpha_upper_bound(3, 3, Rational(2, 5)) == Rational(2, 5));
  // a 2-short family has total length at most 1/2 and 3-length at most 1/4
  CHECK(core::alpha_upper_bound_limit(2, Rational(0)) == Rational(1, 2));
  CHECK(core::alpha_upper_bound(3, 2, Rational(0)) == Rational(1, 4));
  CHECK_THROWS_AS(core::alpha_upper_bound(2, 3, Rational(0)), std::invalid_argument);
  CHECK_THROWS_AS(core::alpha_upper_bound(3, 1, Rational(0)), std::invalid_argument);
}

TEST_CASE("length estimate rows") {
  // k = 1 rows have ratio 1 for any polytope
  {
    std::vector<core::LengthPoint> pts{{5, 5, 1, 5}, {9, 8, 1, 9}};
    const auto table = core::length_estimates(pts, 1);
    for (const auto& row : table.rows) {
      REQUIRE(row.ratio);
      CHECK(*row.ratio == Rational(1));
    }
    CHECK(table.ratio_non_decreasing);
  }
  // square-grid chain on 9 elements at k = 2
  {
    const auto chain = perm::zebra_chain(3, 3, 2);
    std::vector<core::LengthPoint> pts{{3, chain.ambient_dim(), chain.excess(), 9}};
    const auto table = core::length_estimates(pts, 2);
    REQUIRE(table.rows.size() == 1);
    CHECK(table.rows[0].excess == -3);
    CHECK(table.rows[0].e_bound == -6);
    CHECK(*table.rows[0].ratio == Rational(1, 2));
    CHECK(*table.rows[0].beta_finite == Rational(12, 8));
  }
  // thuja chain at n = 7, k = 3 has excess 0
  {
    const auto chain = assoc::thuja_chain(7, 3);
    std::vector<core::LengthPoint> pts{{7, chain.ambient_dim(), chain.excess(), 5}};
    const auto table = core::length_estimates(pts, 3);
    CHECK(table.rows[0].excess == 0);
    CHECK(*table.rows[0].ratio == Rational(0));
  }
  // E_k = 0 leaves the ratio undefined
  {
    std::vector<core::LengthPoint> pts{{3, 3, 1, 3}};
    const auto table = core::length_estimates(pts, 2);
    CHECK_FALSE(table.rows[0].ratio.has_value());
  }
}

TEST_CASE("beta_finite stays within [0, k] on real chains") {
  for (int k = 1; k <= 4; ++k) {
    for (int n = 2; n <= 6; ++n) {
      const auto chain = perm::zebra_chain(n, n, k);
      std::vector<core::LengthPoint> pts{
          {n, chain.ambient_dim(), chain.excess(), static_cast<long long>(n) * n}};
      const auto table = core::length_estimates(pts, k);
      REQUIRE(table.rows[0].beta_finite);
      CHECK(*table.rows[0].beta_finite >= Rational(0));
      CHECK(*table.rows[0].beta_finite <= Rational(k));
    }
    for (int n = k + 1; n <= 9; ++n) {
      const auto chain = assoc::thuja_chain(n, k);
      if (chain.ambient_dim() <= 0) continue;
      std::vector<core::LengthPoint> pts{{n, chain.ambient_dim(), chain.excess(), n - 2}};
      const auto table = core::length_estimates(pts, k);
      REQUIRE(table.rows[0].beta_finite);
      CHECK(*table.rows[0].beta_finite >= Rational(0));
      CHECK(*table.rows[0].beta_finite <= Rational(k));
    }
  }
}

TEST_CASE("rational rendering") {
  CHECK(format_rational(Rational(1, 2)) == "1/2");
  CHECK(format_rational(Rational(-3, 6)) == "-1/2");
  CHECK(format_rational(Rational(4, 2)) == "2");
  CHECK(format_decimal(Rational(1, 2)) == "0.500000");
  CHECK(format_decimal(Rational(1, 3)) == "0.333333");
  CHECK(format_decimal(Rational(2, 3)) == "0.666667");
  CHECK(format_decimal(Rational(-1, 3)) == "-0.333333");
  CHECK(format_decimal(Rational(-7, -20)) == "0.350000");
  CHECK(format_decimal(Rational(3)) == "3.000000");
}

#include "latround/lattice.hpp"
#include "latround/trig_poly.hpp"
#include "latround/verify.hpp"
#include "test_support.hpp"

#include <doctest.h>

#include <random>

using namespace latround;
using latround::testing::round_rational;

namespace {

Rational r(long n, long d = 1) { return ratio(n, d); }

}  // namespace

TEST_SUITE("lattice") {

TEST_CASE("make_distribution builds normalized distributions") {
  SUBCASE("two-point uniform") {
    const auto d = make_distribution(2, {{0, r(1, 2)}, {1, r(1, 2)}});
    CHECK(d.q() == 2);
    CHECK(d.pmf().size() == 2);
    CHECK(d.mass(1) == r(1, 2));
  }
  SUBCASE("degenerate") {
    const auto d = make_distribution(1, {{5, r(1)}});
    CHECK(d == point_mass(1, 5));
  }
  SUBCASE("equals U_3") { CHECK(make_distribution(3, {{0, r(1, 3)}, {1, r(1, 3)}, {2, r(1, 3)}}) == uniform_U(3)); }
  SUBCASE("duplicates merge and zeros drop") {
    const auto d = make_distribution(4, {{1, r(1, 4)}, {1, r(1, 4)}, {2, r(1, 2)}, {9, r(0)}});
    CHECK(d.pmf().size() == 2);
    CHECK(d.mass(1) == r(1, 2));
    CHECK(d.mass(9) == 0);
  }
}

TEST_CASE("make_distribution rejects invalid input") {
  CHECK_THROWS_AS(make_distribution(2, {{0, r(-1, 2)}, {1, r(3, 2)}}), DistributionError);
  CHECK_THROWS_AS(make_distribution(2, {{0, r(1, 2)}}), DistributionError);
  CHECK_THROWS_AS(make_distribution(0, {{0, r(1)}}), DistributionError);
  CHECK_THROWS_AS(make_distribution(-3, {{0, r(1)}}), DistributionError);
  CHECK_THROWS_AS(make_distribution(2, {}), DistributionError);
}

TEST_CASE("uniform_U") {
  CHECK(uniform_U(1) == point_mass(1, 0));
  const auto u4 = uniform_U(4);
  CHECK(u4.q() == 4);
  for (long k = 0; k < 4; ++k) CHECK(u4.mass(k) == r(1, 4));
  CHECK(u4.pmf().size() == 4);
  CHECK(exact_moment(uniform_U(3), 1) == r(1, 3));
  CHECK_THROWS_AS(uniform_U(0), DistributionError);
}

TEST_CASE("uniform_Utilde") {
  CHECK(uniform_Utilde(2) == make_distribution(2, {{-1, r(1, 2)}, {0, r(1, 2)}}));
  CHECK(uniform_Utilde(3) == make_distribution(3, {{-1, r(1, 3)}, {0, r(1, 3)}, {1, r(1, 3)}}));
  CHECK(exact_moment(uniform_Utilde(3), 2) == r(2, 27));
  CHECK(uniform_Utilde(6).pmf().begin()->first == -3);
  CHECK(uniform_Utilde(6).pmf().rbegin()->first == 2);
  CHECK_THROWS_AS(uniform_Utilde(-1), DistributionError);
}

TEST_CASE("negate") {
  CHECK(negate(point_mass(1, 5)) == point_mass(1, -5));
  CHECK(negate(uniform_U(3)) == make_distribution(3, {{0, r(1, 3)}, {-1, r(1, 3)}, {-2, r(1, 3)}}));
  std::mt19937_64 rng(11);
  for (int i = 0; i < 50; ++i) {
    const auto d = random_distribution(rng);
    CHECK(negate(negate(d)) == d);
  }
}

TEST_CASE("scale_by_integer") {
  CHECK(scale_by_integer(uniform_Utilde(3), 2) == make_distribution(3, {{-2, r(1, 3)}, {0, r(1, 3)}, {2, r(1, 3)}}));
  const auto d = make_distribution(5, {{-7, r(1, 5)}, {3, r(4, 5)}});
  CHECK(scale_by_integer(d, 1) == d);
  // 3 * (1/3) = 1, still written on the 1/3 lattice
  CHECK(scale_by_integer(point_mass(3, 1), 3) == point_mass(3, 3));
  CHECK(exact_moment(scale_by_integer(point_mass(3, 1), 3), 1) == 1);
  CHECK_THROWS_AS(scale_by_integer(d, 0), DistributionError);
}

TEST_CASE("convolve") {
  const auto d = make_distribution(3, {{-4, r(1, 6)}, {2, r(5, 6)}});
  CHECK(convolve(point_mass(3, 0), d) == d);

  // Direct enumeration of the 3x3 equally likely outcomes.
  Pmf expected;
  for (long a = -1; a <= 1; ++a) {
    for (long b = -1; b <= 1; ++b) expected[a + b] += r(1, 9);
  }
  const auto sum = convolve(uniform_Utilde(3), uniform_Utilde(3));
  CHECK(sum.pmf() == expected);
  CHECK(sum.mass(-2) == r(1, 9));
  CHECK(sum.mass(-1) == r(2, 9));
  CHECK(sum.mass(0) == r(3, 9));
  CHECK(sum.mass(1) == r(2, 9));
  CHECK(sum.mass(2) == r(1, 9));

  CHECK_THROWS_AS(convolve(uniform_U(2), uniform_U(3)), DistributionError);
  // A common lattice reached by refinement.
  const auto mixed = convolve(refine(uniform_U(2), 3), refine(uniform_U(3), 2));
  CHECK(mixed.q() == 6);
  CHECK(exact_moment(mixed, 1) == r(1, 4) + r(1, 3));
}

TEST_CASE("convolve multiplies characteristic functions") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 20; ++i) {
    const auto a = random_distribution_with_q(rng, 4);
    const auto b = random_distribution_with_q(rng, 4);
    const auto pa = from_distribution(a);
    const auto pb = from_distribution(b);
    const auto pab = from_distribution(convolve(a, b));
    for (int s = 0; s < 17; ++s) {
      const double t = -7.0 + 0.83 * s;
      CHECK(std::abs(evaluate(pab, t) - evaluate(pa, t) * evaluate(pb, t)) < 1e-12);
    }
  }
}

TEST_CASE("round_lattice_point agrees with rounding the rational") {
  for (long q = 1; q <= 12; ++q) {
    for (long k = -60; k <= 60; ++k) {
      for (RoundingMode mode : kAllModes) {
        CHECK(round_lattice_point(k, q, mode) == round_rational(ratio(k, q), mode).get_si());
      }
    }
  }
  // ties
  CHECK(round_lattice_point(1, 2, RoundingMode::NearestUp) == 1);
  CHECK(round_lattice_point(1, 2, RoundingMode::NearestDown) == 0);
  CHECK(round_lattice_point(-1, 2, RoundingMode::NearestUp) == 0);
  CHECK(round_lattice_point(-1, 2, RoundingMode::NearestDown) == -1);
  CHECK(round_lattice_point(-3, 2, RoundingMode::Ceil) == -1);
}

TEST_CASE("round_distribution") {
  for (long q = 1; q <= 12; ++q) CHECK(round_distribution(uniform_U(q), RoundingMode::Floor) == point_mass(1, 0));
  for (long q = 1; q <= 15; q += 2) {
    CHECK(round_distribution(uniform_Utilde(q), RoundingMode::NearestUp) == point_mass(1, 0));
  }
  // {0, 1/3, 2/3}: only 2/3 rounds up
  CHECK(round_distribution(uniform_U(3), RoundingMode::NearestUp) == make_distribution(1, {{0, r(2, 3)}, {1, r(1, 3)}}));
  // even q has ties at -1/2, which NearestUp sends to 0 and NearestDown to -1
  CHECK(round_distribution(uniform_Utilde(2), RoundingMode::NearestUp) == point_mass(1, 0));
  CHECK(round_distribution(uniform_Utilde(2), RoundingMode::NearestDown) ==
        make_distribution(1, {{-1, r(1, 2)}, {0, r(1, 2)}}));
}

TEST_CASE("exact_moment") {
  for (long q = 1; q <= 15; ++q) {
    CHECK(exact_moment(uniform_U(q), 1) == ratio(q - 1, 2 * q));
    CHECK(exact_moment(uniform_U(q), 2) == ratio(2 * q * q - 3 * q + 1, 6 * q * q));
  }
  CHECK(exact_moment(point_mass(1, 5), 3) == 125);
  CHECK(exact_moment(point_mass(3, 7), 0) == 1);
}

TEST_CASE("rounding invariants on random distributions") {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 200; ++i) {
    const auto d = random_distribution(rng);
    CAPTURE(describe(d));
    for (RoundingMode mode : kAllModes) {
      const auto rounded = round_distribution(d, mode);
      CHECK(rounded.q() == 1);
      Rational total = 0;
      for (const auto& [k, p] : rounded.pmf()) total += p;
      CHECK(total == 1);
      // rounding commutes with integer shifts
      CHECK(exact_moment(round_distribution(shift_by_integer(d, 7), mode), 1) == exact_moment(rounded, 1) + 7);
      CHECK(exact_moment(round_distribution(shift_by_integer(d, -3), mode), 1) == exact_moment(rounded, 1) - 3);
    }
    CHECK(round_distribution(d, RoundingMode::Ceil) == negate(round_distribution(negate(d), RoundingMode::Floor)));
    CHECK(round_distribution(d, RoundingMode::NearestDown) ==
          negate(round_distribution(negate(d), RoundingMode::NearestUp)));
    CHECK(round_distribution(d, RoundingMode::NearestUp) ==
          round_distribution(shift_by_lattice_steps(refine(d, 2), d.q()), RoundingMode::Floor));
  }
}

TEST_CASE("q = 1 rounding is the identity") {
  const auto d = make_distribution(1, {{-4, r(1, 5)}, {0, r(1, 5)}, {11, r(3, 5)}});
  for (RoundingMode mode : kAllModes) CHECK(round_distribution(d, mode) == d);
}

TEST_CASE("rounding mode names round-trip") {
  for (RoundingMode mode : kAllModes) {
    CHECK(parse_rounding_mode(to_string(mode)) == mode);
    CHECK(mirror(mirror(mode)) == mode);
  }
  CHECK_THROWS(parse_rounding_mode("banker"));
}

}  // TEST_SUITE

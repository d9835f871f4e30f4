#include "latround/sheppard.hpp"
#include "latround/trig_poly.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <sstream>

using namespace latround;

namespace {

Rational r(long n, long d = 1) { return ratio(n, d); }

}  // namespace

TEST_SUITE("sheppard") {

TEST_CASE("build_weighted_sum") {
  CHECK(build_weighted_sum(3, {1}) == uniform_Utilde(3));

  const auto x = build_weighted_sum(5, {1, 1});
  CHECK(exact_moment(x, 1) == 0);
  CHECK(exact_moment(x, 2) == r(4, 25));

  // 2a + 3b over all a, b in {-1, 0, 1}
  Pmf expected;
  for (long a = -1; a <= 1; ++a) {
    for (long b = -1; b <= 1; ++b) expected[2 * a + 3 * b] += r(1, 9);
  }
  const auto y = build_weighted_sum(3, {2, 3});
  CHECK(y.q() == 3);
  CHECK(y.pmf() == expected);
  CHECK(negate(y) == y);

  CHECK_THROWS_AS(build_weighted_sum(4, {1, 1}), SheppardError);
  CHECK_THROWS_AS(build_weighted_sum(3, {}), SheppardError);
  CHECK_THROWS_AS(build_weighted_sum(3, {1, 0}), SheppardError);
}

TEST_CASE("variance and symmetry of the weighted sum") {
  for (long q = 1; q <= 15; q += 2) {
    for (const std::vector<std::int64_t>& s :
         {std::vector<std::int64_t>{1}, {2, 3}, {1, 4, 6}, {5, 5}, {3, 1, 2}}) {
      const auto x = build_weighted_sum(q, s);
      long sum_sq = 0;
      for (auto w : s) sum_sq += w * w;
      CHECK(exact_moment(x, 1) == 0);
      CHECK(exact_moment(x, 2) == ratio(q * q - 1, 12 * q * q) * sum_sq);
      CHECK(exact_moment(round_distribution(x, RoundingMode::NearestUp), 1) == 0);
      CHECK(round_distribution(x, RoundingMode::NearestUp) == round_distribution(x, RoundingMode::NearestDown));
    }
  }
}

TEST_CASE("gcd diagnostics") {
  CHECK(weight_gcd(9, {3, 6}) == 3);
  CHECK(weight_gcd(5, {1, 2}) == 1);
  CHECK(leave_one_out_gcds(9, {3, 6}) == std::vector<std::int64_t>{3, 3});
  CHECK(leave_one_out_gcds(15, {3, 5, 10}) == std::vector<std::int64_t>{5, 1, 1});
  for (long q = 3; q <= 21; q += 2) {
    const std::vector<std::int64_t> s{q / 3 + 1, 6, 9};
    const auto d = weight_gcd(q, s);
    for (auto dk : leave_one_out_gcds(q, s)) CHECK(dk % d == 0);
  }
}

TEST_CASE("charfun_vanishing_set") {
  CHECK(charfun_vanishing_set(9, {3, 6}) == std::vector<std::int64_t>{3, 6});
  CHECK(charfun_vanishing_set(5, {1, 2}).empty());
  CHECK(charfun_vanishing_set(3, {3}) == std::vector<std::int64_t>{1, 2});

  // phi_X(2 pi j) is 1 on the set and 0 elsewhere
  for (long q = 3; q <= 15; q += 2) {
    for (const std::vector<std::int64_t>& s :
         {std::vector<std::int64_t>{3, 6}, {1, 2}, {q}, {5, 10, 15}, {q, 2 * q}, {9}}) {
      const auto set = charfun_vanishing_set(q, s);
      const auto phi = from_distribution(build_weighted_sum(q, s));
      for (std::int64_t j = 1; j < q; ++j) {
        const Complex v = evaluate_at_2pi_multiple(phi, j);
        const bool in_set = std::find(set.begin(), set.end(), j) != set.end();
        CAPTURE(q);
        CAPTURE(j);
        CHECK(std::abs(v - (in_set ? 1.0 : 0.0)) < 1e-10);
      }
    }
  }
}

TEST_CASE("sheppard_report for q = 3, s = (1, 1)") {
  // X takes -2/3..2/3 with weights (1,2,3,2,1)/9, rounds to -1, 0, 0, 0, 1.
  const auto rep = sheppard_report(3, {1, 1});
  CHECK(rep.var_X == r(4, 27));
  CHECK(rep.second_moment_rounded == r(2, 9));
  CHECK(rep.sheppard_approx == r(25, 108));
  CHECK(rep.exact_error == r(1, 108));
  CHECK(rep.bound_ss7 == r(2, 27));
  CHECK(rep.intermediate_bound == r(8, 108));
  CHECK(rep.d == 1);
  CHECK(rep.J == 3);
  CHECK(rep.d_k == std::vector<std::int64_t>{1, 1});
  CHECK(rep.bound_applicable);
  CHECK(rep.within_bound());
  CHECK(rep.within_intermediate_bound());
  CHECK(std::abs(rep.second_moment_formula - 2.0 / 9.0) < 1e-12);
  CHECK(std::abs(rep.exact_error_formula - 1.0 / 108.0) < 1e-12);
}

TEST_CASE("sheppard_report examples") {
  const auto wide = sheppard_report(31, {2, 3, 5});
  CHECK(wide.bound_ss7 == r(160, 2883));
  CHECK(wide.within_bound());
  CHECK(wide.mean_rounded == 0);
  CHECK(std::abs(wide.second_moment_formula - to_double(wide.second_moment_rounded)) < 1e-8);

  // Weights divisible by q: X is integer-valued and rounding is exact, so the
  // error is exactly the 1/12 correction.
  const auto integral = sheppard_report(5, {5, 5});
  CHECK(integral.d == 5);
  CHECK(integral.J == 1);
  CHECK(round_distribution(build_weighted_sum(5, {5, 5}), RoundingMode::NearestUp) ==
        round_distribution(build_weighted_sum(5, {5, 5}), RoundingMode::Floor));
  CHECK(integral.second_moment_rounded == exact_moment(build_weighted_sum(5, {5, 5}), 2));
  CHECK(integral.exact_error == r(1, 12));
  CHECK(std::abs(integral.exact_error_formula - 1.0 / 12.0) < 1e-10);
  CHECK(integral.within_bound());

  const auto single = sheppard_report(7, {2});
  CHECK_FALSE(single.bound_applicable);
  CHECK_FALSE(single.within_bound());

  CHECK_THROWS_AS(sheppard_report(4, {1, 1}), SheppardError);
}

TEST_CASE("bounds hold on a small sweep") {
  SweepConfig config;
  config.q_max = 15;
  config.s_max = 4;
  config.threads = 2;
  const auto reports = sheppard_sweep(config);
  CHECK(reports.size() == 7 * (16 + 64));
  for (const auto& rep : reports) {
    CAPTURE(rep.q);
    CHECK(rep.within_bound());
    CHECK(rep.within_intermediate_bound());
    CHECK(rep.mean_rounded == 0);
    CHECK(std::abs(rep.second_moment_formula - to_double(rep.second_moment_rounded)) <
          1e-8 * std::max(1.0, to_double(rep.second_moment_rounded)));
  }
}

TEST_CASE("sweep ordering is independent of thread count") {
  SweepConfig config;
  config.q_max = 9;
  config.s_max = 3;
  config.threads = 1;
  const auto serial = sheppard_sweep(config);
  config.threads = 4;
  const auto parallel = sheppard_sweep(config);
  REQUIRE(serial.size() == parallel.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    CHECK(serial[i].q == parallel[i].q);
    CHECK(serial[i].s == parallel[i].s);
    CHECK(serial[i].exact_error == parallel[i].exact_error);
  }
  CHECK(serial.front().s == std::vector<std::int64_t>{1, 1});
  CHECK(serial.back().q == 9);
  CHECK(serial.back().s == std::vector<std::int64_t>{3, 3, 3});

  config.q_max = 1;
  CHECK(sheppard_sweep(config).empty());
}

TEST_CASE("sweep CSV") {
  std::ostringstream out;
  write_sweep_csv(out, {sheppard_report(3, {1, 1}), sheppard_report(5, {1, 2, 3})});
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  CHECK(line == "q,s,var_X,exact_error,bound_ss7,ratio\r");
  std::getline(in, line);
  CHECK(line == "3,1;1,4/27,1/108,2/27,0.125\r");
  std::getline(in, line);
  CHECK(line.rfind("5,1;2;3,", 0) == 0);
}

}  // TEST_SUITE

#include "latround/dist_file.hpp"
#include "latround/verify.hpp"

#include <doctest.h>

#include <random>

using namespace latround;

TEST_SUITE("dist_file") {

TEST_CASE("rationals") {
  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(parse_rational("-4/8") == Rational(-1, 2));
  CHECK(parse_rational("7") == 7);
  CHECK(to_string(parse_rational("10/4")) == "5/2");
  CHECK(to_string(Rational(8)) == "8");
  CHECK_THROWS_AS(parse_rational("1/0"), RationalParseError);
  CHECK_THROWS_AS(parse_rational("1/-2"), RationalParseError);
  CHECK_THROWS_AS(parse_rational("0.5"), RationalParseError);
  CHECK_THROWS_AS(parse_rational(""), RationalParseError);
  CHECK_THROWS_AS(parse_rational("/3"), RationalParseError);
}

TEST_CASE("parse a distribution file") {
  const auto d = parse_distribution_spec(R"({"q": 3, "pmf": [{"k": 0, "p": "1/3"}, {"k": 2, "p": "2/3"}]})");
  CHECK(d == make_distribution(3, {{0, Rational(1, 3)}, {2, Rational(2, 3)}}));
}

TEST_CASE("parse errors carry a location") {
  try {
    parse_distribution_spec("{\"q\": 2,\n \"pmf\": [{\"k\": 0, \"p\": \"1/0\"}]}");
    FAIL("expected a parse error");
  } catch (const SpecParseError& e) {
    CHECK(std::string(e.what()).find("pmf[0].p") != std::string::npos);
  }
  try {
    parse_distribution_spec("{\"q\": 2,\n \"pmf\": [{\"k\": 0, \"p\": \"1/2\"},\n {\"k\": 1 \"p\": \"1/2\"}]}");
    FAIL("expected a parse error");
  } catch (const SpecParseError& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_distribution_spec(R"({"pmf": []})"), SpecParseError);
  CHECK_THROWS_AS(parse_distribution_spec(R"({"q": "2", "pmf": []})"), SpecParseError);
  CHECK_THROWS_AS(parse_distribution_spec(R"({"q": 2, "pmf": [{"k": 0, "p": 1}]})"), SpecParseError);
  CHECK_THROWS_AS(parse_distribution_spec(R"({"q": 2, "pmf": [{"p": "1"}]})"), SpecParseError);
  CHECK_THROWS_AS(parse_distribution_spec(R"([1, 2])"), SpecParseError);
}

TEST_CASE("invalid distributions are reported separately") {
  CHECK_THROWS_AS(parse_distribution_spec(R"({"q": 2, "pmf": [{"k": 0, "p": "1/3"}]})"), DistributionError);
  CHECK_THROWS_AS(parse_distribution_spec(R"({"q": 2, "pmf": [{"k": 0, "p": "-1"}, {"k": 1, "p": "2"}]})"),
                  DistributionError);
  CHECK_THROWS_AS(parse_distribution_spec(R"({"q": 0, "pmf": [{"k": 0, "p": "1"}]})"), DistributionError);
}

TEST_CASE("canonical form re-parses to the same distribution") {
  std::mt19937_64 rng(83);
  for (int i = 0; i < 100; ++i) {
    const auto d = random_distribution(rng);
    const std::string text = to_distribution_spec(d);
    CHECK(parse_distribution_spec(text) == d);
    CHECK(to_distribution_spec(parse_distribution_spec(text)) == text);
  }
}

}  // TEST_SUITE

#include "latround/verify.hpp"

#include "latround/charfun.hpp"
#include "latround/moments.hpp"
#include "latround/trig_poly.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace latround {

namespace {

CheckResult finish(std::string name, double residual, double tolerance, std::string detail) {
  const bool passed = std::isfinite(residual) && residual <= tolerance;
  return {std::move(name), passed, residual, tolerance, std::move(detail)};
}

double scaled(double residual, const Rational& oracle) {
  return residual / std::max(1.0, std::abs(to_double(oracle)));
}

}  // namespace

LatticeDistribution random_distribution(std::mt19937_64& rng, const RandomDistributionOptions& options) {
  std::uniform_int_distribution<std::int64_t> pick_q(1, std::max<std::int64_t>(options.q_max, 1));
  return random_distribution_with_q(rng, pick_q(rng), options);
}

LatticeDistribution random_distribution_with_q(std::mt19937_64& rng, std::int64_t q,
                                               const RandomDistributionOptions& options) {
  std::uniform_int_distribution<std::int64_t> pick_size(1, std::max<std::int64_t>(options.max_support, 1));
  std::uniform_int_distribution<std::int64_t> pick_k(-options.k_max, options.k_max);
  std::uniform_int_distribution<std::int64_t> pick_weight(1, std::max<std::int64_t>(options.max_weight, 1));

  const std::int64_t size = pick_size(rng);
  std::vector<std::pair<std::int64_t, std::int64_t>> weights;
  std::int64_t total = 0;
  for (std::int64_t i = 0; i < size; ++i) {
    const std::int64_t w = pick_weight(rng);
    weights.emplace_back(pick_k(rng), w);
    total += w;
  }
  std::vector<std::pair<std::int64_t, Rational>> entries;
  for (const auto& [k, w] : weights) entries.emplace_back(k, ratio(w, total));
  return make_distribution(q, entries);
}

std::string describe(const LatticeDistribution& d) {
  std::ostringstream out;
  out << "q=" << d.q() << " {";
  bool first = true;
  for (const auto& [k, p] : d.pmf()) {
    if (!first) out << ", ";
    out << k << ':' << to_string(p);
    first = false;
  }
  out << '}';
  return out.str();
}

CheckResult check_trig_identity(std::int64_t q) {
  if (q < 2) throw std::invalid_argument("trig identity check needs q >= 2");
  double sum = 0.0;
  for (std::int64_t j = 1; j < q; ++j) {
    const double s = std::sin(std::numbers::pi * static_cast<double>(j) / static_cast<double>(q));
    sum += 1.0 / (s * s);
  }
  const double qd = static_cast<double>(q);
  const double expected = (qd * qd - 1.0) / 3.0;
  return finish("trig_identity q=" + std::to_string(q), std::abs(sum - expected), 1e-9 * qd * qd,
                "sum=" + std::to_string(sum));
}

CheckResult check_example_q2(const LatticeDistribution& d) {
  if (d.q() != 2) throw std::invalid_argument("q=2 example check needs a distribution with q=2");
  constexpr Complex kI{0.0, 1.0};
  const TrigPolynomial phi = from_distribution(d);
  const Complex phi_2pi = evaluate_at_2pi_multiple(phi, 1);
  const Complex dphi_2pi = evaluate_at_2pi_multiple(differentiate(phi, 1), 1);
  const double mean = to_double(exact_moment(d, 1));
  const double second = to_double(exact_moment(d, 2));

  const Complex floor_mean = mean - 0.25 + phi_2pi / 4.0;
  const Complex ceil_mean = mean + 0.25 - phi_2pi / 4.0;
  const Complex floor_second = second + 0.125 - mean / 2.0 - kI / 2.0 * dphi_2pi - phi_2pi / 8.0;
  const Complex ceil_second = second + 0.125 + mean / 2.0 + kI / 2.0 * dphi_2pi - phi_2pi / 8.0;

  double residual = 0.0;
  auto compare = [&](Complex value, RoundingMode mode, unsigned r) {
    const Rational oracle = oracle_moment(d, mode, r);
    residual = std::max(residual, scaled(std::abs(value - Complex(to_double(oracle), 0.0)), oracle));
  };
  compare(floor_mean, RoundingMode::Floor, 1);
  compare(ceil_mean, RoundingMode::Ceil, 1);
  compare(ceil_mean, RoundingMode::NearestUp, 1);
  compare(floor_second, RoundingMode::Floor, 2);
  compare(ceil_second, RoundingMode::Ceil, 2);
  compare(ceil_second, RoundingMode::NearestUp, 2);

  std::string detail = describe(d);
  if (round_distribution(d, RoundingMode::NearestUp) != round_distribution(d, RoundingMode::Ceil)) {
    residual = std::max(residual, 1.0);
    detail += " nearest-up != ceil";
  }
  return finish("example_q2", residual, 1e-10, detail);
}

CheckResult check_example_E0(std::int64_t q) {
  const LatticeDistribution u = uniform_U(q);
  double residual = std::max(std::abs(closed_form_mean(u, RoundingMode::Floor)),
                             std::abs(closed_form_second_moment(u, RoundingMode::Floor)));
  if (q % 2 == 1) {
    const LatticeDistribution ut = uniform_Utilde(q);
    residual = std::max({residual, std::abs(closed_form_mean(ut, RoundingMode::NearestUp)),
                         std::abs(closed_form_second_moment(ut, RoundingMode::NearestUp))});
  }
  return finish("example_E0 q=" + std::to_string(q), residual, 1e-9, "");
}

CheckResult check_duality(const LatticeDistribution& d) {
  std::vector<std::string> failures;
  const LatticeDistribution neg = negate(d);
  if (round_distribution(d, RoundingMode::Ceil) != negate(round_distribution(neg, RoundingMode::Floor))) {
    failures.emplace_back("ceil mirror");
  }
  if (round_distribution(d, RoundingMode::NearestDown) !=
      negate(round_distribution(neg, RoundingMode::NearestUp))) {
    failures.emplace_back("nearest-down mirror");
  }
  // floor(x + 1/2) on the lattice 1/(2q): x + 1/2 = (2k + q) / (2q).
  const LatticeDistribution shifted = shift_by_lattice_steps(refine(d, 2), d.q());
  if (round_distribution(d, RoundingMode::NearestUp) != round_distribution(shifted, RoundingMode::Floor)) {
    failures.emplace_back("nearest-up as shifted floor");
  }
  std::string detail = describe(d);
  for (const auto& f : failures) detail += " FAILED: " + f;
  return finish("duality", failures.empty() ? 0.0 : 1.0, 0.0, detail);
}

CheckResult check_moments(const LatticeDistribution& d, double tolerance) {
  double residual = 0.0;
  for (RoundingMode mode : kAllModes) {
    const MomentReport m1 = mean_rounded(d, mode);
    const MomentReport m2 = second_moment_rounded(d, mode);
    residual = std::max({residual, scaled(m1.residual, m1.oracle_value), scaled(m2.residual, m2.oracle_value)});
  }
  return finish("closed_form_moments", residual, tolerance, describe(d));
}

CheckResult check_differentiated_moments(const LatticeDistribution& d, unsigned r_max) {
  double residual = 0.0;
  for (RoundingMode mode : kAllModes) {
    for (unsigned r = 1; r <= r_max; ++r) {
      const MomentReport report = moment_rounded(d, mode, r);
      residual = std::max(residual, scaled(report.residual, report.oracle_value));
    }
  }
  return finish("differentiated_moments", residual, 1e-8, describe(d));
}

CheckResult check_path_agreement(const LatticeDistribution& d) {
  double residual = 0.0;
  for (RoundingMode mode : kAllModes) {
    residual = std::max({residual,
                         std::abs(differentiated_moment(d, mode, 1).real() - closed_form_mean(d, mode).real()),
                         std::abs(differentiated_moment(d, mode, 2).real() -
                                  closed_form_second_moment(d, mode).real())});
  }
  return finish("path_agreement", residual, 1e-9, describe(d));
}

CheckResult check_charfun(const LatticeDistribution& d, int grid_points) {
  const TrigPolynomial phi = from_distribution(d);
  const double span = std::numbers::pi * static_cast<double>(d.q());
  double residual = 0.0;
  for (RoundingMode mode : kAllModes) {
    const TrigPolynomial oracle = from_distribution(round_distribution(d, mode));
    for (int i = 0; i < grid_points; ++i) {
      const double t = grid_points == 1 ? 0.0 : -span + 2.0 * span * i / (grid_points - 1);
      const Complex base = charfun_rounded(phi, mode, t);
      residual = std::max(residual, std::abs(base - evaluate(oracle, t)));
      for (std::int64_t m : {std::int64_t{-3}, std::int64_t{1}, d.q()}) {
        residual = std::max(residual, std::abs(charfun_rounded_shifted(phi, mode, t, m) - base));
      }
    }
  }
  return finish("rounded_charfun", residual, 1e-10, describe(d));
}

std::vector<CheckResult> run_all(const VerifyConfig& config) {
  std::vector<CheckResult> results;
  for (std::int64_t q = 2; q <= config.identity_q_max; ++q) results.push_back(check_trig_identity(q));
  for (std::int64_t q = 1; q <= config.q_max; ++q) results.push_back(check_example_E0(q));

  std::mt19937_64 rng(config.seed);
  RandomDistributionOptions options;
  options.q_max = config.q_max;
  const std::string seed_tag = " seed=" + std::to_string(config.seed);

  auto tagged = [&](CheckResult result, std::size_t i) {
    result.name += " #" + std::to_string(i);
    result.detail += seed_tag;
    return result;
  };

  const std::size_t samples = config.q_max >= 1 ? config.samples : 0;
  if (config.q_max >= 2) {
    for (std::size_t i = 0; i < samples; ++i) {
      results.push_back(tagged(check_example_q2(random_distribution_with_q(rng, 2, options)), i));
    }
  }
  for (std::size_t i = 0; i < samples; ++i) {
    results.push_back(tagged(check_duality(random_distribution(rng, options)), i));
  }
  for (std::size_t i = 0; i < samples; ++i) {
    const LatticeDistribution d = random_distribution(rng, options);
    results.push_back(tagged(check_moments(d), i));
    results.push_back(tagged(check_differentiated_moments(d), i));
    results.push_back(tagged(check_path_agreement(d), i));
    results.push_back(tagged(check_charfun(d), i));
  }

  if (config.inject_fault && !results.empty()) {
    CheckResult& victim = results.front();
    victim.residual = victim.tolerance + 1.0;
    victim.passed = false;
    victim.detail += " (injected fault)";
  }
  return results;
}

}  // namespace latround

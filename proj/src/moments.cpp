#include "latround/moments.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace latround {

namespace {

constexpr Complex kI{0.0, 1.0};

double sign_pow(std::int64_t j) { return (j % 2 == 0) ? 1.0 : -1.0; }

// exp(-2 pi i j / q)
Complex root(std::int64_t j, std::int64_t q) {
  return std::polar(1.0, -2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(q));
}

double sin_pi(std::int64_t j, std::int64_t q) {
  return std::sin(std::numbers::pi * static_cast<double>(j) / static_cast<double>(q));
}

double cos_pi(std::int64_t j, std::int64_t q) {
  return std::cos(std::numbers::pi * static_cast<double>(j) / static_cast<double>(q));
}

MomentReport make_report(RoundingMode mode, unsigned r, Complex value, Rational oracle) {
  MomentReport report{mode, r, value.real(), value.imag(), std::move(oracle), 0.0, false};
  report.residual = std::abs(report.formula_value - to_double(report.oracle_value));
  report.precision_warning =
      std::abs(value.imag()) > kImaginaryWarning * std::max(1.0, std::abs(value.real()));
  return report;
}

// Floor mean.
Complex mean_floor(const LatticeDistribution& d) {
  const std::int64_t q = d.q();
  const Rational constant = exact_moment(d, 1) - ratio(1, 2) + ratio(1, 2 * q);
  const TrigPolynomial phi = from_distribution(d);
  Complex sum{};
  for (std::int64_t j = 1; j < q; ++j) {
    sum += evaluate_at_2pi_multiple(phi, j) / (static_cast<double>(q) * (1.0 - root(j, q)));
  }
  return to_double(constant) + sum;
}

// NearestUp mean, q even and odd branches.
Complex mean_nearest_up(const LatticeDistribution& d) {
  const std::int64_t q = d.q();
  const double qd = static_cast<double>(q);
  const TrigPolynomial phi = from_distribution(d);
  Complex sum{};
  if (q % 2 == 0) {
    const Rational constant = exact_moment(d, 1) + ratio(1, 2 * q);
    for (std::int64_t j = 1; j < q; ++j) {
      sum += sign_pow(j) * evaluate_at_2pi_multiple(phi, j) / (qd * (1.0 - root(j, q)));
    }
    return to_double(constant) + sum;
  }
  for (std::int64_t j = 1; j < q; ++j) {
    // e^{i pi j/q} - e^{-i pi j/q} = 2i sin(pi j/q)
    const Complex denom = qd * 2.0 * kI * sin_pi(j, q);
    sum += sign_pow(j) * evaluate_at_2pi_multiple(phi, j) / denom;
  }
  return to_double(exact_moment(d, 1)) + sum;
}

Complex second_floor(const LatticeDistribution& d) {
  const std::int64_t q = d.q();
  const double qd = static_cast<double>(q);
  const Rational constant = exact_moment(d, 2) + ratio(2 * q * q - 3 * q + 1, 6 * q * q) -
                            ratio(q - 1, q) * exact_moment(d, 1);
  const TrigPolynomial phi = from_distribution(d);
  const TrigPolynomial dphi = differentiate(phi, 1);
  Complex derivative_sum{};
  Complex value_sum{};
  for (std::int64_t j = 1; j < q; ++j) {
    const Complex w = root(j, q);
    const Complex one_minus_w = 1.0 - w;
    derivative_sum += kI / (qd * one_minus_w) * evaluate_at_2pi_multiple(dphi, j);
    value_sum += (1.0 / (qd * one_minus_w) + 2.0 * w / (qd * qd * one_minus_w * one_minus_w)) *
                 evaluate_at_2pi_multiple(phi, j);
  }
  return to_double(constant) - 2.0 * derivative_sum - value_sum;
}

Complex second_nearest_up(const LatticeDistribution& d) {
  const std::int64_t q = d.q();
  const double qd = static_cast<double>(q);
  const TrigPolynomial phi = from_distribution(d);
  const TrigPolynomial dphi = differentiate(phi, 1);
  Complex derivative_sum{};
  Complex value_sum{};
  if (q % 2 == 0) {
    const Rational constant =
        exact_moment(d, 2) + ratio(1, 12) + ratio(1, 6 * q * q) + exact_moment(d, 1) / q;
    for (std::int64_t j = 1; j < q; ++j) {
      const double s = sin_pi(j, q);
      // Centred-kernel derivative at 2 pi j is i(-1)^j / (q(1 - e^{-2 pi i j/q})).
      derivative_sum += kI * sign_pow(j) / (qd * (1.0 - root(j, q))) * evaluate_at_2pi_multiple(dphi, j);
      value_sum += sign_pow(j) / (2.0 * qd * qd * s * s) * evaluate_at_2pi_multiple(phi, j);
    }
    return to_double(constant) - 2.0 * derivative_sum + value_sum;
  }
  const Rational constant = exact_moment(d, 2) + ratio(1, 12) - ratio(1, 12 * q * q);
  for (std::int64_t j = 1; j < q; ++j) {
    const double s = sin_pi(j, q);
    derivative_sum += sign_pow(j) / (qd * s) * evaluate_at_2pi_multiple(dphi, j);
    value_sum += sign_pow(j) * cos_pi(j, q) / (2.0 * qd * qd * s * s) * evaluate_at_2pi_multiple(phi, j);
  }
  return to_double(constant) - derivative_sum + value_sum;
}

}  // namespace

bool MomentReport::within(double tolerance) const {
  return residual <= tolerance * std::max(1.0, std::abs(to_double(oracle_value)));
}

Rational oracle_moment(const LatticeDistribution& d, RoundingMode mode, unsigned r) {
  return exact_moment(round_distribution(d, mode), r);
}

Complex closed_form_mean(const LatticeDistribution& d, RoundingMode mode) {
  switch (mode) {
    case RoundingMode::Floor: return mean_floor(d);
    case RoundingMode::NearestUp: return mean_nearest_up(d);
    case RoundingMode::Ceil: return -mean_floor(negate(d));
    case RoundingMode::NearestDown: return -mean_nearest_up(negate(d));
  }
  throw std::invalid_argument("unknown rounding mode");
}

Complex closed_form_second_moment(const LatticeDistribution& d, RoundingMode mode) {
  switch (mode) {
    case RoundingMode::Floor: return second_floor(d);
    case RoundingMode::NearestUp: return second_nearest_up(d);
    case RoundingMode::Ceil: return second_floor(negate(d));
    case RoundingMode::NearestDown: return second_nearest_up(negate(d));
  }
  throw std::invalid_argument("unknown rounding mode");
}

Complex differentiated_moment(const LatticeDistribution& d, RoundingMode mode, unsigned r) {
  const std::int64_t q = d.q();
  const TrigPolynomial product = multiply(rounding_kernel(q, mode), from_distribution(d));
  const TrigPolynomial derivative = differentiate(product, r);
  Complex sum{};
  for (std::int64_t j = 0; j < q; ++j) sum += evaluate_at_2pi_multiple(derivative, j);
  // i^{-r} = (-i)^r
  Complex factor{1.0, 0.0};
  for (unsigned i = 0; i < r % 4; ++i) factor *= Complex{0.0, -1.0};
  return factor * sum;
}

MomentReport mean_rounded(const LatticeDistribution& d, RoundingMode mode) {
  return make_report(mode, 1, closed_form_mean(d, mode), oracle_moment(d, mode, 1));
}

MomentReport second_moment_rounded(const LatticeDistribution& d, RoundingMode mode) {
  return make_report(mode, 2, closed_form_second_moment(d, mode), oracle_moment(d, mode, 2));
}

MomentReport moment_rounded(const LatticeDistribution& d, RoundingMode mode, unsigned r) {
  if (r == 0) throw std::invalid_argument("moment order must be at least 1");
  return make_report(mode, r, differentiated_moment(d, mode, r), oracle_moment(d, mode, r));
}

}  // namespace latround

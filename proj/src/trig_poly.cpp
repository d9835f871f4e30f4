#include "latround/trig_poly.hpp"

#include <numbers>
#include <stdexcept>
#include <string>

namespace latround {

namespace {

void require_same_base(const TrigPolynomial& a, const TrigPolynomial& b) {
  if (a.base_q() != b.base_q()) {
    throw std::invalid_argument("trig polynomials over different bases: " + std::to_string(a.base_q()) +
                                " vs " + std::to_string(b.base_q()));
  }
}

std::int64_t positive_mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

// i^r
Complex i_power(unsigned r) {
  switch (r % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

}  // namespace

TrigPolynomial::TrigPolynomial(std::int64_t base_q, Coefficients coeffs)
    : base_q_(base_q), coeffs_(std::move(coeffs)) {
  if (base_q_ <= 0) throw std::invalid_argument("trig polynomial base must be positive");
}

TrigPolynomial TrigPolynomial::constant(std::int64_t base_q, Complex value) {
  return TrigPolynomial(base_q, {{0, value}});
}

Complex TrigPolynomial::coeff(std::int64_t n) const {
  auto it = coeffs_.find(n);
  return it == coeffs_.end() ? Complex{} : it->second;
}

TrigPolynomial from_distribution(const LatticeDistribution& d) {
  TrigPolynomial::Coefficients coeffs;
  for (const auto& [k, p] : d.pmf()) coeffs.emplace(k, Complex(to_double(p), 0.0));
  return TrigPolynomial(d.q(), std::move(coeffs));
}

Complex evaluate(const TrigPolynomial& p, double t) {
  Complex sum{};
  const double base = static_cast<double>(p.base_q());
  for (const auto& [n, c] : p.coeffs()) {
    sum += c * std::polar(1.0, static_cast<double>(n) * t / base);
  }
  return sum;
}

Complex evaluate_at_2pi_multiple(const TrigPolynomial& p, std::int64_t j) {
  const std::int64_t base = p.base_q();
  const std::int64_t jr = positive_mod(j, base);
  Complex sum{};
  for (const auto& [n, c] : p.coeffs()) {
    // exp(2 pi i n j / base) depends only on n*j mod base; use (-base/2, base/2]
    // so the phase argument stays small.
    std::int64_t phase = positive_mod(positive_mod(n, base) * jr, base);
    if (2 * phase > base) phase -= base;
    sum += c * std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(phase) / static_cast<double>(base));
  }
  return sum;
}

TrigPolynomial multiply(const TrigPolynomial& a, const TrigPolynomial& b) {
  require_same_base(a, b);
  TrigPolynomial::Coefficients coeffs;
  for (const auto& [na, ca] : a.coeffs()) {
    for (const auto& [nb, cb] : b.coeffs()) coeffs[na + nb] += ca * cb;
  }
  return TrigPolynomial(a.base_q(), std::move(coeffs));
}

TrigPolynomial add(const TrigPolynomial& a, const TrigPolynomial& b) {
  require_same_base(a, b);
  TrigPolynomial::Coefficients coeffs = a.coeffs();
  for (const auto& [n, c] : b.coeffs()) coeffs[n] += c;
  return TrigPolynomial(a.base_q(), std::move(coeffs));
}

TrigPolynomial differentiate(const TrigPolynomial& p, unsigned r) {
  if (r == 0) return p;
  const Complex ir = i_power(r);
  const double base = static_cast<double>(p.base_q());
  TrigPolynomial::Coefficients coeffs;
  for (const auto& [n, c] : p.coeffs()) {
    if (n == 0) continue;
    const double freq = static_cast<double>(n) / base;
    double scale = 1.0;
    for (unsigned i = 0; i < r; ++i) scale *= freq;
    coeffs.emplace(n, c * ir * scale);
  }
  return TrigPolynomial(p.base_q(), std::move(coeffs));
}

TrigPolynomial reflect(const TrigPolynomial& p) {
  TrigPolynomial::Coefficients coeffs;
  for (const auto& [n, c] : p.coeffs()) coeffs.emplace(-n, c);
  return TrigPolynomial(p.base_q(), std::move(coeffs));
}

TrigPolynomial refine(const TrigPolynomial& p, std::int64_t m) {
  if (m <= 0) throw std::invalid_argument("refinement factor must be positive");
  TrigPolynomial::Coefficients coeffs;
  for (const auto& [n, c] : p.coeffs()) coeffs.emplace(m * n, c);
  return TrigPolynomial(m * p.base_q(), std::move(coeffs));
}

// h_q(t) = E exp(it(-U_q)) and the centred kernel is E exp(it(-Utilde_q)).
TrigPolynomial kernel_h(std::int64_t q) { return from_distribution(negate(uniform_U(q))); }

TrigPolynomial kernel_hh(std::int64_t q) { return from_distribution(negate(uniform_Utilde(q))); }

TrigPolynomial rounding_kernel(std::int64_t q, RoundingMode mode) {
  switch (mode) {
    case RoundingMode::Floor: return kernel_h(q);
    case RoundingMode::Ceil: return reflect(kernel_h(q));
    case RoundingMode::NearestUp: return kernel_hh(q);
    case RoundingMode::NearestDown: return reflect(kernel_hh(q));
  }
  throw std::invalid_argument("unknown rounding mode");
}

}  // namespace latround

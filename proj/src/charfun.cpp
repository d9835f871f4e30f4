#include "latround/charfun.hpp"

#include <numbers>
#include <stdexcept>

namespace latround {

namespace {

Complex uniform_kernel(std::int64_t q, std::int64_t k_lo, double t) {
  if (q <= 0) throw std::invalid_argument("kernel requires q >= 1");
  Complex sum{};
  const double qd = static_cast<double>(q);
  for (std::int64_t k = k_lo; k < k_lo + q; ++k) {
    sum += std::polar(1.0, -t * static_cast<double>(k) / qd);
  }
  return sum / qd;
}

}  // namespace

Complex h_q(std::int64_t q, double t) { return uniform_kernel(q, 0, t); }

Complex hh_q(std::int64_t q, double t) { return uniform_kernel(q, -(q / 2), t); }

KernelEval eval_h(std::int64_t q, double t) { return {q, t, h_q(q, t)}; }

KernelEval eval_hh(std::int64_t q, double t) { return {q, t, hh_q(q, t)}; }

Complex rounding_kernel_at(std::int64_t q, RoundingMode mode, double t) {
  switch (mode) {
    case RoundingMode::Floor: return h_q(q, t);
    case RoundingMode::Ceil: return h_q(q, -t);
    case RoundingMode::NearestUp: return hh_q(q, t);
    case RoundingMode::NearestDown: return hh_q(q, -t);
  }
  throw std::invalid_argument("unknown rounding mode");
}

Complex charfun_rounded(const LatticeDistribution& d, RoundingMode mode, double t) {
  return charfun_rounded_shifted(from_distribution(d), mode, t, 0);
}

Complex charfun_rounded(const TrigPolynomial& phi, RoundingMode mode, double t) {
  return charfun_rounded_shifted(phi, mode, t, 0);
}

Complex charfun_rounded_shifted(const LatticeDistribution& d, RoundingMode mode, double t, std::int64_t m) {
  return charfun_rounded_shifted(from_distribution(d), mode, t, m);
}

Complex charfun_rounded_shifted(const TrigPolynomial& phi, RoundingMode mode, double t, std::int64_t m) {
  const std::int64_t q = phi.base_q();
  Complex sum{};
  for (std::int64_t j = m; j < m + q; ++j) {
    const double tj = t + 2.0 * std::numbers::pi * static_cast<double>(j);
    sum += rounding_kernel_at(q, mode, tj) * evaluate(phi, tj);
  }
  return sum;
}

}  // namespace latround

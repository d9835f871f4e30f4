#pragma once

// Finite exponential sums  p(t) = sum_n c_n exp(i (n / base_q) t).
//
// Frequencies are kept as integer numerators over a shared base_q so that
// products and derivatives stay exact in frequency; only the coefficients
// are floating point.

#include "latround/lattice.hpp"

#include <complex>
#include <cstdint>
#include <map>

namespace latround {

using Complex = std::complex<double>;

class TrigPolynomial {
public:
  using Coefficients = std::map<std::int64_t, Complex>;

  explicit TrigPolynomial(std::int64_t base_q, Coefficients coeffs = {});

  static TrigPolynomial constant(std::int64_t base_q, Complex value);

  std::int64_t base_q() const { return base_q_; }
  const Coefficients& coeffs() const { return coeffs_; }

  /// Coefficient of exp(i (n / base_q) t), zero when absent.
  Complex coeff(std::int64_t n) const;

private:
  std::int64_t base_q_;
  Coefficients coeffs_;
};

/// Characteristic function E exp(itX) of a lattice distribution.
TrigPolynomial from_distribution(const LatticeDistribution& d);

/// Direct summation at an arbitrary real t.
Complex evaluate(const TrigPolynomial& p, double t);

/// p(2*pi*j). Each phase n*j is reduced modulo base_q in integer arithmetic
/// before the exponential is formed.
Complex evaluate_at_2pi_multiple(const TrigPolynomial& p, std::int64_t j);

TrigPolynomial multiply(const TrigPolynomial& a, const TrigPolynomial& b);

TrigPolynomial add(const TrigPolynomial& a, const TrigPolynomial& b);

/// r-th derivative: c_n -> c_n (i n / base_q)^r.
TrigPolynomial differentiate(const TrigPolynomial& p, unsigned r);

/// t -> p(-t): frequencies negated, coefficients untouched.
TrigPolynomial reflect(const TrigPolynomial& p);

/// Same function expressed over base m * base_q.
TrigPolynomial refine(const TrigPolynomial& p, std::int64_t m);

/// h_q(t) = (1/q) sum_{k=0}^{q-1} exp(-i t k / q) as a polynomial over base q.
TrigPolynomial kernel_h(std::int64_t q);

/// The centred kernel: (1/q) sum exp(-i t k / q) over the support of the
/// uniform distribution on the lattice points of [-1/2, 1/2).
TrigPolynomial kernel_hh(std::int64_t q);

/// Kernel multiplying phi_X in the rounded characteristic function for `mode`:
/// h_q, h_q(-t), the centred kernel, or the centred kernel at -t.
TrigPolynomial rounding_kernel(std::int64_t q, RoundingMode mode);

}  // namespace latround

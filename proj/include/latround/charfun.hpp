#pragma once

// Kernel functions and the characteristic function of the rounded variable
//
//   phi_{floor X}(t) = sum_{j=0}^{q-1} h_q(t + 2 pi j) phi_X(t + 2 pi j)
//
// and its analogues for the other rounding modes.

#include "latround/lattice.hpp"
#include "latround/trig_poly.hpp"

#include <cstdint>

namespace latround {

/// Value of a kernel at one point. |value| <= 1.
struct KernelEval {
  std::int64_t q;
  double t;
  Complex value;
};

/// (1/q) sum_{k=0}^{q-1} exp(-i t k / q), by the finite sum.
Complex h_q(std::int64_t q, double t);

/// Centred kernel, by the finite sum over the lattice points of [-1/2, 1/2).
/// Real and even in t when q is odd.
Complex hh_q(std::int64_t q, double t);

KernelEval eval_h(std::int64_t q, double t);
KernelEval eval_hh(std::int64_t q, double t);

/// Kernel factor for `mode` at t: h_q(t), h_q(-t), hh_q(t) or hh_q(-t).
Complex rounding_kernel_at(std::int64_t q, RoundingMode mode, double t);

/// Characteristic function of the rounded variable at t.
Complex charfun_rounded(const LatticeDistribution& d, RoundingMode mode, double t);

/// Same, reusing a precomputed phi_X over base d.q().
Complex charfun_rounded(const TrigPolynomial& phi, RoundingMode mode, double t);

/// The same sum with j ranging over m..m+q-1 instead of 0..q-1.
Complex charfun_rounded_shifted(const LatticeDistribution& d, RoundingMode mode, double t, std::int64_t m);
Complex charfun_rounded_shifted(const TrigPolynomial& phi, RoundingMode mode, double t, std::int64_t m);

}  // namespace latround

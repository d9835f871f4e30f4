#pragma once

// Sheppard's correction for X = s_1 xi_1 + ... + s_n xi_n, with xi_k i.i.d.
// uniform on the lattice points of (-1/2, 1/2) for odd q.
//
// The error |E[round(X)^2] - (E[X^2] + 1/12)| is computed exactly from the
// oracle and compared against
//
//   bound        = sum_k s_k^3 / (3 q^2)                    (valid for n >= 2)
//   intermediate = (1 + sum_k s_k d_k^2 + d^2) / (6 q^2)
//
// where d = gcd(s_1..s_n, q) and d_k = gcd({s_i : i != k} u {q}). The
// intermediate bound collects the three pieces of the odd-q second moment
// formula: the constant -1/(12 q^2), the phi' sum (at most
// sum_k s_k d_k^2 / (6 q^2)) and the phi sum (below d^2 / (6 q^2)).

#include "latround/lattice.hpp"

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <vector>

namespace latround {

class SheppardError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

struct SheppardReport {
  std::int64_t q;
  std::vector<std::int64_t> s;

  std::int64_t d;                 // gcd(s_1..s_n, q)
  std::int64_t J;                 // q / d
  std::vector<std::int64_t> d_k;  // gcd of q and all weights except s_k
  std::vector<std::int64_t> J_k;  // q / d_k

  Rational var_X;                     // exact, equals (q^2-1)/(12 q^2) sum s_k^2
  Rational mean_rounded;              // oracle E[round(X)], exactly 0
  Rational second_moment_rounded;     // oracle E[round(X)^2]
  double second_moment_formula;       // odd-q closed form, for cross-checking
  Rational sheppard_approx;           // E[X^2] + 1/12
  Rational exact_error;               // |oracle - sheppard_approx|
  double exact_error_formula;         // same with the closed-form second moment

  bool bound_applicable;              // n >= 2
  Rational bound_ss7;                 // sum s_k^3 / (3 q^2)
  Rational intermediate_bound;        // (1 + sum s_k d_k^2 + d^2) / (6 q^2)

  /// exact_error <= bound_ss7, exact comparison. False when n < 2.
  bool within_bound() const { return bound_applicable && exact_error <= bound_ss7; }
  bool within_intermediate_bound() const { return bound_applicable && exact_error <= intermediate_bound; }
};

/// Exact distribution of sum_k s_k xi_k. q must be odd, s non-empty and positive.
LatticeDistribution build_weighted_sum(std::int64_t q, const std::vector<std::int64_t>& s);

/// gcd(s_1, ..., s_n, q)
std::int64_t weight_gcd(std::int64_t q, const std::vector<std::int64_t>& s);

/// gcd({s_i : i != k} u {q}) for each k.
std::vector<std::int64_t> leave_one_out_gcds(std::int64_t q, const std::vector<std::int64_t>& s);

/// The j in 1..q-1 with phi_X(2 pi j) = 1, i.e. the multiples of J = q / d.
/// phi_X(2 pi j) = 0 for every other j in that range.
std::vector<std::int64_t> charfun_vanishing_set(std::int64_t q, const std::vector<std::int64_t>& s);

SheppardReport sheppard_report(std::int64_t q, const std::vector<std::int64_t>& s);

struct SweepConfig {
  std::int64_t q_min = 3;
  std::int64_t q_max = 31;
  std::vector<std::size_t> n_values{2, 3};
  std::int64_t s_max = 6;
  unsigned threads = 0;  // 0: hardware concurrency
};

/// Every (q odd in [q_min, q_max], n, s in {1..s_max}^n), ordered by q, then
/// n, then s lexicographically. Grid points are evaluated in parallel.
std::vector<SheppardReport> sheppard_sweep(const SweepConfig& config);

/// Header: q,s,var_X,exact_error,bound_ss7,ratio
void write_sweep_csv(std::ostream& out, const std::vector<SheppardReport>& reports);

}  // namespace latround

#pragma once

// Lattice-valued random variables X with P(X = k/q) = p_k, and the exact
// brute-force rounding oracle every closed-form formula is checked against.

#include "latround/rational.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string_view>
#include <utility>
#include <vector>

namespace latround {

/// Floor: largest integer <= x. Ceil: -Floor(-x).
/// NearestUp: floor(x + 1/2), ties go to the larger integer.
/// NearestDown: -NearestUp(-x), ties go to the smaller integer.
enum class RoundingMode { Floor, Ceil, NearestUp, NearestDown };

inline constexpr RoundingMode kAllModes[] = {RoundingMode::Floor, RoundingMode::Ceil,
                                             RoundingMode::NearestUp, RoundingMode::NearestDown};

std::string_view to_string(RoundingMode mode);
/// Accepts "floor", "ceil", "nearest-up", "nearest-down".
RoundingMode parse_rounding_mode(std::string_view name);

/// The mode M' with M(x) = -M'(-x).
RoundingMode mirror(RoundingMode mode);

/// Rounds k/q to an integer under `mode` using integer arithmetic only.
std::int64_t round_lattice_point(std::int64_t k, std::int64_t q, RoundingMode mode);

class DistributionError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

using Pmf = std::map<std::int64_t, Rational>;

/// Finite PMF on (1/q)Z. Only strictly positive masses are stored and the
/// total mass is exactly one.
class LatticeDistribution {
public:
  std::int64_t q() const { return q_; }
  const Pmf& pmf() const { return pmf_; }

  /// Probability of X = k/q (zero off the support).
  Rational mass(std::int64_t k) const;

  friend bool operator==(const LatticeDistribution&, const LatticeDistribution&) = default;

private:
  friend LatticeDistribution make_distribution(std::int64_t, const std::vector<std::pair<std::int64_t, Rational>>&);
  friend LatticeDistribution from_normalized_pmf(std::int64_t, Pmf);

  LatticeDistribution(std::int64_t q, Pmf pmf) : q_(q), pmf_(std::move(pmf)) {}

  std::int64_t q_;
  Pmf pmf_;
};

/// Validating constructor. Duplicate k are merged; zero masses are dropped.
/// Throws DistributionError on q <= 0, empty list, negative p, or total != 1.
LatticeDistribution make_distribution(std::int64_t q,
                                      const std::vector<std::pair<std::int64_t, Rational>>& entries);

/// Uniform on {k/q : k = 0..q-1}.
LatticeDistribution uniform_U(std::int64_t q);

/// Uniform on the q lattice points of [-1/2, 1/2).
LatticeDistribution uniform_Utilde(std::int64_t q);

/// Distribution of a single point k/q.
LatticeDistribution point_mass(std::int64_t q, std::int64_t k);

LatticeDistribution negate(const LatticeDistribution& d);

/// Distribution of s*X on the same lattice.
LatticeDistribution scale_by_integer(const LatticeDistribution& d, std::int64_t s);

/// Re-expresses X on the finer lattice 1/(m*q). The random variable is unchanged.
LatticeDistribution refine(const LatticeDistribution& d, std::int64_t m);

/// Distribution of X + m for an integer m.
LatticeDistribution shift_by_integer(const LatticeDistribution& d, std::int64_t m);

/// Distribution of X + k/q (a lattice step shift).
LatticeDistribution shift_by_lattice_steps(const LatticeDistribution& d, std::int64_t k);

/// Distribution of X + Y for independent X, Y on the same lattice.
LatticeDistribution convolve(const LatticeDistribution& a, const LatticeDistribution& b);

/// Oracle: exact distribution of the rounded variable, on lattice q = 1.
LatticeDistribution round_distribution(const LatticeDistribution& d, RoundingMode mode);

/// Oracle: E[X^r] exactly.
Rational exact_moment(const LatticeDistribution& d, unsigned r);

}  // namespace latround

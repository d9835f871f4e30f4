#pragma once

// Named identity and example checks returning residuals.

#include "latround/lattice.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace latround {

struct CheckResult {
  std::string name;
  bool passed;
  double residual;
  double tolerance;
  std::string detail;
};

struct RandomDistributionOptions {
  std::int64_t q_max = 12;
  std::int64_t k_max = 50;       // support inside [-k_max, k_max]
  std::int64_t max_support = 8;
  std::int64_t max_weight = 100; // integer weights, so denominators stay <= max_support * max_weight
};

/// Random finite distribution with q in [1, q_max].
LatticeDistribution random_distribution(std::mt19937_64& rng, const RandomDistributionOptions& options = {});

/// Same, with the lattice denominator fixed.
LatticeDistribution random_distribution_with_q(std::mt19937_64& rng, std::int64_t q,
                                               const RandomDistributionOptions& options = {});

/// Canonical one-line text form "q=3 {0:1/3, 1:2/3}", used in failure details.
std::string describe(const LatticeDistribution& d);

/// |sum_{j=1}^{q-1} 1/sin^2(pi j/q) - (q^2-1)/3| against 1e-9 q^2. Throws for q < 2.
CheckResult check_trig_identity(std::int64_t q);

/// The four q = 2 mean and second-moment formulas against the oracle, plus
/// NearestUp == Ceil at distribution level. Throws if d.q() != 2.
CheckResult check_example_q2(const LatticeDistribution& d);

/// Floor mean and second moment of U_q vanish; for odd q also NearestUp of Utilde_q.
CheckResult check_example_E0(std::int64_t q);

/// Exact mirror and shift laws for the four rounding modes.
CheckResult check_duality(const LatticeDistribution& d);

/// Closed-form mean and second moment against the oracle, all modes.
CheckResult check_moments(const LatticeDistribution& d, double tolerance = 1e-8);

/// Differentiated r-th moments (r = 1..r_max) against the oracle.
CheckResult check_differentiated_moments(const LatticeDistribution& d, unsigned r_max = 4);

/// Differentiated and closed-form routes agree for r = 1, 2 within 1e-9.
CheckResult check_path_agreement(const LatticeDistribution& d);

/// Rounded characteristic function against the oracle on a grid in [-pi q, pi q],
/// and invariance under shifting the summation range by m in {-3, 1, q}.
CheckResult check_charfun(const LatticeDistribution& d, int grid_points = 64);

struct VerifyConfig {
  std::int64_t q_max = 12;           // random distributions and Example E0 grid; < 1 disables both
  std::int64_t identity_q_max = 500; // trig identity grid 2..identity_q_max
  std::uint64_t seed = 20061;
  std::size_t samples = 50;          // random distributions per randomized check family
  bool inject_fault = false;         // test harness only: corrupts one residual
};

/// Every check over the configured grids, in a fixed order.
std::vector<CheckResult> run_all(const VerifyConfig& config);

}  // namespace latround

#pragma once

// Moments of the rounded variable by three independent routes:
//   * closed forms for the mean and second moment,
//   * the general r-th moment by exact differentiation of kernel * phi_X,
//   * the exact oracle (round every support point, sum rationals).

#include "latround/lattice.hpp"
#include "latround/trig_poly.hpp"

namespace latround {

/// Imaginary parts above this (relative to max(1, |Re|)) set MomentReport::precision_warning.
inline constexpr double kImaginaryWarning = 1e-9;

struct MomentReport {
  RoundingMode mode;
  unsigned r;
  double formula_value;      // real part of the formula result
  double formula_imag;       // imaginary residue discarded when taking the real part
  Rational oracle_value;
  double residual;           // |formula_value - oracle_value|
  bool precision_warning;

  /// residual <= tolerance * max(1, |oracle|)
  bool within(double tolerance) const;
};

/// E[round(X)^r] from the oracle distribution.
Rational oracle_moment(const LatticeDistribution& d, RoundingMode mode, unsigned r);

/// Closed-form mean before real-part extraction. Ceil and NearestDown go
/// through the mirror mode on -X.
Complex closed_form_mean(const LatticeDistribution& d, RoundingMode mode);

/// Closed-form second moment before real-part extraction.
Complex closed_form_second_moment(const LatticeDistribution& d, RoundingMode mode);

/// i^{-r} sum_{j=0}^{q-1} (d/dt)^r (kernel * phi_X) at t = 2 pi j.
Complex differentiated_moment(const LatticeDistribution& d, RoundingMode mode, unsigned r);

MomentReport mean_rounded(const LatticeDistribution& d, RoundingMode mode);
MomentReport second_moment_rounded(const LatticeDistribution& d, RoundingMode mode);

/// General r-th moment, r >= 1. Throws std::invalid_argument for r == 0.
MomentReport moment_rounded(const LatticeDistribution& d, RoundingMode mode, unsigned r);

}  // namespace latround

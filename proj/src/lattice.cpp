#include "latround/lattice.hpp"

#include <string>

namespace latround {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t quot = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --quot;
  return quot;
}

void require_positive(std::int64_t value, const char* what) {
  if (value <= 0) {
    throw DistributionError(std::string(what) + " must be positive, got " + std::to_string(value));
  }
}

}  // namespace

// Used by the transforms below, whose outputs are normalized by construction.
LatticeDistribution from_normalized_pmf(std::int64_t q, Pmf pmf) {
  return LatticeDistribution(q, std::move(pmf));
}

std::string_view to_string(RoundingMode mode) {
  switch (mode) {
    case RoundingMode::Floor: return "floor";
    case RoundingMode::Ceil: return "ceil";
    case RoundingMode::NearestUp: return "nearest-up";
    case RoundingMode::NearestDown: return "nearest-down";
  }
  return "unknown";
}

RoundingMode parse_rounding_mode(std::string_view name) {
  for (RoundingMode mode : kAllModes) {
    if (to_string(mode) == name) return mode;
  }
  throw std::invalid_argument("unknown rounding mode '" + std::string(name) + "'");
}

RoundingMode mirror(RoundingMode mode) {
  switch (mode) {
    case RoundingMode::Floor: return RoundingMode::Ceil;
    case RoundingMode::Ceil: return RoundingMode::Floor;
    case RoundingMode::NearestUp: return RoundingMode::NearestDown;
    case RoundingMode::NearestDown: return RoundingMode::NearestUp;
  }
  return mode;
}

std::int64_t round_lattice_point(std::int64_t k, std::int64_t q, RoundingMode mode) {
  switch (mode) {
    case RoundingMode::Floor: return floor_div(k, q);
    case RoundingMode::Ceil: return -floor_div(-k, q);
    // floor(k/q + 1/2) = floor((2k + q) / 2q)
    case RoundingMode::NearestUp: return floor_div(2 * k + q, 2 * q);
    case RoundingMode::NearestDown: return -floor_div(-2 * k + q, 2 * q);
  }
  return 0;
}

Rational LatticeDistribution::mass(std::int64_t k) const {
  auto it = pmf_.find(k);
  return it == pmf_.end() ? Rational(0) : it->second;
}

LatticeDistribution make_distribution(std::int64_t q,
                                      const std::vector<std::pair<std::int64_t, Rational>>& entries) {
  require_positive(q, "q");
  if (entries.empty()) throw DistributionError("distribution has no entries");

  Pmf pmf;
  Rational total = 0;
  for (const auto& [k, p] : entries) {
    if (p < 0) {
      throw DistributionError("negative probability " + to_string(p) + " at k=" + std::to_string(k));
    }
    pmf[k] += p;
    total += p;
  }
  if (total != 1) {
    throw DistributionError("probabilities sum to " + to_string(total) + ", expected 1");
  }
  std::erase_if(pmf, [](const auto& entry) { return entry.second == 0; });
  return from_normalized_pmf(q, std::move(pmf));
}

LatticeDistribution uniform_U(std::int64_t q) {
  require_positive(q, "q");
  Pmf pmf;
  for (std::int64_t k = 0; k < q; ++k) pmf.emplace(k, ratio(1, q));
  return from_normalized_pmf(q, std::move(pmf));
}

LatticeDistribution uniform_Utilde(std::int64_t q) {
  require_positive(q, "q");
  // k from -floor(q/2) covers both parities: -q/2..q/2-1 (even), -(q-1)/2..(q-1)/2 (odd).
  const std::int64_t lo = -(q / 2);
  Pmf pmf;
  for (std::int64_t k = lo; k < lo + q; ++k) pmf.emplace(k, ratio(1, q));
  return from_normalized_pmf(q, std::move(pmf));
}

LatticeDistribution point_mass(std::int64_t q, std::int64_t k) {
  require_positive(q, "q");
  return from_normalized_pmf(q, Pmf{{k, Rational(1)}});
}

LatticeDistribution negate(const LatticeDistribution& d) {
  Pmf pmf;
  for (const auto& [k, p] : d.pmf()) pmf.emplace(-k, p);
  return from_normalized_pmf(d.q(), std::move(pmf));
}

LatticeDistribution scale_by_integer(const LatticeDistribution& d, std::int64_t s) {
  require_positive(s, "scale factor");
  Pmf pmf;
  for (const auto& [k, p] : d.pmf()) pmf.emplace(s * k, p);
  return from_normalized_pmf(d.q(), std::move(pmf));
}

LatticeDistribution refine(const LatticeDistribution& d, std::int64_t m) {
  require_positive(m, "refinement factor");
  Pmf pmf;
  for (const auto& [k, p] : d.pmf()) pmf.emplace(m * k, p);
  return from_normalized_pmf(m * d.q(), std::move(pmf));
}

LatticeDistribution shift_by_integer(const LatticeDistribution& d, std::int64_t m) {
  return shift_by_lattice_steps(d, m * d.q());
}

LatticeDistribution shift_by_lattice_steps(const LatticeDistribution& d, std::int64_t k) {
  Pmf pmf;
  for (const auto& [j, p] : d.pmf()) pmf.emplace(j + k, p);
  return from_normalized_pmf(d.q(), std::move(pmf));
}

LatticeDistribution convolve(const LatticeDistribution& a, const LatticeDistribution& b) {
  if (a.q() != b.q()) {
    throw DistributionError("convolve requires equal lattices, got q=" + std::to_string(a.q()) +
                            " and q=" + std::to_string(b.q()));
  }
  Pmf pmf;
  for (const auto& [ka, pa] : a.pmf()) {
    for (const auto& [kb, pb] : b.pmf()) pmf[ka + kb] += pa * pb;
  }
  return from_normalized_pmf(a.q(), std::move(pmf));
}

LatticeDistribution round_distribution(const LatticeDistribution& d, RoundingMode mode) {
  Pmf pmf;
  for (const auto& [k, p] : d.pmf()) pmf[round_lattice_point(k, d.q(), mode)] += p;
  return from_normalized_pmf(1, std::move(pmf));
}

Rational exact_moment(const LatticeDistribution& d, unsigned r) {
  Rational sum = 0;
  for (const auto& [k, p] : d.pmf()) {
    BigInt power;
    mpz_pow_ui(power.get_mpz_t(), BigInt(static_cast<long>(k)).get_mpz_t(), r);
    sum += p * power;
  }
  BigInt scale;
  mpz_pow_ui(scale.get_mpz_t(), BigInt(static_cast<long>(d.q())).get_mpz_t(), r);
  sum /= scale;
  return sum;
}

}  // namespace latround

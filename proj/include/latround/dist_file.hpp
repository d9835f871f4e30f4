#pragma once

// Distribution files:
//
//   {"q": 3, "pmf": [{"k": 0, "p": "1/3"}, {"k": 1, "p": "2/3"}]}
//
// Probabilities are "a/b" strings so files round-trip exactly.

#include "latround/lattice.hpp"

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

namespace latround {

/// Malformed document: bad JSON, missing or mistyped field, bad rational.
class SpecParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Throws SpecParseError for syntax/field problems and DistributionError
/// when the content is well formed but not a valid distribution.
LatticeDistribution parse_distribution_spec(std::string_view text);

LatticeDistribution load_distribution_spec(const std::filesystem::path& path);

/// Canonical form: entries sorted by k, probabilities in lowest terms.
std::string to_distribution_spec(const LatticeDistribution& d);

}  // namespace latround

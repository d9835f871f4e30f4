#include "latround/sheppard.hpp"

#include "latround/moments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <iomanip>
#include <numeric>
#include <ostream>
#include <string>
#include <thread>

namespace latround {

namespace {

void validate(std::int64_t q, const std::vector<std::int64_t>& s) {
  if (q < 1 || q % 2 == 0) {
    throw SheppardError("q must be a positive odd integer, got " + std::to_string(q));
  }
  if (s.empty()) throw SheppardError("weight list is empty");
  for (std::int64_t w : s) {
    if (w < 1) throw SheppardError("weights must be positive, got " + std::to_string(w));
  }
}

Rational sum_of_powers(const std::vector<std::int64_t>& s, unsigned power) {
  Rational total = 0;
  for (std::int64_t w : s) {
    BigInt p;
    mpz_pow_ui(p.get_mpz_t(), BigInt(static_cast<long>(w)).get_mpz_t(), power);
    total += p;
  }
  return total;
}

}  // namespace

LatticeDistribution build_weighted_sum(std::int64_t q, const std::vector<std::int64_t>& s) {
  validate(q, s);
  const LatticeDistribution xi = uniform_Utilde(q);
  LatticeDistribution sum = scale_by_integer(xi, s.front());
  for (std::size_t k = 1; k < s.size(); ++k) sum = convolve(sum, scale_by_integer(xi, s[k]));
  return sum;
}

std::int64_t weight_gcd(std::int64_t q, const std::vector<std::int64_t>& s) {
  std::int64_t g = q;
  for (std::int64_t w : s) g = std::gcd(g, w);
  return g;
}

std::vector<std::int64_t> leave_one_out_gcds(std::int64_t q, const std::vector<std::int64_t>& s) {
  std::vector<std::int64_t> out;
  out.reserve(s.size());
  for (std::size_t k = 0; k < s.size(); ++k) {
    std::int64_t g = q;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (i != k) g = std::gcd(g, s[i]);
    }
    out.push_back(g);
  }
  return out;
}

std::vector<std::int64_t> charfun_vanishing_set(std::int64_t q, const std::vector<std::int64_t>& s) {
  validate(q, s);
  const std::int64_t J = q / weight_gcd(q, s);
  std::vector<std::int64_t> out;
  for (std::int64_t j = J; j < q; j += J) out.push_back(j);
  return out;
}

SheppardReport sheppard_report(std::int64_t q, const std::vector<std::int64_t>& s) {
  validate(q, s);
  const LatticeDistribution x = build_weighted_sum(q, s);
  const LatticeDistribution rounded = round_distribution(x, RoundingMode::NearestUp);

  SheppardReport report;
  report.q = q;
  report.s = s;
  report.d = weight_gcd(q, s);
  report.J = q / report.d;
  report.d_k = leave_one_out_gcds(q, s);
  for (std::int64_t dk : report.d_k) report.J_k.push_back(q / dk);

  const Rational mean = exact_moment(x, 1);
  const Rational second = exact_moment(x, 2);
  report.var_X = second - mean * mean;
  report.mean_rounded = exact_moment(rounded, 1);
  report.second_moment_rounded = exact_moment(rounded, 2);
  report.second_moment_formula = closed_form_second_moment(x, RoundingMode::NearestUp).real();
  report.sheppard_approx = second + ratio(1, 12);
  report.exact_error = abs(Rational(report.second_moment_rounded - report.sheppard_approx));
  report.exact_error_formula = std::abs(report.second_moment_formula - to_double(report.sheppard_approx));

  const BigInt q2 = BigInt(static_cast<long>(q)) * q;
  report.bound_applicable = s.size() >= 2;
  report.bound_ss7 = sum_of_powers(s, 3) / Rational(3 * q2);
  Rational weighted = 0;
  for (std::size_t k = 0; k < s.size(); ++k) {
    weighted += BigInt(static_cast<long>(s[k])) * report.d_k[k] * report.d_k[k];
  }
  report.intermediate_bound = (1 + weighted + BigInt(static_cast<long>(report.d * report.d))) / Rational(6 * q2);
  return report;
}

std::vector<SheppardReport> sheppard_sweep(const SweepConfig& config) {
  struct Point {
    std::int64_t q;
    std::vector<std::int64_t> s;
  };
  std::vector<Point> grid;
  for (std::int64_t q = std::max<std::int64_t>(config.q_min, 1); q <= config.q_max; ++q) {
    if (q % 2 == 0) continue;
    for (std::size_t n : config.n_values) {
      if (n == 0 || config.s_max < 1) continue;
      std::vector<std::int64_t> s(n, 1);
      while (true) {
        grid.push_back({q, s});
        std::size_t pos = n;
        while (pos > 0 && s[pos - 1] == config.s_max) s[--pos] = 1;
        if (pos == 0) break;
        ++s[pos - 1];
      }
    }
  }

  std::vector<SheppardReport> reports(grid.size());
  unsigned threads = config.threads != 0 ? config.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(grid.size(), 1)));
  std::atomic<std::size_t> next{0};
  {
    std::vector<std::jthread> workers;
    for (unsigned t = 0; t < threads; ++t) {
      workers.emplace_back([&] {
        for (std::size_t i = next++; i < grid.size(); i = next++) {
          reports[i] = sheppard_report(grid[i].q, grid[i].s);
        }
      });
    }
  }
  return reports;
}

void write_sweep_csv(std::ostream& out, const std::vector<SheppardReport>& reports) {
  out << "q,s,var_X,exact_error,bound_ss7,ratio\r\n";
  const auto precision = out.precision(17);
  for (const auto& r : reports) {
    std::string weights;
    for (std::size_t k = 0; k < r.s.size(); ++k) {
      if (k != 0) weights += ';';
      weights += std::to_string(r.s[k]);
    }
    const double ratio_value = to_double(r.exact_error) / to_double(r.bound_ss7);
    out << r.q << ',' << weights << ',' << to_string(r.var_X) << ',' << to_string(r.exact_error) << ','
        << to_string(r.bound_ss7) << ',' << ratio_value << "\r\n";
  }
  out.precision(precision);
}

}  // namespace latround

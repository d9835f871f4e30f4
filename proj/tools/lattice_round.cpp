// lattice_round: moments and characteristic functions of rounded lattice
// random variables, checked against the exact rounding oracle.
//
// Exit codes: 0 ok, 1 residual breach / failed check, 2 parse or usage
// error, 3 invalid distribution.

#include "latround/charfun.hpp"
#include "latround/dist_file.hpp"
#include "latround/moments.hpp"
#include "latround/sheppard.hpp"
#include "latround/verify.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <iostream>
#include <map>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace latround;

constexpr int kExitResidual = 1;
constexpr int kExitParse = 2;
constexpr int kExitInvariant = 3;

std::string fmt17(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.17g", value);
  return buffer;
}

std::string quoted(const std::string& s) { return '"' + s + '"'; }

struct Loaded {
  int status = 0;
  std::optional<LatticeDistribution> dist;
};

Loaded load(const std::string& path) {
  try {
    return {0, load_distribution_spec(path)};
  } catch (const SpecParseError& e) {
    std::cerr << path << ": " << e.what() << '\n';
    return {kExitParse, std::nullopt};
  } catch (const DistributionError& e) {
    std::cerr << path << ": invalid distribution: " << e.what() << '\n';
    return {kExitInvariant, std::nullopt};
  }
}

int cmd_moments(const std::string& path, RoundingMode mode, unsigned max_r, double tolerance) {
  Loaded loaded = load(path);
  if (!loaded.dist) return loaded.status;
  const LatticeDistribution& d = *loaded.dist;

  bool all_ok = true;
  std::cout << "{\"mode\": " << quoted(std::string(to_string(mode))) << ", \"q\": " << d.q()
            << ", \"tolerance\": " << fmt17(tolerance) << ", \"moments\": [\n";
  for (unsigned r = 1; r <= max_r; ++r) {
    const MomentReport differentiated = moment_rounded(d, mode, r);
    MomentReport primary = differentiated;
    std::string route = "differentiated";
    if (r == 1) {
      primary = mean_rounded(d, mode);
      route = "closed-form";
    } else if (r == 2) {
      primary = second_moment_rounded(d, mode);
      route = "closed-form";
    }
    const bool ok = primary.within(tolerance) && differentiated.within(tolerance);
    all_ok = all_ok && ok;
    std::cout << "  {\"r\": " << r << ", \"route\": " << quoted(route) << ", \"formula\": " << fmt17(primary.formula_value)
              << ", \"formula_imag\": " << fmt17(primary.formula_imag)
              << ", \"differentiated\": " << fmt17(differentiated.formula_value)
              << ", \"oracle\": " << quoted(to_string(primary.oracle_value))
              << ", \"residual\": " << fmt17(std::max(primary.residual, differentiated.residual))
              << ", \"precision_warning\": " << (primary.precision_warning || differentiated.precision_warning ? "true" : "false")
              << ", \"ok\": " << (ok ? "true" : "false") << '}' << (r < max_r ? "," : "") << '\n';
  }
  std::cout << "], \"passed\": " << (all_ok ? "true" : "false") << "}\n";
  return all_ok ? 0 : kExitResidual;
}

int cmd_charfun(const std::string& path, RoundingMode mode, int grid, double t_max, double tolerance) {
  Loaded loaded = load(path);
  if (!loaded.dist) return loaded.status;
  const LatticeDistribution& d = *loaded.dist;
  const TrigPolynomial phi = from_distribution(d);
  const TrigPolynomial oracle = from_distribution(round_distribution(d, mode));

  bool all_ok = true;
  std::cout << "t,re,im,oracle_re,oracle_im,residual\n";
  for (int i = 0; i < grid; ++i) {
    const double t = grid == 1 ? 0.0 : -t_max + 2.0 * t_max * i / (grid - 1);
    const Complex value = charfun_rounded(phi, mode, t);
    const Complex expected = evaluate(oracle, t);
    const double residual = std::abs(value - expected);
    all_ok = all_ok && residual <= tolerance * std::max(1.0, std::abs(expected));
    std::cout << fmt17(t) << ',' << fmt17(value.real()) << ',' << fmt17(value.imag()) << ','
              << fmt17(expected.real()) << ',' << fmt17(expected.imag()) << ',' << fmt17(residual) << '\n';
  }
  return all_ok ? 0 : kExitResidual;
}

int cmd_verify(const VerifyConfig& config) {
  const std::vector<CheckResult> results = run_all(config);
  std::size_t failed = 0;
  for (const CheckResult& r : results) {
    if (!r.passed) ++failed;
    std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << " residual=" << fmt17(r.residual)
              << " tolerance=" << fmt17(r.tolerance);
    if (!r.passed) std::cout << " detail=" << r.detail;
    std::cout << '\n';
  }
  std::cout << "summary: total=" << results.size() << " passed=" << results.size() - failed << " failed=" << failed
            << " seed=" << config.seed << '\n';
  if (failed == 0) {
    std::cout << "all " << results.size() << " checks passed\n";
    return 0;
  }
  return kExitResidual;
}

void print_report(const SheppardReport& r) {
  auto list = [](const std::vector<std::int64_t>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
    return s + "]";
  };
  std::cout << "{\"q\": " << r.q << ", \"s\": " << list(r.s) << ", \"d\": " << r.d << ", \"J\": " << r.J
            << ", \"d_k\": " << list(r.d_k) << ", \"J_k\": " << list(r.J_k) << ",\n"
            << " \"var_X\": " << quoted(to_string(r.var_X))
            << ", \"mean_rounded\": " << quoted(to_string(r.mean_rounded))
            << ", \"second_moment_rounded\": " << quoted(to_string(r.second_moment_rounded))
            << ", \"second_moment_formula\": " << fmt17(r.second_moment_formula) << ",\n"
            << " \"sheppard_approx\": " << quoted(to_string(r.sheppard_approx))
            << ", \"exact_error\": " << quoted(to_string(r.exact_error))
            << ", \"exact_error_value\": " << fmt17(to_double(r.exact_error))
            << ", \"exact_error_formula\": " << fmt17(r.exact_error_formula) << ",\n"
            << " \"bound_applicable\": " << (r.bound_applicable ? "true" : "false");
  if (r.bound_applicable) {
    std::cout << ", \"bound_ss7\": " << quoted(to_string(r.bound_ss7))
              << ", \"intermediate_bound\": " << quoted(to_string(r.intermediate_bound))
              << ", \"within_bound\": " << (r.within_bound() ? "true" : "false");
  }
  std::cout << "}\n";
}

int cmd_sheppard(std::int64_t q, const std::vector<std::int64_t>& weights, bool sweep, const SweepConfig& grid) {
  try {
    if (sweep) {
      const std::vector<SheppardReport> reports = sheppard_sweep(grid);
      write_sweep_csv(std::cout, reports);
      std::size_t violations = 0;
      for (const auto& r : reports) {
        if (r.bound_applicable && !r.within_bound()) ++violations;
      }
      if (violations != 0) {
        std::cerr << violations << " grid points exceed the bound\n";
        return kExitResidual;
      }
      return 0;
    }
    if (weights.empty()) {
      std::cerr << "--weights is required unless --sweep is given\n";
      return kExitParse;
    }
    const SheppardReport report = sheppard_report(q, weights);
    print_report(report);
    return report.bound_applicable && !report.within_bound() ? kExitResidual : 0;
  } catch (const SheppardError& e) {
    std::cerr << "sheppard: " << e.what() << " (the weighted-sum example requires odd q)\n";
    return kExitParse;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Moments and characteristic functions of rounded lattice random variables"};
  app.require_subcommand(1);

  const std::vector<std::string> modes{"floor", "ceil", "nearest-up", "nearest-down"};

  std::string spec_path;
  std::string mode_name = "floor";
  double tolerance = 1e-8;

  auto* moments = app.add_subcommand("moments", "Closed-form and differentiated moments against the oracle");
  unsigned max_r = 2;
  moments->add_option("spec", spec_path, "Distribution file")->required();
  moments->add_option("--mode", mode_name, "floor | ceil | nearest-up | nearest-down")
      ->check(CLI::IsMember(modes));
  moments->add_option("--max-r", max_r, "Highest moment order")->check(CLI::Range(1u, 8u));
  moments->add_option("--tolerance", tolerance, "Relative tolerance, scaled by max(1, |oracle|)");

  auto* charfun = app.add_subcommand("charfun", "Rounded characteristic function on a grid in [-T, T]");
  int grid = 65;
  double t_max = 2.0 * std::numbers::pi;
  charfun->add_option("spec", spec_path, "Distribution file")->required();
  charfun->add_option("--mode", mode_name, "floor | ceil | nearest-up | nearest-down")
      ->check(CLI::IsMember(modes));
  charfun->add_option("--grid", grid, "Number of grid points")->check(CLI::PositiveNumber);
  charfun->add_option("--t-max", t_max, "Half-width T of the grid")->check(CLI::PositiveNumber);
  charfun->add_option("--tolerance", tolerance, "Residual tolerance, scaled by max(1, |oracle|)");

  auto* verify = app.add_subcommand("verify", "Run the identity and oracle-equivalence suite");
  VerifyConfig config;
#ifdef LATROUND_INJECT_FAULT
  config.inject_fault = true;
#endif
  verify->add_option("--q-max", config.q_max, "Largest q for random distributions and the U_q example");
  verify->add_option("--identity-q-max", config.identity_q_max, "Largest q for the trigonometric identity");
  verify->add_option("--seed", config.seed, "Seed for random distributions");
  verify->add_option("--samples", config.samples, "Random distributions per check family");

  auto* sheppard = app.add_subcommand("sheppard", "Sheppard correction error for weighted sums of centred uniforms");
  std::int64_t q = 0;
  std::vector<std::int64_t> weights;
  bool sweep = false;
  SweepConfig sweep_config;
  sheppard->add_option("--q", q, "Odd lattice denominator");
  sheppard->add_option("--weights", weights, "Positive weights s1,s2,...")->delimiter(',');
  sheppard->add_flag("--sweep", sweep, "Sweep the grid and write CSV");
  sheppard->add_option("--sweep-q-max", sweep_config.q_max, "Largest odd q in the sweep");
  sheppard->add_option("--sweep-s-max", sweep_config.s_max, "Largest weight in the sweep");
  sheppard->add_option("--sweep-n", sweep_config.n_values, "Numbers of terms in the sweep")->delimiter(',');
  sheppard->add_option("--threads", sweep_config.threads, "Worker threads for the sweep (0: all cores)");

  auto* canonical = app.add_subcommand("canonical", "Print a distribution file in canonical form");
  canonical->add_option("spec", spec_path, "Distribution file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParse;
  }

  const RoundingMode mode = parse_rounding_mode(mode_name);
  if (*moments) return cmd_moments(spec_path, mode, max_r, tolerance);
  if (*charfun) return cmd_charfun(spec_path, mode, grid, t_max, tolerance);
  if (*verify) return cmd_verify(config);
  if (*sheppard) {
    if (!sweep && q == 0) {
      std::cerr << "sheppard: --q is required unless --sweep is given\n";
      return kExitParse;
    }
    return cmd_sheppard(q, weights, sweep, sweep_config);
  }
  if (*canonical) {
    Loaded loaded = load(spec_path);
    if (!loaded.dist) return loaded.status;
    std::cout << to_distribution_spec(*loaded.dist) << '\n';
    return 0;
  }
  return kExitParse;
}

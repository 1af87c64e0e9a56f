#include <CLI11.hpp>

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <string>

#include "vident/exact_arith.hpp"
#include "vident/identity.hpp"
#include "vident/json_io.hpp"
#include "vident/polyring.hpp"
#include "vident/urn.hpp"

// Exit codes: 0 = success/verified, 1 = usage or domain error,
// 2 = mathematical mismatch (bug sentinel). JSON mode writes exactly one
// document to stdout; diagnostics go to stderr.

namespace {

using namespace vident;

Natural parse_natural(const std::string& text, const char* flag) {
  try {
    return Natural::from_decimal(text);
  } catch (const std::exception&) {
    throw CLI::ValidationError(std::string(flag) + ": expected a nonnegative decimal integer, got '" +
                               text + "'");
  }
}

std::uint64_t parse_u64(const std::string& text, const char* flag) {
  const Natural n = parse_natural(text, flag);
  if (!n.fits_u64()) {
    throw CLI::ValidationError(std::string(flag) + ": value does not fit in 64 bits: " + text);
  }
  return n.to_u64();
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string format_coeffs(const std::vector<Natural>& coeffs) {
  std::string out = "[";
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (i > 0) {
      out += ", ";
    }
    out += coeffs[i].str();
  }
  return out + "]";
}

int run_identity_eval(const IdentityInstance& inst, const std::string& format) {
  const VerifyReport rep = verify(inst);
  if (format == "json") {
    std::cout << to_json(rep).dump() << "\n";
  } else {
    std::cout << "l=" << inst.l << " m=" << inst.m << " n=" << inst.n << " r=" << inst.r
              << " lhs=" << rep.lhs << " rhs=" << rep.rhs << " equal=" << yes_no(rep.equal)
              << "\n";
  }
  if (!rep.equal) {
    std::cerr << "mathematical mismatch: lhs " << rep.lhs << " != rhs " << rep.rhs << "\n";
    return 2;
  }
  return 0;
}

int run_identity_sweep(const Natural& l_max, const Natural& mn_max, const std::string& format) {
  const SweepSummary summary = exhaustive_verify(l_max, mn_max);
  if (format == "json") {
    std::cout << to_json(summary).dump() << "\n";
  } else {
    std::cout << "checked " << summary.checked << " failed " << summary.failed << "\n";
    if (summary.first_failure) {
      const VerifyReport& f = *summary.first_failure;
      std::cout << "first failure: l=" << f.instance.l << " m=" << f.instance.m
                << " n=" << f.instance.n << " r=" << f.instance.r << " lhs=" << f.lhs
                << " rhs=" << f.rhs << "\n";
    }
  }
  if (!summary.all_passed()) {
    std::cerr << "mathematical mismatch: " << summary.failed << " failing instance(s)\n";
    return 2;
  }
  return 0;
}

int run_proof_replay(const Natural& l, const Natural& m, const Natural& n,
                     const std::string& format) {
  const ProofReport rep = replay_proof(l, m, n);
  if (format == "json") {
    std::cout << to_json(rep).dump() << "\n";
  } else {
    std::cout << "l=" << rep.l << " m=" << rep.m << " n=" << rep.n << "\n"
              << "left:  " << format_coeffs(rep.left_coeffs) << "\n"
              << "right: " << format_coeffs(rep.right_coeffs) << "\n"
              << "vectors_equal=" << yes_no(rep.vectors_equal)
              << " low_order_vanishes=" << yes_no(rep.low_order_vanishes) << "\n"
              << (rep.passed() ? "PASS" : "FAIL") << "\n";
  }
  if (!rep.passed()) {
    std::cerr << "mathematical mismatch: expansion replay failed\n";
    return 2;
  }
  return 0;
}

void print_exact(const ExactRational& value, const std::string& format) {
  if (format == "json") {
    std::cout << to_json(value).dump() << "\n";
  } else {
    std::cout << value << "\n";
  }
}

int run_urn(const UrnSpec& spec, const DrawIndex& index, const std::string& method,
            const std::string& trials_text, const std::string& seed_text,
            const std::string& format) {
  if (method == "closed") {
    print_exact(p_red_closed(spec), format);
    return 0;
  }
  if (method == "enumerate") {
    print_exact(enumerate_oracle(spec, index), format);
    return 0;
  }
  if (method == "sum") {
    const ExactRational sum = p_red_via_sum(spec, index);
    print_exact(sum, format);
    const ExactRational closed = p_red_closed(spec);
    if (!(sum == closed)) {
      std::cerr << "mathematical mismatch: total-probability sum " << sum
                << " != closed form " << closed << "\n";
      return 2;
    }
    return 0;
  }
  // simulate
  if (trials_text.empty() || seed_text.empty()) {
    throw CLI::ValidationError("--trials and --seed are required for --method simulate");
  }
  SimConfig config;
  config.trials = parse_u64(trials_text, "--trials");
  config.seed = parse_u64(seed_text, "--seed");
  const SimEstimate est = simulate(spec, index, config);
  if (format == "json") {
    std::cout << to_json(est).dump() << "\n";
  } else {
    std::printf("estimate=%.6f trials=%llu seed=%llu\n", est.estimate, est.trials,
                static_cast<unsigned long long>(est.seed));
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  std::string format = "text";
  int rc = 0;

  CLI::App app{"exact evaluation, verification and application of the generalized "
               "Vandermonde convolution identity"};
  app.require_subcommand(1);
  app.add_option("--format", format, "output format (text or json)")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  // identity eval | sweep
  auto* identity_cmd = app.add_subcommand("identity", "evaluate or sweep the identity");
  identity_cmd->require_subcommand(1);
  identity_cmd->fallthrough();

  std::string eval_l, eval_m, eval_n, eval_r;
  auto* eval_cmd = identity_cmd->add_subcommand("eval", "evaluate both sides at one (l, m, n, r)");
  eval_cmd->fallthrough();
  eval_cmd->add_option("--l", eval_l, "falling-factorial order l")->required();
  eval_cmd->add_option("--m", eval_m, "first exponent m")->required();
  eval_cmd->add_option("--n", eval_n, "second exponent n")->required();
  eval_cmd->add_option("--r", eval_r, "convolution index r")->required();
  eval_cmd->callback([&] {
    rc = run_identity_eval({parse_natural(eval_l, "--l"), parse_natural(eval_m, "--m"),
                            parse_natural(eval_n, "--n"), parse_natural(eval_r, "--r")},
                           format);
  });

  std::string sweep_l_max, sweep_mn_max;
  auto* sweep_cmd =
      identity_cmd->add_subcommand("sweep", "exhaustively verify a box of instances");
  sweep_cmd->fallthrough();
  sweep_cmd->add_option("--l-max", sweep_l_max, "largest l (budget: <= 8)")->required();
  sweep_cmd->add_option("--mn-max", sweep_mn_max, "largest m and n (budget: <= 16)")->required();
  sweep_cmd->callback([&] {
    rc = run_identity_sweep(parse_natural(sweep_l_max, "--l-max"),
                            parse_natural(sweep_mn_max, "--mn-max"), format);
  });

  // proof replay
  auto* proof_cmd = app.add_subcommand("proof", "mechanical expansion checks");
  proof_cmd->require_subcommand(1);
  proof_cmd->fallthrough();

  std::string replay_l, replay_m, replay_n;
  auto* replay_cmd = proof_cmd->add_subcommand(
      "replay", "check the two expansions of [m]_l (1+x)^(m+n-l) coefficient by coefficient");
  replay_cmd->fallthrough();
  replay_cmd->add_option("--l", replay_l, "derivative order l")->required();
  replay_cmd->add_option("--m", replay_m, "first exponent m")->required();
  replay_cmd->add_option("--n", replay_n, "second exponent n")->required();
  replay_cmd->callback([&] {
    rc = run_proof_replay(parse_natural(replay_l, "--l"), parse_natural(replay_m, "--m"),
                          parse_natural(replay_n, "--n"), format);
  });

  // urn
  std::string urn_red, urn_white, urn_i, urn_method, urn_trials, urn_seed;
  auto* urn_cmd =
      app.add_subcommand("urn", "probability that the i-th ball removed is red");
  urn_cmd->fallthrough();
  urn_cmd->add_option("--red", urn_red, "number of red balls")->required();
  urn_cmd->add_option("--white", urn_white, "number of white balls")->required();
  urn_cmd->add_option("--i", urn_i, "1-based draw position")->required();
  urn_cmd->add_option("--method", urn_method, "sum, closed, enumerate or simulate")
      ->required()
      ->check(CLI::IsMember({"sum", "closed", "enumerate", "simulate"}));
  urn_cmd->add_option("--trials", urn_trials, "Monte Carlo trials (simulate only)");
  urn_cmd->add_option("--seed", urn_seed, "PRNG seed (simulate only)");
  urn_cmd->callback([&] {
    const UrnSpec spec{parse_natural(urn_red, "--red"), parse_natural(urn_white, "--white")};
    const DrawIndex index{parse_natural(urn_i, "--i")};
    rc = run_urn(spec, index, urn_method, urn_trials, urn_seed, format);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return rc;
}

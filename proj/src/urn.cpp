#include "vident/urn.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace vident {
namespace {

void check_draw_index(const UrnSpec& spec, const DrawIndex& i) {
  if (i.i.is_zero() || i.i > spec.total()) {
    throw std::domain_error("draw index " + i.i.str() + " outside 1.." + spec.total().str());
  }
}

std::size_t to_count(const Natural& n, const char* what) {
  if (!n.fits_u64()) {
    throw std::domain_error(std::string(what) + " too large: " + n.str());
  }
  return static_cast<std::size_t>(n.to_u64());
}

}  // namespace

ExactRational hypergeom_pmf(const Natural& j, const UrnSpec& spec, const Natural& draws) {
  if (draws > spec.total()) {
    throw std::domain_error("cannot draw " + draws.str() + " balls from an urn of " +
                            spec.total().str());
  }
  const Natural ways =
      binomial(spec.red, j.value()) * binomial(spec.white, draws.value() - j.value());
  return ExactRational(ways, binomial(spec.total(), draws.value()));
}

ExactRational conditional_red(const Natural& j, const UrnSpec& spec, const DrawIndex& i) {
  if (j > spec.red) {
    throw std::domain_error("cannot have removed " + j.str() + " reds from " + spec.red.str());
  }
  check_draw_index(spec, i);
  const Int remaining = spec.total().value() - i.i.value() + 1;  // >= 1
  return ExactRational(spec.red.value() - j.value(), remaining);
}

ExactRational p_red_via_sum(const UrnSpec& spec, const DrawIndex& i) {
  check_draw_index(spec, i);
  const Natural before{Int(i.i.value() - 1)};
  ExactRational sum;
  for (Int j = 0; j < i.i.value(); ++j) {
    const ExactRational pmf = hypergeom_pmf(Natural(j), spec, before);
    if (pmf.is_zero()) {
      continue;  // j > red, or too few whites for the remainder
    }
    sum += conditional_red(Natural(j), spec, i) * pmf;
  }
  return sum;
}

ExactRational p_red_closed(const UrnSpec& spec) {
  if (spec.total().is_zero()) {
    throw std::domain_error("empty urn");
  }
  return ExactRational(spec.red, spec.total());
}

ExactRational enumerate_oracle(const UrnSpec& spec, const DrawIndex& i) {
  if (spec.total() > Natural(kEnumerationMaxBalls)) {
    throw std::domain_error("enumeration budget is " + std::to_string(kEnumerationMaxBalls) +
                            " balls, urn has " + spec.total().str());
  }
  check_draw_index(spec, i);
  const std::size_t total = to_count(spec.total(), "urn size");
  const std::size_t red = to_count(spec.red, "red count");
  const std::size_t pos = to_count(i.i, "draw index") - 1;

  // lexicographically first color arrangement; 1 = red
  std::vector<char> arrangement(total, 0);
  std::fill(arrangement.end() - static_cast<std::ptrdiff_t>(red), arrangement.end(), 1);

  unsigned long hits = 0;
  unsigned long arrangements = 0;
  do {
    ++arrangements;
    hits += static_cast<unsigned long>(arrangement[pos]);
  } while (std::next_permutation(arrangement.begin(), arrangement.end()));
  return ExactRational(Int(hits), Int(arrangements));
}

SimEstimate simulate(const UrnSpec& spec, const DrawIndex& i, const SimConfig& config) {
  if (config.trials == 0) {
    throw std::domain_error("trials must be >= 1");
  }
  check_draw_index(spec, i);
  const std::size_t total = to_count(spec.total(), "urn size");
  const std::size_t red = to_count(spec.red, "red count");
  const std::size_t steps = to_count(i.i, "draw index");

  std::vector<char> balls(total, 0);
  std::fill(balls.begin(), balls.begin() + static_cast<std::ptrdiff_t>(red), 1);

  std::mt19937_64 rng(config.seed);
  unsigned long long successes = 0;
  for (unsigned long long t = 0; t < config.trials; ++t) {
    // partial Fisher-Yates; positions 0..steps-1 become the removal order,
    // and the multiset of balls is permutation-invariant across trials
    for (std::size_t s = 0; s < steps; ++s) {
      std::uniform_int_distribution<std::size_t> pick(s, total - 1);
      std::swap(balls[s], balls[pick(rng)]);
    }
    successes += static_cast<unsigned long long>(balls[steps - 1]);
  }

  SimEstimate est;
  est.estimate = static_cast<double>(successes) / static_cast<double>(config.trials);
  est.trials = config.trials;
  est.seed = config.seed;
  est.successes = successes;
  return est;
}

}  // namespace vident

#pragma once

#include <cstdint>

#include "vident/exact_arith.hpp"

namespace vident {

// Urn composition. red + white must be >= 1 for any probability query.
struct UrnSpec {
  Natural red, white;

  Natural total() const { return red + white; }
};

// 1-based position of a draw; the valid range is 1..red+white for the urn a
// query pairs it with.
struct DrawIndex {
  Natural i;
};

struct SimConfig {
  unsigned long long trials = 0;
  std::uint64_t seed = 0;
};

struct SimEstimate {
  double estimate = 0.0;
  unsigned long long trials = 0;
  std::uint64_t seed = 0;
  unsigned long long successes = 0;
};

inline constexpr unsigned long kEnumerationMaxBalls = 12;

// P(exactly j reds among the first `draws` removals):
//   C(red, j) * C(white, draws - j) / C(red+white, draws).
// Zero when j > red or draws - j > white. Rejects draws > red+white.
ExactRational hypergeom_pmf(const Natural& j, const UrnSpec& spec, const Natural& draws);

// P(draw i is red | j reds removed in the first i-1 draws):
//   (red - j) / (red + white - (i - 1)).
// Rejects j > red and i outside 1..red+white.
ExactRational conditional_red(const Natural& j, const UrnSpec& spec, const DrawIndex& i);

// Total-probability sum over j of conditional_red * hypergeom_pmf. Always
// equal to red/(red+white), independent of i.
ExactRational p_red_via_sum(const UrnSpec& spec, const DrawIndex& i);

// red / (red + white). Rejects the empty urn.
ExactRational p_red_closed(const UrnSpec& spec);

// Brute force, independent of the derivation above: the fraction of the
// C(red+white, red) equally likely color arrangements with red at position i.
// Rejects urns above kEnumerationMaxBalls.
ExactRational enumerate_oracle(const UrnSpec& spec, const DrawIndex& i);

// Seeded Monte Carlo draw-without-replacement experiment (mt19937_64 driving
// a partial Fisher-Yates shuffle of length i). Bit-reproducible for a fixed
// (spec, i, config) within one build.
SimEstimate simulate(const UrnSpec& spec, const DrawIndex& i, const SimConfig& config);

}  // namespace vident

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "vident/exact_arith.hpp"

namespace vident {

// Dense formal polynomial over Natural; coefficient index = power of x.
// Canonical form carries no trailing zeros, and the zero polynomial is the
// empty coefficient sequence, so operator== is true polynomial equality.
class DensePoly {
 public:
  DensePoly() = default;
  explicit DensePoly(std::vector<Natural> coeffs);

  const std::vector<Natural>& coeffs() const { return coeffs_; }
  const Natural& coeff(std::size_t power) const;  // 0 beyond the stored range
  bool is_zero() const { return coeffs_.empty(); }
  std::optional<std::size_t> degree() const;  // nullopt for the zero polynomial

  DensePoly shifted_up(std::size_t powers) const;  // multiply by x^powers
  DensePoly scaled(const Natural& factor) const;

  friend bool operator==(const DensePoly&, const DensePoly&) = default;

 private:
  std::vector<Natural> coeffs_;
};

// Coefficients of (1+x)^m: row m of Pascal's triangle.
DensePoly binom_expand(const Natural& m);

// Cauchy product c_r = sum_k a_k * b_(r-k).
DensePoly poly_mul(const DensePoly& a, const DensePoly& b);

// order-th formal derivative: the coefficient of x^(i-order) in the result
// is falling_factorial(i, order) * p_i.
DensePoly poly_derive(const DensePoly& p, const Natural& order);

// x^l * (d/dx)^l (1+x)^m: the polynomial whose coefficient at power i is
// falling_factorial(i, l) * binomial(m, i). The x^l pre-factor keeps every
// exponent nonnegative; coefficients below power l vanish on their own.
DensePoly falling_expansion(const Natural& m, const Natural& l);

struct ProofReport {
  Natural l, m, n;
  std::vector<Natural> left_coeffs;
  std::vector<Natural> right_coeffs;
  bool vectors_equal = false;
  bool low_order_vanishes = false;

  bool passed() const { return vectors_equal && low_order_vanishes; }
};

// Mechanically checks, coefficient by coefficient and in exact arithmetic,
// that
//
//   x^l * (d/dx)^l[(1+x)^m] * (1+x)^n
//     == falling_factorial(m, l) * x^l * (1+x)^(m+n-l)
//
// and that the left side has no terms below power l. A failed comparison is
// a reported outcome, not an error.
ProofReport replay_proof(const Natural& l, const Natural& m, const Natural& n);

}  // namespace vident

#pragma once

#include <optional>

#include "vident/exact_arith.hpp"

namespace vident {

// One evaluation point (l, m, n, r) of the falling-factorial convolution
// identity
//
//   sum_{k=0}^{r} [k]_l C(m,k) C(n,r-k)  ==  [m]_l C(m+n-l, r-l)
//
// where [x]_l is the falling factorial. No coupling constraints are imposed
// on the fields: the zero conventions of exact_arith make every instance
// evaluable, including r < l and l > m.
struct IdentityInstance {
  Natural l, m, n, r;

  friend bool operator==(const IdentityInstance&, const IdentityInstance&) = default;
};

struct VerifyReport {
  IdentityInstance instance;
  Natural lhs, rhs;
  bool equal = false;
};

// Left side, summed in ascending k.
Natural convolution_lhs(const IdentityInstance& inst);

// Right side falling_factorial(m, l) * C(m+n-l, r-l); 0 when r < l or l > m.
Natural closed_form_rhs(const IdentityInstance& inst);

// The l = 1 closed form m * C(m+n-1, r-1). Agrees with closed_form_rhs at
// l = 1 for all inputs.
Natural first_order_rhs(const Natural& m, const Natural& n, const Natural& r);

VerifyReport verify(const IdentityInstance& inst);

// The l = 0 case: sum_k C(m,k) C(n,r-k) against C(m+n, r).
VerifyReport classic_vandermonde_check(const Natural& m, const Natural& n, const Natural& r);

// Documented sweep budget; exhaustive_verify rejects anything larger.
inline constexpr unsigned long kSweepMaxL = 8;
inline constexpr unsigned long kSweepMaxMN = 16;

struct SweepSummary {
  unsigned long long checked = 0;
  unsigned long long failed = 0;
  // First failing instance in lexicographic (l, m, n, r) order, if any.
  std::optional<VerifyReport> first_failure;

  bool all_passed() const { return failed == 0; }
};

// Verifies every instance with 0 <= l <= l_max, 0 <= m, n <= mn_max and
// 0 <= r <= m+n. Throws std::domain_error when the bounds exceed the budget.
SweepSummary exhaustive_verify(const Natural& l_max, const Natural& mn_max);

}  // namespace vident

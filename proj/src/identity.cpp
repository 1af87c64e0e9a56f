#include "vident/identity.hpp"

#include <stdexcept>
#include <string>

namespace vident {

Natural convolution_lhs(const IdentityInstance& inst) {
  Natural sum;
  for (Int k = 0; k <= inst.r.value(); ++k) {
    Natural term = falling_factorial(Natural(k), inst.l);
    if (term.is_zero()) {
      continue;
    }
    term *= binomial(inst.m, k);
    if (term.is_zero()) {
      continue;
    }
    term *= binomial(inst.n, inst.r.value() - k);
    sum += term;
  }
  return sum;
}

Natural closed_form_rhs(const IdentityInstance& inst) {
  const Natural lead = falling_factorial(inst.m, inst.l);
  if (lead.is_zero()) {
    return lead;  // covers l > m, where m+n-l may not even be a Natural
  }
  Natural top{Int(inst.m.value() + inst.n.value() - inst.l.value())};
  return lead * binomial(top, inst.r.value() - inst.l.value());
}

Natural first_order_rhs(const Natural& m, const Natural& n, const Natural& r) {
  if (m.is_zero()) {
    return m;
  }
  return m * binomial(Natural{Int(m.value() + n.value() - 1)}, r.value() - 1);
}

VerifyReport verify(const IdentityInstance& inst) {
  VerifyReport rep;
  rep.instance = inst;
  rep.lhs = convolution_lhs(inst);
  rep.rhs = closed_form_rhs(inst);
  rep.equal = rep.lhs == rep.rhs;
  return rep;
}

VerifyReport classic_vandermonde_check(const Natural& m, const Natural& n, const Natural& r) {
  return verify(IdentityInstance{Natural(0), m, n, r});
}

SweepSummary exhaustive_verify(const Natural& l_max, const Natural& mn_max) {
  if (l_max > Natural(kSweepMaxL) || mn_max > Natural(kSweepMaxMN)) {
    throw std::domain_error("sweep bounds exceed the budget (l_max <= " +
                            std::to_string(kSweepMaxL) +
                            ", mn_max <= " + std::to_string(kSweepMaxMN) + ")");
  }
  const unsigned long lm = l_max.value().get_ui();
  const unsigned long mn = mn_max.value().get_ui();

  SweepSummary summary;
  for (unsigned long l = 0; l <= lm; ++l) {
    for (unsigned long m = 0; m <= mn; ++m) {
      for (unsigned long n = 0; n <= mn; ++n) {
        for (unsigned long r = 0; r <= m + n; ++r) {
          VerifyReport rep = verify({Natural(l), Natural(m), Natural(n), Natural(r)});
          ++summary.checked;
          if (!rep.equal) {
            ++summary.failed;
            if (!summary.first_failure) {
              summary.first_failure = rep;
            }
          }
        }
      }
    }
  }
  return summary;
}

}  // namespace vident

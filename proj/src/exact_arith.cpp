#include "vident/exact_arith.hpp"

#include <ostream>
#include <stdexcept>
#include <utility>

namespace vident {

Natural::Natural(Int v) : v_(std::move(v)) {
  if (v_ < 0) {
    throw std::domain_error("Natural: negative value " + v_.get_str());
  }
}

Natural Natural::from_decimal(const std::string& text) {
  if (text.empty()) {
    throw std::invalid_argument("Natural: empty decimal string");
  }
  for (char c : text) {
    if (c < '0' || c > '9') {
      throw std::invalid_argument("Natural: not a decimal digit string: '" + text + "'");
    }
  }
  return Natural(Int(text, 10));
}

std::ostream& operator<<(std::ostream& os, const Natural& n) { return os << n.value(); }

Natural factorial(const Natural& x) {
  if (x.value().fits_ulong_p()) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), x.value().get_ui());
    return Natural(std::move(r));
  }
  Int r = 1;  // x beyond unsigned long: direct product
  for (Int i = 2; i <= x.value(); ++i) {
    r *= i;
  }
  return Natural(std::move(r));
}

Natural binomial(const Natural& x, const Int& y) {
  if (y < 0 || y > x.value()) {
    return Natural();
  }
  Int k = y;
  if (k > x.value() - k) {
    k = x.value() - k;  // symmetry, fewer factors
  }
  Int res = 1;
  for (Int i = 1; i <= k; ++i) {
    res *= x.value() - k + i;
    // every prefix is C(x-k+i, i), so the division is exact
    mpz_divexact(res.get_mpz_t(), res.get_mpz_t(), i.get_mpz_t());
  }
  return Natural(std::move(res));
}

Natural falling_factorial(const Natural& x, const Natural& l) {
  if (l.value() > x.value()) {
    return Natural();  // the factor (x - x) appears
  }
  Int r = 1;
  for (Int i = 0; i < l.value(); ++i) {
    r *= x.value() - i;
  }
  return Natural(std::move(r));
}

ExactRational::ExactRational(const Int& num, const Int& den) {
  if (den == 0) {
    throw std::domain_error("ExactRational: zero denominator");
  }
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

ExactRational::ExactRational(const Natural& num, const Natural& den)
    : ExactRational(num.value(), den.value()) {}

std::string ExactRational::str() const {
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const ExactRational& q) { return os << q.str(); }

}  // namespace vident

#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>

namespace vident {

// Signed arbitrary-precision integer. Used wherever an index difference
// (r - l, draws - j, ...) may go negative before a zero convention applies.
using Int = mpz_class;

// Nonnegative arbitrary-precision integer. Every count, coefficient and both
// sides of every identity live here; constructing one from a negative value
// throws std::domain_error.
class Natural {
 public:
  Natural() : v_(0) {}
  Natural(unsigned long v) : v_(v) {}  // implicit: counts are pervasive
  explicit Natural(Int v);

  // Parses a plain decimal digit string ("0012" is fine, "x" and "-3" are not).
  static Natural from_decimal(const std::string& text);

  const Int& value() const { return v_; }
  std::string str() const { return v_.get_str(); }
  bool is_zero() const { return v_ == 0; }
  bool fits_u64() const { return v_.fits_ulong_p() != 0; }
  unsigned long long to_u64() const { return v_.get_ui(); }  // pre: fits_u64()

  Natural& operator+=(const Natural& o) {
    v_ += o.v_;
    return *this;
  }
  Natural& operator*=(const Natural& o) {
    v_ *= o.v_;
    return *this;
  }
  friend Natural operator+(Natural a, const Natural& b) {
    a += b;
    return a;
  }
  friend Natural operator*(Natural a, const Natural& b) {
    a *= b;
    return a;
  }
  friend bool operator==(const Natural& a, const Natural& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Natural& a, const Natural& b) {
    return cmp(a.v_, b.v_) <=> 0;
  }

 private:
  Int v_;
};

std::ostream& operator<<(std::ostream& os, const Natural& n);

// x!, with factorial(0) = 1. Total.
Natural factorial(const Natural& x);

// C(x, y) with the zero convention: 0 whenever y < 0 or y > x. The signed
// second argument deliberately absorbs indices such as r - l that can go
// negative. Computed by the multiplicative formula, not factorial division.
Natural binomial(const Natural& x, const Int& y);

// x * (x-1) * ... * (x-l+1); equals x!/(x-l)! for l <= x and 0 for l > x
// (a factor reaches zero). falling_factorial(x, 0) = 1.
//
// Bracket-style notation for this quantity collides with Stirling-number
// notation in parts of the literature; here it always means the plain
// descending product.
Natural falling_factorial(const Natural& x, const Natural& l);

// Fraction kept in lowest terms with a positive denominator, so structural
// equality is value equality.
class ExactRational {
 public:
  ExactRational() : v_(0) {}
  ExactRational(const Int& num, const Int& den);  // den == 0 throws
  ExactRational(const Natural& num, const Natural& den);

  Int numerator() const { return v_.get_num(); }
  Int denominator() const { return v_.get_den(); }
  std::string str() const;  // "num/den", e.g. "0/1" or "2/5"
  double to_double() const { return v_.get_d(); }
  bool is_zero() const { return v_ == 0; }

  ExactRational& operator+=(const ExactRational& o) {
    v_ += o.v_;
    return *this;
  }
  ExactRational& operator*=(const ExactRational& o) {
    v_ *= o.v_;
    return *this;
  }
  friend ExactRational operator+(ExactRational a, const ExactRational& b) {
    a += b;
    return a;
  }
  friend ExactRational operator*(ExactRational a, const ExactRational& b) {
    a *= b;
    return a;
  }
  friend bool operator==(const ExactRational& a, const ExactRational& b) { return a.v_ == b.v_; }

 private:
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const ExactRational& q);

}  // namespace vident

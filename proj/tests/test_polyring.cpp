#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "vident/polyring.hpp"

using namespace vident;

namespace {

DensePoly make(std::initializer_list<unsigned long> coeffs) {
  std::vector<Natural> v;
  for (unsigned long c : coeffs) {
    v.emplace_back(c);
  }
  return DensePoly(std::move(v));
}

// School multiplication, written independently of poly_mul.
DensePoly naive_mul(const DensePoly& a, const DensePoly& b) {
  std::vector<Natural> out(a.coeffs().size() + b.coeffs().size() + 1);
  for (std::size_t r = 0; r < out.size(); ++r) {
    for (std::size_t k = 0; k <= r; ++k) {
      out[r] += a.coeff(k) * b.coeff(r - k);
    }
  }
  return DensePoly(std::move(out));
}

// Pascal rows by the additive recurrence, independent of binomial().
std::vector<Natural> pascal_row(std::size_t m) {
  std::vector<Natural> row{Natural(1)};
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<Natural> next(row.size() + 1);
    for (std::size_t j = 0; j < row.size(); ++j) {
      next[j] += row[j];
      next[j + 1] += row[j];
    }
    row = std::move(next);
  }
  return row;
}

DensePoly random_poly(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> degree(-1, 16);  // -1 = zero polynomial
  std::uniform_int_distribution<unsigned long> coeff(0, 9);
  const int d = degree(rng);
  std::vector<Natural> v;
  for (int i = 0; i <= d; ++i) {
    v.emplace_back(coeff(rng));
  }
  return DensePoly(std::move(v));
}

}  // namespace

TEST_CASE("canonical form trims trailing zeros") {
  CHECK(make({1, 2, 0, 0}) == make({1, 2}));
  CHECK(make({0, 0}) == DensePoly());
  CHECK(DensePoly().is_zero());
  CHECK_FALSE(DensePoly().degree().has_value());
  CHECK(make({0, 1}).degree() == 1);
  CHECK(make({7}).degree() == 0);
  CHECK(make({1, 2}).coeff(5) == 0);
}

TEST_CASE("binom_expand base rows") {
  CHECK(binom_expand(0) == make({1}));
  CHECK(binom_expand(1) == make({1, 1}));
  CHECK(binom_expand(3) == make({1, 3, 3, 1}));
}

TEST_CASE("binom_expand matches the additive Pascal recurrence") {
  for (std::size_t m = 0; m <= 16; ++m) {
    CHECK(binom_expand(m) == DensePoly(pascal_row(m)));
  }
}

TEST_CASE("poly_mul hand cases") {
  CHECK(poly_mul(make({1, 1}), make({1, 1})) == make({1, 2, 1}));
  const DensePoly p = make({4, 0, 7, 1});
  CHECK(poly_mul(p, make({1})) == p);
  CHECK(poly_mul(make({1}), p) == p);
  CHECK(poly_mul(make({1, 3, 3, 1}), make({1, 2, 1})) == make({1, 5, 10, 10, 5, 1}));
  CHECK(poly_mul(p, DensePoly()).is_zero());
  CHECK(poly_mul(DensePoly(), p).is_zero());
}

TEST_CASE("poly_mul agrees with school multiplication on random inputs") {
  std::mt19937_64 rng(20240819);
  for (int trial = 0; trial < 200; ++trial) {
    const DensePoly a = random_poly(rng);
    const DensePoly b = random_poly(rng);
    CHECK(poly_mul(a, b) == naive_mul(a, b));
  }
}

TEST_CASE("poly_mul ring laws on sampled inputs") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const DensePoly a = random_poly(rng);
    const DensePoly b = random_poly(rng);
    const DensePoly c = random_poly(rng);
    CHECK(poly_mul(a, b) == poly_mul(b, a));
    CHECK(poly_mul(poly_mul(a, b), c) == poly_mul(a, poly_mul(b, c)));
    CHECK(poly_mul(a, make({1})) == a);
  }
}

TEST_CASE("exponent law: (1+x)^a (1+x)^b == (1+x)^(a+b)") {
  for (unsigned long a = 0; a <= 16; ++a) {
    for (unsigned long b = 0; b <= 16; ++b) {
      CHECK(poly_mul(binom_expand(a), binom_expand(b)) == binom_expand(a + b));
    }
  }
}

TEST_CASE("poly_derive hand cases") {
  CHECK(poly_derive(make({1, 3, 3, 1}), 0) == make({1, 3, 3, 1}));
  CHECK(poly_derive(make({1, 3, 3, 1}), 1) == make({3, 6, 3}));
  CHECK(poly_derive(make({1, 1}), 2).is_zero());
  CHECK(poly_derive(make({1, 1}), 5).is_zero());
  CHECK(poly_derive(DensePoly(), 3).is_zero());
}

TEST_CASE("derivative of (1+x)^m matches both closed expansions") {
  for (unsigned long m = 0; m <= 12; ++m) {
    for (unsigned long l = 0; l <= m; ++l) {
      const DensePoly shifted = poly_derive(binom_expand(m), l).shifted_up(l);
      CHECK(shifted == falling_expansion(m, l));
      CHECK(shifted == binom_expand(m - l).scaled(falling_factorial(m, l)).shifted_up(l));
    }
  }
}

TEST_CASE("falling_expansion hand cases") {
  for (unsigned long m = 0; m <= 12; ++m) {
    CHECK(falling_expansion(m, 0) == binom_expand(m));
  }
  // coefficients 0*C(2,0), 1*C(2,1), 2*C(2,2)
  CHECK(falling_expansion(2, 1) == make({0, 2, 2}));
  CHECK(falling_expansion(2, 1) == poly_derive(binom_expand(2), 1).shifted_up(1));
  CHECK(falling_expansion(1, 2).is_zero());
}

TEST_CASE("replay at l = 0 is the classic two-expansion identity") {
  for (unsigned long m = 0; m <= 12; ++m) {
    for (unsigned long n = 0; n <= 12; ++n) {
      const ProofReport rep = replay_proof(0, m, n);
      CHECK(rep.passed());
      CHECK(DensePoly(rep.left_coeffs) == binom_expand(m + n));
      CHECK(DensePoly(rep.right_coeffs) == binom_expand(m + n));
    }
  }
}

TEST_CASE("replay hand case (1, 2, 1)") {
  const ProofReport rep = replay_proof(1, 2, 1);
  CHECK(rep.passed());
  CHECK(DensePoly(rep.left_coeffs) == make({0, 2, 4, 2}));
  CHECK(DensePoly(rep.right_coeffs) == make({0, 2, 4, 2}));
}

TEST_CASE("replay degenerate case (3, 2, 5): both sides vanish") {
  const ProofReport rep = replay_proof(3, 2, 5);
  CHECK(rep.passed());
  CHECK(rep.left_coeffs.empty());
  CHECK(rep.right_coeffs.empty());
}

TEST_CASE("replay passes across the whole budget box, including l > m") {
  for (unsigned long l = 0; l <= 8; ++l) {
    for (unsigned long m = 0; m <= 10; ++m) {
      for (unsigned long n = 0; n <= 10; ++n) {
        const ProofReport rep = replay_proof(l, m, n);
        CHECK(rep.vectors_equal);
        CHECK(rep.low_order_vanishes);
      }
    }
  }
}

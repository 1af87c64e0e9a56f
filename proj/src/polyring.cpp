#include "vident/polyring.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace vident {
namespace {

void trim(std::vector<Natural>& coeffs) {
  while (!coeffs.empty() && coeffs.back().is_zero()) {
    coeffs.pop_back();
  }
}

std::size_t to_index(const Natural& n, const char* what) {
  if (!n.value().fits_ulong_p()) {
    throw std::domain_error(std::string(what) + " too large: " + n.str());
  }
  return n.value().get_ui();
}

}  // namespace

DensePoly::DensePoly(std::vector<Natural> coeffs) : coeffs_(std::move(coeffs)) { trim(coeffs_); }

const Natural& DensePoly::coeff(std::size_t power) const {
  static const Natural kZero;
  return power < coeffs_.size() ? coeffs_[power] : kZero;
}

std::optional<std::size_t> DensePoly::degree() const {
  if (coeffs_.empty()) {
    return std::nullopt;
  }
  return coeffs_.size() - 1;
}

DensePoly DensePoly::shifted_up(std::size_t powers) const {
  if (coeffs_.empty() || powers == 0) {
    return *this;
  }
  std::vector<Natural> out(powers);
  out.insert(out.end(), coeffs_.begin(), coeffs_.end());
  return DensePoly(std::move(out));
}

DensePoly DensePoly::scaled(const Natural& factor) const {
  if (factor.is_zero()) {
    return DensePoly();
  }
  std::vector<Natural> out;
  out.reserve(coeffs_.size());
  for (const Natural& c : coeffs_) {
    out.push_back(c * factor);
  }
  return DensePoly(std::move(out));
}

DensePoly binom_expand(const Natural& m) {
  const std::size_t deg = to_index(m, "binomial expansion exponent");
  std::vector<Natural> coeffs;
  coeffs.reserve(deg + 1);
  Int c = 1;
  for (std::size_t k = 0;; ++k) {
    coeffs.emplace_back(c);
    if (k == deg) {
      break;
    }
    c *= static_cast<unsigned long>(deg - k);
    mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(k + 1));
  }
  return DensePoly(std::move(coeffs));
}

DensePoly poly_mul(const DensePoly& a, const DensePoly& b) {
  if (a.is_zero() || b.is_zero()) {
    return DensePoly();
  }
  const auto& ac = a.coeffs();
  const auto& bc = b.coeffs();
  std::vector<Natural> out(ac.size() + bc.size() - 1);
  for (std::size_t i = 0; i < ac.size(); ++i) {
    for (std::size_t j = 0; j < bc.size(); ++j) {
      out[i + j] += ac[i] * bc[j];
    }
  }
  return DensePoly(std::move(out));
}

DensePoly poly_derive(const DensePoly& p, const Natural& order) {
  if (p.is_zero() || !order.value().fits_ulong_p()) {
    return DensePoly();
  }
  const std::size_t l = order.value().get_ui();
  const std::size_t deg = *p.degree();
  if (l > deg) {
    return DensePoly();
  }
  std::vector<Natural> out;
  out.reserve(deg - l + 1);
  for (std::size_t i = l; i <= deg; ++i) {
    out.push_back(falling_factorial(Natural(i), order) * p.coeffs()[i]);
  }
  return DensePoly(std::move(out));
}

DensePoly falling_expansion(const Natural& m, const Natural& l) {
  const DensePoly row = binom_expand(m);
  std::vector<Natural> out;
  out.reserve(row.coeffs().size());
  for (std::size_t i = 0; i < row.coeffs().size(); ++i) {
    out.push_back(falling_factorial(Natural(i), l) * row.coeffs()[i]);
  }
  return DensePoly(std::move(out));
}

ProofReport replay_proof(const Natural& l, const Natural& m, const Natural& n) {
  ProofReport rep;
  rep.l = l;
  rep.m = m;
  rep.n = n;

  const DensePoly left = poly_mul(falling_expansion(m, l), binom_expand(n));

  DensePoly right;
  const Natural lead = falling_factorial(m, l);
  if (!lead.is_zero()) {
    // lead != 0 means l <= m, so m+n-l is a genuine Natural
    Natural reduced{Int(m.value() + n.value() - l.value())};
    right = binom_expand(reduced).scaled(lead).shifted_up(to_index(l, "derivative order"));
  }

  rep.vectors_equal = left == right;
  rep.low_order_vanishes = true;
  for (std::size_t p = 0; p < left.coeffs().size() && Natural(p) < l; ++p) {
    if (!left.coeffs()[p].is_zero()) {
      rep.low_order_vanishes = false;
      break;
    }
  }
  rep.left_coeffs = left.coeffs();
  rep.right_coeffs = right.coeffs();
  return rep;
}

}  // namespace vident

#include "vident/json_io.hpp"

namespace vident {
namespace {

Json coeff_strings(const std::vector<Natural>& coeffs) {
  Json arr = Json::array();
  for (const Natural& c : coeffs) {
    arr.push_back(c.str());
  }
  return arr;
}

}  // namespace

Json natural_json(const Natural& n) {
  if (n.fits_u64()) {
    return static_cast<std::uint64_t>(n.to_u64());
  }
  return n.str();
}

Json to_json(const ExactRational& q) {
  return Json{{"num", q.numerator().get_str()}, {"den", q.denominator().get_str()}};
}

Json to_json(const VerifyReport& rep) {
  return Json{{"l", natural_json(rep.instance.l)}, {"m", natural_json(rep.instance.m)},
              {"n", natural_json(rep.instance.n)}, {"r", natural_json(rep.instance.r)},
              {"lhs", rep.lhs.str()},              {"rhs", rep.rhs.str()},
              {"equal", rep.equal}};
}

Json to_json(const SweepSummary& summary) {
  Json doc{{"checked", summary.checked}, {"failed", summary.failed}};
  doc["first_failure"] = summary.first_failure ? to_json(*summary.first_failure) : Json(nullptr);
  return doc;
}

Json to_json(const ProofReport& rep) {
  return Json{{"l", natural_json(rep.l)},
              {"m", natural_json(rep.m)},
              {"n", natural_json(rep.n)},
              {"left_coeffs", coeff_strings(rep.left_coeffs)},
              {"right_coeffs", coeff_strings(rep.right_coeffs)},
              {"vectors_equal", rep.vectors_equal},
              {"low_order_vanishes", rep.low_order_vanishes}};
}

Json to_json(const SimEstimate& est) {
  return Json{{"estimate", est.estimate}, {"trials", est.trials}, {"seed", est.seed}};
}

}  // namespace vident

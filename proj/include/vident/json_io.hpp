#pragma once

#include <json.hpp>

#include "vident/exact_arith.hpp"
#include "vident/identity.hpp"
#include "vident/polyring.hpp"
#include "vident/urn.hpp"

namespace vident {

// Insertion-ordered documents so identical invocations emit identical bytes.
using Json = nlohmann::ordered_json;

// Numbers that fit 64 bits are emitted as JSON numbers; anything larger
// becomes a decimal string so consumers never truncate.
Json natural_json(const Natural& n);

Json to_json(const ExactRational& q);  // {"num":"<decimal>","den":"<decimal>"}
Json to_json(const VerifyReport& rep);
Json to_json(const SweepSummary& summary);
Json to_json(const ProofReport& rep);
Json to_json(const SimEstimate& est);  // {"estimate":<float>,"trials":N,"seed":S}

}  // namespace vident

#pragma once

#include <json.hpp>

#include "dbent/constructions.hpp"
#include "dbent/pds.hpp"

namespace dbent::io {

using nlohmann::json;

/// Integers that fit in 64 bits become JSON numbers, larger ones decimal strings.
json big(const BigInt& v);
BigInt big_from(const json& j);

json to_json(const Field& F);  // {"p", "m", "modulus"}
Field field_from_json(const json& j);

json to_json(const Space& V);  // list of field descriptors
Space space_from_json(const json& j);

/// {"space": [...], "codomain": {"p", "s", "modulus"}, "table": [...]}
json to_json(const VectorialFunction& F);
/// Validates the schema and every table entry; throws Error(Schema).
VectorialFunction function_from_json(const json& j);

json to_json(const CyclotomicInt& z);  // {"p", "coeffs"}
CyclotomicInt cyclo_from_json(const json& j);

json to_json(const WalshSpectrum& w);  // list of CyclotomicInt records
json to_json(const BentClassification& c);
json to_json(const DualBentCertificate& c);
/// {"family", "function", "dual", "sigma_claim", "epsilon_claim"}
json to_json(const Construction& c);
json to_json(const PreimageSet& D);  // {"space", "members", "values", "zero_excluded"}
PreimageSet preimage_set_from_json(const json& j);
json to_json(const PdsParams& P);  // {"v", "k", "lambda", "mu", "degenerate"}

}  // namespace dbent::io

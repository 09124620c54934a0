#pragma once

#include <json.hpp>

#include "isores/fiber.hpp"
#include "isores/resonance.hpp"
#include "isores/spherical.hpp"
#include "isores/strata.hpp"

namespace isores::cli {

using nlohmann::json;

// Integers that fit in int64 are emitted as JSON numbers, larger ones as
// decimal strings. Rationals are always "num/den". Pole indices are one-based.

json integer_to_json(const BigInt& value);
BigInt integer_from_json(const json& j);

/// {"k": 4, "a": [13, 3], "b": [4, 4, 4, 4, 4, 4]}
json to_json(const Signature& sig);
Signature signature_from_json(const json& j);

/// A grammar string, or an array of [num, den] pairs over zeta_N^0..zeta_N^(N-1).
Cyclotomic cyclotomic_from_json(const json& j, std::uint64_t conductor);

/// {"mode":"roots","k":4,"N":8,"roots":["1","1","1+z"]}
/// {"mode":"numeric","k":4,"values":[[1,0],[1,0],[-4,0]],"tol":1e-9}
json to_json(const ResidueTuple& rt);
ResidueTuple residues_from_json(const json& j);

/// {"a": 3, "b": 3, "c": ["1/2", "5/2", "7/3"]}
json to_json(const SphericalAngles& angles);
SphericalAngles angles_from_json(const json& j);

json subset_to_json(SubsetMask mask);
SubsetMask subset_from_json(const json& j);

/// {"numeric": false, "ambiguous": false,
///  "resonant": [{"subset": [1,2], "abelian_number": 1}, ...]}
json to_json(const ResonanceProfile& profile);
ResonanceProfile profile_from_json(const json& j);

/// {"count": 0, "degree": 8775,
///  "terms": [{"J0": [...], "blocks": [[...], ...], "contribution": "-6075/1"}, ...],
///  "unverified_regime": false, "diagnostics": [...]}
/// plus "single_resonance_count" when exactly one subset is resonant.
json to_json(const FiberReport& report);
FiberReport fiber_report_from_json(const json& j);

/// {"value": 1.0, "subset": [1], "numeric": false, "ambiguous": false}
json to_json(const SystoleReport& report);
SystoleReport systole_from_json(const json& j);

}  // namespace isores::cli

#pragma once

#include <nlohmann/json.hpp>

#include "lopq/classical.hpp"
#include "lopq/lattice.hpp"
#include "lopq/moments.hpp"
#include "lopq/pearson.hpp"
#include "lopq/poly.hpp"
#include "lopq/scalar.hpp"

namespace lopq {

/// Insertion-ordered, so serialized key order is fixed by the code.
using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "lattice-opq/1";

/// Rationals always travel as strings, "num" or "num/den".
Json to_json(const Scalar& value);
/// Accepts a rational string or a JSON integer. Throws std::invalid_argument.
Scalar scalar_from_json(const Json& j);

Json to_json(const Poly& poly);  // coefficient strings, low to high
Json to_json(const Lattice& lattice);
Json to_json(const PearsonPair& pair);
Json to_json(const MomentSeq& u);
Json to_json(const TTRRCoeffs& ttrr);
Json to_json(const Failure& failure);
Json to_json(const RegularityReport& report);
Json to_json(const RodriguesVerdict& verdict);

/// {"type": "q", "p", "c3", "m"} or {"type": "quadratic", "c4", "c5", "c6"}.
/// Throws std::invalid_argument for unknown types or missing keys, and
/// LatticeError for invalid parameters.
Lattice lattice_from_json(const Json& j);
/// {"a", "b", "c", "d", "e"}, missing keys default to 0.
PearsonPair pair_from_json(const Json& j);

}  // namespace lopq

#pragma once

#include "sl2comod/comodule.hpp"
#include "sl2comod/ktheory.hpp"

#include "json.hpp"

#include <map>
#include <string>

namespace sl2comod {

using Json = nlohmann::json;

// --- base rings ----------------------------------------------------------------

// {"kind": "Z" | "Q" | "Z_p" | "Z_inv", "p"?: int, "m"?: int}
Json ring_to_json(const BaseRing& ring);
BaseRing ring_from_json(const Json& j);

// Shell-flag syntax: "Z", "Q", "Z_p:5", "Z_inv:6".
BaseRing parse_ring_flag(const std::string& flag);
std::string ring_flag(const BaseRing& ring);

// --- scalars and matrices ------------------------------------------------------

// An exact rational as the two-element array [numerator, denominator].
Json rational_to_json(const Rational& q);
Rational rational_from_json(const Json& j);

Json int_matrix_to_json(const IntMat& m);
IntMat int_matrix_from_json(const Json& j);
Json rational_matrix_to_json(const RatMat& m);

// A polynomial as its sorted term list [[[num, den], [a, b, c, d]], ...].
Json poly_to_json(const HopfPoly& p);
HopfPoly poly_from_json(const Json& j);

// --- comodules -------------------------------------------------------------------

// {"ring": ..., "rank": n, "side": "right"|"left", "variant": "std"|"op",
//  "labels": [...], "matrix": [[term list, ...], ...]}
// Term lists are sorted lexicographically on the exponent tuples, so
// serialization is bit-exact under round-tripping.
Json comodule_to_json(const Comodule& c);

// Parses and, when `verify` is set, gates the result through verify_comodule;
// a comodule that fails the axioms is rejected with the failing entry in the
// exception message.
Comodule comodule_from_json(const Json& j, bool verify = true);

void store_comodule(const Comodule& c, const std::string& path);
Comodule load_comodule(const std::string& path, bool verify = true);

// --- classes and weight tables --------------------------------------------------

// Sorted {degree: multiplicity} object (integer keys rendered in decimal).
Json weight_map_to_json(const std::map<int, Int>& m);
Json multiplicity_map_to_json(const std::map<int, std::size_t>& m);

}  // namespace sl2comod

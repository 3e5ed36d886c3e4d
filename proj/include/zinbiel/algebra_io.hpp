#pragma once

/*
 * The algebra file format: a strict JSON document, version tag "format": 1.
 *
 *   {
 *     "format": 1,
 *     "name": "A_2^1",
 *     "dim": 2,
 *     "products": [
 *       { "left": 1, "right": 1,
 *         "result": [ { "basis": 2, "coeff": "1" } ] }
 *     ]
 *   }
 *
 * Indices are 1-based; absent products are zero; coefficients are exact
 * rationals written "p", "-p" or "p/q".  Parsing is strict (unknown keys,
 * duplicate (left, right) pairs, duplicate basis indices inside one result,
 * and out-of-range indices are all rejected) and every error carries
 * positional context.  emit_algebra writes the canonical serialization:
 * products sorted by (left, right, basis), coefficients in lowest terms,
 * zero coefficients omitted; parse(emit(a)) == a exactly.
 */

#include "zinbiel/algebra.hpp"

#include <stdexcept>
#include <string>

namespace zinbiel {

class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

AlgebraSpec parse_algebra(const std::string& text);

std::string emit_algebra(const AlgebraSpec& a);

} // namespace zinbiel

#pragma once

#include <string>

#include "corecalc/normalcalc.hpp"
#include "corecalc/polyhedron.hpp"
#include "corecalc/subdiff.hpp"
#include "json.hpp"

/**
 * Wire format for sets, functions, and maps. Every number travels as an
 * exact rational string "p/q" (or "p"); no floating point anywhere. Sets are
 * emitted with both constraint and generator descriptions so a report
 * re-parses without a converter.
 */

namespace corecalc {

using Json = nlohmann::json;

Json to_json(const Rational& q);
Json to_json(const Vec& v);
Json to_json(const HRep& h);
Json to_json(const VRep& v);

/** Both representations plus dimension and emptiness. */
Json set_to_json(const Polyhedron& p);

/** Parsers throw InputError on malformed or inconsistent input. */
Rational rational_from_json(const Json& j);

/** expected < 0 skips the length check. */
Vec vec_from_json(const Json& j, Index expected = -1);

/**
 * Accepts {"dim", "ineqs", "eqs"}, the same nested under "hrep", or a
 * generator form {"dim", "vertices", "rays"} (also nested under "vrep").
 * Constraint form wins when both are present.
 */
Polyhedron polyhedron_from_json(const Json& j);

/** {"dim": n, "epi": <polyhedron>} — validated as a proper function. */
PolyFunction function_from_json(const Json& j);

/** {"dim_in", "dim_out", "graph": <polyhedron>}. */
SetValuedMap map_from_json(const Json& j);

/** {"rows", "cols", "entries": [[..row..], ...]}. */
Mat matrix_from_json(const Json& j);

}  // namespace corecalc

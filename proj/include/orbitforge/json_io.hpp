#ifndef ORBITFORGE_JSON_IO_HPP
#define ORBITFORGE_JSON_IO_HPP

#include <string>

#include "json.hpp"
#include "orbitforge/cohomology.hpp"
#include "orbitforge/diagnostics.hpp"
#include "orbitforge/sparse_vec.hpp"
#include "orbitforge/stabilizer.hpp"
#include "orbitforge/wreath.hpp"

namespace orbitforge {

// Insertion-ordered documents keep CLI output layout stable.
using Json = nlohmann::ordered_json;

/**
 * Exact serialization: every scalar is a decimal string (integers as "p",
 * rationals as "p/q", field values as "a + b*sqrt2"); no floats anywhere.
 * Parsers throw std::invalid_argument on malformed documents and propagate
 * the domain errors of the underlying constructors.
 */

// scalar: {"a": [num, den], "b": [num, den]} with decimal-string integers
Json to_json(const QuadScalar& x);
QuadScalar quad_from_json(const Json& j);

// sequence: {"domain": "Z"|"N", "entries": [[index, scalar], ...]} sorted
Json to_json(const SparseVec& v);
SparseVec sparse_from_json(const Json& j);

// wreath element: {"lattice": "int"|"quad", "f": [[index, scalar], ...], "s": int}
Json to_json(const WreathElement& g);
WreathElement wreath_from_json(const Json& j);

// flat-stabilizer isometry: {"n": int, "Q": [[rational, ...], ...]} when dense,
// {"n": int, "householder": {"fill": rational, "window": [[i, rational], ...]}}
// for the reflection form, {"n": int, "identity": true} for the identity
Json to_json(const StabilizerIsometry& g);
StabilizerIsometry stab_from_json(const Json& j);

// orthogonal representation: {"dim": d, "mats": [[[entry, ...], ...], ...]},
// entries "p/q" or "a + b*sqrt2" strings
Json to_json(const OrthoRep& rep);
OrthoRep rep_from_json(const Json& j);

// cocycle: {"vals": [[entry, ...], ...]}
Json to_json(const Cocycle& b);
Cocycle cocycle_from_json(const Json& j);

Json to_json(const Enclosure& e);  // {"lo": "p/q", "hi": "p/q"}

// certificates and reports (emission only)
Json to_json(const OrbitCertificate& c);
Json to_json(const ApproxCertificate& c);
Json to_json(const ProbeReport& r);
Json to_json(const GrowthTable& t);
Json to_json(const CocycleClass& c);
Json to_json(const Decomposition& d);
Json to_json(const StrongCohomologyReport& r);
Json to_json(const CentralGapReport& r);
Json to_json(const VanishOnCentreReport& r);
Json to_json(const FixedPointResult& r);
Json to_json(const OrbitProbeReport& r);

/** CSV form of the growth table: length, direction-id, enclosure low, high. */
std::string growth_csv(const GrowthTable& t);

}  // namespace orbitforge

#endif

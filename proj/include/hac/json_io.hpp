#ifndef HAC_JSON_IO_HPP
#define HAC_JSON_IO_HPP

#include <json.hpp>

#include "hac/conjugacy.hpp"
#include "hac/constructions.hpp"
#include "hac/dynamics.hpp"
#include "hac/lazy_homeo.hpp"
#include "hac/pl_map.hpp"

namespace hac {

/// Insertion-ordered JSON keeps emitted artifacts byte-stable.
using Json = nlohmann::ordered_json;

Json rational_to_json(const Rational& q);
Rational rational_from_json(const Json& j);

Json interval_to_json(const Interval& iv);
Interval interval_from_json(const Json& j);

/// {"domain": [lo,hi], "codomain": [lo,hi], "points": [["x","y"], ...]}
/// with lowest-terms "p/q" strings; round-trips are bit-exact.
Json pl_to_json(const PLMap& m);
PLMap pl_map_from_json(const Json& j);
PLHomeo pl_homeo_from_json(const Json& j);

Json fixed_set_to_json(const FixedSet& fs);
Json orbitals_to_json(const std::vector<Orbital>& orbs);
Json genericity_to_json(const GenericityReport& report);
Json signature_to_json(const OrbitalSignature& sig);

/// LazyHomeo as an expression tree over embedded PL atoms.
Json lazy_to_json(const LazyHomeo& h);
LazyHomeo lazy_from_json(const Json& j);

/// Everything needed to reconstruct f_tilde deterministically.
Json generator_pair_to_json(const GeneratorPair& pair);
GeneratorPair generator_pair_from_json(const Json& j);

}  // namespace hac

#endif

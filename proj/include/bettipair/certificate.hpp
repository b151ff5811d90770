#ifndef BETTIPAIR_CERTIFICATE_HPP
#define BETTIPAIR_CERTIFICATE_HPP

#include <string>

#include <json.hpp>

#include "bettipair/construction.hpp"

namespace bettipair {

using nlohmann::json;

json sequence_to_json(const Sequence& s);
Sequence sequence_from_json(const json& j);

json monomial_ideal_to_json(const MonomialIdeal& J);
json polynomial_to_json(const Polynomial& f);
json point_set_to_json(const PointSet& pts);
PointSet point_set_from_json(const json& j);
json lines_to_json(const LinesUnion& u);
json betti_to_json(const BettiDiagram& b);
json wlp_to_json(const WlpReport& r);

// The machine-readable certificate.  Deterministic by construction: nlohmann
// objects are key-sorted and every numeric field replays from (input, seed,
// prime), so serializing twice yields identical bytes.  Wall-clock timings
// are deliberately reported on the text channel only.
json certificate(const WitnessPair& w);

std::string certificate_bytes(const WitnessPair& w);

} // namespace bettipair

#endif

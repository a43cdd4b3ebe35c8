#pragma once

// JSON views of every result type.  Integers and rationals are serialized as
// decimal strings (values overflow 64-bit doubles/ints routinely), polynomial
// coefficients as ascending arrays.  Every record can be wrapped with
// provenance for the CLI's certificate stream.

#include <json.hpp>
#include <string>

#include "unicrit/abcbounds.hpp"
#include "unicrit/curves.hpp"
#include "unicrit/dynamics.hpp"
#include "unicrit/fermatcatalan.hpp"
#include "unicrit/search.hpp"

namespace unicrit {

using Json = nlohmann::json;

inline constexpr const char* kArtifactVersion = "0.1.0";

Json to_json(const Integer& n);
Json to_json(const Rational& q);
Json to_json(const CPoly& p);                 // ascending coefficient strings
Json nested_poly_json(const XPoly& p);        // ascending arrays of strings

Json orbit_json(const PowerMap& f, const OrbitReport& r);
Json graph_node_json(const PreperNode& n);
Json graph_summary_json(const PreperGraph& g);
Json cycle_json(const CycleCertificate& cert);
Json fixed_pair_json(int d, const FixedPairHit& h);
Json type12_json(int d, const Type12Hit& h);
Json sweep_row_json(const SweepRow& r);
Json decomposition_json(const FCDecomposition& fc);
Json signature_json(unsigned long k, int delta, const SignatureHit& h);
Json nonexistence_json(const NonexistenceVerdict& v);
Json quartic_json(const QuarticPoint& p);
Json weighted_json(const WeightedPoint& p);
Json family_json(const Rational& t, const Rational& y, const FamilyPoint& fp);
Json system_check_json(const SystemCheckResult& r);
Json bound_check_json(const AbcTriple& t, const ExplicitBoundCheck& r);
Json margin_json(const FixedpointMargin& m);

// {"kind": ..., "payload": ..., "provenance": {subcommand, params, version}}
Json wrap_certificate(const std::string& kind, Json payload,
                      const std::string& subcommand, Json params);

// parse-back helpers; each re-derives and re-verifies what it can
Integer integer_from_json(const Json& j);
Rational rational_from_json(const Json& j);
// rebuilds through make_cycle_certificate (which re-verifies the cycle) and
// cross-checks the redundant C and c fields
CycleCertificate cycle_from_json(const Json& payload);

}  // namespace unicrit

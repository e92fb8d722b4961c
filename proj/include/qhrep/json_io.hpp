#pragma once

#include <nlohmann/json.hpp>

#include "qhrep/classify.hpp"
#include "qhrep/cyclotomic.hpp"
#include "qhrep/filling.hpp"
#include "qhrep/qrep.hpp"
#include "qhrep/wavefn.hpp"

namespace qhrep::io {

// Insertion-ordered JSON keeps CLI output byte-deterministic.
using Json = nlohmann::ordered_json;

// Rationals serialize as decimal strings so arbitrary precision survives
// the interface: scalars as "num/den" (GMP canonical form), pairs as
// ["num", "den"].
Json rational_pair(const Rational& r);
Rational rational_from_pair(const Json& j);

Json to_json(const CycNumber& a);
CycNumber cycnumber_from_json(const Json& j);

Json to_json(const std::complex<double>& z);

Json to_json(const CyclicRep& rep);
Json to_json(const VerifyReport& report);
Json to_json(const CasimirScalars& cas);
Json to_json(const RepVerification& v);

Json to_json(const HierarchyChain& chain);
Json to_json(const BWParams& params);

Json to_json(const SymPoly& poly);
SymPoly sympoly_from_json(const Json& j);
Json to_json(const WaveState& state);
Json to_json(const PiScaled& v);
Json to_json(const GramResult& gram);

Json to_json(const Classification& c);

}  // namespace qhrep::io

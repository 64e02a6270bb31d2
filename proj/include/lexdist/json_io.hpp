#ifndef LEXDIST_JSON_IO_HPP
#define LEXDIST_JSON_IO_HPP

#include "lexdist/distraction.hpp"
#include "lexdist/groebner.hpp"
#include "lexdist/homology.hpp"
#include "lexdist/monomial.hpp"
#include "lexdist/shakin.hpp"
#include "lexdist/verify.hpp"

#include <json.hpp>

namespace lexdist {

using Json = nlohmann::json;

constexpr int kSchemaVersion = 1;

/// All readers accept documents with "v": 1 or without a version field and
/// throw InvalidInput on anything malformed.

Json toJson(const Monomial& m);
Json toJson(const MonomialIdeal& ideal);
MonomialIdeal monomialIdealFromJson(const Json& j);

Json toJson(const HilbertFunction& h);
/// Accepts a bare array of values or {"values": [...]}.
HilbertFunction hilbertFunctionFromJson(const Json& j);

Json toJson(const ShakinIdeal& a);
ShakinIdeal shakinFromJson(const Json& j);

Json toJson(const DistractionMatrix& d);
/// The field comes from "char" when present, otherwise from `field`.
DistractionMatrix distractionFromJson(const Json& j, PrimeField field = PrimeField());

Json toJson(const Ideal& ideal);
/// Accepts {"n", "gens": ["poly", ...]} or the monomial-ideal format.
Ideal idealFromJson(const Json& j, PrimeField field = PrimeField());

Json toJson(const GradedBettiTable& table);
Json toJson(const LocalCohTable& table);
Json toJson(const PolarizationResult& p);
Json toJson(const VerificationReport& report);

Json parseJsonText(const std::string& text);

} // namespace lexdist

#endif

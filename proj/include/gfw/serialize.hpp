#ifndef GFW_SERIALIZE_HPP
#define GFW_SERIALIZE_HPP

#include <json.hpp>

#include <string>

#include "gfw/cohomology.hpp"
#include "gfw/models.hpp"
#include "gfw/monomial_ideal.hpp"

namespace gfw {

using Json = nlohmann::ordered_json;

/// Canonical element form: array of terms in basis order, each
/// {"coeff": "num/den", "exponents": {name: exp, ...}}.
Json element_json(const AlgebraPresentation& alg, const Element& a);

/// {"generators": [{"name","degree"}...], "truncation"?: {...}, "rewrite"?: {...}}
Json presentation_json(const AlgebraPresentation& alg);

/// {"model", "max_degree", "betti": {degree: dim}} with nonzero dims only,
/// degree-ascending.
Json betti_json(const BettiTable& table);

/// Header row "degree,dim" then one row per degree 0..max_degree.
std::string betti_csv(const BettiTable& table);

Json min_gens_json(const WeightedRing& ring, const MinGenSet& gens);

/// Human-readable dump: generators with degrees, truncation, differentials.
std::string presentation_dump(const ModelBundle& bundle);

}  // namespace gfw

#endif

#ifndef PARVB_JSON_IO_HPP
#define PARVB_JSON_IO_HPP

#include <parvb/parabolic.hpp>
#include <parvb/sampling.hpp>

#include <json.hpp>

namespace parvb {

// Rationals travel as "p/q" strings, point indices as 1-based lists,
// polynomials as coefficient arrays in increasing degree.

nlohmann::json weight_to_json(const WeightVector& A);
WeightVector weight_from_json(const nlohmann::json& j);

nlohmann::json signature_to_json(const WallSignature& s);

nlohmann::json group_to_json(const AdmissibleGroup& g, bool corollary_applies);

nlohmann::json bundle_to_json(const ParabolicBundle& E);
ParabolicBundle bundle_from_json(const nlohmann::json& j);

nlohmann::json witness_to_json(const LineSubbundleWitness& L, int n);
nlohmann::json stability_to_json(const StabilityReport& rep, int n);
nlohmann::json transform_to_json(const TransformResult& t);

nlohmann::json survey_to_json(const SurveyReport& rep);

// Parses a file into JSON; throws validation_error on I/O or syntax problems.
nlohmann::json load_json_file(const std::string& path);

}  // namespace parvb

#endif

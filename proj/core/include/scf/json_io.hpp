#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "scf/classify.hpp"
#include "scf/identities.hpp"
#include "scf/lambda_calc.hpp"

namespace scf {

using Json = nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;

// {"gen":"Gpp","mode2":-1}
Json to_json(const GenMode& g);
GenMode genmode_from_json(const Json& j);
// [{"gen":..,"mode2":..,"coeff":"..."}]
Json to_json(const AlgElement& x);
AlgElement algelement_from_json(const Json& j);

// [{"dpow":..,"odd":["Gp",...],"f0":j,"f0bar":k,"wt":{"level2","h","hbar"},"coeff":"..."}]
Json vector_to_json(const VermaModule& m, const VermaVector& v);
VermaVector vector_from_json(const VermaModule& m, const Json& j);

Json to_json(const WeightKey& w);
// basis vectors with their named descriptions and the is_singular certificate
Json to_json(const VermaModule& m, const SingularReport& r);
Json to_json(const LocusReport& r);

Json to_json(const RankResult& r);
Json to_json(const ClassRow& r);
std::string rows_markdown(const std::vector<ClassRow>& rows);

// terms {"d":..,"lambda":..,"mu":..,"gen":label or null,"coeff":".."}
Json to_json(const LambdaPoly& p, const std::vector<std::string>& labels);
Json to_json(const ConformalAlgebraSpec& r);
Json to_json(const ConformalModuleSpec& m);
Json to_json(const AxiomReport& r);
Json to_json(const AdjointReport& r);

Json to_json(const IdentityResult& r);

}  // namespace scf

#pragma once

#include <string>

#include "vanishforge/construct.hpp"

// vendored single-header json
#include "json.hpp"

namespace vanishforge {

using Json = nlohmann::ordered_json;

// Complex values travel as ["re","im"] decimal strings at full precision.
Json complex_to_json(const Complex& z);
Complex complex_from_json(const Json& j);

Json character_to_json(const DirichletCharacter& chi);
DirichletCharacter character_from_json(const Json& j);

Json weak_to_json(const WeakFunction& w);
WeakFunction weak_from_json(const Json& j);

Json qexpansion_to_json(const QExpansion& e);
QExpansion qexpansion_from_json(const Json& j);

Json tensor_to_json(const TensorElement& t);
TensorElement tensor_from_json(const Json& j);

Json combination_to_json(const EisensteinCombination& f);
EisensteinCombination combination_from_json(const Json& j);

Json certificate_to_json(const ConstructionCertificate& cert);
ConstructionCertificate certificate_from_json(const Json& j);

Json alpha_basis_to_json(long level, const std::vector<WeakFunction>& alphas,
                         const std::vector<std::vector<Complex>>& taylor_digests);

void write_json_file(const std::string& path, const Json& j);
Json read_json_file(const std::string& path);

}  // namespace vanishforge

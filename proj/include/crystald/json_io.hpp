#pragma once

#include <json.hpp>

#include "crystald/kn.hpp"
#include "crystald/lusztig.hpp"
#include "crystald/separation.hpp"
#include "crystald/spinor.hpp"

namespace crystald {

using json = nlohmann::json;

json to_json(const Column& c);
json to_json(const ProfileTableau& t);
json to_json(const KNTableau& t);
json to_json(const SpinorTuple& t);
json to_json(const VermaElement& v);
json to_json(const LusztigDatum& x);
json to_json(const CrystalGraph& g);

// All throw "parse-error" on malformed input.
Column column_from_json(const json& j);
ProfileTableau profile_from_json(const json& j);
KNTableau kn_from_json(const json& j);
SpinorTuple spinor_from_json(const json& j);
VermaElement verma_from_json(const json& j);
LusztigDatum datum_from_json(const json& j);

DominantWeight lambda_from_doubled(const std::vector<int>& d);

}  // namespace crystald

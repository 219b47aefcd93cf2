#pragma once

#include "json.hpp"

#include "exou/schur_weyl.hpp"
#include "exou/universality.hpp"

namespace exou {

using Json = nlohmann::json;

Json to_json(const Partition& p);
Json to_json(const PartitionClass& c);
Json to_json(const StandardTableau& t);
Json to_json(const RepMatrix& m);
Json to_json(const CheckReport& r);
Json to_json(const UniversalityVerdict& v);
Json to_json(const EfficiencyRow& row);
Json to_json(const PhysicalBasisMap& map, double coeff_cut = 1e-12);

Partition partition_from_json(const Json& j);

}  // namespace exou

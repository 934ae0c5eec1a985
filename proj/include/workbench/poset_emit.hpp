#pragma once

#include <json.hpp>

#include "workbench/k0_engine.hpp"
#include "workbench/parameters.hpp"

namespace wb {

using Json = nlohmann::ordered_json;

Json json_of(const RatVec& v);  // exact "p/q" strings
Json json_of(const BClass& b);
Json json_of(const RootDatum& d);
Json json_of(const StrataPoset& p);
Json json_of(const FiberOrbit& o);
Json json_of(const OrbitPoset& p);
Json json_of(const AtomicClass& c);
Json json_of(const K0Vector& v);
Json json_of(const Mat& m);  // row-major integer rows
Json json_of(const RootDatum& d, const StalkTable& t, StalkMode mode);
Json json_of(const GaloisMonomial& m);

std::string dot_of(const StrataPoset& p, const std::string& graph_name);
std::string dot_of(const OrbitPoset& p, const std::string& graph_name);

}  // namespace wb

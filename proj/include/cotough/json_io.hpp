#pragma once

#include <string>

#include "json.hpp"

#include "cotough/cograph.hpp"
#include "cotough/prism_walks.hpp"
#include "cotough/sbep.hpp"
#include "cotough/toughness.hpp"

namespace cotough {

// Certificate wire formats:
//   toughness:   {"toughness":"p/q"|"inf","tough_set":[ids]}  (tough_set only when finite)
//   cotree:      {"type":"join"|"union","children":[...]} with bare ints as leaves
//   p4:          {"p4":[a,b,c,d]}
//   sbep:        {"blocks":[{"type":"edge","vs":[u,v]}|{"type":"cycle","vs":[...]}]}
//   prism cycle: {"cycle":[[v,0|1],...]}
//   k-walk:      {"k":k,"walk":[...]}

nlohmann::json to_json(const ToughnessResult& r);
nlohmann::json to_json(const Cotree& t);
nlohmann::json to_json(const P4Witness& w);
nlohmann::json to_json(const SbepGraph& s);
nlohmann::json to_json(const PrismCycle& c);
nlohmann::json to_json(const KWalk& w);
nlohmann::json to_json(const VertexSet& s);

}  // namespace cotough

#pragma once

#include <json.hpp>

#include "rexosc/coherent.hpp"
#include "rexosc/combinatorics.hpp"
#include "rexosc/ladder.hpp"
#include "rexosc/multi_poly.hpp"

namespace rexosc {

using nlohmann::json;

json to_json(const Partition& p);
json to_json(const IndexSet& k);
json to_json(const MayaDiagram& m);
// Exact coefficient array, constant term first, entries "p/q".
json to_json(const Poly& p);
json to_json(const RationalFunction& f);
json to_json(const QuasiRational& f);
json to_json(const MultiPoly& p);
json to_json(const DiffOperator& d);
json to_json(const Intertwiner& a);

Partition partition_from_json(const json& j);
Poly poly_from_json(const json& j);

}  // namespace rexosc

#ifndef COVERALG_JSON_IO_HPP
#define COVERALG_JSON_IO_HPP

#include <json.hpp>

#include "coveralg/graph.hpp"
#include "coveralg/linquot.hpp"
#include "coveralg/monomial.hpp"
#include "coveralg/rees.hpp"

namespace coveralg {

using json = nlohmann::ordered_json;

json to_json(const Monomial& m);
json to_json(const MonomialIdeal& I);
json to_json(const SimpleGraph& g);
json to_json(const BettiTable& t);
json to_json(const ReesBinomial& b);
json to_json(const LinearTypeReport& r);
json to_json(const CiReport& r);

Monomial monomial_from_json(const json& j, RingPtr ring);
MonomialIdeal ideal_from_json(const json& j);
SimpleGraph graph_from_json(const json& j);

std::string betti_csv(const BettiTable& t);

}  // namespace coveralg

#endif

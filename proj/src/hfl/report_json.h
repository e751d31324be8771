#ifndef HFL_REPORT_JSON_H_
#define HFL_REPORT_JSON_H_

#include <json.hpp>

#include "hfl/folner.h"
#include "hfl/greedy.h"
#include "hfl/schreier.h"
#include "hfl/separator_game.h"

namespace hfl {

// Payload schemas. Rationals are "p/q" strings, vertex sets sorted integer
// arrays; key order is fixed so payloads diff byte-for-byte.
using Json = nlohmann::ordered_json;

Json ToJson(const VertexSet& s);
Json ToJson(const std::vector<VertexSet>& sets);
Json ToJson(const Rational& r);
Json ToJson(const SeparatorDistribution& d);
Json ToJson(const WeightVector& w);

Json SeparatorsJson(int k, bool minimal, const std::vector<VertexSet>& seps);
Json FolnerJson(const Rational& eps, int k,
                const std::optional<FolnerWitness>& witness);
Json GreedyJson(const GreedyResult& result);
Json GameJson(const GameReport& report);
Json MwuJson(const MwuReport& report);
Json UlaJson(const UlaProfile& profile);
Json SchreierJson(const SchreierGraph& s, bool planar);

}  // namespace hfl

#endif  // HFL_REPORT_JSON_H_

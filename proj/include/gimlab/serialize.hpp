#ifndef GIMLAB_SERIALIZE_HPP
#define GIMLAB_SERIALIZE_HPP

#include "gimlab/classifier.hpp"
#include "gimlab/loop.hpp"

#include <json.hpp>

namespace gimlab {

using json = nlohmann::ordered_json;

// Rationals are always strings ("p/q" or "p") so that nothing passes
// through floating point.
json to_json(const Rational& r);
Rational rational_from_json(const json& j);
json to_json(const std::vector<Rational>& v);
std::vector<Rational> rationals_from_json(const json& j);

json to_json(const RatMatrix& m);
RatMatrix matrix_from_json(const json& j);

json to_json(const GimMatrix& m);
GimMatrix gim_from_json(const json& j);

json to_json(const LoopElement& x);
LoopElement loop_from_json(const json& j);

json to_json(const EvalParams& p);
json to_json(const CaseConfig& c);
json to_json(const GeneratorImages& g);
json to_json(const RelationReport& r);
json to_json(const BasicRelationReport<LoopElement>& r);
json to_json(const BlockVerdict& b);
json to_json(const ClassificationReport& r);
json to_json(const QuotientSpec& q);

} // namespace gimlab

#endif // GIMLAB_SERIALIZE_HPP

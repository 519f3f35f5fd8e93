#include "gimlab/serialize.hpp"

#include <stdexcept>

namespace gimlab {

json to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const json& j) {
  if (!j.is_string()) throw std::invalid_argument("expected a rational as a \"p/q\" string, got " + j.dump());
  return Rational::from_string(j.get<std::string>());
}

json to_json(const std::vector<Rational>& v) {
  json out = json::array();
  for (const auto& r : v) out.push_back(to_json(r));
  return out;
}

std::vector<Rational> rationals_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected an array of rationals");
  std::vector<Rational> out;
  for (const auto& x : j) out.push_back(rational_from_json(x));
  return out;
}

json to_json(const RatMatrix& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(m(i, k).str());
    out.push_back(std::move(row));
  }
  return out;
}

RatMatrix matrix_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected a matrix as an array of rows");
  const std::size_t rows = j.size();
  const std::size_t cols = rows ? j[0].size() : 0;
  RatMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols) throw std::invalid_argument("matrix rows differ in length");
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = rational_from_json(j[i][k]);
  }
  return m;
}

json to_json(const GimMatrix& m) { return {{"n", m.n()}, {"entries", m.entries()}}; }

GimMatrix gim_from_json(const json& j) { return GimMatrix(j.at("entries").get<IntMatrix>()); }

json to_json(const LoopElement& x) {
  json terms = json::array();
  for (const auto& [exp, m] : x.terms()) terms.push_back({{"exp", exp}, {"matrix", to_json(m)}});
  return {{"terms", terms}, {"central", to_json(x.central())}};
}

LoopElement loop_from_json(const json& j) {
  LoopElement x;
  for (const auto& t : j.at("terms")) x.add_term(t.at("exp").get<int>(), matrix_from_json(t.at("matrix")));
  x.add_central(rational_from_json(j.at("central")));
  return x;
}

json to_json(const EvalParams& p) {
  return {{"n", p.n}, {"a", to_json(p.a_tuple)}, {"variant", to_string(p.sign_variant)}};
}

json to_json(const CaseConfig& c) { return {{"n", c.n}, {"case", c.case_id}, {"a", to_json(c.a_tuple)}}; }

json to_json(const GeneratorImages& g) {
  json X = json::array(), Y = json::array();
  for (const auto& m : g.X()) X.push_back(to_json(m));
  for (const auto& m : g.Y()) Y.push_back(to_json(m));
  return {{"n", g.n()}, {"ambient_size", g.ambient_size()}, {"X", X}, {"Y", Y}, {"warnings", g.warnings()}};
}

namespace {

template <class Elem>
json report_json(const BasicRelationReport<Elem>& r) {
  json failures = json::array();
  for (const auto& f : r.failures)
    failures.push_back(
        {{"relation", f.relation}, {"i", f.i}, {"j", f.j}, {"identity", f.identity}, {"residual", to_json(f.residual)}});
  return {{"passed", r.passed}, {"checked", r.checked}, {"failures", failures}};
}

} // namespace

json to_json(const RelationReport& r) { return report_json(r); }
json to_json(const BasicRelationReport<LoopElement>& r) { return report_json(r); }

json to_json(const BlockVerdict& b) {
  return {{"block_index", b.block_index},
          {"dimension", b.dimension},
          {"invariant_form_space_dim", b.invariant_form_space_dim},
          {"form_symmetry", to_string(b.form_symmetry)},
          {"verdict", to_string(b.verdict)}};
}

json to_json(const ClassificationReport& r) {
  json blocks = json::array();
  for (const auto& b : r.blocks) blocks.push_back(to_json(b));
  json pairings = json::array();
  for (const auto& [k, j] : r.pairings) pairings.push_back({k, j});
  return {{"n", r.n},
          {"a", to_json(r.a_tuple)},
          {"variant", to_string(r.sign_variant)},
          {"total_dimension", r.total_dimension},
          {"blocks", blocks},
          {"pairings", pairings},
          {"signature", {{"a", r.signature.a}, {"c", r.signature.c}, {"d", r.signature.d}}},
          {"semisimple", r.semisimple},
          {"killing_rank", r.killing_rank},
          {"center_dim", r.center_dim},
          {"inconsistencies", r.inconsistencies}};
}

json to_json(const QuotientSpec& q) { return {{"roots", to_json(q.roots)}, {"c", to_json(q.c)}, {"d", to_json(q.d)}}; }

} // namespace gimlab

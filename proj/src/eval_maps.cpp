#include "gimlab/eval_maps.hpp"

#include "gimlab/classical.hpp"

#include <algorithm>
#include <stdexcept>

namespace gimlab {

std::string to_string(SignVariant v) { return v == SignVariant::plus ? "plus" : "minus"; }

SignVariant sign_variant_from_string(const std::string& s) {
  if (s == "plus") return SignVariant::plus;
  if (s == "minus") return SignVariant::minus;
  throw std::invalid_argument("unknown sign variant '" + s + "' (expected plus|minus)");
}

std::string to_string(LemmaMode m) {
  switch (m) {
  case LemmaMode::lemma51: return "lemma51";
  case LemmaMode::lemma52: return "lemma52";
  case LemmaMode::lemma53: return "lemma53";
  case LemmaMode::lemma54: return "lemma54";
  }
  return "?";
}

LemmaMode lemma_mode_from_string(const std::string& s) {
  for (auto m : {LemmaMode::lemma51, LemmaMode::lemma52, LemmaMode::lemma53, LemmaMode::lemma54})
    if (to_string(m) == s) return m;
  throw std::invalid_argument("unknown lemma mode '" + s + "' (expected lemma51..lemma54)");
}

Rational separator(const Rational& a) { return Rational(2) + a + a.inverse(); }

namespace {

void require_rank(int n) {
  if (n < 3) throw std::invalid_argument("n must be >= 3");
}

bool is_unit(const Rational& a) { return a == Rational(1) || a == Rational(-1); }

// X_i = e_{alpha_i} - f_{alpha_{n+i}}, Y_i = f_{alpha_i} - e_{alpha_{n+i}}, i = 1..n,
// from 1-based root-vector tables of length 2n (slot 0 unused).
GeneratorImages fold_root_vectors(int n, const std::vector<RatMatrix>& e_alpha, const std::vector<RatMatrix>& f_alpha,
                                  std::vector<std::string> warnings) {
  const auto un = static_cast<std::size_t>(n);
  std::vector<RatMatrix> X, Y;
  for (std::size_t i = 1; i <= un; ++i) {
    X.push_back(e_alpha[i] - f_alpha[un + i]);
    Y.push_back(f_alpha[i] - e_alpha[un + i]);
  }
  return GeneratorImages(std::move(X), std::move(Y), std::move(warnings));
}

GeneratorImages a_component(int n, const Rational& a, std::vector<std::string> warnings) {
  const auto sys = chevalley_A(n);
  const auto low = lowest_root_vectors_A(sys, a);
  std::vector<RatMatrix> e_alpha{RatMatrix()}, f_alpha{RatMatrix()};
  e_alpha.insert(e_alpha.end(), sys.e.begin(), sys.e.end());
  f_alpha.insert(f_alpha.end(), sys.f.begin(), sys.f.end());
  e_alpha.push_back(low.e);
  f_alpha.push_back(low.f);
  return fold_root_vectors(n, e_alpha, f_alpha, std::move(warnings));
}

// C- or D-type component: alpha_{n+1..2n-1} vanish, and
// e_{alpha_{2n}} = f_n - F, f_{alpha_{2n}} = e_n - E with (E, F) the composite pair.
GeneratorImages folded_component(const ChevalleySystem& sys, const RootVectorPair& ef) {
  const auto un = static_cast<std::size_t>(sys.n);
  const RatMatrix zero = RatMatrix::zero(sys.ambient_size);
  std::vector<RatMatrix> e_alpha{RatMatrix()}, f_alpha{RatMatrix()};
  e_alpha.insert(e_alpha.end(), sys.e.begin(), sys.e.end());
  f_alpha.insert(f_alpha.end(), sys.f.begin(), sys.f.end());
  for (std::size_t i = un + 1; i < 2 * un; ++i) {
    e_alpha.push_back(zero);
    f_alpha.push_back(zero);
  }
  e_alpha.push_back(sys.f[un - 1] - ef.f);
  f_alpha.push_back(sys.e[un - 1] - ef.e);
  return fold_root_vectors(sys.n, e_alpha, f_alpha, {});
}

GeneratorImages c_component(int n) {
  const auto sys = chevalley_C(n);
  return folded_component(sys, composite_EF_C(sys));
}

GeneratorImages d_component(int n) {
  const auto sys = detail::chevalley_D_any(n);
  return folded_component(sys, composite_EF_D(sys));
}

} // namespace

GeneratorImages psi_a(int n, const Rational& a, SignVariant variant) {
  require_rank(n);
  if (a.is_zero()) throw std::domain_error("psi_a: a must be nonzero");
  const auto un = static_cast<std::size_t>(n);
  const std::size_t N = 2 * un;
  std::vector<RatMatrix> X, Y;
  for (std::size_t i = 1; i < un; ++i) {
    X.push_back(elementary(N, i, i + 1) - elementary(N, un + i + 1, un + i));
    Y.push_back(elementary(N, i + 1, i) - elementary(N, un + i, un + i + 1));
  }
  const Rational sign = variant == SignVariant::plus ? Rational(1) : Rational(-1);
  X.push_back(elementary(N, un, un + 1) + (sign * a.inverse()) * elementary(N, 1, N));
  Y.push_back(elementary(N, un + 1, un) + (sign * a) * elementary(N, N, 1));
  return GeneratorImages(std::move(X), std::move(Y));
}

std::vector<std::string> pairwise_violations(const std::vector<Rational>& a_tuple) {
  std::vector<std::string> out;
  for (std::size_t k = 0; k < a_tuple.size(); ++k)
    for (std::size_t j = k + 1; j < a_tuple.size(); ++j) {
      if (a_tuple[k] == a_tuple[j])
        out.push_back("a_" + std::to_string(k + 1) + " = a_" + std::to_string(j + 1) + " = " + a_tuple[k].str());
      else if (a_tuple[k] * a_tuple[j] == Rational(1))
        out.push_back("a_" + std::to_string(k + 1) + " * a_" + std::to_string(j + 1) + " = 1 (" + a_tuple[k].str() +
                      ", " + a_tuple[j].str() + ")");
    }
  return out;
}

GeneratorImages direct_sum(const std::vector<GeneratorImages>& parts) {
  if (parts.empty()) throw std::invalid_argument("direct_sum: no components");
  const int n = parts.front().n();
  std::vector<RatMatrix> X, Y;
  std::vector<std::string> warnings;
  for (const auto& p : parts) {
    if (p.n() != n) throw std::invalid_argument("direct_sum: components disagree on n");
    warnings.insert(warnings.end(), p.warnings().begin(), p.warnings().end());
  }
  for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i) {
    std::vector<RatMatrix> xs, ys;
    for (const auto& p : parts) {
      xs.push_back(p.X()[i]);
      ys.push_back(p.Y()[i]);
    }
    X.push_back(block_diagonal(xs));
    Y.push_back(block_diagonal(ys));
  }
  return GeneratorImages(std::move(X), std::move(Y), std::move(warnings));
}

GeneratorImages psi_tuple(const EvalParams& params) {
  if (params.a_tuple.empty()) throw std::invalid_argument("psi_tuple: empty tuple");
  std::vector<GeneratorImages> parts;
  for (const auto& a : params.a_tuple) parts.push_back(psi_a(params.n, a, params.sign_variant));
  auto sum = direct_sum(parts);
  auto warnings = pairwise_violations(params.a_tuple);
  if (warnings.empty()) return sum;
  return GeneratorImages(sum.X(), sum.Y(), std::move(warnings));
}

GeneratorImages lemma21_images(int n, const Rational& a) {
  require_rank(n);
  if (a.is_zero()) throw std::domain_error("lemma21_images: a must be nonzero");
  std::vector<std::string> warnings;
  if (is_unit(a)) warnings.push_back("a = " + a.str() + " violates the hypothesis a != +-1");
  return a_component(n, a, std::move(warnings));
}

GeneratorImages lemma22_images(int n) {
  const auto sys = chevalley_C(n);
  const auto ef = composite_EF_C(sys);
  std::vector<RatMatrix> X(sys.e.begin(), sys.e.end() - 1), Y(sys.f.begin(), sys.f.end() - 1);
  X.push_back(ef.e);
  Y.push_back(ef.f);
  return GeneratorImages(std::move(X), std::move(Y));
}

GeneratorImages lemma23_images(int n) {
  const auto sys = chevalley_D(n);
  const auto ef = composite_EF_D(sys);
  std::vector<RatMatrix> X(sys.e.begin(), sys.e.end() - 1), Y(sys.f.begin(), sys.f.end() - 1);
  X.push_back(ef.e);
  Y.push_back(ef.f);
  return GeneratorImages(std::move(X), std::move(Y));
}

GeneratorImages psi_big(const CaseConfig& config) {
  require_rank(config.n);
  const auto& a = config.a_tuple;
  std::vector<Rational> forced;
  switch (config.case_id) {
  case 1: break;
  case 2: forced = {Rational(1)}; break;
  case 3: forced = {Rational(-1)}; break;
  case 4: forced = {Rational(-1), Rational(1)}; break;
  default: throw std::invalid_argument("psi_big: case id must be 1..4");
  }
  if (a.size() < std::max<std::size_t>(forced.size(), 1))
    throw std::invalid_argument("psi_big: case " + std::to_string(config.case_id) + " needs at least " +
                                std::to_string(std::max<std::size_t>(forced.size(), 1)) + " tuple entries");
  for (std::size_t k = 0; k < forced.size(); ++k)
    if (a[k] != forced[k])
      throw std::invalid_argument("psi_big: case " + std::to_string(config.case_id) + " requires a_" +
                                  std::to_string(k + 1) + " = " + forced[k].str() + ", got " + a[k].str());
  for (const auto& x : a)
    if (x.is_zero()) throw std::domain_error("psi_big: tuple entries must be nonzero");

  std::vector<std::string> warnings = pairwise_violations(a);
  for (std::size_t k = forced.size(); k < a.size(); ++k)
    if (is_unit(a[k]))
      warnings.push_back("a_" + std::to_string(k + 1) + " = " + a[k].str() + " violates a_k != +-1");

  std::vector<GeneratorImages> parts;
  if (config.case_id == 3 || config.case_id == 4) parts.push_back(d_component(config.n));
  if (config.case_id == 2 || config.case_id == 4) parts.push_back(c_component(config.n));
  for (std::size_t k = forced.size(); k < a.size(); ++k) parts.push_back(a_component(config.n, a[k], {}));
  auto sum = direct_sum(parts);
  return GeneratorImages(sum.X(), sum.Y(), std::move(warnings));
}

bool tuple_admissible(const EvalParams& params, LemmaMode mode) {
  const auto& a = params.a_tuple;
  if (a.empty()) return false;
  for (const auto& x : a)
    if (x.is_zero()) return false;
  for (std::size_t k = 0; k < a.size(); ++k)
    for (std::size_t j = k + 1; j < a.size(); ++j)
      if (a[k] == a[j] || a[k] * a[j] == Rational(1)) return false;

  const Rational one(1), minus_one(-1);
  auto none_from = [&](std::size_t start, const Rational& v) {
    for (std::size_t k = start; k < a.size(); ++k)
      if (a[k] == v) return false;
    return true;
  };
  switch (mode) {
  case LemmaMode::lemma51: return none_from(0, one) && none_from(0, minus_one);
  case LemmaMode::lemma52: return a[0] == one && none_from(1, minus_one);
  case LemmaMode::lemma53: return a.size() >= 2 && a[0] == minus_one && a[1] == one;
  case LemmaMode::lemma54: return a[0] == minus_one && none_from(1, one);
  }
  return false;
}

} // namespace gimlab

#include "gimlab/loop.hpp"

#include "gimlab/classical.hpp"

#include <algorithm>
#include <stdexcept>

namespace gimlab {

namespace {

void check_traceless(const RatMatrix& x, std::size_t n) {
  if (!x.is_square() || x.rows() != n) throw std::invalid_argument("LoopElement: coefficient has the wrong size");
  if (!x.trace().is_zero()) throw std::invalid_argument("LoopElement: coefficients must be traceless");
}

} // namespace

LoopElement LoopElement::monomial(const RatMatrix& x, int exp) {
  LoopElement out(x.rows());
  out.add_term(exp, x);
  return out;
}

LoopElement LoopElement::central_element(std::size_t size, const Rational& s) {
  LoopElement out(size);
  out.central_ = s;
  return out;
}

RatMatrix LoopElement::coefficient(int exp) const {
  auto it = terms_.find(exp);
  return it == terms_.end() ? RatMatrix::zero(n_) : it->second;
}

void LoopElement::adopt_size(std::size_t n) {
  if (n_ == 0 && terms_.empty()) n_ = n;
  else if (n != n_ && n != 0) throw std::invalid_argument("LoopElement: operands live over different sl_N");
}

LoopElement& LoopElement::add_term(int exp, const RatMatrix& x) {
  adopt_size(x.rows());
  check_traceless(x, n_);
  if (x.is_zero()) return *this;
  auto [it, inserted] = terms_.try_emplace(exp, x);
  if (!inserted) {
    it->second += x;
    if (it->second.is_zero()) terms_.erase(it);
  }
  return *this;
}

LoopElement& LoopElement::add_central(const Rational& s) {
  central_ += s;
  return *this;
}

LoopElement& LoopElement::operator+=(const LoopElement& o) {
  adopt_size(o.n_);
  for (const auto& [m, x] : o.terms_) {
    auto [it, inserted] = terms_.try_emplace(m, x);
    if (!inserted) {
      it->second += x;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  central_ += o.central_;
  return *this;
}

LoopElement& LoopElement::operator-=(const LoopElement& o) {
  LoopElement neg = o;
  neg *= Rational(-1);
  return *this += neg;
}

LoopElement& LoopElement::operator*=(const Rational& s) {
  if (s.is_zero()) {
    terms_.clear();
    central_ = Rational();
    return *this;
  }
  for (auto& [m, x] : terms_) x *= s;
  central_ *= s;
  return *this;
}

Rational trace_form(const RatMatrix& x, const RatMatrix& y) {
  if (x.cols() != y.rows() || x.rows() != y.cols()) throw std::invalid_argument("trace_form: size mismatch");
  Rational t;
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t k = 0; k < x.cols(); ++k)
      if (!x(i, k).is_zero()) t.add_mul(x(i, k), y(k, i));
  return t;
}

LoopElement loop_bracket(const LoopElement& x, const LoopElement& y) {
  if (x.size() != y.size() && !x.terms().empty() && !y.terms().empty())
    throw std::invalid_argument("loop_bracket: operands live over different sl_N");
  LoopElement out(std::max(x.size(), y.size()));
  for (const auto& [m, a] : x.terms())
    for (const auto& [k, b] : y.terms()) {
      out.add_term(m + k, bracket(a, b));
      if (m + k == 0 && m != 0) out.add_central(Rational(m) * trace_form(a, b));
    }
  return out;
}

AffineGenerators fixed_point_generators(int n, SignVariant variant) {
  if (n < 3) throw std::invalid_argument("fixed_point_generators: n must be >= 3");
  const auto un = static_cast<std::size_t>(n);
  const std::size_t N = 2 * un;
  const Rational s = variant == SignVariant::plus ? Rational(1) : Rational(-1);
  AffineGenerators g;
  for (std::size_t i = 1; i < un; ++i) {
    g.e.push_back(LoopElement::monomial(elementary(N, i, i + 1) - elementary(N, un + i + 1, un + i), 0));
    g.f.push_back(LoopElement::monomial(elementary(N, i + 1, i) - elementary(N, un + i, un + i + 1), 0));
  }
  LoopElement en = LoopElement::monomial(elementary(N, un, un + 1), 0);
  en.add_term(-1, s * elementary(N, 1, N));
  LoopElement fn = LoopElement::monomial(elementary(N, un + 1, un), 0);
  fn.add_term(1, s * elementary(N, N, 1));
  g.e.push_back(std::move(en));
  g.f.push_back(std::move(fn));
  for (std::size_t i = 0; i < un; ++i) g.h.push_back(loop_bracket(g.e[i], g.f[i]));
  return g;
}

XiChain xi_chain(int n) {
  const auto g = fixed_point_generators(n, SignVariant::plus);
  const auto un = static_cast<std::size_t>(n);
  XiChain out;

  LoopElement c1 = g.e[un - 1];
  for (std::size_t i = un - 1; i-- > 0;) c1 = loop_bracket(g.e[i], c1);

  LoopElement c2 = g.f[un - 2];
  for (std::size_t i = un - 2; i-- > 0;) c2 = loop_bracket(c2, g.f[i]);

  LoopElement c3 = loop_bracket(c2, c1);
  LoopElement c4 = loop_bracket(c3, g.f[un - 1]);
  out.xi = c4 - g.h[un - 1];
  out.steps = {std::move(c1), std::move(c2), std::move(c3), std::move(c4)};
  return out;
}

namespace {

LoopElement raised(int n, int m, std::size_t idx, const Rational& scale) {
  if (m < 0) throw std::invalid_argument("xi_raised: m must be >= 0");
  const auto g = fixed_point_generators(n, SignVariant::plus);
  const auto xi = xi_chain(n).xi;
  LoopElement x = g.e[idx];
  for (int s = 0; s < m; ++s) {
    x = loop_bracket(xi, x);
    x *= scale;
  }
  return loop_bracket(x, g.f[idx]);
}

} // namespace

LoopElement xi_raised_last(int n, int m) { return raised(n, m, static_cast<std::size_t>(n - 1), Rational(1, 2)); }

LoopElement xi_raised_first(int n, int m) { return raised(n, m, 0, Rational(1)); }

namespace {

using Poly = std::vector<Rational>; // increasing degree

void trim(Poly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

Poly times_linear(const Poly& p, const Rational& root) { // p * (t - root)
  Poly out(p.size() + 1);
  for (std::size_t i = 0; i < p.size(); ++i) {
    out[i + 1] += p[i];
    out[i].sub_mul(root, p[i]);
  }
  return out;
}

} // namespace

std::vector<Rational> partial_fraction_sum(const QuotientSpec& q) {
  Poly total;
  for (std::size_t i = 0; i < q.roots.size(); ++i) {
    Poly p{Rational(1)};
    for (std::size_t j = 0; j < q.roots.size(); ++j)
      if (j != i) p = times_linear(p, q.roots[j]);
    if (total.size() < p.size()) total.resize(p.size());
    for (std::size_t k = 0; k < p.size(); ++k) total[k].add_mul(q.c[i], p[k]);
  }
  trim(total);
  return total;
}

QuotientSpec make_quotient(const std::vector<Rational>& roots) {
  if (roots.empty()) throw std::invalid_argument("make_quotient: need at least one root");
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (roots[i].is_zero()) throw std::invalid_argument("make_quotient: roots must be nonzero");
    for (std::size_t j = i + 1; j < roots.size(); ++j)
      if (roots[i] == roots[j]) throw std::invalid_argument("make_quotient: repeated root " + roots[i].str());
  }
  QuotientSpec q;
  q.roots = roots;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    Rational d(1);
    for (std::size_t j = 0; j < roots.size(); ++j)
      if (j != i) d *= roots[i] - roots[j];
    q.d.push_back(d);
    q.c.push_back(d.inverse());
  }
  const auto sum = partial_fraction_sum(q);
  if (sum.size() != 1 || !sum[0].is_one()) throw std::logic_error("make_quotient: partial fractions do not sum to 1");
  return q;
}

RatMatrix evaluate_at(const LoopElement& x, const Rational& a) {
  if (a.is_zero()) throw std::domain_error("evaluate_at: a must be nonzero");
  RatMatrix out = RatMatrix::zero(x.size());
  for (const auto& [m, c] : x.terms()) out += pow(a, m) * c;
  return out;
}

std::vector<RatMatrix> eval_quotient_map(const LoopElement& x, const QuotientSpec& q) {
  std::vector<RatMatrix> out;
  for (std::size_t k = 0; k < q.roots.size(); ++k) {
    RatMatrix comp = RatMatrix::zero(x.size());
    const Rational w = q.c[k] * q.d[k];
    for (const auto& [m, c] : x.terms()) comp += (w * pow(q.roots[k], m)) * c;
    out.push_back(std::move(comp));
  }
  return out;
}

LoopElement sigma(const LoopElement& x) {
  if (!x.central().is_zero()) throw std::invalid_argument("sigma: defined on the centerless loop algebra only");
  LoopElement out(x.size());
  for (const auto& [m, c] : x.terms()) out.add_term(-m, c);
  return out;
}

} // namespace gimlab

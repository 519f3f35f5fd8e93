#ifndef GIMLAB_LOOP_HPP
#define GIMLAB_LOOP_HPP

#include "gimlab/eval_maps.hpp"

#include <map>
#include <utility>
#include <vector>

namespace gimlab {

/// Element of sl_N (x) Q[t, t^-1] (+) Q c: finitely many Laurent
/// coefficients x_m (traceless N x N, zero coefficients never stored) plus a
/// central coefficient.
class LoopElement {
public:
  explicit LoopElement(std::size_t size = 0) : n_(size) {}

  /// x (x) t^exp. Throws std::invalid_argument if x is not square or not traceless.
  static LoopElement monomial(const RatMatrix& x, int exp);
  /// s c in the algebra over sl_size.
  static LoopElement central_element(std::size_t size, const Rational& s);

  std::size_t size() const { return n_; }
  const std::map<int, RatMatrix>& terms() const { return terms_; }
  const Rational& central() const { return central_; }
  /// Coefficient of t^exp (zero matrix when absent).
  RatMatrix coefficient(int exp) const;
  bool is_zero() const { return terms_.empty() && central_.is_zero(); }

  /// Adds x (x) t^exp, validating size and trace.
  LoopElement& add_term(int exp, const RatMatrix& x);
  LoopElement& add_central(const Rational& s);

  LoopElement& operator+=(const LoopElement& o);
  LoopElement& operator-=(const LoopElement& o);
  LoopElement& operator*=(const Rational& s);

  friend LoopElement operator+(LoopElement a, const LoopElement& b) { a += b; return a; }
  friend LoopElement operator-(LoopElement a, const LoopElement& b) { a -= b; return a; }
  friend LoopElement operator*(const Rational& s, LoopElement a) { a *= s; return a; }

  friend bool operator==(const LoopElement& a, const LoopElement& b) {
    return a.n_ == b.n_ && a.central_ == b.central_ && a.terms_ == b.terms_;
  }

private:
  void adopt_size(std::size_t n);

  std::size_t n_;
  std::map<int, RatMatrix> terms_;
  Rational central_;
};

/// Invariant form on sl_N used by the central extension: (x, y) = tr(xy).
Rational trace_form(const RatMatrix& x, const RatMatrix& y);

/// [x (x) t^m, y (x) t^k] = [x, y] (x) t^{m+k} + m delta_{m,-k} (x, y) c, extended
/// bilinearly; c is central.
LoopElement loop_bracket(const LoopElement& x, const LoopElement& y);

struct AffineGenerators {
  std::vector<LoopElement> e; // e[i-1] = hat e_i
  std::vector<LoopElement> f;
  std::vector<LoopElement> h; // [hat e_i, hat f_i]
};

/// Fixed-point generators in the affine algebra over sl_{2n}:
///   hat e_i = E_{alpha_i} (x) 1 - E_{-alpha_{n+i}} (x) 1                 (i < n)
///   hat e_n = E_{alpha_n} (x) 1 +- E_{alpha_flat} (x) t^{-1}
/// and dually for hat f, where alpha_flat = alpha_1 + ... + alpha_{2n-1}
/// (E_{alpha_flat} = E_{1,2n}).
AffineGenerators fixed_point_generators(int n, SignVariant variant = SignVariant::plus);

/// The bracket chain isolating Xi from the fixed-point generators (plus variant):
///   steps[0] = [hat e_1, ... [hat e_{n-1}, hat e_n] ...]
///   steps[1] = [... [hat f_{n-1}, hat f_{n-2}], ... hat f_1]
///   steps[2] = [steps[1], steps[0]]
///   steps[3] = [steps[2], hat f_n]
///   xi       = steps[3] - hat h_n = H_n (x) t^{-1} + (H_1 + ... + H_{2n-1}) (x) t
struct XiChain {
  LoopElement xi;
  std::vector<LoopElement> steps;
};

XiChain xi_chain(int n);

/// [((1/2) ad Xi)^m (hat e_n), hat f_n].
LoopElement xi_raised_last(int n, int m);
/// [(ad Xi)^m (hat e_1), hat f_1].
LoopElement xi_raised_first(int n, int m);

/// Quotient of the loop algebra by theta*(t) = prod (t - a_i) with distinct
/// nonzero roots, together with the partial-fraction data
/// d_i = prod_{j != i} (a_i - a_j) and c_i with sum_i c_i theta*(t)/(t - a_i) = 1.
struct QuotientSpec {
  std::vector<Rational> roots;
  std::vector<Rational> c;
  std::vector<Rational> d;
};

/// Throws std::invalid_argument on an empty, repeated or zero root, and
/// std::logic_error if the partial-fraction identity fails to verify.
QuotientSpec make_quotient(const std::vector<Rational>& roots);

/// sum_i c_i theta*(t)/(t - a_i) as coefficients in increasing degree.
std::vector<Rational> partial_fraction_sum(const QuotientSpec& q);

/// x -> sum_m a^m x_m (the central part is dropped).
RatMatrix evaluate_at(const LoopElement& x, const Rational& a);

/// Canonical map to the direct sum of K copies of sl_N: the k-th component
/// is sum_m c_k d_k a_k^m x_m; the central element maps to 0.
std::vector<RatMatrix> eval_quotient_map(const LoopElement& x, const QuotientSpec& q);

/// x (x) t^m -> x (x) t^{-m} on the centerless loop algebra. Throws
/// std::invalid_argument if x has a central component.
LoopElement sigma(const LoopElement& x);

} // namespace gimlab

#endif // GIMLAB_LOOP_HPP

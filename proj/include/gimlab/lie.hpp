#ifndef GIMLAB_LIE_HPP
#define GIMLAB_LIE_HPP

#include "gimlab/linalg.hpp"

#include <span>
#include <vector>

namespace gimlab {

/// Matrix commutator xy - yx. Throws std::invalid_argument on size mismatch.
RatMatrix bracket(const RatMatrix& x, const RatMatrix& y);

/// (ad x)^k (y); k = 0 returns y.
RatMatrix ad_power(const RatMatrix& x, unsigned k, const RatMatrix& y);

/// A bracket-closed subspace of gl_N, stored as the canonical echelon basis
/// of the flattened (row-major) matrices, together with the generators it
/// was built from.
class SubalgebraBasis {
public:
  SubalgebraBasis() = default;
  /// The caller vouches that span(basis) is closed under the bracket; every
  /// generator must lie in the span (checked). verify_closed() re-checks.
  SubalgebraBasis(std::size_t ambient_size, EchelonBasis basis, std::vector<RatMatrix> generators);

  std::size_t ambient_size() const { return n_; }
  std::size_t dimension() const { return basis_.size(); }
  const EchelonBasis& basis() const { return basis_; }
  const std::vector<RatMatrix>& generators() const { return generators_; }

  RatMatrix element(std::size_t i) const;
  std::vector<RatMatrix> elements() const;

  bool contains(const RatMatrix& x) const;
  /// Coordinates of x in the basis. Throws std::invalid_argument if x is outside.
  Vector coordinates(const RatMatrix& x) const;

  /// Brackets every pair of basis elements and checks the span absorbs it.
  bool verify_closed() const;

  friend bool operator==(const SubalgebraBasis& a, const SubalgebraBasis& b) {
    return a.n_ == b.n_ && a.basis_ == b.basis_;
  }

private:
  std::size_t n_ = 0;
  EchelonBasis basis_;
  std::vector<RatMatrix> generators_;
};

/// Smallest bracket-closed subspace containing the generators.
///
/// Worklist closure: every newly inserted element is bracketed against all
/// elements inserted before it, so each unordered pair is visited once and the
/// loop performs at most D(D-1)/2 brackets for a final dimension D. The result
/// is the canonical echelon basis of the span, hence independent of generator
/// order. An empty list gives the zero subalgebra of gl_0.
SubalgebraBasis lie_closure(std::span<const RatMatrix> generators);

/// Structure matrix of ad x restricted to s: column j holds the coordinates
/// of [x, b_j]. x must lie in s.
RatMatrix ad_matrix(const SubalgebraBasis& s, const RatMatrix& x);

/// Killing form K(b_i, b_j) = tr(ad b_i o ad b_j), ad taken inside s.
RatMatrix killing_form(const SubalgebraBasis& s);

/// Basis (as coordinate vectors in s) of the center of s.
std::vector<Vector> center(const SubalgebraBasis& s);

/// Image of s under X -> (size x size diagonal block of X at offset). For a
/// block-diagonal algebra this is the projection homomorphism, and the result
/// is re-closed to certify it.
SubalgebraBasis project_block(const SubalgebraBasis& s, std::size_t offset, std::size_t size);

} // namespace gimlab

#endif // GIMLAB_LIE_HPP

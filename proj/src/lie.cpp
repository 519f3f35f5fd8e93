#include "gimlab/lie.hpp"

#include <stdexcept>

namespace gimlab {

namespace {

void require_same_square(const RatMatrix& x, const RatMatrix& y, const char* what) {
  if (!x.is_square() || !y.is_square() || x.rows() != y.rows())
    throw std::invalid_argument(std::string(what) + ": operands must be square of equal size");
}

struct Triplet {
  std::size_t row, col;
  Rational val;
};

} // namespace

RatMatrix bracket(const RatMatrix& x, const RatMatrix& y) {
  require_same_square(x, y, "bracket");
  RatMatrix r = x * y;
  r -= y * x;
  return r;
}

RatMatrix ad_power(const RatMatrix& x, unsigned k, const RatMatrix& y) {
  require_same_square(x, y, "ad_power");
  RatMatrix r = y;
  for (unsigned i = 0; i < k && !r.is_zero(); ++i) r = bracket(x, r);
  return r;
}

// ---------------------------------------------------------------------------

SubalgebraBasis::SubalgebraBasis(std::size_t ambient_size, EchelonBasis basis, std::vector<RatMatrix> generators)
    : n_(ambient_size), basis_(std::move(basis)), generators_(std::move(generators)) {
  if (basis_.ambient_dim() != n_ * n_) throw std::invalid_argument("SubalgebraBasis: basis dimension is not N^2");
  for (const auto& g : generators_)
    if (g.rows() != n_ || g.cols() != n_ || !basis_.contains(g.flatten()))
      throw std::invalid_argument("SubalgebraBasis: generator outside the span");
}

RatMatrix SubalgebraBasis::element(std::size_t i) const {
  const Vector v = basis_.row(i);
  return RatMatrix::from_vector(v, n_, n_);
}

std::vector<RatMatrix> SubalgebraBasis::elements() const {
  std::vector<RatMatrix> out;
  out.reserve(dimension());
  for (std::size_t i = 0; i < dimension(); ++i) out.push_back(element(i));
  return out;
}

bool SubalgebraBasis::contains(const RatMatrix& x) const {
  if (x.rows() != n_ || x.cols() != n_) return false;
  return basis_.contains(x.flatten());
}

Vector SubalgebraBasis::coordinates(const RatMatrix& x) const {
  if (x.rows() != n_ || x.cols() != n_) throw std::invalid_argument("SubalgebraBasis::coordinates: size mismatch");
  auto c = basis_.coordinates(x.flatten());
  if (!c) throw std::invalid_argument("SubalgebraBasis::coordinates: element outside the subalgebra");
  return *std::move(c);
}

bool SubalgebraBasis::verify_closed() const {
  const auto els = elements();
  for (std::size_t i = 0; i < els.size(); ++i)
    for (std::size_t j = i + 1; j < els.size(); ++j)
      if (!basis_.contains(bracket(els[i], els[j]).flatten())) return false;
  return true;
}

SubalgebraBasis lie_closure(std::span<const RatMatrix> generators) {
  if (generators.empty()) return SubalgebraBasis(0, EchelonBasis(0), {});
  const std::size_t n = generators.front().rows();
  for (const auto& g : generators)
    if (!g.is_square() || g.rows() != n) throw std::invalid_argument("lie_closure: generators must be square of equal size");

  const std::size_t bound = n * n;
  EchelonBasis basis(bound);
  std::vector<RatMatrix> elems;
  auto offer = [&](const RatMatrix& x) {
    Vector residual = basis.reduce(x.flatten());
    // The residual spans the same new direction as x and is sparser.
    if (basis.insert_reduced(residual)) elems.push_back(RatMatrix::from_vector(residual, n, n));
    if (basis.size() > bound) throw std::logic_error("lie_closure: dimension exceeded N^2");
  };

  for (const auto& g : generators) offer(g);
  for (std::size_t q = 0; q < elems.size(); ++q)
    for (std::size_t p = 0; p < q; ++p) offer(bracket(elems[p], elems[q]));

  return SubalgebraBasis(n, std::move(basis), std::vector<RatMatrix>(generators.begin(), generators.end()));
}

RatMatrix ad_matrix(const SubalgebraBasis& s, const RatMatrix& x) {
  const std::size_t d = s.dimension();
  RatMatrix ad(d, d);
  for (std::size_t j = 0; j < d; ++j) {
    const Vector c = s.coordinates(bracket(x, s.element(j)));
    for (std::size_t k = 0; k < d; ++k) ad(k, j) = c[k];
  }
  return ad;
}

namespace {

std::vector<std::vector<Triplet>> sparse_ad_matrices(const SubalgebraBasis& s) {
  const std::size_t d = s.dimension();
  const auto els = s.elements();
  std::vector<std::vector<Triplet>> ad(d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      if (i == j) continue;
      // [b_i, b_j] = -[b_j, b_i]; reuse the earlier column.
      if (j < i) {
        for (const auto& t : ad[j])
          if (t.col == i) ad[i].push_back({t.row, j, -t.val});
        continue;
      }
      const Vector c = s.coordinates(bracket(els[i], els[j]));
      for (std::size_t k = 0; k < d; ++k)
        if (!c[k].is_zero()) ad[i].push_back({k, j, c[k]});
    }
  }
  return ad;
}

} // namespace

RatMatrix killing_form(const SubalgebraBasis& s) {
  const std::size_t d = s.dimension();
  const auto ad = sparse_ad_matrices(s);
  RatMatrix k(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    RatMatrix dense(d, d);
    for (const auto& t : ad[i]) dense(t.row, t.col) = t.val;
    for (std::size_t j = i; j < d; ++j) {
      Rational acc;
      for (const auto& t : ad[j]) {
        const Rational& a = dense(t.col, t.row);
        if (!a.is_zero()) acc.add_mul(a, t.val);
      }
      k(i, j) = acc;
      k(j, i) = acc;
    }
  }
  return k;
}

std::vector<Vector> center(const SubalgebraBasis& s) {
  const std::size_t d = s.dimension();
  const auto ad = sparse_ad_matrices(s);
  // x = sum_j c_j b_j is central iff sum_j c_j [b_i, b_j] = 0 for every i,
  // i.e. c lies in the common kernel of the ad_i.
  EchelonBasis constraints(d);
  for (std::size_t i = 0; i < d; ++i) {
    std::vector<Vector> rows;
    for (const auto& t : ad[i]) {
      if (rows.size() <= t.row) rows.resize(t.row + 1, Vector(d));
      rows[t.row][t.col] = t.val;
    }
    for (const auto& r : rows) constraints.insert(r);
    if (constraints.size() == d) break;
  }
  return constraints.null_space();
}

SubalgebraBasis project_block(const SubalgebraBasis& s, std::size_t offset, std::size_t size) {
  std::vector<RatMatrix> images;
  images.reserve(s.dimension());
  for (const auto& x : s.elements()) {
    RatMatrix b = diagonal_block(x, offset, size);
    if (!b.is_zero()) images.push_back(std::move(b));
  }
  if (images.empty()) return SubalgebraBasis(size, EchelonBasis(size * size), {});
  return lie_closure(images);
}

} // namespace gimlab

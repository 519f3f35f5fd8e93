#include "gimlab/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace gimlab {

RrefResult rref(const RatMatrix& m) {
  RrefResult out{m, 0, {}};
  RatMatrix& a = out.matrix;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a(p, c).is_zero()) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(a(p, j), a(r, j));
    const Rational inv = a(r, c).inverse();
    for (std::size_t j = c; j < cols; ++j)
      if (!a(r, j).is_zero()) a(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      const Rational f = a(i, c);
      for (std::size_t j = c; j < cols; ++j)
        if (!a(r, j).is_zero()) a(i, j).sub_mul(f, a(r, j));
    }
    out.pivot_cols.push_back(c);
    ++r;
  }
  out.rank = r;
  return out;
}

std::size_t rank(const RatMatrix& m) { return rref(m).rank; }

std::vector<Vector> kernel_basis(const RatMatrix& m) {
  const auto red = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : red.pivot_cols) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector x(m.cols());
    x[f] = 1;
    for (std::size_t r = 0; r < red.rank; ++r) x[red.pivot_cols[r]] = -red.matrix(r, f);
    basis.push_back(std::move(x));
  }
  return basis;
}

std::optional<RatMatrix> inverse(const RatMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("inverse: matrix not square");
  const std::size_t n = m.rows();
  RatMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  const auto red = rref(aug);
  if (red.rank < n || red.pivot_cols[n - 1] != n - 1) return std::nullopt;
  RatMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = red.matrix(i, n + j);
  return inv;
}

// ---------------------------------------------------------------------------

std::vector<std::size_t> EchelonBasis::pivot_cols() const {
  std::vector<std::size_t> p;
  p.reserve(rows_.size());
  for (const auto& r : rows_) p.push_back(r.idx.front());
  return p;
}

Vector EchelonBasis::row(std::size_t r) const {
  Vector v(dim_);
  const auto& row = rows_.at(r);
  for (std::size_t k = 0; k < row.idx.size(); ++k) v[row.idx[k]] = row.val[k];
  return v;
}

std::vector<Vector> EchelonBasis::rows() const {
  std::vector<Vector> out;
  out.reserve(rows_.size());
  for (std::size_t r = 0; r < rows_.size(); ++r) out.push_back(row(r));
  return out;
}

Vector EchelonBasis::reduce(Vector v) const {
  if (v.size() != dim_) throw std::invalid_argument("EchelonBasis: dimension mismatch");
  for (const auto& row : rows_) {
    const std::size_t p = row.idx.front();
    if (v[p].is_zero()) continue;
    const Rational f = v[p];
    for (std::size_t k = 0; k < row.idx.size(); ++k) v[row.idx[k]].sub_mul(f, row.val[k]);
  }
  return v;
}

bool EchelonBasis::contains(const Vector& v) const {
  const Vector r = reduce(v);
  return std::all_of(r.begin(), r.end(), [](const Rational& x) { return x.is_zero(); });
}

std::optional<Vector> EchelonBasis::coordinates(const Vector& v) const {
  if (!contains(v)) return std::nullopt;
  Vector c;
  c.reserve(rows_.size());
  for (const auto& row : rows_) c.push_back(v[row.idx.front()]);
  return c;
}

bool EchelonBasis::insert(const Vector& v) { return insert_reduced(reduce(v)); }

bool EchelonBasis::insert_reduced(Vector w) {
  if (w.size() != dim_) throw std::invalid_argument("EchelonBasis: dimension mismatch");
  std::size_t p = 0;
  while (p < dim_ && w[p].is_zero()) ++p;
  if (p == dim_) return false;

  SparseRow fresh;
  const Rational inv = w[p].inverse();
  for (std::size_t c = p; c < dim_; ++c) {
    if (w[c].is_zero()) continue;
    fresh.idx.push_back(c);
    fresh.val.push_back(w[c] * inv);
  }

  // Clear column p from the existing rows.
  for (auto& row : rows_) {
    auto it = std::lower_bound(row.idx.begin(), row.idx.end(), p);
    if (it == row.idx.end() || *it != p) continue;
    const Rational g = row.val[static_cast<std::size_t>(it - row.idx.begin())];
    SparseRow merged;
    std::size_t a = 0, b = 0;
    while (a < row.idx.size() || b < fresh.idx.size()) {
      if (b == fresh.idx.size() || (a < row.idx.size() && row.idx[a] < fresh.idx[b])) {
        merged.idx.push_back(row.idx[a]);
        merged.val.push_back(row.val[a]);
        ++a;
      } else if (a == row.idx.size() || fresh.idx[b] < row.idx[a]) {
        merged.idx.push_back(fresh.idx[b]);
        merged.val.push_back(-(g * fresh.val[b]));
        ++b;
      } else {
        Rational x = row.val[a];
        x.sub_mul(g, fresh.val[b]);
        if (!x.is_zero()) {
          merged.idx.push_back(row.idx[a]);
          merged.val.push_back(std::move(x));
        }
        ++a;
        ++b;
      }
    }
    row = std::move(merged);
  }

  auto pos = std::lower_bound(rows_.begin(), rows_.end(), p,
                              [](const SparseRow& r, std::size_t col) { return r.idx.front() < col; });
  rows_.insert(pos, std::move(fresh));
  return true;
}

std::vector<Vector> EchelonBasis::null_space() const {
  std::vector<bool> is_pivot(dim_, false);
  for (const auto& r : rows_) is_pivot[r.idx.front()] = true;
  std::vector<Vector> out;
  for (std::size_t f = 0; f < dim_; ++f) {
    if (is_pivot[f]) continue;
    Vector x(dim_);
    x[f] = 1;
    for (const auto& r : rows_) {
      auto it = std::lower_bound(r.idx.begin(), r.idx.end(), f);
      if (it != r.idx.end() && *it == f) x[r.idx.front()] = -r.val[static_cast<std::size_t>(it - r.idx.begin())];
    }
    out.push_back(std::move(x));
  }
  return out;
}

bool operator==(const EchelonBasis& a, const EchelonBasis& b) { return a.dim_ == b.dim_ && a.rows_ == b.rows_; }

std::pair<EchelonBasis, bool> insert_into_span(EchelonBasis basis, const Vector& v) {
  const bool added = basis.insert(v);
  return {std::move(basis), added};
}

} // namespace gimlab

#ifndef GIMLAB_MATRIX_HPP
#define GIMLAB_MATRIX_HPP

#include "gimlab/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <vector>

namespace gimlab {

using Vector = std::vector<Rational>;

/// Dense row-major matrix of exact rationals. Indices are 0-based.
class RatMatrix {
public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols);
  /// Row-major literal, e.g. RatMatrix({{1, 2}, {3, 4}}). Rows must agree in length.
  RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RatMatrix zero(std::size_t n) { return RatMatrix(n, n); }
  static RatMatrix identity(std::size_t n);
  /// Inverse of flatten(): reshapes a length rows*cols vector.
  static RatMatrix from_vector(std::span<const Rational> v, std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool empty() const { return data_.empty(); }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const Rational> data() const { return data_; }
  /// Row-major copy of the entries.
  Vector flatten() const { return data_; }

  bool is_zero() const;
  Rational trace() const;
  RatMatrix transpose() const;
  std::size_t nonzeros() const;

  RatMatrix& operator+=(const RatMatrix& o);
  RatMatrix& operator-=(const RatMatrix& o);
  RatMatrix& operator*=(const Rational& s);

  friend RatMatrix operator+(RatMatrix a, const RatMatrix& b) { a += b; return a; }
  friend RatMatrix operator-(RatMatrix a, const RatMatrix& b) { a -= b; return a; }
  friend RatMatrix operator-(RatMatrix a) { a *= Rational(-1); return a; }
  friend RatMatrix operator*(const Rational& s, RatMatrix a) { a *= s; return a; }
  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);

  friend bool operator==(const RatMatrix& a, const RatMatrix& b) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Vector data_;
};

/// Places the given square blocks along the diagonal.
RatMatrix block_diagonal(std::span<const RatMatrix> blocks);
/// The size x size diagonal block starting at (offset, offset).
RatMatrix diagonal_block(const RatMatrix& m, std::size_t offset, std::size_t size);

std::ostream& operator<<(std::ostream& os, const RatMatrix& m);

} // namespace gimlab

#endif // GIMLAB_MATRIX_HPP

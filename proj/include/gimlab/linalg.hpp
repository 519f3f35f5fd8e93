#ifndef GIMLAB_LINALG_HPP
#define GIMLAB_LINALG_HPP

#include "gimlab/matrix.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace gimlab {

struct RrefResult {
  RatMatrix matrix;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_cols;
};

/// Reduced row-echelon form by exact Gauss-Jordan elimination.
RrefResult rref(const RatMatrix& m);

std::size_t rank(const RatMatrix& m);

/// Basis of the right null space {v : m v = 0}, one vector per free column
/// (the free variable set to 1, the others to 0). Empty iff rank == cols.
std::vector<Vector> kernel_basis(const RatMatrix& m);

/// Inverse of a square matrix, or nullopt when singular.
std::optional<RatMatrix> inverse(const RatMatrix& m);

/// Reduced row-echelon basis of a subspace of Q^d, grown one vector at a time.
///
/// Rows are kept fully reduced (each pivot is 1 and its column is zero in
/// every other row), so the basis is a canonical function of the span and
/// membership is a single reduction pass. Rows are stored sparsely.
class EchelonBasis {
public:
  explicit EchelonBasis(std::size_t ambient_dim = 0) : dim_(ambient_dim) {}

  std::size_t ambient_dim() const { return dim_; }
  std::size_t size() const { return rows_.size(); }
  bool empty() const { return rows_.empty(); }

  /// Pivot columns in strictly increasing order; pivot_cols()[r] belongs to row r.
  std::vector<std::size_t> pivot_cols() const;
  Vector row(std::size_t r) const;
  std::vector<Vector> rows() const;

  /// v minus its projection onto the span along the pivot coordinates;
  /// zero iff v lies in the span. Throws std::invalid_argument on length mismatch.
  Vector reduce(Vector v) const;
  bool contains(const Vector& v) const;
  /// Coefficients of v in the row basis, or nullopt if v is outside the span.
  std::optional<Vector> coordinates(const Vector& v) const;

  /// Adds v to the span. Returns true iff the span grew.
  bool insert(const Vector& v);
  /// As insert(), for a vector already known to be reduced against this basis.
  bool insert_reduced(Vector v);

  /// Basis of {x : r . x = 0 for every row r}, i.e. the null space of the
  /// matrix whose rows are this basis.
  std::vector<Vector> null_space() const;

  friend bool operator==(const EchelonBasis& a, const EchelonBasis& b);

private:
  struct SparseRow {
    std::vector<std::size_t> idx; // strictly increasing; idx.front() is the pivot
    std::vector<Rational> val;    // val.front() == 1
    friend bool operator==(const SparseRow&, const SparseRow&) = default;
  };

  std::size_t dim_;
  std::vector<SparseRow> rows_; // sorted by pivot
};

/// Functional form of EchelonBasis::insert: returns (enlarged basis, was_new).
std::pair<EchelonBasis, bool> insert_into_span(EchelonBasis basis, const Vector& v);

} // namespace gimlab

#endif // GIMLAB_LINALG_HPP

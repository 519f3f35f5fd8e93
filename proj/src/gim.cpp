#include "gimlab/gim.hpp"

#include <stdexcept>

namespace gimlab {

bool is_gim(const IntMatrix& m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("is_gim: matrix is not square");
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i][i] != 2) return false;
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if ((m[i][j] < 0) != (m[j][i] < 0)) return false;
      if ((m[i][j] > 0) != (m[j][i] > 0)) return false;
    }
  }
  return true;
}

GimMatrix::GimMatrix(IntMatrix entries) : m_(std::move(entries)) {
  if (!is_gim(m_)) throw std::invalid_argument("GimMatrix: entries violate the GIM conditions");
}

GimMatrix gim_matrix_mn(int n) {
  if (n < 3) throw std::invalid_argument("gim_matrix_mn: n must be >= 3");
  const auto un = static_cast<std::size_t>(n);
  IntMatrix m(un, std::vector<int>(un, 0));
  for (std::size_t i = 0; i < un; ++i) {
    m[i][i] = 2;
    if (i + 1 < un) m[i][i + 1] = m[i + 1][i] = -1;
  }
  m[0][un - 1] = m[un - 1][0] = 1;
  return GimMatrix(std::move(m));
}

GeneratorImages::GeneratorImages(std::vector<RatMatrix> X, std::vector<RatMatrix> Y, std::vector<std::string> warnings)
    : X_(std::move(X)), Y_(std::move(Y)), warnings_(std::move(warnings)) {
  if (X_.size() != Y_.size() || X_.empty())
    throw std::invalid_argument("GeneratorImages: need equally many, and at least one, X and Y images");
  N_ = X_.front().rows();
  for (std::size_t i = 0; i < X_.size(); ++i) {
    for (const auto* m : {&X_[i], &Y_[i]})
      if (!m->is_square() || m->rows() != N_) throw std::invalid_argument("GeneratorImages: images must all be N x N");
    H_.push_back(bracket(X_[i], Y_[i]));
  }
}

std::vector<RatMatrix> GeneratorImages::all_generators() const {
  std::vector<RatMatrix> g = X_;
  g.insert(g.end(), Y_.begin(), Y_.end());
  return g;
}

RelationReport check_gim_relations(const GimMatrix& M, const GeneratorImages& g) {
  if (M.n() != g.n()) throw std::invalid_argument("check_gim_relations: size mismatch between M and the images");
  return check_relations(M, g.X(), g.Y(), g.H(), [](const RatMatrix& a, const RatMatrix& b) { return bracket(a, b); });
}

} // namespace gimlab

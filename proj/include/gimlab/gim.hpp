#ifndef GIMLAB_GIM_HPP
#define GIMLAB_GIM_HPP

#include "gimlab/lie.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace gimlab {

using IntMatrix = std::vector<std::vector<int>>;

/// True iff m is a generalized intersection matrix: 2 on the diagonal and,
/// off the diagonal, m_ij < 0 <=> m_ji < 0 and m_ij > 0 <=> m_ji > 0.
/// Throws std::invalid_argument if m is not square.
bool is_gim(const IntMatrix& m);

class GimMatrix {
public:
  /// Throws std::invalid_argument unless is_gim(entries).
  explicit GimMatrix(IntMatrix entries);

  int n() const { return static_cast<int>(m_.size()); }
  /// 1-based access m_{i,j}.
  int operator()(int i, int j) const { return m_.at(static_cast<std::size_t>(i - 1)).at(static_cast<std::size_t>(j - 1)); }
  const IntMatrix& entries() const { return m_; }

  friend bool operator==(const GimMatrix&, const GimMatrix&) = default;

private:
  IntMatrix m_;
};

/// M_n: 2 on the diagonal, -1 on the first off-diagonals, m_{1,n} = m_{n,1} = 1.
GimMatrix gim_matrix_mn(int n);

/// Candidate images (X_i, Y_i) of (e_i, f_i), i = 1..n, with H_i = [X_i, Y_i]
/// always derived. Stored 0-based: X()[i-1] is the image of e_i.
class GeneratorImages {
public:
  GeneratorImages(std::vector<RatMatrix> X, std::vector<RatMatrix> Y, std::vector<std::string> warnings = {});

  int n() const { return static_cast<int>(X_.size()); }
  std::size_t ambient_size() const { return N_; }
  const std::vector<RatMatrix>& X() const { return X_; }
  const std::vector<RatMatrix>& Y() const { return Y_; }
  const std::vector<RatMatrix>& H() const { return H_; }
  /// Generator hypotheses the caller chose to violate (the images are still built).
  const std::vector<std::string>& warnings() const { return warnings_; }

  /// X_1..X_n, Y_1..Y_n in that order.
  std::vector<RatMatrix> all_generators() const;

private:
  std::size_t N_ = 0;
  std::vector<RatMatrix> X_, Y_, H_;
  std::vector<std::string> warnings_;
};

template <class Elem>
struct BasicRelationFailure {
  std::string relation; // "R1", "R2" or "R3"
  int i = 0;            // 1-based
  int j = 0;
  std::string identity; // which identity, e.g. "[H_i,X_j] - m_ij X_j"
  Elem residual;        // must be zero
};

template <class Elem>
struct BasicRelationReport {
  bool passed = true;
  std::size_t checked = 0;
  std::vector<BasicRelationFailure<Elem>> failures;
};

using RelationFailure = BasicRelationFailure<RatMatrix>;
using RelationReport = BasicRelationReport<RatMatrix>;

/// Checks every relation of the GIM presentation against explicit images.
///
/// Elem needs +=, -=, scalar *= Rational and is_zero(); br(a, b) is the bracket.
/// For all i, j:
///   R1: [H_i, X_j] = m_ij X_j, [H_i, Y_j] = -m_ij Y_j   ([X_i, Y_i] = H_i by construction)
///   R2 (i != j, m_ij <= 0): [X_i, Y_j] = 0 = [Y_i, X_j],
///       (ad X_i)^{1-m_ij} X_j = 0 = (ad Y_i)^{1-m_ij} Y_j
///   R3 (i != j, m_ij > 0): [X_i, X_j] = 0 = [Y_i, Y_j],
///       (ad X_i)^{1+m_ij} Y_j = 0 = (ad Y_i)^{1+m_ij} X_j
/// Failures are ordered by (relation, i, j).
template <class Elem, class Bracket>
BasicRelationReport<Elem> check_relations(const GimMatrix& M, const std::vector<Elem>& X, const std::vector<Elem>& Y,
                                          const std::vector<Elem>& H, Bracket br) {
  const int n = M.n();
  if (static_cast<int>(X.size()) != n || static_cast<int>(Y.size()) != n || static_cast<int>(H.size()) != n)
    throw std::invalid_argument("check_relations: number of generator images does not match the GIM matrix");

  BasicRelationReport<Elem> report;
  std::vector<BasicRelationFailure<Elem>> r1, r2, r3;
  auto expect_zero = [&](std::vector<BasicRelationFailure<Elem>>& bucket, const char* rel, int i, int j,
                         const char* identity, Elem value) {
    ++report.checked;
    if (!value.is_zero()) bucket.push_back({rel, i, j, identity, std::move(value)});
  };
  auto ad_pow = [&](const Elem& x, int k, Elem y) {
    for (int s = 0; s < k && !y.is_zero(); ++s) y = br(x, y);
    return y;
  };

  for (int i = 1; i <= n; ++i) {
    const auto ui = static_cast<std::size_t>(i - 1);
    for (int j = 1; j <= n; ++j) {
      const auto uj = static_cast<std::size_t>(j - 1);
      const int m = M(i, j);

      Elem he = br(H[ui], X[uj]);
      Elem sx = X[uj];
      sx *= Rational(m);
      he -= sx;
      expect_zero(r1, "R1", i, j, "[H_i,X_j] - m_ij X_j", std::move(he));
      Elem hf = br(H[ui], Y[uj]);
      Elem sy = Y[uj];
      sy *= Rational(m);
      hf += sy;
      expect_zero(r1, "R1", i, j, "[H_i,Y_j] + m_ij Y_j", std::move(hf));

      if (i == j) continue;
      if (m <= 0) {
        expect_zero(r2, "R2", i, j, "[X_i,Y_j]", br(X[ui], Y[uj]));
        expect_zero(r2, "R2", i, j, "[Y_i,X_j]", br(Y[ui], X[uj]));
        expect_zero(r2, "R2", i, j, "(ad X_i)^(1-m_ij) X_j", ad_pow(X[ui], 1 - m, X[uj]));
        expect_zero(r2, "R2", i, j, "(ad Y_i)^(1-m_ij) Y_j", ad_pow(Y[ui], 1 - m, Y[uj]));
      } else {
        expect_zero(r3, "R3", i, j, "[X_i,X_j]", br(X[ui], X[uj]));
        expect_zero(r3, "R3", i, j, "[Y_i,Y_j]", br(Y[ui], Y[uj]));
        expect_zero(r3, "R3", i, j, "(ad X_i)^(1+m_ij) Y_j", ad_pow(X[ui], 1 + m, Y[uj]));
        expect_zero(r3, "R3", i, j, "(ad Y_i)^(1+m_ij) X_j", ad_pow(Y[ui], 1 + m, X[uj]));
      }
    }
  }
  for (auto* bucket : {&r1, &r2, &r3})
    for (auto& f : *bucket) report.failures.push_back(std::move(f));
  report.passed = report.failures.empty();
  return report;
}

/// check_relations over matrix images. Throws std::invalid_argument if M.n() != g.n().
RelationReport check_gim_relations(const GimMatrix& M, const GeneratorImages& g);

} // namespace gimlab

#endif // GIMLAB_GIM_HPP

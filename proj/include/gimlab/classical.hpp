#ifndef GIMLAB_CLASSICAL_HPP
#define GIMLAB_CLASSICAL_HPP

#include "gimlab/matrix.hpp"

#include <string>
#include <vector>

namespace gimlab {

enum class Family { A, C, D };

std::string to_string(Family f);

/// Chevalley generators of a classical algebra inside gl_{2n}.
///
/// e[i-1], f[i-1], h[i-1] are e_{alpha_i}, f_{alpha_i}, h_{alpha_i} for the
/// node labeling used throughout the library:
///   A_{2n-1}: nodes 1..2n-1 in a line;
///   C_n:      nodes 1..n-1 in a line, long node n double-bonded to node 1;
///   D_n:      nodes 1..n-1 in a line, node n bonded to node 2.
struct ChevalleySystem {
  Family family = Family::A;
  int n = 0;
  std::size_t ambient_size = 0;
  std::vector<RatMatrix> e;
  std::vector<RatMatrix> f;
  std::vector<RatMatrix> h; // h[i] = [e[i], f[i]]

  std::size_t rank() const { return e.size(); }
};

/// Matrix unit E_{i,j} in gl_N, 1-based indices. Throws std::out_of_range.
RatMatrix elementary(std::size_t N, std::size_t i, std::size_t j);

/// Cartan matrix A with [h_i, e_j] = A(i,j) e_j for the labeling above
/// (0-based storage). Rank is 2n-1 for A and n for C, D.
std::vector<std::vector<int>> cartan_matrix(Family family, int n);

/// sl_{2n}: e_i = E_{i,i+1}, f_i = E_{i+1,i}, i = 1..2n-1. Requires n >= 3.
ChevalleySystem chevalley_A(int n);

/// sp_{2n} preserving symplectic_form(n): e_i = E_{i,i+1} - E_{n+i+1,n+i},
/// f_i = its transpose (i < n), e_n = E_{n+1,1}, f_n = E_{1,n+1}. Requires n >= 3.
ChevalleySystem chevalley_C(int n);

/// so_{2n} preserving split_symmetric_form(n): e_i, f_i (i < n) as for C,
/// e_n = E_{n+1,2} - E_{n+2,1}, f_n = E_{2,n+1} - E_{1,n+2}. Requires n >= 4
/// (D_3 coincides with A_3).
ChevalleySystem chevalley_D(int n);

/// [[0, I], [-I, 0]] in gl_{2n}.
RatMatrix symplectic_form(int n);
/// [[0, I], [I, 0]] in gl_{2n}.
RatMatrix split_symmetric_form(int n);

struct RootVectorPair {
  RatMatrix e;
  RatMatrix f;
};

/// e_{alpha_{2n}} = a [f_{2n-1}, ... [f_2, f_1] ...] and
/// f_{alpha_{2n}} = a^{-1} [... [e_1, e_2] ..., e_{2n-1}] for an A-system.
/// In the standard realization these are a E_{2n,1} and a^{-1} E_{1,2n}.
/// Throws std::domain_error for a = 0, std::invalid_argument for a non-A system.
RootVectorPair lowest_root_vectors_A(const ChevalleySystem& sys, const Rational& a);

/// E = [f_{n-1}, ... [f_1, f_n] ...], F = [... [e_n, e_1] ..., e_{n-1}] in C_n.
RootVectorPair composite_EF_C(const ChevalleySystem& sys);

/// E = [f_{n-1}, ... [f_2, f_n] ...], F = [... [e_n, e_2] ..., e_{n-1}] in D_n.
RootVectorPair composite_EF_D(const ChevalleySystem& sys);

/// Right-nested [xs[k-1], ... [xs[1], xs[0]] ...] (innermost first).
RatMatrix right_nested(const std::vector<RatMatrix>& innermost_first);
/// Left-nested [... [xs[0], xs[1]] ..., xs[k-1]].
RatMatrix left_nested(const std::vector<RatMatrix>& xs);

namespace detail {
/// chevalley_D without the n >= 4 restriction; n = 3 realizes D_3 = A_3 as so_6.
ChevalleySystem chevalley_D_any(int n);
} // namespace detail

} // namespace gimlab

#endif // GIMLAB_CLASSICAL_HPP

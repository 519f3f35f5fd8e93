#include "gimlab/classical.hpp"

#include "gimlab/lie.hpp"

#include <stdexcept>

namespace gimlab {

std::string to_string(Family f) {
  switch (f) {
  case Family::A: return "A";
  case Family::C: return "C";
  case Family::D: return "D";
  }
  return "?";
}

RatMatrix elementary(std::size_t N, std::size_t i, std::size_t j) {
  if (i < 1 || j < 1 || i > N || j > N) throw std::out_of_range("elementary: index out of range");
  RatMatrix m(N, N);
  m(i - 1, j - 1) = 1;
  return m;
}

std::vector<std::vector<int>> cartan_matrix(Family family, int n) {
  const int r = family == Family::A ? 2 * n - 1 : n;
  std::vector<std::vector<int>> a(static_cast<std::size_t>(r), std::vector<int>(static_cast<std::size_t>(r), 0));
  auto set = [&](int i, int j, int v) { a[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = v; };
  for (int i = 1; i <= r; ++i) set(i, i, 2);
  const int chain = family == Family::A ? r : n - 1;
  for (int i = 1; i < chain; ++i) {
    set(i, i + 1, -1);
    set(i + 1, i, -1);
  }
  if (family == Family::C) {
    set(1, n, -2);
    set(n, 1, -1);
  } else if (family == Family::D) {
    set(2, n, -1);
    set(n, 2, -1);
  }
  return a;
}

namespace {

void fill_h(ChevalleySystem& sys) {
  sys.h.clear();
  for (std::size_t i = 0; i < sys.e.size(); ++i) sys.h.push_back(bracket(sys.e[i], sys.f[i]));
}

// e_i = E_{i,i+1} - E_{n+i+1,n+i}, f_i = E_{i+1,i} - E_{n+i,n+i+1}, i = 1..n-1:
// the sl_n block diag(A, -A^T) shared by the C and D realizations.
void fill_levi_part(ChevalleySystem& sys) {
  const auto N = static_cast<std::size_t>(2 * sys.n);
  const auto n = static_cast<std::size_t>(sys.n);
  for (std::size_t i = 1; i < n; ++i) {
    sys.e.push_back(elementary(N, i, i + 1) - elementary(N, n + i + 1, n + i));
    sys.f.push_back(elementary(N, i + 1, i) - elementary(N, n + i, n + i + 1));
  }
}

void require_family(const ChevalleySystem& sys, Family f, const char* what) {
  if (sys.family != f) throw std::invalid_argument(std::string(what) + ": wrong family " + to_string(sys.family));
}

} // namespace

ChevalleySystem chevalley_A(int n) {
  if (n < 3) throw std::invalid_argument("chevalley_A: n must be >= 3");
  ChevalleySystem sys{Family::A, n, static_cast<std::size_t>(2 * n), {}, {}, {}};
  const auto N = sys.ambient_size;
  for (std::size_t i = 1; i < N; ++i) {
    sys.e.push_back(elementary(N, i, i + 1));
    sys.f.push_back(elementary(N, i + 1, i));
  }
  fill_h(sys);
  return sys;
}

ChevalleySystem chevalley_C(int n) {
  if (n < 3) throw std::invalid_argument("chevalley_C: n must be >= 3");
  ChevalleySystem sys{Family::C, n, static_cast<std::size_t>(2 * n), {}, {}, {}};
  fill_levi_part(sys);
  const auto N = sys.ambient_size;
  const auto un = static_cast<std::size_t>(n);
  sys.e.push_back(elementary(N, un + 1, 1));
  sys.f.push_back(elementary(N, 1, un + 1));
  fill_h(sys);
  return sys;
}

ChevalleySystem detail::chevalley_D_any(int n) {
  if (n < 3) throw std::invalid_argument("chevalley_D: n must be >= 3");
  ChevalleySystem sys{Family::D, n, static_cast<std::size_t>(2 * n), {}, {}, {}};
  fill_levi_part(sys);
  const auto N = sys.ambient_size;
  const auto un = static_cast<std::size_t>(n);
  sys.e.push_back(elementary(N, un + 1, 2) - elementary(N, un + 2, 1));
  sys.f.push_back(elementary(N, 2, un + 1) - elementary(N, 1, un + 2));
  fill_h(sys);
  return sys;
}

ChevalleySystem chevalley_D(int n) {
  if (n < 4) throw std::invalid_argument("chevalley_D: n must be >= 4");
  return detail::chevalley_D_any(n);
}

RatMatrix symplectic_form(int n) {
  const auto un = static_cast<std::size_t>(n);
  RatMatrix j(2 * un, 2 * un);
  for (std::size_t i = 0; i < un; ++i) {
    j(i, un + i) = 1;
    j(un + i, i) = -1;
  }
  return j;
}

RatMatrix split_symmetric_form(int n) {
  const auto un = static_cast<std::size_t>(n);
  RatMatrix j(2 * un, 2 * un);
  for (std::size_t i = 0; i < un; ++i) {
    j(i, un + i) = 1;
    j(un + i, i) = 1;
  }
  return j;
}

RatMatrix right_nested(const std::vector<RatMatrix>& innermost_first) {
  if (innermost_first.empty()) throw std::invalid_argument("right_nested: empty list");
  RatMatrix acc = innermost_first.front();
  for (std::size_t k = 1; k < innermost_first.size(); ++k) acc = bracket(innermost_first[k], acc);
  return acc;
}

RatMatrix left_nested(const std::vector<RatMatrix>& xs) {
  if (xs.empty()) throw std::invalid_argument("left_nested: empty list");
  RatMatrix acc = xs.front();
  for (std::size_t k = 1; k < xs.size(); ++k) acc = bracket(acc, xs[k]);
  return acc;
}

RootVectorPair lowest_root_vectors_A(const ChevalleySystem& sys, const Rational& a) {
  require_family(sys, Family::A, "lowest_root_vectors_A");
  if (a.is_zero()) throw std::domain_error("lowest_root_vectors_A: a must be nonzero");
  // f_1 innermost, then f_2, ..., f_{2n-1}; e_1, e_2, ... bracketed from the left.
  RatMatrix e = right_nested(sys.f);
  RatMatrix f = left_nested(sys.e);
  e *= a;
  f *= a.inverse();
  return {std::move(e), std::move(f)};
}

RootVectorPair composite_EF_C(const ChevalleySystem& sys) {
  require_family(sys, Family::C, "composite_EF_C");
  const auto n = static_cast<std::size_t>(sys.n);
  std::vector<RatMatrix> fs{sys.f[n - 1]};
  std::vector<RatMatrix> es{sys.e[n - 1]};
  for (std::size_t i = 0; i + 1 < n; ++i) {
    fs.push_back(sys.f[i]);
    es.push_back(sys.e[i]);
  }
  return {right_nested(fs), left_nested(es)};
}

RootVectorPair composite_EF_D(const ChevalleySystem& sys) {
  require_family(sys, Family::D, "composite_EF_D");
  const auto n = static_cast<std::size_t>(sys.n);
  std::vector<RatMatrix> fs{sys.f[n - 1]};
  std::vector<RatMatrix> es{sys.e[n - 1]};
  for (std::size_t i = 1; i + 1 < n; ++i) {
    fs.push_back(sys.f[i]);
    es.push_back(sys.e[i]);
  }
  return {right_nested(fs), left_nested(es)};
}

} // namespace gimlab

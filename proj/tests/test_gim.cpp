#include "gimlab/gim.hpp"

#include "gimlab/eval_maps.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace gimlab;
using oracle::E;

TEST_CASE("GIM predicate") {
  CHECK(is_gim({{2, -1}, {-1, 2}}));
  CHECK(is_gim({{2, 1}, {3, 2}}));
  CHECK(is_gim({{2, -2}, {-1, 2}}));
  CHECK_FALSE(is_gim({{2, -1}, {1, 2}}));
  CHECK_FALSE(is_gim({{2, 0}, {-1, 2}}));
  CHECK_FALSE(is_gim({{1, 0}, {0, 2}}));
  CHECK(is_gim({}));
  CHECK_THROWS_AS(is_gim({{2, 0}, {0}}), std::invalid_argument);
  CHECK_THROWS_AS(GimMatrix({{2, -1}, {1, 2}}), std::invalid_argument);
}

TEST_CASE("M_n") {
  const auto m = gim_matrix_mn(4);
  CHECK(m.n() == 4);
  const IntMatrix want{{2, -1, 0, 1}, {-1, 2, -1, 0}, {0, -1, 2, -1}, {1, 0, -1, 2}};
  CHECK(m.entries() == want);
  CHECK(m(1, 4) == 1);
  CHECK(m(4, 1) == 1);
  CHECK(gim_matrix_mn(3).entries() == IntMatrix{{2, -1, 1}, {-1, 2, -1}, {1, -1, 2}});
  CHECK_THROWS(gim_matrix_mn(2));
}

TEST_CASE("generator images derive H") {
  const GeneratorImages g({E(2, 1, 2)}, {E(2, 2, 1)});
  CHECK(g.n() == 1);
  CHECK(g.ambient_size() == 2);
  CHECK(g.H()[0] == E(2, 1, 1) - E(2, 2, 2));
  CHECK(g.all_generators().size() == 2);
  CHECK_THROWS_AS(GeneratorImages({E(2, 1, 2)}, {}), std::invalid_argument);
  CHECK_THROWS_AS(GeneratorImages({E(2, 1, 2)}, {E(3, 2, 1)}), std::invalid_argument);
}

TEST_CASE("sl_2 triple satisfies the relations of the 1x1 matrix (2)") {
  const GeneratorImages g({E(2, 1, 2)}, {E(2, 2, 1)});
  const auto r = check_gim_relations(GimMatrix(IntMatrix{{2}}), g);
  CHECK(r.passed);
  CHECK(r.checked == 2);
  CHECK_THROWS_AS(check_gim_relations(gim_matrix_mn(3), g), std::invalid_argument);
}

TEST_CASE("A_2 Chevalley generators satisfy the Cartan-type relations") {
  const GeneratorImages g({E(3, 1, 2), E(3, 2, 3)}, {E(3, 2, 1), E(3, 3, 2)});
  const auto r = check_gim_relations(GimMatrix({{2, -1}, {-1, 2}}), g);
  CHECK(r.passed);
  // 2x2 R1 pairs (8) plus 4 R2 identities for each ordered off-diagonal pair
  CHECK(r.checked == 8 + 8);
}

TEST_CASE("wrong matrix gives ordered failures with residuals") {
  const GeneratorImages g({E(3, 1, 2), E(3, 2, 3)}, {E(3, 2, 1), E(3, 3, 2)});
  // the A_2 images do not satisfy the positive off-diagonal pattern
  const auto r = check_gim_relations(GimMatrix({{2, 1}, {1, 2}}), g);
  CHECK_FALSE(r.passed);
  REQUIRE_FALSE(r.failures.empty());
  for (std::size_t k = 1; k < r.failures.size(); ++k) {
    const auto& a = r.failures[k - 1];
    const auto& b = r.failures[k];
    CHECK(std::tie(a.relation, a.i, a.j) <= std::tie(b.relation, b.i, b.j));
  }
  CHECK(r.failures.front().relation == "R1");
  for (const auto& f : r.failures) CHECK_FALSE(f.residual.is_zero());
}

TEST_CASE("scaling a generator breaks R1 only where expected") {
  const auto base = psi_a(3, Rational(2));
  auto X = base.X();
  X[0] *= Rational(2);
  const GeneratorImages bad(X, base.Y());
  const auto r = check_gim_relations(gim_matrix_mn(3), bad);
  CHECK_FALSE(r.passed);
  bool saw_h1 = false;
  for (const auto& f : r.failures) saw_h1 = saw_h1 || (f.relation == "R1" && f.i == 1);
  CHECK(saw_h1);
}

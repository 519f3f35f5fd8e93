// Randomized identities, each on at least 200 instances with fixed seeds.
#include "gimlab/classifier.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>

using namespace gimlab;

TEST_CASE("matrix bracket: antisymmetry and Jacobi") {
  std::mt19937 rng(101);
  for (int t = 0; t < 250; ++t) {
    const auto x = oracle::random_matrix(rng, 4), y = oracle::random_matrix(rng, 4), z = oracle::random_matrix(rng, 4);
    CHECK(bracket(x, y) == Rational(-1) * bracket(y, x));
    CHECK((bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y))).is_zero());
  }
}

TEST_CASE("loop bracket: antisymmetry and Jacobi including the cocycle") {
  std::mt19937 rng(202);
  for (int t = 0; t < 250; ++t) {
    const auto x = oracle::random_loop(rng, 3), y = oracle::random_loop(rng, 3), z = oracle::random_loop(rng, 3);
    CHECK(loop_bracket(x, y) == Rational(-1) * loop_bracket(y, x));
    const auto jac = loop_bracket(x, loop_bracket(y, z)) + loop_bracket(y, loop_bracket(z, x)) +
                     loop_bracket(z, loop_bracket(x, y));
    CHECK(jac.is_zero());
  }
}

TEST_CASE("quotient evaluation is a homomorphism on central-free elements") {
  std::mt19937 rng(303);
  const auto q = make_quotient({Rational(2), Rational(-3), Rational(1, 5)});
  for (int t = 0; t < 200; ++t) {
    const auto x = oracle::random_loop(rng, 3, false), y = oracle::random_loop(rng, 3, false);
    const auto lhs = eval_quotient_map(loop_bracket(x, y), q);
    const auto ex = eval_quotient_map(x, q), ey = eval_quotient_map(y, q);
    for (std::size_t k = 0; k < lhs.size(); ++k) CHECK(lhs[k] == bracket(ex[k], ey[k]));
  }
}

TEST_CASE("sigma is an involution intertwining evaluation at a and 1/a") {
  std::mt19937 rng(404);
  for (int t = 0; t < 200; ++t) {
    const auto x = oracle::random_loop(rng, 4, false);
    Rational a = oracle::small_rational(rng);
    if (a.is_zero()) a = Rational(7, 3);
    CHECK(sigma(sigma(x)) == x);
    CHECK(evaluate_at(sigma(x), a) == evaluate_at(x, a.inverse()));
    // automorphism of the loop algebra once the cocycle term is dropped
    const auto y = oracle::random_loop(rng, 4, false);
    auto lhs = loop_bracket(x, y), rhs = loop_bracket(sigma(x), sigma(y));
    CHECK(lhs.central() == -rhs.central());
    lhs.add_central(-lhs.central());
    rhs.add_central(-rhs.central());
    CHECK(sigma(lhs) == rhs);
  }
}

TEST_CASE("closure is idempotent and independent of generator order") {
  std::mt19937 rng(505);
  for (int t = 0; t < 200; ++t) {
    const std::size_t N = 3 + static_cast<std::size_t>(t % 2);
    std::vector<RatMatrix> gens;
    const int k = 2 + t % 2;
    for (int i = 0; i < k; ++i) gens.push_back(oracle::random_matrix(rng, N, 0.25));
    const auto s = lie_closure(gens);
    const auto again = lie_closure(s.elements());
    // all-zero draws give the zero subalgebra, whose element list carries no size
    CHECK(again.dimension() == s.dimension());
    if (s.dimension() > 0) CHECK(again == s);
    std::shuffle(gens.begin(), gens.end(), rng);
    gens.push_back(Rational(3) * gens.front());
    CHECK(lie_closure(gens) == s);
    CHECK(s.verify_closed());
  }
}

TEST_CASE("classification is invariant under conjugation") {
  std::mt19937 rng(606);
  const std::vector<Rational> as{Rational(1), Rational(-1), Rational(2), Rational(-3, 2)};
  for (int t = 0; t < 200; ++t) {
    const int n = 3;
    const Rational a = as[static_cast<std::size_t>(t) % as.size()];
    const auto gens = psi_a(n, a).all_generators();
    const auto base = classify_block(lie_closure(gens), n);

    const auto P = oracle::random_unimodular(rng, 6);
    const auto Pinv = *inverse(P);
    std::vector<RatMatrix> conj;
    for (const auto& g : gens) conj.push_back(P * g * Pinv);
    const auto v = classify_block(lie_closure(conj), n);
    CHECK(v.verdict == base.verdict);
    CHECK(v.dimension == base.dimension);
    CHECK(v.form_symmetry == base.form_symmetry);
  }
}

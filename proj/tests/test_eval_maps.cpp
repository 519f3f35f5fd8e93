#include "gimlab/eval_maps.hpp"

#include "gimlab/classical.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace gimlab;
using oracle::E;

TEST_CASE("psi_a images entry by entry, n = 3") {
  const auto g = psi_a(3, Rational(2));
  CHECK(g.n() == 3);
  CHECK(g.ambient_size() == 6);
  CHECK(g.X()[0] == E(6, 1, 2) - E(6, 5, 4));
  CHECK(g.Y()[0] == E(6, 2, 1) - E(6, 4, 5));
  CHECK(g.X()[1] == E(6, 2, 3) - E(6, 6, 5));
  CHECK(g.X()[2] == E(6, 3, 4) + Rational(1, 2) * E(6, 1, 6));
  CHECK(g.Y()[2] == E(6, 4, 3) + Rational(2) * E(6, 6, 1));
  // H_n picks up the lowest coroot
  CHECK(g.H()[2] == E(6, 3, 3) - E(6, 4, 4) + E(6, 1, 1) - E(6, 6, 6));
  CHECK(g.warnings().empty());
}

TEST_CASE("minus variant equals the plus variant at -a") {
  for (int n : {3, 4})
    for (const Rational& a : {Rational(2), Rational(1), Rational(-1), Rational(-3, 7)}) {
      const auto m = psi_a(n, a, SignVariant::minus);
      const auto p = psi_a(n, -a, SignVariant::plus);
      CHECK(m.X() == p.X());
      CHECK(m.Y() == p.Y());
    }
}

TEST_CASE("psi_a errors") {
  CHECK_THROWS_AS(psi_a(3, Rational(0)), std::domain_error);
  CHECK_THROWS_AS(psi_a(2, Rational(1)), std::invalid_argument);
  CHECK_THROWS_AS(psi_tuple({3, {}}), std::invalid_argument);
}

TEST_CASE("psi_tuple is block diagonal and warns on paired entries") {
  const auto g = psi_tuple({3, {Rational(2), Rational(3)}});
  CHECK(g.ambient_size() == 12);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(diagonal_block(g.X()[i], 0, 6) == psi_a(3, Rational(2)).X()[i]);
    CHECK(diagonal_block(g.X()[i], 6, 6) == psi_a(3, Rational(3)).X()[i]);
  }
  CHECK(g.warnings().empty());
  CHECK(psi_tuple({3, {Rational(2), Rational(1, 2)}}).warnings().size() == 1);
  CHECK(psi_tuple({3, {Rational(2), Rational(2)}}).warnings().size() == 1);
  CHECK(pairwise_violations({Rational(2), Rational(1, 2), Rational(2)}).size() == 3);
}

TEST_CASE("Chevalley-built lowest-root images coincide with psi at -a") {
  for (int n : {3, 4})
    for (const Rational& a : {Rational(2), Rational(1, 3), Rational(-5)}) {
      const auto l = lemma21_images(n, a);
      const auto p = psi_a(n, -a);
      CHECK(l.X() == p.X());
      CHECK(l.Y() == p.Y());
      CHECK(l.warnings().empty());
    }
  CHECK(lemma21_images(3, Rational(1)).warnings().size() == 1);
  CHECK_THROWS_AS(lemma21_images(3, Rational(0)), std::domain_error);
}

TEST_CASE("C and D composite images") {
  const auto c = lemma22_images(3);
  CHECK(c.X()[2] == E(6, 3, 4) + E(6, 1, 6));
  CHECK(c.X() == psi_a(3, Rational(1)).X());
  CHECK(c.Y() == psi_a(3, Rational(1)).Y());
  const auto d = lemma23_images(4);
  CHECK(d.X()[3] == E(8, 4, 5) - E(8, 1, 8));
  CHECK(d.X() == psi_a(4, Rational(-1)).X());
  CHECK(d.Y() == psi_a(4, Rational(-1)).Y());
  CHECK_THROWS(lemma23_images(3));
}

TEST_CASE("four-case direct sums") {
  const auto c4 = psi_big({3, 4, {Rational(-1), Rational(1), Rational(2)}});
  CHECK(c4.ambient_size() == 18);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(diagonal_block(c4.X()[i], 0, 6) == psi_a(3, Rational(-1)).X()[i]);
    CHECK(diagonal_block(c4.X()[i], 6, 6) == psi_a(3, Rational(1)).X()[i]);
    CHECK(diagonal_block(c4.X()[i], 12, 6) == psi_a(3, Rational(-2)).X()[i]);
  }
  CHECK(c4.warnings().empty());
  CHECK(psi_big({3, 1, {Rational(2), Rational(3)}}).ambient_size() == 12);
  CHECK(psi_big({3, 3, {Rational(-1), Rational(2)}}).ambient_size() == 12);

  CHECK_THROWS_AS(psi_big({3, 2, {Rational(2)}}), std::invalid_argument);
  CHECK_THROWS_AS(psi_big({3, 4, {Rational(-1)}}), std::invalid_argument);
  CHECK_THROWS_AS(psi_big({3, 5, {Rational(2)}}), std::invalid_argument);
  CHECK_THROWS_AS(psi_big({3, 1, {Rational(2), Rational(0)}}), std::domain_error);
  CHECK(psi_big({3, 2, {Rational(1), Rational(-1)}}).warnings().size() == 1);
  CHECK(psi_big({3, 1, {Rational(2), Rational(1, 2)}}).warnings().size() == 1);
}

TEST_CASE("admissibility per mode") {
  auto adm = [](std::vector<Rational> a, LemmaMode m) { return tuple_admissible({3, std::move(a)}, m); };
  CHECK(adm({2, 3}, LemmaMode::lemma51));
  CHECK_FALSE(adm({2, Rational(1, 2)}, LemmaMode::lemma51));
  CHECK_FALSE(adm({1, 2}, LemmaMode::lemma51));
  CHECK(adm({1, 2}, LemmaMode::lemma52));
  CHECK_FALSE(adm({1, -1}, LemmaMode::lemma52));
  CHECK_FALSE(adm({2, 1}, LemmaMode::lemma52));
  CHECK(adm({-1, 1, 2}, LemmaMode::lemma53));
  CHECK_FALSE(adm({-1, 2}, LemmaMode::lemma53));
  CHECK(adm({-1, 2}, LemmaMode::lemma54));
  CHECK_FALSE(adm({-1, 1}, LemmaMode::lemma54));
  CHECK_FALSE(adm({}, LemmaMode::lemma51));
  CHECK_FALSE(adm({0, 2}, LemmaMode::lemma51));
}

TEST_CASE("separator values") {
  CHECK(separator(Rational(1)) == Rational(4));
  CHECK(separator(Rational(-1)) == Rational(0));
  CHECK(separator(Rational(2)) == separator(Rational(1, 2)));
  CHECK(separator(Rational(2)) == Rational(9, 2));
  CHECK_THROWS(separator(Rational(0)));
}

TEST_CASE("string round trips") {
  CHECK(sign_variant_from_string(to_string(SignVariant::minus)) == SignVariant::minus);
  CHECK(lemma_mode_from_string("lemma54") == LemmaMode::lemma54);
  CHECK_THROWS_AS(sign_variant_from_string("neither"), std::invalid_argument);
  CHECK_THROWS_AS(lemma_mode_from_string("lemma55"), std::invalid_argument);
}

// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fail.
#include "gimlab/classifier.hpp"

#include "oracles.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

using namespace gimlab;
using oracle::E;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream note;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      if (ok) note << "first failure: ";
      else note << "; ";
      note << what;
      ok = false;
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::size_t sl_dim(int n) { return static_cast<std::size_t>(4 * n * n - 1); }
std::size_t sp_dim(int n) { return static_cast<std::size_t>(2 * n * n + n); }
std::size_t so_dim(int n) { return static_cast<std::size_t>(2 * n * n - n); }

std::string fmt(double s) {
  std::ostringstream os;
  os.precision(2);
  os << std::fixed << s << "s";
  return os.str();
}

// Shared between criteria 1, 9 and 10.
struct ImageResult {
  BlockVerdict verdict;
  std::size_t killing_rank = 0;
  std::size_t center_dim = 0;
};

ImageResult classify_psi(int n, const Rational& a, SignVariant v) {
  const auto s = lie_closure(psi_a(n, a, v).all_generators());
  return {classify_block(s, n), rank(killing_form(s)), center(s).size()};
}

std::vector<ImageResult> semisimplicity_log;

Outcome criterion1() {
  Outcome o;
  for (int n : {3, 4}) {
    const auto t0 = std::chrono::steady_clock::now();
    struct Want {
      Rational a;
      std::size_t dim;
      FormSymmetry sym;
      std::size_t forms;
    };
    for (const auto& w : {Want{2, sl_dim(n), FormSymmetry::none, 0}, Want{1, sp_dim(n), FormSymmetry::antisymmetric, 1},
                          Want{-1, so_dim(n), FormSymmetry::symmetric, 1}}) {
      const auto r = classify_psi(n, w.a, SignVariant::plus);
      semisimplicity_log.push_back(r);
      o.require(r.verdict.dimension == w.dim, "n=" + std::to_string(n) + " a=" + w.a.str() + " dimension " +
                                                  std::to_string(r.verdict.dimension));
      o.require(r.verdict.form_symmetry == w.sym && r.verdict.invariant_form_space_dim == w.forms,
                "n=" + std::to_string(n) + " a=" + w.a.str() + " form fingerprint");
    }
    const double dt = seconds_since(t0);
    o.require(dt < (n == 3 ? 10.0 : 120.0), "n=" + std::to_string(n) + " took " + fmt(dt));
    if (o.ok) o.note << "n=" << n << " in " << fmt(dt) << (n == 3 ? ", " : "");
  }
  return o;
}

Outcome criterion2() {
  Outcome o;
  std::size_t checked = 0;
  auto run = [&](const std::string& label, int n, const GeneratorImages& g) {
    const auto r = check_gim_relations(gim_matrix_mn(n), g);
    checked += r.checked;
    o.require(r.passed, label + " has " + std::to_string(r.failures.size()) + " failing relations");
    for (const auto& f : r.failures) o.require(!f.residual.is_zero(), label + " reported a zero residual");
  };
  for (int n : {3, 4}) {
    const std::string tag = " n=" + std::to_string(n);
    for (const Rational& a : {Rational(2), Rational(3), Rational(1, 2), Rational(1), Rational(-1)})
      run("psi_" + a.str() + tag, n, psi_a(n, a));
    run("lowest-root images a=2" + tag, n, lemma21_images(n, Rational(2)));
    run("C images" + tag, n, lemma22_images(n));
  }
  run("D images n=4", 4, lemma23_images(4));
  run("case 1 n=3", 3, psi_big({3, 1, {2, 3}}));
  run("case 2 n=3", 3, psi_big({3, 2, {1, 2}}));
  run("case 3 n=3", 3, psi_big({3, 3, {-1, 2}}));
  run("case 4 n=3", 3, psi_big({3, 4, {-1, 1, 2}}));
  run("case 4 n=4", 4, psi_big({4, 4, {-1, 1, 2}}));
  if (o.ok) o.note << checked << " relation instances, none failing";
  return o;
}

Outcome criterion3() {
  Outcome o;
  for (int n : {3, 4}) {
    const auto N = static_cast<std::size_t>(2 * n);
    const auto sys = chevalley_A(n);
    RatMatrix coroots = RatMatrix::zero(N);
    for (std::size_t i = 1; i < N; ++i) coroots += E(N, i, i) - E(N, i + 1, i + 1);
    for (const Rational& a : {Rational(1), Rational(2), Rational(-1), Rational(1, 3)}) {
      const auto p = lowest_root_vectors_A(sys, a);
      o.require(p.e == a * E(N, N, 1), "e for a=" + a.str());
      o.require(bracket(p.f, p.e) == coroots, "[f, e] for n=" + std::to_string(n) + " a=" + a.str());
    }
  }
  if (o.ok) o.note << "n=3, 4 with a in {1, 2, -1, 1/3}";
  return o;
}

std::vector<ClassificationReport> mixed_reports;

Outcome criterion4() {
  Outcome o;
  struct Want {
    LemmaMode mode;
    std::vector<Rational> a;
    std::size_t dim;
    Signature sig;
  };
  for (const auto& w : {Want{LemmaMode::lemma51, {2, 3}, 70, {2, 0, 0}}, Want{LemmaMode::lemma52, {1, 2}, 56, {1, 1, 0}},
                        Want{LemmaMode::lemma53, {-1, 1, 2}, 71, {1, 1, 1}},
                        Want{LemmaMode::lemma54, {-1, 2}, 50, {1, 0, 1}}}) {
    const auto t0 = std::chrono::steady_clock::now();
    const EvalParams p{3, w.a};
    const auto r = classify_image(lie_closure(psi_tuple(p).all_generators()), p);
    const double dt = seconds_since(t0);
    mixed_reports.push_back(r);
    const std::string tag = to_string(w.mode);
    o.require(tuple_admissible(p, w.mode), tag + " tuple not admissible");
    o.require(r.total_dimension == w.dim, tag + " dimension " + std::to_string(r.total_dimension));
    o.require(r.signature == w.sig, tag + " signature");
    o.require(r.consistent(), tag + " inconsistent");
    o.require(dt < 60.0, tag + " took " + fmt(dt));
  }
  if (o.ok) o.note << "dims 70/56/71/50, signatures (2,0,0) (1,1,0) (1,1,1) (1,0,1)";
  return o;
}

Outcome criterion5() {
  Outcome o;
  std::mt19937 rng(5150);
  std::uniform_int_distribution<int> len(1, 5), num(-6, 6), den(1, 6), coin(0, 3);
  std::size_t admissible = 0;
  for (int t = 0; t < 1000; ++t) {
    std::vector<Rational> a;
    const int K = len(rng);
    while (static_cast<int>(a.size()) < K) {
      Rational x(num(rng), den(rng));
      // bias toward collisions: reuse an earlier entry or its inverse
      if (!a.empty() && coin(rng) == 0) x = coin(rng) % 2 ? a[rng() % a.size()] : a[rng() % a.size()].inverse();
      if (x.is_zero() || x == Rational(1) || x == Rational(-1)) continue;
      a.push_back(x);
    }
    bool mu_distinct = true;
    for (std::size_t k = 0; k < a.size(); ++k)
      for (std::size_t j = k + 1; j < a.size(); ++j) {
        const Rational mk = Rational(2) + a[k] + a[k].inverse();
        const Rational mj = Rational(2) + a[j] + a[j].inverse();
        const bool equal = mk == mj;
        const bool product_zero = ((a[k] * a[j] - Rational(1)) * (a[k] - a[j])).is_zero();
        o.require(equal == product_zero, "identity fails at " + a[k].str() + ", " + a[j].str());
        mu_distinct = mu_distinct && !equal;
      }
    const bool adm = tuple_admissible({3, a}, LemmaMode::lemma51);
    admissible += adm;
    o.require(adm == mu_distinct, "admissibility disagrees with separator distinctness on trial " + std::to_string(t));
  }
  if (o.ok) o.note << "1000 tuples (" << admissible << " admissible)";
  return o;
}

// Literal targets for the four chain intermediates. The third carries
// -E_{1,2n}; the bracket gives +E_{1,2n}, and only the + form brackets with
// f_n to the fourth target. Both facts are checked so the verdict says which
// side is off.
Outcome criterion6() {
  Outcome o;
  bool only_third_off = true;
  for (int n : {3, 4}) {
    const auto un = static_cast<std::size_t>(n);
    const std::size_t N = 2 * un;
    auto mono = [](const RatMatrix& x, int m) { return LoopElement::monomial(x, m); };
    const RatMatrix Hn = E(N, un, un) - E(N, un + 1, un + 1);
    const RatMatrix S = E(N, 1, 1) - E(N, N, N);
    const LoopElement c = LoopElement::central_element(N, Rational(1));
    const auto ch = xi_chain(n);
    const auto g = fixed_point_generators(n);
    const std::string tag = " n=" + std::to_string(n);

    const RatMatrix third_target = E(N, un, un + 1) - E(N, 1, N);
    const RatMatrix third_plus = E(N, un, un + 1) + E(N, 1, N);
    const LoopElement fourth_target = mono(Hn, 0) + mono(Hn, -1) + mono(S, 0) + mono(S, 1) - c;

    o.require(g.h[un - 1] == mono(Hn, 0) + mono(S, 0) - c, "h_n" + tag);
    o.require(ch.steps[0] == mono(E(N, 1, un + 1), 0) + mono(E(N, 1, un + 1), -1), "first intermediate" + tag);
    o.require(ch.steps[1] == mono(E(N, un, 1) - E(N, un + 1, N), 0), "second intermediate" + tag);
    const bool third_ok = ch.steps[2] == mono(third_target, 0) + mono(third_target, -1);
    o.require(third_ok, "third intermediate" + tag + " has +E_{1,2n} where the target has -E_{1,2n}");
    o.require(ch.steps[3] == fourth_target, "fourth intermediate" + tag);
    o.require(ch.xi == mono(Hn, -1) + mono(S, 1), "Xi" + tag);
    o.require(xi_raised_last(n, 1) == mono(Hn, -1) + mono(S, 1), "Xi raising" + tag);

    // diagnosis: which sign is consistent with the fourth target
    const auto with_plus = loop_bracket(mono(third_plus, 0) + mono(third_plus, -1), g.f[un - 1]);
    const auto with_minus = loop_bracket(mono(third_target, 0) + mono(third_target, -1), g.f[un - 1]);
    only_third_off = only_third_off && ch.steps[2] == mono(third_plus, 0) + mono(third_plus, -1) &&
                     with_plus == fourth_target && !(with_minus == fourth_target);
  }
  if (o.ok) o.note << "n=3, 4 including the -c term";
  else if (only_third_off)
    o.note << " (target for the third intermediate is inconsistent with the fourth: [third, f_n] gives the fourth "
              "only with +E_{1,2n}; every other intermediate, Xi and the -c term match)";
  return o;
}

Outcome criterion7() {
  Outcome o;
  for (const auto& roots : {std::vector<Rational>{2, Rational(1, 2)}, std::vector<Rational>{2, 3, Rational(1, 3), Rational(1, 2)}})
    for (int n : {3, 4}) {
      const auto q = make_quotient(roots);
      o.require(partial_fraction_sum(q) == std::vector<Rational>{Rational(1)}, "partial fractions");
      for (std::size_t i = 0; i < roots.size(); ++i) o.require((q.c[i] * q.d[i]).is_one(), "c_i d_i");
      const auto g = fixed_point_generators(n);
      const auto psi = psi_tuple({n, roots});
      const std::size_t N = 2 * static_cast<std::size_t>(n);
      for (std::size_t i = 0; i < g.e.size(); ++i) {
        const auto ex = eval_quotient_map(g.e[i], q), fx = eval_quotient_map(g.f[i], q);
        for (std::size_t k = 0; k < roots.size(); ++k) {
          o.require(ex[k] == diagonal_block(psi.X()[i], k * N, N), "e image");
          o.require(fx[k] == diagonal_block(psi.Y()[i], k * N, N), "f image");
        }
      }
    }
  if (o.ok) o.note << "K=2 and K=4, n=3, 4";
  return o;
}

Outcome criterion8() {
  Outcome o;
  const int n = 3;
  const std::size_t N = 6;
  const auto s = lie_closure(psi_tuple({n, {Rational(2), Rational(1, 2)}}).all_generators());
  o.require(s.dimension() == sl_dim(n), "paired dimension " + std::to_string(s.dimension()));
  o.require(project_block(s, 0, N).dimension() == s.dimension(), "first-block projection not injective");
  std::mt19937 rng(88);
  for (int t = 0; t < 100; ++t) {
    const auto x = oracle::random_loop(rng, N, false);
    o.require(sigma(sigma(x)) == x, "sigma^2");
    o.require(evaluate_at(sigma(x), Rational(2)) == evaluate_at(x, Rational(1, 2)), "eval_a sigma");
  }
  if (o.ok) o.note << "dim 35, injective, 100 random elements";
  return o;
}

Outcome criterion9() {
  Outcome o;
  for (int n : {3, 4})
    for (const Rational& a : {Rational(2), Rational(1), Rational(-1)}) {
      const auto p = classify_psi(n, a, SignVariant::plus).verdict;
      const auto m = classify_psi(n, a, SignVariant::minus).verdict;
      const auto swapped = [](BlockType t) {
        return t == BlockType::SP ? BlockType::SO : t == BlockType::SO ? BlockType::SP : t;
      };
      o.require(m.verdict == swapped(p.verdict), "verdict for a=" + a.str());
      if (a == Rational(2)) o.require(m.dimension == p.dimension && m.form_symmetry == p.form_symmetry, "a=2 changed");
      const auto mirror = classify_psi(n, -a, SignVariant::plus).verdict;
      o.require(m.dimension == mirror.dimension && m.form_symmetry == mirror.form_symmetry, "minus at a vs plus at -a");
    }
  if (o.ok) o.note << "a=1 and a=-1 exchange SP/SO, a=2 unchanged";
  return o;
}

Outcome criterion10() {
  Outcome o;
  for (const auto& r : semisimplicity_log) {
    o.require(r.killing_rank == r.verdict.dimension, "Killing form degenerate on a single image");
    o.require(r.center_dim == 0, "nonzero center");
  }
  for (const auto& r : mixed_reports) {
    o.require(r.semisimple && r.killing_rank == r.total_dimension, "Killing form degenerate on a direct sum");
    o.require(r.center_dim == 0, "nonzero center");
  }
  o.require(!semisimplicity_log.empty() && !mixed_reports.empty(), "criteria 1 and 4 produced no images");
  if (o.ok) o.note << semisimplicity_log.size() + mixed_reports.size() << " images, rank = dim, center 0";
  return o;
}

Outcome criterion11() {
  Outcome o;
  std::mt19937 rng(1111);
  int count = 0;
  for (int t = 0; t < 200; ++t, ++count) {
    const auto x = oracle::random_matrix(rng, 4), y = oracle::random_matrix(rng, 4), z = oracle::random_matrix(rng, 4);
    o.require(bracket(x, y) == Rational(-1) * bracket(y, x), "antisymmetry");
    o.require((bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y))).is_zero(), "Jacobi");
  }
  for (int t = 0; t < 200; ++t, ++count) {
    const auto x = oracle::random_loop(rng, 3), y = oracle::random_loop(rng, 3), z = oracle::random_loop(rng, 3);
    o.require((loop_bracket(x, loop_bracket(y, z)) + loop_bracket(y, loop_bracket(z, x)) + loop_bracket(z, loop_bracket(x, y)))
                  .is_zero(),
              "loop Jacobi");
  }
  for (int t = 0; t < 200; ++t, ++count) {
    std::vector<RatMatrix> gens;
    for (int i = 0; i < 2 + t % 2; ++i) gens.push_back(oracle::random_matrix(rng, 3 + static_cast<std::size_t>(t % 2), 0.25));
    const auto s = lie_closure(gens);
    const auto again = lie_closure(s.elements());
    o.require(again.dimension() == s.dimension() && (s.dimension() == 0 || again == s), "closure idempotence");
    std::reverse(gens.begin(), gens.end());
    o.require(lie_closure(gens) == s, "generator order");
  }
  const std::vector<Rational> as{Rational(1), Rational(-1), Rational(2), Rational(5, 3)};
  for (int t = 0; t < 200; ++t, ++count) {
    const auto gens = psi_a(3, as[static_cast<std::size_t>(t) % 4]).all_generators();
    const auto P = oracle::random_unimodular(rng, 6);
    const auto Pinv = *inverse(P);
    std::vector<RatMatrix> conj;
    for (const auto& g : gens) conj.push_back(P * g * Pinv);
    o.require(classify_block(lie_closure(conj), 3).verdict == classify_block(lie_closure(gens), 3).verdict,
              "conjugation invariance");
  }
  if (o.ok) o.note << count << " randomized instances in four suites";
  return o;
}

} // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"image trichotomy sl/sp/so with form fingerprints", criterion1},
      {"defining relations on every image family", criterion2},
      {"lowest-root bracket equals the sum of simple coroots", criterion3},
      {"mixed direct sums: dimensions and signatures", criterion4},
      {"separator distinctness sweep", criterion5},
      {"bracket chain and Xi", criterion6},
      {"partial fractions and quotient evaluation", criterion7},
      {"inverse pair (a, 1/a)", criterion8},
      {"sign variant swaps sp and so", criterion9},
      {"semisimplicity certificates", criterion10},
      {"randomized property suites", criterion11},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.ok = false;
      o.note << "exception: " << e.what();
    }
    failed += !o.ok;
    std::cout << (o.ok ? "PASS" : "FAIL") << "  criterion " << (i + 1) << ": " << criteria[i].first << " ["
              << o.note.str() << "] (" << fmt(seconds_since(t0)) << ")" << std::endl;
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size() << " criteria pass"
            << std::endl;
  return failed ? 1 : 0;
}

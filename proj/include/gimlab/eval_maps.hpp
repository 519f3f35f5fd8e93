#ifndef GIMLAB_EVAL_MAPS_HPP
#define GIMLAB_EVAL_MAPS_HPP

#include "gimlab/gim.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gimlab {

/// Sign convention for the affine generator e_n: plus uses
/// E_{alpha_n} (x) 1 + E_{alpha_flat} (x) t^{-1}, minus flips the second term.
/// Evaluated at a, the minus convention equals the plus convention at -a.
enum class SignVariant { plus, minus };

std::string to_string(SignVariant v);
SignVariant sign_variant_from_string(const std::string& s);

struct EvalParams {
  int n = 3;
  std::vector<Rational> a_tuple;
  SignVariant sign_variant = SignVariant::plus;
};

/// A four-case configuration of the direct-sum epimorphism. a_tuple has K
/// entries; the leading ones are forced by the case:
///   case 1: all blocks sl_{2n};
///   case 2: (1, a_2, ...)      block 1 sp_{2n};
///   case 3: (-1, a_2, ...)     block 1 so_{2n};
///   case 4: (-1, 1, a_3, ...)  block 1 so_{2n}, block 2 sp_{2n}.
struct CaseConfig {
  int n = 3;
  int case_id = 1;
  std::vector<Rational> a_tuple;
};

enum class LemmaMode { lemma51, lemma52, lemma53, lemma54 };

std::string to_string(LemmaMode m);
LemmaMode lemma_mode_from_string(const std::string& s);

/// 2 + a + 1/a. Distinct nonzero values separate the blocks of a direct sum.
Rational separator(const Rational& a);

/// The natural-representation evaluation map psi_a into sl_{2n}:
///   X_i = E_{i,i+1} - E_{n+i+1,n+i},  Y_i = E_{i+1,i} - E_{n+i,n+i+1}   (i < n)
///   X_n = E_{n,n+1} + a^{-1} E_{1,2n},  Y_n = E_{n+1,n} + a E_{2n,1}
/// With SignVariant::minus the a-dependent terms change sign.
/// Throws std::domain_error for a = 0, std::invalid_argument for n < 3.
GeneratorImages psi_a(int n, const Rational& a, SignVariant variant = SignVariant::plus);

/// Block-diagonal direct sum of psi_{a_k}, k = 1..K, in gl_{2nK}. Warns when
/// some pair has a_k = a_j^{+-1}; throws on an empty tuple or a zero entry.
GeneratorImages psi_tuple(const EvalParams& params);

/// Block-diagonal direct sum of image families with equal n.
GeneratorImages direct_sum(const std::vector<GeneratorImages>& parts);

/// X_i = e_{alpha_i} - f_{alpha_{n+i}}, Y_i = f_{alpha_i} - e_{alpha_{n+i}} in
/// sl_{2n}, with alpha_{2n} the lowest-root pair scaled by a. a = 0 throws;
/// a = +-1 is built with a warning.
GeneratorImages lemma21_images(int n, const Rational& a);

/// e_i -> e_{alpha_i}, f_i -> f_{alpha_i} (i < n), e_n -> E, f_n -> F in C_n (n >= 3).
GeneratorImages lemma22_images(int n);
/// Same shape in D_n (n >= 4).
GeneratorImages lemma23_images(int n);

/// Per-case direct sum of Chevalley-built component maps. Throws
/// std::invalid_argument when the case id or a forced leading entry is wrong,
/// std::domain_error for a zero entry; the free entries only raise warnings.
GeneratorImages psi_big(const CaseConfig& config);

/// Whether the tuple meets the named lemma's hypothesis: pairwise
/// a_k != a_j and a_k a_j != 1, all nonzero, plus
///   lemma51: no a_k in {1, -1};
///   lemma52: a_1 = 1 and no later a_k = -1;
///   lemma53: a_1 = -1, a_2 = 1;
///   lemma54: a_1 = -1 and no later a_k = 1.
bool tuple_admissible(const EvalParams& params, LemmaMode mode);

/// Human-readable violations of the pairwise hypothesis (empty when met).
std::vector<std::string> pairwise_violations(const std::vector<Rational>& a_tuple);

} // namespace gimlab

#endif // GIMLAB_EVAL_MAPS_HPP

#ifndef GIMLAB_CLASSIFIER_HPP
#define GIMLAB_CLASSIFIER_HPP

#include "gimlab/eval_maps.hpp"

#include <string>
#include <utility>
#include <vector>

namespace gimlab {

enum class FormSymmetry { none, symmetric, antisymmetric, mixed };
enum class BlockType { SL, SP, SO, UNKNOWN };

std::string to_string(FormSymmetry s);
std::string to_string(BlockType t);

/// Space of bilinear forms B on Q^N with X^T B + B X = 0 for all X in s.
/// The basis lists the symmetric forms first, then the antisymmetric ones
/// (each set in canonical echelon order).
struct InvariantForms {
  std::size_t dim = 0;
  std::vector<RatMatrix> basis;
  std::size_t symmetric_dim = 0;
  std::size_t antisymmetric_dim = 0;

  FormSymmetry symmetry() const;
};

InvariantForms invariant_forms(const SubalgebraBasis& s);

struct BlockVerdict {
  std::size_t block_index = 0;
  std::size_t dimension = 0;
  std::size_t invariant_form_space_dim = 0;
  FormSymmetry form_symmetry = FormSymmetry::none;
  BlockType verdict = BlockType::UNKNOWN;
};

/// Fingerprint table on the natural 2n-dimensional representation:
///   SL  dim 4n^2-1, no invariant form
///   SP  dim 2n^2+n, one antisymmetric form
///   SO  dim 2n^2-n, one symmetric form
/// anything else is UNKNOWN.
BlockVerdict classify_block(const SubalgebraBasis& s, int n, std::size_t block_index = 0);

struct Signature {
  int a = 0; // copies of sl_2n
  int c = 0; // copies of sp_2n
  int d = 0; // copies of so_2n
  friend bool operator==(const Signature&, const Signature&) = default;
};

/// a(4n^2-1) + c(2n^2+n) + d(2n^2-n).
std::size_t signature_dimension(const Signature& s, int n);

struct ClassificationReport {
  int n = 0;
  std::vector<Rational> a_tuple;
  SignVariant sign_variant = SignVariant::plus;
  std::size_t total_dimension = 0;
  std::vector<BlockVerdict> blocks;
  std::vector<std::pair<std::size_t, std::size_t>> pairings; // 0-based block indices, k < j
  Signature signature;
  bool semisimple = false;
  std::size_t killing_rank = 0;
  std::size_t center_dim = 0;
  std::vector<std::string> inconsistencies;

  bool consistent() const { return inconsistencies.empty(); }
};

/// Classifies a block-diagonal closure with K = params.a_tuple.size() blocks
/// of size 2n. Blocks k < j with a_k a_j = 1 (a_k != +-1) are a single
/// diagonally embedded sl copy and counted once. Problems (UNKNOWN blocks,
/// repeated sp or so, an all-zero signature, a dimension mismatch) are
/// recorded in inconsistencies rather than thrown.
/// Throws std::invalid_argument if the ambient size is not 2nK.
ClassificationReport classify_image(const SubalgebraBasis& closure, const EvalParams& params);

/// GitHub-style table, one row per block, followed by the signature line.
std::string to_markdown(const ClassificationReport& r);

} // namespace gimlab

#endif // GIMLAB_CLASSIFIER_HPP

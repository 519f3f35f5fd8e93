#include "gimlab/classifier.hpp"

#include <sstream>
#include <stdexcept>

namespace gimlab {

std::string to_string(FormSymmetry s) {
  switch (s) {
  case FormSymmetry::none: return "none";
  case FormSymmetry::symmetric: return "symmetric";
  case FormSymmetry::antisymmetric: return "antisymmetric";
  case FormSymmetry::mixed: return "mixed";
  }
  return "?";
}

std::string to_string(BlockType t) {
  switch (t) {
  case BlockType::SL: return "SL";
  case BlockType::SP: return "SP";
  case BlockType::SO: return "SO";
  case BlockType::UNKNOWN: return "UNKNOWN";
  }
  return "?";
}

FormSymmetry InvariantForms::symmetry() const {
  if (symmetric_dim && antisymmetric_dim) return FormSymmetry::mixed;
  if (symmetric_dim) return FormSymmetry::symmetric;
  if (antisymmetric_dim) return FormSymmetry::antisymmetric;
  return FormSymmetry::none;
}

InvariantForms invariant_forms(const SubalgebraBasis& s) {
  const std::size_t N = s.ambient_size();
  // Unknown B_{pq} sits at index p*N + q; (X^T B + B X)_{ij} = sum_k X_ki B_kj + B_ik X_kj.
  EchelonBasis equations(N * N);
  for (const auto& X : s.elements()) {
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) {
        Vector row(N * N);
        bool any = false;
        for (std::size_t k = 0; k < N; ++k) {
          if (!X(k, i).is_zero()) {
            row[k * N + j] += X(k, i);
            any = true;
          }
          if (!X(k, j).is_zero()) {
            row[i * N + k] += X(k, j);
            any = true;
          }
        }
        if (any) equations.insert(row);
      }
  }

  EchelonBasis sym(N * N), anti(N * N);
  for (const auto& v : equations.null_space()) {
    const RatMatrix B = RatMatrix::from_vector(v, N, N);
    const RatMatrix Bt = B.transpose();
    sym.insert((Rational(1, 2) * (B + Bt)).flatten());
    anti.insert((Rational(1, 2) * (B - Bt)).flatten());
  }

  InvariantForms out;
  out.symmetric_dim = sym.size();
  out.antisymmetric_dim = anti.size();
  out.dim = out.symmetric_dim + out.antisymmetric_dim;
  for (const auto* basis : {&sym, &anti})
    for (const auto& r : basis->rows()) out.basis.push_back(RatMatrix::from_vector(r, N, N));
  return out;
}

BlockVerdict classify_block(const SubalgebraBasis& s, int n, std::size_t block_index) {
  const auto forms = invariant_forms(s);
  BlockVerdict v;
  v.block_index = block_index;
  v.dimension = s.dimension();
  v.invariant_form_space_dim = forms.dim;
  v.form_symmetry = forms.symmetry();

  const auto nn = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
  const auto un = static_cast<std::size_t>(n);
  if (s.ambient_size() != 2 * un) return v;
  if (v.dimension == 4 * nn - 1 && forms.dim == 0)
    v.verdict = BlockType::SL;
  else if (v.dimension == 2 * nn + un && forms.dim == 1 && forms.antisymmetric_dim == 1)
    v.verdict = BlockType::SP;
  else if (v.dimension == 2 * nn - un && forms.dim == 1 && forms.symmetric_dim == 1)
    v.verdict = BlockType::SO;
  return v;
}

std::size_t signature_dimension(const Signature& s, int n) {
  const auto nn = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
  const auto un = static_cast<std::size_t>(n);
  return static_cast<std::size_t>(s.a) * (4 * nn - 1) + static_cast<std::size_t>(s.c) * (2 * nn + un) +
         static_cast<std::size_t>(s.d) * (2 * nn - un);
}

ClassificationReport classify_image(const SubalgebraBasis& closure, const EvalParams& params) {
  const std::size_t K = params.a_tuple.size();
  const std::size_t block = 2 * static_cast<std::size_t>(params.n);
  if (K == 0) throw std::invalid_argument("classify_image: empty tuple");
  if (closure.ambient_size() != block * K)
    throw std::invalid_argument("classify_image: closure lives in gl_" + std::to_string(closure.ambient_size()) +
                                ", expected gl_" + std::to_string(block * K));

  ClassificationReport r;
  r.n = params.n;
  r.a_tuple = params.a_tuple;
  r.sign_variant = params.sign_variant;
  r.total_dimension = closure.dimension();

  for (std::size_t k = 0; k < K; ++k)
    r.blocks.push_back(classify_block(project_block(closure, k * block, block), params.n, k));

  const auto& a = params.a_tuple;
  std::vector<bool> absorbed(K, false);
  for (std::size_t k = 0; k < K; ++k)
    for (std::size_t j = k + 1; j < K; ++j)
      if (a[k] * a[j] == Rational(1) && a[k] != Rational(1) && a[k] != Rational(-1) && !absorbed[j] && !absorbed[k]) {
        r.pairings.emplace_back(k, j);
        absorbed[j] = true;
      }

  for (const auto& b : r.blocks) {
    switch (b.verdict) {
    case BlockType::SL:
      if (!absorbed[b.block_index]) ++r.signature.a;
      break;
    case BlockType::SP: ++r.signature.c; break;
    case BlockType::SO: ++r.signature.d; break;
    case BlockType::UNKNOWN:
      r.inconsistencies.push_back("block " + std::to_string(b.block_index) + " matches no known type");
      break;
    }
  }
  for (const auto& [k, j] : r.pairings)
    if (r.blocks[k].verdict != BlockType::SL || r.blocks[j].verdict != BlockType::SL)
      r.inconsistencies.push_back("paired blocks " + std::to_string(k) + ", " + std::to_string(j) + " are not both SL");
  if (r.signature.c > 1) r.inconsistencies.push_back("sp_2n occurs " + std::to_string(r.signature.c) + " times");
  if (r.signature.d > 1) r.inconsistencies.push_back("so_2n occurs " + std::to_string(r.signature.d) + " times");
  if (r.signature == Signature{}) r.inconsistencies.push_back("all-zero signature describes no nontrivial algebra");
  const std::size_t expected = signature_dimension(r.signature, params.n);
  if (expected != r.total_dimension)
    r.inconsistencies.push_back("closure dimension " + std::to_string(r.total_dimension) +
                                " differs from the signature dimension " + std::to_string(expected));

  r.killing_rank = rank(killing_form(closure));
  r.center_dim = center(closure).size();
  r.semisimple = r.killing_rank == r.total_dimension;
  return r;
}

std::string to_markdown(const ClassificationReport& r) {
  std::ostringstream os;
  os << "| block | a | dimension | form space | symmetry | verdict |\n";
  os << "|---|---|---|---|---|---|\n";
  for (const auto& b : r.blocks) {
    os << "| " << b.block_index << " | " << r.a_tuple.at(b.block_index) << " | " << b.dimension << " | "
       << b.invariant_form_space_dim << " | " << to_string(b.form_symmetry) << " | " << to_string(b.verdict) << " |\n";
  }
  os << "\nsignature (a, c, d) = (" << r.signature.a << ", " << r.signature.c << ", " << r.signature.d
     << "), total dimension " << r.total_dimension << ", Killing rank " << r.killing_rank << ", center "
     << r.center_dim << (r.semisimple ? ", semisimple" : ", not semisimple");
  if (!r.pairings.empty()) {
    os << ", pairings";
    for (const auto& [k, j] : r.pairings) os << " (" << k << ", " << j << ")";
  }
  os << "\n";
  for (const auto& msg : r.inconsistencies) os << "\n- inconsistency: " << msg;
  if (!r.inconsistencies.empty()) os << "\n";
  return os.str();
}

} // namespace gimlab

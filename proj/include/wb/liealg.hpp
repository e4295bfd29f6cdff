#ifndef WB_LIEALG_HPP
#define WB_LIEALG_HPP

#include "wb/exactla.hpp"
#include "wb/lyndon.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace wb {

// Generator of a presented Lie algebra: either t_{ab} (unordered pair of
// distinct labels, stored with a < b) or s_a.  All generators have weight 1.
struct GeneratorSymbol {
  enum Kind { T, S } kind;
  std::string a, b;  // b unused for S

  static GeneratorSymbol t(std::string x, std::string y);
  static GeneratorSymbol s(std::string x);
  std::string name() const;
  auto operator<=>(const GeneratorSymbol &) const = default;
};

// Weight-homogeneous components in free-Lie Lyndon coordinates.
struct FreeLieElement {
  int alphabet = 0;
  std::map<int, SparseVec> comp;  // weight -> Lyndon-basis coordinates
  bool zero() const { return comp.empty(); }
};

// Free Lie algebra on k generators, truncated at weight maxw.  Elements are
// held in Lyndon coordinates; brackets go through the tensor algebra and come
// back via an exact linear solve.
class FreeLie {
public:
  FreeLie(int k, int maxw);

  int alphabet() const { return k_; }
  int max_weight() const { return maxw_; }
  const std::vector<Word> &words(int w) const;

  FreeLieElement generator(int g) const;
  FreeLieElement bracket(const FreeLieElement &u, const FreeLieElement &v) const;
  FreeLieElement add(FreeLieElement u, const Scalar &c,
                     const FreeLieElement &v) const;

  Tensor to_tensor(const FreeLieElement &u) const;
  // t must be a Lie element, homogeneous of weight w.
  SparseVec from_tensor(int w, const Tensor &t) const;

private:
  int k_, maxw_;
  std::vector<std::vector<Word>> words_;           // [w]
  std::vector<std::vector<Tensor>> expansions_;    // [w][i]
};

// Element of a presented graded Lie algebra, in quotient-basis coordinates.
struct LieElement {
  std::map<int, SparseVec> comp;  // weight -> coordinates
  bool zero() const { return comp.empty(); }
  bool operator==(const LieElement &o) const { return comp == o.comp; }
};

LieElement lie_scale(const LieElement &x, const Scalar &c);
LieElement lie_add(LieElement x, const Scalar &c, const LieElement &y);

// Weight-graded Lie algebra presented by generators and homogeneous
// relations, truncated at weight W.  Each weight has an ordered basis whose
// origin is a free-Lie Lyndon word; bracket structure constants are
// stored for all pairs with weight sum <= W.
class GradedLieAlgebra {
public:
  // relations are given in the tensor algebra over the generator alphabet.
  GradedLieAlgebra(std::vector<GeneratorSymbol> gens,
                   const std::vector<std::pair<int, Tensor>> &relations, int W);

  int W() const { return W_; }
  int num_generators() const { return (int)gens_.size(); }
  const std::vector<GeneratorSymbol> &generators() const { return gens_; }
  int generator_index(const GeneratorSymbol &g) const;  // -1 if absent

  int dim(int w) const;
  std::map<int, int> graded_dims() const;
  const Word &basis_word(int w, int i) const { return basis_words_[w][i]; }

  LieElement generator(int g) const;
  // Bracket of basis elements (w1,i),(w2,j); requires w1+w2 <= W.
  const SparseVec &bracket_basis(int w1, int i, int w2, int j) const;
  // truncate: drop components of weight > W instead of throwing
  LieElement bracket(const LieElement &x, const LieElement &y,
                     bool truncate = false) const;

  // Project a weight-w Lie element given in tensor coordinates.
  SparseVec project_tensor(int w, const Tensor &t) const;
  LieElement project(const FreeLie &fl, const FreeLieElement &x) const;

private:
  void build(const std::vector<std::pair<int, Tensor>> &relations);

  std::vector<GeneratorSymbol> gens_;
  int W_;
  std::vector<std::vector<Word>> basis_words_;       // [w] originating words
  std::vector<std::vector<SparseVec>> proj_;         // [w][i]: tensor functional
  mutable std::map<std::tuple<int, int, int, int>, SparseVec> sc_;
};

using AlgebraPtr = std::shared_ptr<const GradedLieAlgebra>;

// The Lie algebra t~_A of the operad: generators t_{ab} and s_a, with the
// infinitesimal-braid relations and the s's central.  Results are cached per
// (label set, W).
AlgebraPtr t_tilde(const std::vector<std::string> &labels, int W);

// Drinfeld-Kohno t_A: the t-generators only.
AlgebraPtr t_plain(const std::vector<std::string> &labels, int W);

// Relation set of t~_A over an explicit generator list (exposed so tests can
// instantiate variants).
std::vector<std::pair<int, Tensor>> t_tilde_relations(
    const std::vector<GeneratorSymbol> &gens);

std::vector<std::string> default_labels(int n);

}  // namespace wb

#endif

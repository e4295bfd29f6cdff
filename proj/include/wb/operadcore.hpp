#ifndef WB_OPERADCORE_HPP
#define WB_OPERADCORE_HPP

#include "wb/liealg.hpp"

#include <random>
#include <string>

namespace wb {

// Weight-preserving Lie algebra morphism determined by generator images.
// Basis elements are mapped through their originating Lyndon words; the
// homomorphism property is a checkable invariant, not an assumption.
class LieMorphism {
public:
  LieMorphism(AlgebraPtr src, AlgebraPtr dst, std::vector<LieElement> gen_image);

  const AlgebraPtr &src() const { return src_; }
  const AlgebraPtr &dst() const { return dst_; }
  const LieElement &gen_image(int g) const { return gen_image_[g]; }

  LieElement apply(const LieElement &x) const;
  const LieElement &apply_basis(int w, int i) const;

  // apply([x,y]) == [apply(x), apply(y)] on all basis pairs with weight sum
  // <= min(src W, dst W)
  bool is_homomorphism() const;
  // all weight-2 relations of the source presentation map to zero
  bool kills_relations(const std::vector<std::pair<int, Tensor>> &rels) const;

private:
  AlgebraPtr src_, dst_;
  std::vector<LieElement> gen_image_;
  mutable std::map<std::pair<int, int>, LieElement> cache_;
};

LieMorphism compose(const LieMorphism &g, const LieMorphism &f);

// Functorial relabeling t~_A -> t~_{sigma(A)}.
LieMorphism relabel_morphism(const std::vector<std::string> &A,
                             const std::map<std::string, std::string> &sigma,
                             int W);

// The operadic composition map o_a : t~_A (+) t~_B -> t~_{(A-{a}) u B}.
struct InsertMap {
  LieMorphism from_ambient;   // t~_A part
  LieMorphism from_inserted;  // t~_B part
  std::string slot;

  LieElement apply(const LieElement &x, const LieElement &y) const;
};

InsertMap insert_map(const std::string &a, const std::vector<std::string> &A,
                     const std::vector<std::string> &B, int W);

struct LawReport {
  bool pass = true;
  int checks = 0;
  std::string counterexample;

  void fail(const std::string &what) {
    if (pass) counterexample = what;
    pass = false;
  }
};

// Operad law verification for t~: parallel-composition commutativity,
// sequential associativity, and equivariance under relabeling; exhaustive on
// generators plus sampled elements of weight <= 3.
LawReport check_operad_laws(int max_arity, int W, int samples,
                            unsigned seed = 20240901);

// Deterministic random element of weight <= maxw with small coefficients.
LieElement random_element(const GradedLieAlgebra &L, int maxw,
                          std::mt19937 &rng);

}  // namespace wb

#endif

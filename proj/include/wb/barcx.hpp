#ifndef WB_BARCX_HPP
#define WB_BARCX_HPP

#include "wb/uea.hpp"

namespace wb {

// Reduced bar chain: tensor of augmentation-ideal PBW monomials.
using BarKey = std::vector<PBWKey>;
using BarChain = std::map<BarKey, Scalar>;

void bar_add(BarChain &x, const BarKey &k, const Scalar &c);
int bar_weight(const BarKey &k);

// d(u1 x ... x un) = sum_{i=1}^{n-1} (-1)^i u1 x ... x (u_i u_{i+1}) x ... x un
// (the counit terms of the unreduced differential vanish on the reduced
// complex).
BarChain bar_d(const TruncatedUEA &U, const BarChain &x);

struct BarComplex {
  int W = 0;
  std::map<std::pair<int, int>, std::vector<BarKey>> basis;  // (n, w)
  std::map<std::pair<int, int>, SparseMatrix> diff;          // (n,w)->(n-1,w)

  int dim(int n, int w) const;
  int index_of(int n, int w, const BarKey &key) const;

private:
  friend BarComplex bar_complex(const TruncatedUEA &U, int W);
  std::map<std::pair<int, int>, std::map<BarKey, int>> index_;
};

BarComplex bar_complex(const TruncatedUEA &U, int W);

std::map<std::pair<int, int>, int> bar_homology_ranks(const BarComplex &C);

// Tagged factors for chains over a tensor product of algebras.
using TaggedBarKey = std::vector<std::pair<int, PBWKey>>;
using TaggedBarChain = std::map<TaggedBarKey, Scalar>;

TaggedBarChain tag_chain(const BarChain &x, int tag);
// Eilenberg-MacLane shuffle: all interleavings with the sign of the shuffle
// (every tensor factor has homological degree 1).
TaggedBarChain em_shuffle(const TaggedBarChain &x, const TaggedBarChain &y);

// x1 ^ ... ^ xn -> sum_sigma sign(sigma) x_{sigma(1)} x ... x x_{sigma(n)}
BarChain antisym_embed(const WedgeChain &omega);

struct BarQuasiIsoReport {
  bool pass = true;
  std::string detail;
  std::map<std::pair<int, int>, int> ce_ranks, bar_ranks;
};

// Per-(degree, weight) equality of CE and bar homology ranks, plus the rank
// check that antisym_embed induces an isomorphism.
BarQuasiIsoReport verify_bar_quasiiso(const std::vector<std::string> &A,
                                      int W);

}  // namespace wb

#endif

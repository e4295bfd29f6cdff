#ifndef WB_HOMOLOGY_HPP
#define WB_HOMOLOGY_HPP

#include "wb/bv.hpp"
#include "wb/operadcore.hpp"

#include <map>
#include <string>
#include <vector>

namespace wb {

// Basis element of a graded Lie algebra, addressed as (weight, index).
using BasisId = std::pair<int, int>;
// Wedge monomial: strictly increasing tuple of basis ids.
using WedgeKey = std::vector<BasisId>;
// Linear combination of wedge monomials.
using WedgeChain = std::map<WedgeKey, Scalar>;

void wedge_chain_add(WedgeChain &x, const WedgeKey &k, const Scalar &c);

// Chevalley-Eilenberg chains of L up to total weight W, split into
// (homological degree k, weight w) blocks with one differential matrix per
// block mapping (k,w) -> (k-1,w).
struct ChainComplex {
  AlgebraPtr L;
  int W = 0;
  std::map<std::pair<int, int>, std::vector<WedgeKey>> basis;
  std::map<std::pair<int, int>, SparseMatrix> diff;

  int dim(int k, int w) const;
  int index_of(int k, int w, const WedgeKey &key) const;  // -1 if absent

private:
  friend ChainComplex ce_complex(const AlgebraPtr &L, int W);
  std::map<std::pair<int, int>, std::map<WedgeKey, int>> index_;
};

ChainComplex ce_complex(const AlgebraPtr &L, int W);

// d(x1 ^ ... ^ xk) = sum_{p<q} (-1)^{p+q} [xp,xq] ^ rest; weight-preserving.
WedgeChain ce_d(const GradedLieAlgebra &L, const WedgeChain &x);

// rank H_k[w] for every block of the complex, all exact.
std::map<std::pair<int, int>, int> homology_ranks(const ChainComplex &C);

// x1 ^ y1  etc. with the permutation sign (every factor has odd homological
// degree); repeated factors vanish.
WedgeChain wedge_chain_mul(const WedgeChain &x, const WedgeChain &y);

// factorwise application of a weight-preserving Lie morphism
WedgeChain wedge_apply(const LieMorphism &f, const WedgeChain &x);

// The canonical-basis realization of BV elements as diagonal cycles:
// ab -> 1, [a,b] -> t_ab, Delta a -> s_a, extended operadically.
WedgeChain bv_to_chains(const BVElement &x, const GradedLieAlgebra &L);
// Same recursion on a raw expression (used to test well-definedness).
WedgeChain chains_of_expression(const BVExpression &e,
                                const GradedLieAlgebra &L);

struct QuasiIsoReport {
  bool pass = true;
  std::string offender;
  std::map<std::pair<int, int>, int> ranks;  // (k,w) -> rank H_k[w]
  long total = 0;
  int weight_cap = 0;  // weight window actually used
};

// Checks that the images of bv_basis(A) are cycles, linearly independent
// modulo boundaries, and exhaust the homology: total rank = 2^n n!.  The
// weight window is widened to 2n-1 when needed (diagonal classes reach it).
QuasiIsoReport verify_bv_quasiiso(const std::vector<std::string> &A, int W);

}  // namespace wb

#endif

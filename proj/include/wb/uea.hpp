#ifndef WB_UEA_HPP
#define WB_UEA_HPP

#include "wb/homology.hpp"

#include <map>
#include <vector>

namespace wb {

// PBW monomial: non-decreasing tuple of Lie basis ids ordered by
// (weight, index); the empty tuple is 1.
using PBWKey = std::vector<BasisId>;
using UEAElement = std::map<PBWKey, Scalar>;

int pbw_weight(const PBWKey &k);

void uea_add(UEAElement &x, const PBWKey &k, const Scalar &c);

// U(L) truncated at weight W: products are straightened into the PBW basis
// using L's structure constants, dropping weight > W.
class TruncatedUEA {
public:
  TruncatedUEA(AlgebraPtr L, int W);

  const AlgebraPtr &lie() const { return L_; }
  int W() const { return W_; }

  int dim(int w) const;                        // 0 <= w <= W
  const std::vector<PBWKey> &basis(int w) const;

  UEAElement one() const { return {{PBWKey{}, Scalar(1)}}; }
  UEAElement from_lie(const LieElement &x) const;
  UEAElement mul(const UEAElement &x, const UEAElement &y) const;
  // counit: coefficient of the empty monomial
  Scalar chi(const UEAElement &x) const;

private:
  UEAElement straighten(const std::vector<BasisId> &word) const;

  AlgebraPtr L_;
  int W_;
  std::vector<std::vector<PBWKey>> basis_;  // [w]
  mutable std::map<std::vector<BasisId>, UEAElement> memo_;
};

}  // namespace wb

#endif

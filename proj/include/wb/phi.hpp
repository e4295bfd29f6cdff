#ifndef WB_PHI_HPP
#define WB_PHI_HPP

#include "wb/assoc.hpp"
#include "wb/ribbons.hpp"

namespace wb {

// inverse of an element with counit 1 (geometric series mod truncation)
UEAElement uea_inverse(const TruncatedUEA &U, const UEAElement &u);

// push a UEA element along the algebra morphism induced by a Lie morphism
UEAElement uea_map(const LieMorphism &f, const TruncatedUEA &dst,
                   const UEAElement &u);

// sum of t_{xy} over x in X, y in Y (grouped-strand label)
LieElement t_group(const AlgebraPtr &L, const std::vector<std::string> &X,
                   const std::vector<std::string> &Y);

// Image of a PaRB morphism in U(t~_A) mod weight > N: crossings become
// exp(+-t/2) conjugated by associator corrections, framings become exp(s).
UEAElement phi_image(const RibbonBraidMorphism &m,
                     const AssociatorTruncation &assoc, int N);

// Operadic composition o_a on enveloping-algebra images.
UEAElement uea_insert(const std::string &a, const std::vector<std::string> &A,
                      const std::vector<std::string> &B, int N,
                      const UEAElement &u, const UEAElement &v);

struct PhiReport {
  bool pass = true;
  int checks = 0;
  std::string detail;

  void fail_detail(const std::string &what) {
    if (pass) detail = what;
    pass = false;
  }
};

// Sampled checks: equal morphisms have equal images; images are group-like;
// decomposition through random intermediate objects does not matter; cabling
// matches the insertion maps.
PhiReport verify_phi_functoriality(const AssociatorTruncation &assoc, int N,
                                   int samples, unsigned seed = 20240901);

// The degree <= 1 coefficient identities pinning the induced map on homology
// generators: phi(tau_a) = 1 + s_a + ..., phi(id_(ab)) = 1, and
// phi(beta^2) = 1 + t_ab + ...
PhiReport verify_homology_identity(const AssociatorTruncation &assoc, int N);

}  // namespace wb

#endif

#ifndef WB_ASSOC_HPP
#define WB_ASSOC_HPP

#include "wb/operadcore.hpp"
#include "wb/uea.hpp"

namespace wb {

UEAElement uea_scale(const UEAElement &x, const Scalar &c);

// Truncated exponential of an augmentation-ideal element / logarithm of an
// element with counit 1; mutually inverse modulo weight > W.
UEAElement exp_truncated(const TruncatedUEA &U, const UEAElement &x);
UEAElement log_truncated(const TruncatedUEA &U, const UEAElement &u);

// log u is a Lie element (all PBW monomials of length one)
bool is_grouplike(const TruncatedUEA &U, const UEAElement &u);

// Free Lie algebra on the two associator slots, truncated at weight W.
AlgebraPtr associator_alphabet(int W);

struct AssociatorTruncation {
  int N = 0;
  AlgebraPtr F;        // associator_alphabet(max(N, 1))
  LieElement log_phi;  // supported in weights 2..N
};

// Degree-by-degree exact solve of the pentagon and hexagon equations with
// R = exp(t/2), under the even group-like ansatz; free parameters are 0.
AssociatorTruncation solve_associator(int N);

// Phi(x, y)^{power} in U; x, y are weight-1 Lie elements of U's algebra.
UEAElement eval_associator(const AssociatorTruncation &phi,
                           const TruncatedUEA &U, const LieElement &x,
                           const LieElement &y, int power = 1);

struct AssociatorReport {
  bool pass = true;
  std::string detail;
  bool pentagon = false, hexagon1 = false, hexagon2 = false;
  bool grouplike = false, even = false;
};

AssociatorReport check_associator(const AssociatorTruncation &phi);

std::string associator_to_json(const AssociatorTruncation &phi);
AssociatorTruncation associator_from_json(const std::string &text);

}  // namespace wb

#endif

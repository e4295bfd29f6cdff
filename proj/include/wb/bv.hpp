#ifndef WB_BV_HPP
#define WB_BV_HPP

#include "wb/exactla.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace wb {

// Expression tree over a label set: commutative product, degree-1 bracket,
// the BV operator, and labeled leaves.  Each label must occur exactly once.
struct BVExpression {
  enum Kind { Leaf, Product, Bracket, Delta } kind = Leaf;
  std::string label;                   // Leaf only
  std::vector<BVExpression> children;  // Product >= 2, Bracket == 2, Delta == 1

  static BVExpression leaf(std::string l);
  static BVExpression product(std::vector<BVExpression> f);
  static BVExpression bracket(BVExpression a, BVExpression b);
  static BVExpression delta(BVExpression a);

  void collect_labels(std::set<std::string> &out) const;  // throws on repeats
};

// A label, possibly decorated by the BV operator.
struct DecLetter {
  std::string label;
  bool delta = false;
  auto operator<=>(const DecLetter &) const = default;
  int degree() const { return delta ? 1 : 0; }
};

// One Lie factor of a canonical monomial: a left-normed bracket word
// w1 w2 ... wk = [[..[w1,w2],..],wk] whose first letter is the block minimum.
struct BVBlock {
  std::vector<DecLetter> word;
  auto operator<=>(const BVBlock &) const = default;
  int degree() const;
};

// Canonical monomial: product of blocks sorted by least label.
struct BVMonomial {
  std::vector<BVBlock> blocks;
  auto operator<=>(const BVMonomial &) const = default;
  int degree() const;
};

struct BVElement {
  std::map<BVMonomial, Scalar> terms;
  bool zero() const { return terms.empty(); }
  bool operator==(const BVElement &o) const { return terms == o.terms; }
};

void bv_add(BVElement &x, const BVMonomial &m, const Scalar &c);
void bv_axpy(BVElement &x, const Scalar &c, const BVElement &y);
BVElement bv_scale(const BVElement &x, const Scalar &c);

// The three structure operations on canonical elements.
BVElement bv_product(const BVElement &x, const BVElement &y);
BVElement bv_bracket(const BVElement &x, const BVElement &y);
BVElement bv_delta(const BVElement &x);

// Rewrite an expression into the canonical basis.
BVElement bv_normal_form(const BVExpression &e);

// Evaluate with leaves substituted (operadic composition engine).
BVElement bv_eval(const BVExpression &e,
                  const std::map<std::string, BVElement> &subst);

// All canonical monomials over A; |result| = 2^n n!.
std::vector<BVMonomial> bv_basis(const std::vector<std::string> &A);
// The delta-free (Gerstenhaber) sub-basis; |result| = n!.
std::vector<BVMonomial> g_basis(const std::vector<std::string> &A);

// Substitute y into the slot a of x.
BVElement bv_compose(const BVElement &x, const std::string &a,
                     const BVElement &y);

// Common degree of the terms, or nullopt when inhomogeneous.
std::optional<int> bv_degree(const BVElement &x);

BVExpression monomial_expression(const BVMonomial &m);

std::string to_string(const BVMonomial &m);
std::string to_string(const BVElement &x);
// Inverse of to_string on monomial expressions; accepts the full grammar
// (products with '·' or '*', brackets, 'Δ' or 'D' prefixes).
BVExpression bv_parse(const std::string &text);

}  // namespace wb

#endif

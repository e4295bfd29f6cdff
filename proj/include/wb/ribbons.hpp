#ifndef WB_RIBBONS_HPP
#define WB_RIBBONS_HPP

#include "wb/braid.hpp"

#include <map>
#include <string>
#include <vector>

namespace wb {

// Binary tree with labeled leaves; a leaf has an empty kids vector.
struct PTree {
  std::string leaf;
  std::vector<PTree> kids;
  bool is_leaf() const { return kids.empty(); }
  bool operator==(const PTree &) const = default;
};

PTree pt_leaf(std::string label);
PTree pt_node(PTree left, PTree right);
std::vector<std::string> pt_leaves(const PTree &t);
std::string pt_to_string(const PTree &t);

// All binary trees x leaf labelings over A, deterministic order.
std::vector<PTree> pp_enumerate(const std::vector<std::string> &A);

struct RibbonBraidMorphism {
  PTree dom, cod;
  ArtinWord word;
  std::map<std::string, long> framing;  // absent labels have framing 0

  int strands() const;
  long framing_of(const std::string &label) const;
  bool operator==(const RibbonBraidMorphism &) const = default;
};

// Validates the leaf bijection and that `word` carries the domain leaf
// sequence to the codomain leaf sequence.
RibbonBraidMorphism rb_make(PTree dom, PTree cod, ArtinWord word,
                            std::map<std::string, long> framing = {});
RibbonBraidMorphism rb_identity(const PTree &t);
RibbonBraidMorphism rb_inverse(const RibbonBraidMorphism &m);
// f first, then g.
RibbonBraidMorphism rb_compose(const RibbonBraidMorphism &g,
                               const RibbonBraidMorphism &f);
bool rb_equal(const RibbonBraidMorphism &m1, const RibbonBraidMorphism &m2);

// Replace the ribbon of label a in m by the morphism n (labels of n must be
// fresh).  Crossings of a expand to parallel block crossings; framing k on a
// becomes k full twists of the block and adds k to every framing of n.
RibbonBraidMorphism cable(const RibbonBraidMorphism &m, const std::string &a,
                          const RibbonBraidMorphism &n);

RibbonBraidMorphism rb_relabel(const RibbonBraidMorphism &m,
                               const std::map<std::string, std::string> &f);

RibbonBraidMorphism parb_beta(const std::string &x, const std::string &y);
RibbonBraidMorphism parb_alpha(const std::string &x, const std::string &y,
                               const std::string &z);
RibbonBraidMorphism parb_tau(const std::string &x);

struct ParbGenerators {
  RibbonBraidMorphism beta, alpha, tau;
};
ParbGenerators parb_generators();

std::string rb_to_json(const RibbonBraidMorphism &m);
RibbonBraidMorphism rb_from_json(const std::string &text);

}  // namespace wb

#endif

#include "wb/ribbons.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

#include "json.hpp"

namespace wb {

namespace {

using nlohmann::json;

void collect_leaves(const PTree &t, std::vector<std::string> &out) {
  if (t.is_leaf()) {
    out.push_back(t.leaf);
    return;
  }
  for (auto &k : t.kids) collect_leaves(k, out);
}

std::set<std::string> label_set(const std::vector<std::string> &leaves) {
  std::set<std::string> s(leaves.begin(), leaves.end());
  if (s.size() != leaves.size())
    throw std::invalid_argument("ribbon tree: repeated leaf label");
  return s;
}

// All tree shapes on the given leaf sequence, in split-position order.
std::vector<PTree> shapes(const std::vector<std::string> &leaves, size_t lo,
                          size_t hi) {
  std::vector<PTree> out;
  if (hi - lo == 1) {
    out.push_back(pt_leaf(leaves[lo]));
    return out;
  }
  for (size_t mid = lo + 1; mid < hi; ++mid)
    for (auto &l : shapes(leaves, lo, mid))
      for (auto &r : shapes(leaves, mid, hi)) out.push_back(pt_node(l, r));
  return out;
}

// Positive crossing of a u-strand block over the adjacent v-strand block;
// strands o+1..o+u pass over o+u+1..o+u+v and the blocks stay parallel.
ArtinWord block_crossing(int u, int v, int o) {
  ArtinWord w;
  for (int i = u; i >= 1; --i)
    for (int j = 0; j < v; ++j) w.push_back(o + i + j);
  return w;
}

// k full twists of the block of v strands at offset o (Delta^2 per unit).
ArtinWord block_full_twists(int v, int o, long k) {
  ArtinWord once;
  for (int rep = 0; rep < v; ++rep)
    for (int i = 1; i < v; ++i) once.push_back(o + i);
  ArtinWord w;
  if (k < 0) once = braid_inverse(once);
  for (long r = 0; r < std::labs(k); ++r)
    w.insert(w.end(), once.begin(), once.end());
  return w;
}

PTree graft(const PTree &t, const std::string &a, const PTree &sub) {
  if (t.is_leaf()) return t.leaf == a ? sub : t;
  return pt_node(graft(t.kids[0], a, sub), graft(t.kids[1], a, sub));
}

json tree_to_json(const PTree &t) {
  if (t.is_leaf()) return t.leaf;
  return json::array({tree_to_json(t.kids[0]), tree_to_json(t.kids[1])});
}

PTree tree_from_json(const json &j) {
  if (j.is_string()) return pt_leaf(j.get<std::string>());
  if (!j.is_array() || j.size() != 2)
    throw std::invalid_argument("ribbon json: bad tree node");
  return pt_node(tree_from_json(j[0]), tree_from_json(j[1]));
}

}  // namespace

PTree pt_leaf(std::string label) {
  PTree t;
  t.leaf = std::move(label);
  return t;
}

PTree pt_node(PTree left, PTree right) {
  PTree t;
  t.kids.push_back(std::move(left));
  t.kids.push_back(std::move(right));
  return t;
}

std::vector<std::string> pt_leaves(const PTree &t) {
  std::vector<std::string> out;
  collect_leaves(t, out);
  return out;
}

std::string pt_to_string(const PTree &t) {
  if (t.is_leaf()) return t.leaf;
  return "(" + pt_to_string(t.kids[0]) + " " + pt_to_string(t.kids[1]) + ")";
}

std::vector<PTree> pp_enumerate(const std::vector<std::string> &A) {
  if (A.empty() || A.size() > 5)
    throw std::invalid_argument("pp_enumerate: need 1 <= |A| <= 5");
  std::vector<std::string> perm(A.begin(), A.end());
  std::sort(perm.begin(), perm.end());
  (void)label_set(perm);  // throws on repeated labels
  std::vector<PTree> out;
  do {
    for (auto &t : shapes(perm, 0, perm.size())) out.push_back(std::move(t));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

int RibbonBraidMorphism::strands() const {
  return (int)pt_leaves(dom).size();
}

long RibbonBraidMorphism::framing_of(const std::string &label) const {
  auto it = framing.find(label);
  return it == framing.end() ? 0 : it->second;
}

RibbonBraidMorphism rb_make(PTree dom, PTree cod, ArtinWord word,
                            std::map<std::string, long> framing) {
  auto dl = pt_leaves(dom), cl = pt_leaves(cod);
  auto ds = label_set(dl), cs = label_set(cl);
  if (ds != cs)
    throw std::invalid_argument("rb_make: domain/codomain label mismatch");
  for (auto &[l, k] : framing)
    if (!ds.count(l))
      throw std::invalid_argument("rb_make: framing on unknown label " + l);
  int n = (int)dl.size();
  auto pi = word_permutation(word, n);
  for (int i = 0; i < n; ++i)
    if (cl[pi[i]] != dl[i])
      throw std::invalid_argument(
          "rb_make: word does not carry the domain order to the codomain");
  RibbonBraidMorphism m;
  m.dom = std::move(dom);
  m.cod = std::move(cod);
  m.word = std::move(word);
  for (auto &[l, k] : framing)
    if (k != 0) m.framing.emplace(l, k);
  return m;
}

RibbonBraidMorphism rb_identity(const PTree &t) {
  return rb_make(t, t, {});
}

RibbonBraidMorphism rb_inverse(const RibbonBraidMorphism &m) {
  std::map<std::string, long> fr;
  for (auto &[l, k] : m.framing) fr[l] = -k;
  return rb_make(m.cod, m.dom, braid_inverse(m.word), std::move(fr));
}

RibbonBraidMorphism rb_compose(const RibbonBraidMorphism &g,
                               const RibbonBraidMorphism &f) {
  if (!(f.cod == g.dom))
    throw std::invalid_argument("rb_compose: codomain/domain mismatch");
  ArtinWord w = f.word;
  w.insert(w.end(), g.word.begin(), g.word.end());
  std::map<std::string, long> fr = f.framing;
  for (auto &[l, k] : g.framing) fr[l] += k;
  return rb_make(f.dom, g.cod, std::move(w), std::move(fr));
}

bool rb_equal(const RibbonBraidMorphism &m1, const RibbonBraidMorphism &m2) {
  if (!(m1.dom == m2.dom) || !(m1.cod == m2.cod))
    throw std::invalid_argument("rb_equal: object mismatch");
  for (auto &l : pt_leaves(m1.dom))
    if (m1.framing_of(l) != m2.framing_of(l)) return false;
  ArtinWord w = m1.word;
  auto inv = braid_inverse(m2.word);
  w.insert(w.end(), inv.begin(), inv.end());
  return braid_trivial(w, m1.strands());
}

RibbonBraidMorphism cable(const RibbonBraidMorphism &m, const std::string &a,
                          const RibbonBraidMorphism &n) {
  auto A = pt_leaves(m.dom);
  if (std::find(A.begin(), A.end(), a) == A.end())
    throw std::invalid_argument("cable: label not in the outer morphism");
  auto B = pt_leaves(n.dom);
  std::set<std::string> bset(B.begin(), B.end());
  for (auto &l : A)
    if (l != a && bset.count(l))
      throw std::invalid_argument("cable: label clash on " + l);
  int nb = (int)B.size();
  long k = m.framing_of(a);

  auto width = [&](const std::string &l) { return l == a ? nb : 1; };
  std::vector<std::string> cur = pt_leaves(m.dom);
  auto offset_of = [&](int pos) {
    int o = 0;
    for (int q = 0; q < pos; ++q) o += width(cur[q]);
    return o;
  };

  ArtinWord word;
  int o0 = offset_of((int)(std::find(cur.begin(), cur.end(), a) -
                           cur.begin()));
  for (int letter : n.word) word.push_back(letter > 0 ? letter + o0
                                                      : letter - o0);
  auto tw = block_full_twists(nb, o0, k);
  word.insert(word.end(), tw.begin(), tw.end());
  for (int letter : m.word) {
    int p = std::abs(letter);
    int o = offset_of(p - 1);
    int u = width(cur[p - 1]), v = width(cur[p]);
    ArtinWord blk = letter > 0 ? block_crossing(u, v, o)
                               : braid_inverse(block_crossing(v, u, o));
    word.insert(word.end(), blk.begin(), blk.end());
    std::swap(cur[p - 1], cur[p]);
  }

  std::map<std::string, long> fr;
  for (auto &l : A)
    if (l != a && m.framing_of(l) != 0) fr[l] = m.framing_of(l);
  for (auto &l : B) fr[l] = n.framing_of(l) + k;
  return rb_make(graft(m.dom, a, n.dom), graft(m.cod, a, n.cod),
                 std::move(word), std::move(fr));
}

RibbonBraidMorphism rb_relabel(const RibbonBraidMorphism &m,
                               const std::map<std::string, std::string> &f) {
  auto rename = [&](const std::string &l) {
    auto it = f.find(l);
    return it == f.end() ? l : it->second;
  };
  auto rec = [&](auto &&self, const PTree &t) -> PTree {
    if (t.is_leaf()) return pt_leaf(rename(t.leaf));
    return pt_node(self(self, t.kids[0]), self(self, t.kids[1]));
  };
  std::map<std::string, long> fr;
  for (auto &[l, v] : m.framing) fr[rename(l)] += v;
  return rb_make(rec(rec, m.dom), rec(rec, m.cod), m.word, std::move(fr));
}

RibbonBraidMorphism parb_beta(const std::string &x, const std::string &y) {
  return rb_make(pt_node(pt_leaf(x), pt_leaf(y)),
                 pt_node(pt_leaf(y), pt_leaf(x)), {1});
}

RibbonBraidMorphism parb_alpha(const std::string &x, const std::string &y,
                               const std::string &z) {
  return rb_make(pt_node(pt_node(pt_leaf(x), pt_leaf(y)), pt_leaf(z)),
                 pt_node(pt_leaf(x), pt_node(pt_leaf(y), pt_leaf(z))), {});
}

RibbonBraidMorphism parb_tau(const std::string &x) {
  return rb_make(pt_leaf(x), pt_leaf(x), {}, {{x, 1}});
}

ParbGenerators parb_generators() {
  return {parb_beta("x", "y"), parb_alpha("x", "y", "z"), parb_tau("x")};
}

std::string rb_to_json(const RibbonBraidMorphism &m) {
  json j;
  j["domain"] = tree_to_json(m.dom);
  j["codomain"] = tree_to_json(m.cod);
  j["word"] = braid_word_to_string(m.word);
  j["framings"] = json::object();
  for (auto &[l, k] : m.framing) j["framings"][l] = k;
  return j.dump();
}

RibbonBraidMorphism rb_from_json(const std::string &text) {
  json j = json::parse(text);
  std::map<std::string, long> fr;
  for (auto &[l, k] : j.at("framings").items()) fr[l] = k.get<long>();
  return rb_make(tree_from_json(j.at("domain")),
                 tree_from_json(j.at("codomain")),
                 braid_word_parse(j.at("word").get<std::string>()),
                 std::move(fr));
}

}  // namespace wb

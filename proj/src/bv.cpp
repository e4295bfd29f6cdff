#include "wb/bv.hpp"

#include "wb/operadcore.hpp"

#include <algorithm>
#include <stdexcept>

namespace wb {

// ---------------------------------------------------------------------------
// expressions

BVExpression BVExpression::leaf(std::string l) {
  BVExpression e;
  e.kind = Leaf;
  e.label = std::move(l);
  return e;
}

BVExpression BVExpression::product(std::vector<BVExpression> f) {
  if (f.size() < 2)
    throw std::invalid_argument("product needs at least two factors");
  BVExpression e;
  e.kind = Product;
  e.children = std::move(f);
  return e;
}

BVExpression BVExpression::bracket(BVExpression a, BVExpression b) {
  BVExpression e;
  e.kind = Bracket;
  e.children.push_back(std::move(a));
  e.children.push_back(std::move(b));
  return e;
}

BVExpression BVExpression::delta(BVExpression a) {
  BVExpression e;
  e.kind = Delta;
  e.children.push_back(std::move(a));
  return e;
}

void BVExpression::collect_labels(std::set<std::string> &out) const {
  if (kind == Leaf) {
    if (!out.insert(label).second)
      throw std::invalid_argument("label used twice: " + label);
    return;
  }
  for (auto &c : children) c.collect_labels(out);
}

int BVBlock::degree() const {
  int d = (int)word.size() - 1;
  for (auto &l : word) d += l.degree();
  return d;
}

int BVMonomial::degree() const {
  int d = 0;
  for (auto &b : blocks) d += b.degree();
  return d;
}

void bv_add(BVElement &x, const BVMonomial &m, const Scalar &c) {
  if (c == 0) return;
  auto it = x.terms.find(m);
  if (it == x.terms.end()) {
    x.terms.emplace(m, c);
  } else {
    it->second += c;
    if (it->second == 0) x.terms.erase(it);
  }
}

void bv_axpy(BVElement &x, const Scalar &c, const BVElement &y) {
  if (c == 0) return;
  for (auto &[m, v] : y.terms) bv_add(x, m, c * v);
}

BVElement bv_scale(const BVElement &x, const Scalar &c) {
  BVElement r;
  bv_axpy(r, c, x);
  return r;
}

// ---------------------------------------------------------------------------
// canonical-block Lie arithmetic via the free associative superalgebra.
// The relevant parity of a factor is its shifted degree |x|+1: plain letters
// are odd, decorated letters even.

namespace {

int letter_parity(const DecLetter &l) { return (l.degree() + 1) & 1; }

int word_parity(const std::vector<DecLetter> &w) {
  int p = 0;
  for (auto &l : w) p ^= letter_parity(l);
  return p;
}

using AssocWord = std::vector<DecLetter>;
using AssocElt = std::map<AssocWord, Scalar>;

void assoc_add(AssocElt &e, const AssocWord &w, const Scalar &c) {
  if (c == 0) return;
  auto it = e.find(w);
  if (it == e.end()) {
    e.emplace(w, c);
  } else {
    it->second += c;
    if (it->second == 0) e.erase(it);
  }
}

AssocElt assoc_concat(const AssocElt &a, const AssocElt &b) {
  AssocElt r;
  for (auto &[u, cu] : a)
    for (auto &[v, cv] : b) {
      AssocWord w = u;
      w.insert(w.end(), v.begin(), v.end());
      assoc_add(r, w, cu * cv);
    }
  return r;
}

// super-commutator [a, b] with a, b homogeneous of the given parities
AssocElt assoc_commutator(const AssocElt &a, int pa, const AssocElt &b,
                          int pb) {
  AssocElt r = assoc_concat(a, b);
  Scalar s = (pa && pb) ? 1 : -1;
  for (auto &[w, c] : assoc_concat(b, a)) assoc_add(r, w, s * c);
  return r;
}

// expansion of the left-normed bracket word
AssocElt expand_word(const std::vector<DecLetter> &w) {
  AssocElt e{{AssocWord{w[0]}, Scalar(1)}};
  int pe = letter_parity(w[0]);
  for (size_t i = 1; i < w.size(); ++i) {
    AssocElt li{{AssocWord{w[i]}, Scalar(1)}};
    e = assoc_commutator(e, pe, li, letter_parity(w[i]));
    pe ^= letter_parity(w[i]);
  }
  return e;
}

// canonical basis of the multilinear Lie component on a sorted letter set:
// all words beginning with the least letter
std::vector<AssocWord> canonical_words(const std::vector<DecLetter> &sorted) {
  std::vector<AssocWord> out;
  AssocWord rest(sorted.begin() + 1, sorted.end());
  do {
    AssocWord w{sorted[0]};
    w.insert(w.end(), rest.begin(), rest.end());
    out.push_back(w);
  } while (std::next_permutation(rest.begin(), rest.end()));
  return out;
}

// express a multilinear Lie element (associative coordinates) in the
// canonical word basis
std::vector<std::pair<BVBlock, Scalar>> lie_to_blocks(
    const AssocElt &x, const std::vector<DecLetter> &sorted) {
  std::vector<std::pair<BVBlock, Scalar>> out;
  if (x.empty()) return out;
  auto basis = canonical_words(sorted);
  std::map<AssocWord, int> rowid;
  std::vector<AssocElt> expans;
  for (auto &w : basis) {
    expans.push_back(expand_word(w));
    for (auto &[aw, c] : expans.back()) rowid.emplace(aw, (int)rowid.size());
  }
  for (auto &[aw, c] : x) rowid.emplace(aw, (int)rowid.size());
  SparseMatrix m((int)rowid.size(), (int)basis.size());
  for (int j = 0; j < (int)basis.size(); ++j)
    for (auto &[aw, c] : expans[j]) m.set(rowid[aw], j, c);
  SparseVec b;
  for (auto &[aw, c] : x) b[rowid[aw]] = c;
  auto sol = solve(m, b);
  if (!sol) throw std::logic_error("lie_to_blocks: not a Lie element");
  for (auto &[j, c] : *sol) out.push_back({BVBlock{basis[j]}, c});
  return out;
}

// [B, C] for single blocks with disjoint letters
std::vector<std::pair<BVBlock, Scalar>> block_bracket(const BVBlock &b,
                                                      const BVBlock &c) {
  AssocElt u = expand_word(b.word), v = expand_word(c.word);
  AssocElt br =
      assoc_commutator(u, word_parity(b.word), v, word_parity(c.word));
  std::vector<DecLetter> letters = b.word;
  letters.insert(letters.end(), c.word.begin(), c.word.end());
  std::sort(letters.begin(), letters.end());
  return lie_to_blocks(br, letters);
}

BVMonomial single(const BVBlock &b) { return BVMonomial{{b}}; }

// merge block lists sorted by least label, collecting the Koszul sign
std::pair<BVMonomial, Scalar> merge_monomials(const BVMonomial &x,
                                              const BVMonomial &y) {
  BVMonomial r;
  Scalar sign = 1;
  size_t i = 0, j = 0;
  int pending = 0;  // parity of x-blocks not yet placed
  for (auto &b : x.blocks) pending ^= b.degree() & 1;
  while (i < x.blocks.size() && j < y.blocks.size()) {
    if (x.blocks[i].word[0].label < y.blocks[j].word[0].label) {
      pending ^= x.blocks[i].degree() & 1;
      r.blocks.push_back(x.blocks[i++]);
    } else {
      if (pending && (y.blocks[j].degree() & 1)) sign = -sign;
      r.blocks.push_back(y.blocks[j++]);
    }
  }
  while (i < x.blocks.size()) r.blocks.push_back(x.blocks[i++]);
  while (j < y.blocks.size()) r.blocks.push_back(y.blocks[j++]);
  return {std::move(r), sign};
}

BVElement mono_product(const BVMonomial &x, const BVMonomial &y,
                       const Scalar &c) {
  auto [m, s] = merge_monomials(x, y);
  BVElement r;
  bv_add(r, m, c * s);
  return r;
}

BVElement mono_bracket(const BVMonomial &p, const BVMonomial &q);

BVElement elt_bracket(const BVElement &x, const BVElement &y) {
  BVElement r;
  for (auto &[p, cp] : x.terms)
    for (auto &[q, cq] : y.terms) bv_axpy(r, cp * cq, mono_bracket(p, q));
  return r;
}

BVElement elt_product(const BVElement &x, const BVElement &y) {
  BVElement r;
  for (auto &[p, cp] : x.terms)
    for (auto &[q, cq] : y.terms) bv_axpy(r, cp * cq, mono_product(p, q, 1));
  return r;
}

BVElement mono_bracket(const BVMonomial &p, const BVMonomial &q) {
  BVElement r;
  if (p.blocks.empty() || q.blocks.empty()) return r;  // [x, 1] = 0
  if (p.blocks.size() == 1 && q.blocks.size() == 1) {
    for (auto &[blk, c] : block_bracket(p.blocks[0], q.blocks[0]))
      bv_add(r, single(blk), c);
    return r;
  }
  if (p.blocks.size() > 1) {
    // [ab, c] = a[b,c] + (-1)^{(|c|+1)|b|} [a,c] b
    BVMonomial a = single(p.blocks[0]);
    BVMonomial b{{p.blocks.begin() + 1, p.blocks.end()}};
    r = elt_product(BVElement{{{a, 1}}}, mono_bracket(b, q));
    Scalar s = (((q.degree() + 1) * b.degree()) % 2) ? -1 : 1;
    bv_axpy(r, s,
            elt_product(mono_bracket(a, q), BVElement{{{b, 1}}}));
    return r;
  }
  // p single, q multi: [x, yz] = [x,y]z + (-1)^{(|x|+1)|y|} y [x,z]
  BVMonomial yb = single(q.blocks[0]);
  BVMonomial z{{q.blocks.begin() + 1, q.blocks.end()}};
  r = elt_product(mono_bracket(p, yb), BVElement{{{z, 1}}});
  Scalar s = (((p.degree() + 1) * yb.degree()) % 2) ? -1 : 1;
  bv_axpy(r, s, elt_product(BVElement{{{yb, 1}}}, mono_bracket(p, z)));
  return r;
}

BVElement word_delta(const std::vector<DecLetter> &w) {
  BVElement r;
  if (w.size() == 1) {
    if (w[0].delta) return r;  // Delta^2 = 0
    bv_add(r, single(BVBlock{{DecLetter{w[0].label, true}}}), 1);
    return r;
  }
  // Delta[x,y] = [Delta x, y] - (-1)^{|x|} [x, Delta y]
  std::vector<DecLetter> prefix(w.begin(), w.end() - 1);
  BVBlock xb{prefix}, yb{{w.back()}};
  BVElement dx = word_delta(prefix);
  BVElement dy = word_delta({w.back()});
  r = elt_bracket(dx, BVElement{{{single(yb), 1}}});
  Scalar s = (xb.degree() % 2) ? 1 : -1;
  bv_axpy(r, s, elt_bracket(BVElement{{{single(xb), 1}}}, dy));
  return r;
}

BVElement mono_delta(const BVMonomial &m) {
  BVElement r;
  if (m.blocks.empty()) return r;  // Delta(1) = 0
  if (m.blocks.size() == 1) return word_delta(m.blocks[0].word);
  // Delta(xy) = (-1)^{|x|}[x,y] + (Delta x) y + (-1)^{|x|} x (Delta y)
  BVMonomial x = single(m.blocks[0]);
  BVMonomial y{{m.blocks.begin() + 1, m.blocks.end()}};
  Scalar s = (x.degree() % 2) ? -1 : 1;
  r = bv_scale(mono_bracket(x, y), s);
  bv_axpy(r, 1, elt_product(mono_delta(x), BVElement{{{y, 1}}}));
  bv_axpy(r, s, elt_product(BVElement{{{x, 1}}}, mono_delta(y)));
  return r;
}

}  // namespace

BVElement bv_product(const BVElement &x, const BVElement &y) {
  return elt_product(x, y);
}
BVElement bv_bracket(const BVElement &x, const BVElement &y) {
  return elt_bracket(x, y);
}
BVElement bv_delta(const BVElement &x) {
  BVElement r;
  for (auto &[m, c] : x.terms) bv_axpy(r, c, mono_delta(m));
  return r;
}

BVElement bv_eval(const BVExpression &e,
                  const std::map<std::string, BVElement> &subst) {
  switch (e.kind) {
    case BVExpression::Leaf: {
      auto it = subst.find(e.label);
      if (it != subst.end()) return it->second;
      BVElement r;
      bv_add(r, single(BVBlock{{DecLetter{e.label, false}}}), 1);
      return r;
    }
    case BVExpression::Product: {
      BVElement r = bv_eval(e.children[0], subst);
      for (size_t i = 1; i < e.children.size(); ++i)
        r = elt_product(r, bv_eval(e.children[i], subst));
      return r;
    }
    case BVExpression::Bracket:
      return elt_bracket(bv_eval(e.children[0], subst),
                         bv_eval(e.children[1], subst));
    case BVExpression::Delta:
      return bv_delta(bv_eval(e.children[0], subst));
  }
  throw std::logic_error("bv_eval: bad expression");
}

BVElement bv_normal_form(const BVExpression &e) {
  std::set<std::string> labels;
  e.collect_labels(labels);  // throws on repeated labels
  return bv_eval(e, {});
}

std::vector<BVMonomial> bv_basis(const std::vector<std::string> &A) {
  if (A.empty()) throw std::invalid_argument("bv_basis: empty label set");
  std::vector<std::string> ls = A;
  std::sort(ls.begin(), ls.end());
  int n = (int)ls.size();

  // enumerate set partitions
  std::vector<std::vector<std::vector<int>>> partitions;
  std::vector<std::vector<int>> cur;
  auto rec = [&](auto &&self, int i) -> void {
    if (i == n) {
      partitions.push_back(cur);
      return;
    }
    for (size_t b = 0, nb = cur.size(); b < nb; ++b) {
      cur[b].push_back(i);
      self(self, i + 1);
      cur[b].pop_back();
    }
    cur.push_back({i});
    self(self, i + 1);
    cur.pop_back();
  };
  rec(rec, 0);

  std::vector<BVMonomial> out;
  for (int mask = 0; mask < (1 << n); ++mask) {
    auto dec = [&](int i) { return DecLetter{ls[i], ((mask >> i) & 1) != 0}; };
    for (auto &part : partitions) {
      // per block: the minimum first, all orders of the rest
      std::vector<std::vector<BVBlock>> choices;
      for (auto &blk : part) {
        std::vector<int> rest(blk.begin() + 1, blk.end());
        std::sort(rest.begin(), rest.end());
        std::vector<BVBlock> words;
        do {
          BVBlock b;
          b.word.push_back(dec(blk[0]));
          for (int i : rest) b.word.push_back(dec(i));
          words.push_back(std::move(b));
        } while (std::next_permutation(rest.begin(), rest.end()));
        choices.push_back(std::move(words));
      }
      std::vector<size_t> pick(choices.size(), 0);
      for (;;) {
        BVMonomial m;
        for (size_t b = 0; b < choices.size(); ++b)
          m.blocks.push_back(choices[b][pick[b]]);
        std::sort(m.blocks.begin(), m.blocks.end(),
                  [](const BVBlock &x, const BVBlock &y) {
                    return x.word[0].label < y.word[0].label;
                  });
        out.push_back(std::move(m));
        size_t b = 0;
        while (b < pick.size() && ++pick[b] == choices[b].size())
          pick[b++] = 0;
        if (b == pick.size()) break;
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<BVMonomial> g_basis(const std::vector<std::string> &A) {
  std::vector<BVMonomial> out;
  for (auto &m : bv_basis(A)) {
    bool plain = true;
    for (auto &b : m.blocks)
      for (auto &l : b.word) plain &= !l.delta;
    if (plain) out.push_back(m);
  }
  return out;
}

BVExpression monomial_expression(const BVMonomial &m) {
  auto letter = [](const DecLetter &l) {
    BVExpression e = BVExpression::leaf(l.label);
    return l.delta ? BVExpression::delta(std::move(e)) : e;
  };
  std::vector<BVExpression> factors;
  for (auto &b : m.blocks) {
    BVExpression e = letter(b.word[0]);
    for (size_t i = 1; i < b.word.size(); ++i)
      e = BVExpression::bracket(std::move(e), letter(b.word[i]));
    factors.push_back(std::move(e));
  }
  if (factors.size() == 1) return factors[0];
  return BVExpression::product(std::move(factors));
}

// ---------------------------------------------------------------------------
// operadic composition.
//
// Plain leaf substitution is not associative once elements of odd degree are
// substituted (the canonical basis hides suspension signs), so composition is
// computed in a faithful linear model instead: a degree-k monomial maps to a
// wedge of k weight-1 generators of t~ over its label set, composition is the
// wedge of the images under the insert_map morphism pair, and the result is
// solved back against the images of the canonical basis.  Associativity and
// equivariance are then inherited from the t~ operad.

namespace {

std::set<std::string> element_labels(const BVElement &x) {
  std::set<std::string> ls;
  if (x.terms.empty()) return ls;
  for (auto &b : x.terms.begin()->first.blocks)
    for (auto &l : b.word) ls.insert(l.label);
  for (auto &[m, c] : x.terms) {
    std::set<std::string> other;
    for (auto &b : m.blocks)
      for (auto &l : b.word) other.insert(l.label);
    if (other != ls)
      throw std::invalid_argument("bv element mixes label sets");
  }
  return ls;
}

// wedges of weight-1 basis elements of t~, tuples strictly increasing
using Wedge = std::map<std::vector<int>, Scalar>;

void wedge_add(Wedge &w, const std::vector<int> &k, const Scalar &c) {
  if (c == 0) return;
  auto it = w.find(k);
  if (it == w.end()) {
    w.emplace(k, c);
  } else {
    it->second += c;
    if (it->second == 0) w.erase(it);
  }
}

// f /\ w for a weight-1 linear form f
Wedge wedge_mul_linear(const SparseVec &f, const Wedge &w) {
  Wedge r;
  for (auto &[g, cf] : f)
    for (auto &[tup, cw] : w) {
      auto pos = std::lower_bound(tup.begin(), tup.end(), g);
      if (pos != tup.end() && *pos == g) continue;  // repeated factor
      std::vector<int> t2(tup.begin(), pos);
      t2.push_back(g);
      t2.insert(t2.end(), pos, tup.end());
      Scalar sign = ((pos - tup.begin()) % 2) ? -1 : 1;
      wedge_add(r, t2, sign * cf * cw);
    }
  return r;
}

Wedge wedge_mul(const Wedge &a, const Wedge &b) {
  Wedge r;
  for (auto &[u, cu] : a)
    for (auto &[v, cv] : b) {
      // merge with the permutation sign; drop repeated factors
      std::vector<int> t;
      Scalar sign = 1;
      size_t i = 0, j = 0;
      bool dead = false;
      while (i < u.size() && j < v.size()) {
        if (u[i] == v[j]) {
          dead = true;
          break;
        }
        if (u[i] < v[j]) {
          t.push_back(u[i++]);
        } else {
          if ((u.size() - i) % 2) sign = -sign;
          t.push_back(v[j++]);
        }
      }
      if (dead) continue;
      while (i < u.size()) t.push_back(u[i++]);
      while (j < v.size()) t.push_back(v[j++]);
      wedge_add(r, t, sign * cu * cv);
    }
  return r;
}

int expr_degree(const BVExpression &e) {
  switch (e.kind) {
    case BVExpression::Leaf:
      return 0;
    case BVExpression::Product: {
      int d = 0;
      for (auto &c : e.children) d += expr_degree(c);
      return d;
    }
    case BVExpression::Bracket:
      return 1 + expr_degree(e.children[0]) + expr_degree(e.children[1]);
    case BVExpression::Delta:
      return 1 + expr_degree(e.children[0]);
  }
  return 0;
}

// Image of an expression as a diagonal wedge chain over the algebra L.  The
// (-1)^{deg of the first bracket argument} factor is forced by requiring the
// map to descend to the canonical-basis quotient (it makes the images of both
// sides of the Jacobi, Leibniz and Delta relations agree on the nose).
Wedge img_expr(const BVExpression &e, const GradedLieAlgebra &L) {
  auto t_form = [&](const std::set<std::string> &X,
                    const std::set<std::string> &Y) {
    SparseVec f;
    for (auto &x : X)
      for (auto &y : Y)
        f[L.generator_index(GeneratorSymbol::t(x, y))] += 1;
    return f;
  };
  switch (e.kind) {
    case BVExpression::Leaf:
      return Wedge{{{}, Scalar(1)}};
    case BVExpression::Product: {
      Wedge r = img_expr(e.children[0], L);
      for (size_t i = 1; i < e.children.size(); ++i)
        r = wedge_mul(r, img_expr(e.children[i], L));
      return r;
    }
    case BVExpression::Bracket: {
      std::set<std::string> X, Y;
      e.children[0].collect_labels(X);
      e.children[1].collect_labels(Y);
      Wedge r = wedge_mul(img_expr(e.children[0], L),
                          img_expr(e.children[1], L));
      r = wedge_mul_linear(t_form(X, Y), r);
      if (expr_degree(e.children[0]) % 2)
        for (auto &[tup, c] : r) c = -c;
      return r;
    }
    case BVExpression::Delta: {
      std::set<std::string> X;
      e.children[0].collect_labels(X);
      SparseVec f;
      for (auto &x : X) f[L.generator_index(GeneratorSymbol::s(x))] += 1;
      for (auto &x : X)
        for (auto &y : X)
          if (x < y) f[L.generator_index(GeneratorSymbol::t(x, y))] += 1;
      return wedge_mul_linear(f, img_expr(e.children[0], L));
    }
  }
  throw std::logic_error("img_expr: bad expression");
}

Wedge img_element(const BVElement &x, const GradedLieAlgebra &L) {
  Wedge r;
  for (auto &[m, c] : x.terms)
    for (auto &[tup, cw] : img_expr(monomial_expression(m), L))
      wedge_add(r, tup, c * cw);
  return r;
}

// apply a weight-1 generator substitution factorwise
Wedge wedge_map(const std::vector<SparseVec> &gen_image, const Wedge &w) {
  Wedge r;
  for (auto &[tup, c] : w) {
    Wedge t{{{}, c}};
    for (auto it = tup.rbegin(); it != tup.rend(); ++it)
      t = wedge_mul_linear(gen_image[*it], t);
    for (auto &[t2, c2] : t) wedge_add(r, t2, c2);
  }
  return r;
}

std::vector<SparseVec> weight1_images(const LieMorphism &f) {
  std::vector<SparseVec> out;
  for (int g = 0; g < f.src()->num_generators(); ++g) {
    auto it = f.gen_image(g).comp.find(1);
    out.push_back(it == f.gen_image(g).comp.end() ? SparseVec{} : it->second);
  }
  return out;
}

}  // namespace

BVElement bv_compose(const BVElement &x, const std::string &a,
                     const BVElement &y) {
  BVElement r;
  if (x.terms.empty() || y.terms.empty()) return r;
  auto As = element_labels(x), Bs = element_labels(y);
  if (!As.count(a)) throw std::invalid_argument("bv_compose: slot not present");
  for (auto &l : Bs)
    if (As.count(l) && l != a)
      throw std::invalid_argument("bv_compose: label clash on " + l);

  std::vector<std::string> A(As.begin(), As.end()), B(Bs.begin(), Bs.end());
  std::vector<std::string> C;
  for (auto &l : A)
    if (l != a) C.push_back(l);
  C.insert(C.end(), B.begin(), B.end());
  std::sort(C.begin(), C.end());

  auto LA = t_tilde(A, 1);
  auto LB = t_tilde(B, 1);
  auto LC = t_tilde(C, 1);
  auto ins = insert_map(a, A, B, 1);
  Wedge c = wedge_mul(
      wedge_map(weight1_images(ins.from_ambient), img_element(x, *LA)),
      wedge_map(weight1_images(ins.from_inserted), img_element(y, *LB)));

  // express the composite against the images of the canonical basis
  auto basis = bv_basis(C);
  std::map<std::vector<int>, int> rowid;
  std::vector<Wedge> cols;
  for (auto &m : basis) {
    BVElement e;
    bv_add(e, m, 1);
    cols.push_back(img_element(e, *LC));
    for (auto &[tup, cc] : cols.back()) rowid.emplace(tup, (int)rowid.size());
  }
  for (auto &[tup, cc] : c) rowid.emplace(tup, (int)rowid.size());
  SparseMatrix M((int)rowid.size(), (int)basis.size());
  for (int j = 0; j < (int)cols.size(); ++j)
    for (auto &[tup, cc] : cols[j]) M.set(rowid[tup], j, cc);
  SparseVec rhs;
  for (auto &[tup, cc] : c) rhs[rowid[tup]] = cc;
  auto sol = solve(M, rhs);
  if (!sol)
    throw std::logic_error("bv_compose: composite not in the basis span");
  for (auto &[j, cc] : *sol) bv_add(r, basis[j], cc);
  return r;
}

std::optional<int> bv_degree(const BVElement &x) {
  if (x.terms.empty()) return 0;
  int d = x.terms.begin()->first.degree();
  for (auto &[m, c] : x.terms)
    if (m.degree() != d) return std::nullopt;
  return d;
}

// ---------------------------------------------------------------------------
// text form

namespace {

std::string letter_str(const DecLetter &l) {
  return l.delta ? "Δ" + l.label : l.label;
}

}  // namespace

std::string to_string(const BVMonomial &m) {
  std::string s;
  for (size_t b = 0; b < m.blocks.size(); ++b) {
    if (b) s += "·";
    auto &w = m.blocks[b].word;
    std::string bs = letter_str(w[0]);
    for (size_t i = 1; i < w.size(); ++i)
      bs = "[" + bs + "," + letter_str(w[i]) + "]";
    s += bs;
  }
  return s.empty() ? "1" : s;
}

std::string to_string(const BVElement &x) {
  if (x.terms.empty()) return "0";
  std::string s;
  for (auto &[m, c] : x.terms) {
    if (!s.empty()) s += " + ";
    if (c != 1) s += c.get_str() + "·";
    s += to_string(m);
  }
  return s;
}

namespace {

struct Parser {
  const std::string &s;
  size_t i = 0;

  void skip() {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
  }
  bool eat(const std::string &tok) {
    skip();
    if (s.compare(i, tok.size(), tok) == 0) {
      i += tok.size();
      return true;
    }
    return false;
  }
  BVExpression factor() {
    skip();
    if (eat("Δ") || eat("D")) return BVExpression::delta(factor());
    if (eat("[")) {
      BVExpression a = expr();
      if (!eat(",")) throw std::invalid_argument("bv_parse: expected ','");
      BVExpression b = expr();
      if (!eat("]")) throw std::invalid_argument("bv_parse: expected ']'");
      return BVExpression::bracket(std::move(a), std::move(b));
    }
    if (eat("(")) {
      BVExpression e = expr();
      if (!eat(")")) throw std::invalid_argument("bv_parse: expected ')'");
      return e;
    }
    size_t start = i;
    while (i < s.size() && (isalnum((unsigned char)s[i]) || s[i] == '_')) ++i;
    if (i == start) throw std::invalid_argument("bv_parse: expected a label");
    return BVExpression::leaf(s.substr(start, i - start));
  }
  BVExpression expr() {
    std::vector<BVExpression> factors;
    factors.push_back(factor());
    while (eat("·") || eat("*")) factors.push_back(factor());
    if (factors.size() == 1) return factors[0];
    return BVExpression::product(std::move(factors));
  }
};

}  // namespace

BVExpression bv_parse(const std::string &text) {
  Parser p{text};
  BVExpression e = p.expr();
  p.skip();
  if (p.i != text.size())
    throw std::invalid_argument("bv_parse: trailing input");
  return e;
}

}  // namespace wb

#include "wb/liealg.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace wb {

GeneratorSymbol GeneratorSymbol::t(std::string x, std::string y) {
  if (x == y) throw std::invalid_argument("t_{ab} needs distinct labels");
  if (y < x) std::swap(x, y);
  return GeneratorSymbol{T, std::move(x), std::move(y)};
}

GeneratorSymbol GeneratorSymbol::s(std::string x) {
  return GeneratorSymbol{S, std::move(x), ""};
}

std::string GeneratorSymbol::name() const {
  return kind == T ? "t_" + a + b : "s_" + a;
}

// ---------------------------------------------------------------------------
// FreeLie

FreeLie::FreeLie(int k, int maxw) : k_(k), maxw_(maxw) {
  if (k < 1 || maxw < 1) throw std::invalid_argument("FreeLie: bad parameters");
  words_.resize(maxw + 1);
  expansions_.resize(maxw + 1);
  for (int w = 1; w <= maxw; ++w) {
    words_[w] = lyndon_words(k, w);
    for (auto &lw : words_[w]) expansions_[w].push_back(lyndon_expansion(lw));
  }
}

const std::vector<Word> &FreeLie::words(int w) const {
  if (w < 1 || w > maxw_) throw std::out_of_range("FreeLie::words");
  return words_[w];
}

FreeLieElement FreeLie::generator(int g) const {
  if (g < 0 || g >= k_) throw std::out_of_range("FreeLie::generator");
  FreeLieElement e;
  e.alphabet = k_;
  e.comp[1][g] = 1;
  return e;
}

Tensor FreeLie::to_tensor(const FreeLieElement &u) const {
  Tensor t;
  for (auto &[w, coords] : u.comp)
    for (auto &[i, c] : coords) tensor_axpy(t, c, expansions_[w][i]);
  return t;
}

SparseVec FreeLie::from_tensor(int w, const Tensor &t) const {
  if (t.empty()) return {};
  // rows: words appearing in the expansions (a superset of supp(t) for any
  // genuine Lie element)
  std::map<Word, int> rowid;
  for (auto &e : expansions_[w])
    for (auto &[word, c] : e)
      rowid.emplace(word, (int)rowid.size());
  SparseMatrix m((int)rowid.size(), (int)words_[w].size());
  for (int i = 0; i < (int)words_[w].size(); ++i)
    for (auto &[word, c] : expansions_[w][i]) m.set(rowid[word], i, c);
  SparseVec b;
  for (auto &[word, c] : t) {
    auto it = rowid.find(word);
    if (it == rowid.end())
      throw std::invalid_argument("from_tensor: not a Lie element");
    b[it->second] = c;
  }
  auto x = solve(m, b);
  if (!x) throw std::invalid_argument("from_tensor: not a Lie element");
  return *x;
}

FreeLieElement FreeLie::bracket(const FreeLieElement &u,
                                const FreeLieElement &v) const {
  FreeLieElement r;
  r.alphabet = k_;
  for (auto &[w1, c1] : u.comp)
    for (auto &[w2, c2] : v.comp) {
      int w = w1 + w2;
      if (w > maxw_)
        throw std::domain_error("free_lie_bracket: weight exceeds truncation");
      Tensor a, b;
      for (auto &[i, c] : c1) tensor_axpy(a, c, expansions_[w1][i]);
      for (auto &[i, c] : c2) tensor_axpy(b, c, expansions_[w2][i]);
      Tensor br = tensor_bracket(a, b);
      if (br.empty()) continue;
      for (auto &[i, c] : from_tensor(w, br)) vec_add(r.comp[w], i, c);
    }
  for (auto it = r.comp.begin(); it != r.comp.end();)
    it = it->second.empty() ? r.comp.erase(it) : std::next(it);
  return r;
}

FreeLieElement FreeLie::add(FreeLieElement u, const Scalar &c,
                            const FreeLieElement &v) const {
  u.alphabet = k_;
  for (auto &[w, coords] : v.comp)
    for (auto &[i, x] : coords) vec_add(u.comp[w], i, c * x);
  for (auto it = u.comp.begin(); it != u.comp.end();)
    it = it->second.empty() ? u.comp.erase(it) : std::next(it);
  return u;
}

// ---------------------------------------------------------------------------
// LieElement helpers

LieElement lie_scale(const LieElement &x, const Scalar &c) {
  LieElement r;
  if (c == 0) return r;
  for (auto &[w, coords] : x.comp) r.comp[w] = vec_scale(coords, c);
  return r;
}

LieElement lie_add(LieElement x, const Scalar &c, const LieElement &y) {
  for (auto &[w, coords] : y.comp)
    for (auto &[i, v] : coords) vec_add(x.comp[w], i, c * v);
  for (auto it = x.comp.begin(); it != x.comp.end();)
    it = it->second.empty() ? x.comp.erase(it) : std::next(it);
  return x;
}

// ---------------------------------------------------------------------------
// GradedLieAlgebra

GradedLieAlgebra::GradedLieAlgebra(
    std::vector<GeneratorSymbol> gens,
    const std::vector<std::pair<int, Tensor>> &relations, int W)
    : gens_(std::move(gens)), W_(W) {
  if (W < 1) throw std::invalid_argument("truncation weight must be >= 1");
  for (auto &[w, t] : relations)
    for (auto &[word, c] : t)
      if ((int)word.size() != w)
        throw std::invalid_argument("relation is not weight-homogeneous");
  build(relations);
}

void GradedLieAlgebra::build(
    const std::vector<std::pair<int, Tensor>> &relations) {
  int k = (int)gens_.size();
  basis_words_.assign(W_ + 1, {});
  proj_.assign(W_ + 1, {});

  // ideal spanning vectors per weight: relations, then left-normed brackets
  // with generators
  std::vector<std::vector<Tensor>> ideal(W_ + 1);
  for (auto &[w, t] : relations)
    if (w <= W_ && !t.empty()) ideal[w].push_back(t);
  for (int w = 2; w <= W_; ++w)
    for (auto &x : ideal[w - 1])
      for (int g = 0; g < k; ++g) {
        Tensor gt{{Word{g}, Scalar(1)}};
        Tensor br = tensor_bracket(gt, x);
        if (!br.empty()) ideal[w].push_back(std::move(br));
      }

  for (int w = 1; w <= W_; ++w) {
    auto lynd = lyndon_words(k, w);
    std::vector<Tensor> cols;
    cols.reserve(ideal[w].size() + lynd.size());
    for (auto &t : ideal[w]) cols.push_back(t);
    std::vector<Tensor> expans;
    for (auto &lw : lynd) {
      expans.push_back(lyndon_expansion(lw));
      cols.push_back(expans.back());
    }
    int m = (int)ideal[w].size();

    // compress to the rows that actually occur
    std::map<Word, int> rowid;
    for (auto &t : cols)
      for (auto &[word, c] : t) rowid.emplace(word, (int)rowid.size());
    SparseMatrix mat((int)rowid.size(), (int)cols.size());
    for (int j = 0; j < (int)cols.size(); ++j)
      for (auto &[word, c] : cols[j]) mat.set(rowid[word], j, c);

    auto rr = reduce(mat);
    std::vector<int> basis_cols;
    for (int c : rr.pivot_cols)
      if (c >= m) {
        basis_words_[w].push_back(lynd[c - m]);
        basis_cols.push_back(c);
      }

    // dual-basis functionals: constrain only the ideal columns (to 0) and
    // the chosen basis columns (to delta), then solve for each functional
    if (!basis_cols.empty()) {
      SparseMatrix n((int)rowid.size(), m + (int)basis_cols.size());
      for (int j = 0; j < m; ++j)
        for (auto &[word, c] : cols[j]) n.set(rowid[word], j, c);
      for (int j = 0; j < (int)basis_cols.size(); ++j)
        for (auto &[word, c] : cols[basis_cols[j]])
          n.set(rowid[word], m + j, c);
      SparseMatrix mt = n.transposed();
      std::vector<SparseVec> rhs;
      for (int j = 0; j < (int)basis_cols.size(); ++j)
        rhs.push_back(SparseVec{{m + j, Scalar(1)}});
      auto sols = solve_multi(mt, rhs);
      // store functionals keyed by word (via a row-index -> word table)
      std::vector<const Word *> word_of_row(rowid.size());
      for (auto &[word, r] : rowid) word_of_row[r] = &word;
      for (auto &s : sols) {
        if (!s) throw std::logic_error("quotient projection: inconsistent");
        SparseVec f;  // keyed by packed word index
        for (auto &[r, c] : *s) {
          long idx = 0;
          for (int letter : *word_of_row[r]) idx = idx * k + letter;
          f[(int)idx] = c;
        }
        proj_[w].push_back(std::move(f));
      }
    }
  }
}

int GradedLieAlgebra::generator_index(const GeneratorSymbol &g) const {
  auto it = std::find(gens_.begin(), gens_.end(), g);
  return it == gens_.end() ? -1 : (int)(it - gens_.begin());
}

int GradedLieAlgebra::dim(int w) const {
  if (w < 1 || w > W_) throw std::out_of_range("dim: weight out of range");
  return (int)basis_words_[w].size();
}

std::map<int, int> GradedLieAlgebra::graded_dims() const {
  std::map<int, int> d;
  for (int w = 1; w <= W_; ++w) d[w] = dim(w);
  return d;
}

SparseVec GradedLieAlgebra::project_tensor(int w, const Tensor &t) const {
  int k = (int)gens_.size();
  SparseVec out;
  for (int i = 0; i < (int)proj_[w].size(); ++i) {
    Scalar acc = 0;
    for (auto &[word, c] : t) {
      long idx = 0;
      for (int letter : word) idx = idx * k + letter;
      auto it = proj_[w][i].find((int)idx);
      if (it != proj_[w][i].end()) acc += c * it->second;
    }
    vec_add(out, i, acc);
  }
  return out;
}

LieElement GradedLieAlgebra::project(const FreeLie &fl,
                                     const FreeLieElement &x) const {
  LieElement r;
  for (auto &[w, coords] : x.comp) {
    Tensor t;
    for (auto &[i, c] : coords) tensor_axpy(t, c, lyndon_expansion(fl.words(w)[i]));
    auto p = project_tensor(w, t);
    if (!p.empty()) r.comp[w] = std::move(p);
  }
  return r;
}

LieElement GradedLieAlgebra::generator(int g) const {
  LieElement r;
  auto p = project_tensor(1, Tensor{{Word{g}, Scalar(1)}});
  if (!p.empty()) r.comp[1] = std::move(p);
  return r;
}

const SparseVec &GradedLieAlgebra::bracket_basis(int w1, int i, int w2,
                                                 int j) const {
  if (w1 + w2 > W_)
    throw std::domain_error("bracket: weight sum exceeds truncation");
  auto key = std::make_tuple(w1, i, w2, j);
  auto it = sc_.find(key);
  if (it != sc_.end()) return it->second;
  Tensor a = lyndon_expansion(basis_words_[w1][i]);
  Tensor b = lyndon_expansion(basis_words_[w2][j]);
  SparseVec v = project_tensor(w1 + w2, tensor_bracket(a, b));
  return sc_.emplace(key, std::move(v)).first->second;
}

LieElement GradedLieAlgebra::bracket(const LieElement &x, const LieElement &y,
                                     bool truncate) const {
  LieElement r;
  for (auto &[w1, c1] : x.comp)
    for (auto &[w2, c2] : y.comp) {
      int w = w1 + w2;
      if (w > W_) {
        if (truncate) continue;
        throw std::domain_error("bracket: weight sum exceeds truncation");
      }
      for (auto &[i, a] : c1)
        for (auto &[j, b] : c2)
          for (auto &[l, s] : bracket_basis(w1, i, w2, j))
            vec_add(r.comp[w], l, a * b * s);
    }
  for (auto it = r.comp.begin(); it != r.comp.end();)
    it = it->second.empty() ? r.comp.erase(it) : std::next(it);
  return r;
}

// ---------------------------------------------------------------------------
// t~ and t

std::vector<std::pair<int, Tensor>> t_tilde_relations(
    const std::vector<GeneratorSymbol> &gens) {
  auto idx = [&](const GeneratorSymbol &g) {
    auto it = std::find(gens.begin(), gens.end(), g);
    if (it == gens.end()) throw std::logic_error("generator not found");
    return (int)(it - gens.begin());
  };
  auto word2 = [](int g, int h) {
    Tensor t;
    tensor_add(t, Word{g, h}, 1);
    tensor_add(t, Word{h, g}, -1);
    return t;
  };
  std::vector<std::pair<int, Tensor>> rels;

  std::vector<int> tgen, sgen;
  for (int i = 0; i < (int)gens.size(); ++i)
    (gens[i].kind == GeneratorSymbol::T ? tgen : sgen).push_back(i);

  // [t_ab, t_cd] = 0 for disjoint pairs
  for (size_t x = 0; x < tgen.size(); ++x)
    for (size_t y = x + 1; y < tgen.size(); ++y) {
      const auto &g = gens[tgen[x]], &h = gens[tgen[y]];
      std::set<std::string> labels{g.a, g.b, h.a, h.b};
      if (labels.size() == 4) rels.push_back({2, word2(tgen[x], tgen[y])});
    }

  // [t_ac, t_ab + t_bc] = 0, all variants per triple
  std::set<std::string> all_labels;
  for (int i : tgen) {
    all_labels.insert(gens[i].a);
    all_labels.insert(gens[i].b);
  }
  std::vector<std::string> ls(all_labels.begin(), all_labels.end());
  for (size_t i = 0; i < ls.size(); ++i)
    for (size_t j = i + 1; j < ls.size(); ++j)
      for (size_t l = j + 1; l < ls.size(); ++l) {
        int ab = idx(GeneratorSymbol::t(ls[i], ls[j]));
        int ac = idx(GeneratorSymbol::t(ls[i], ls[l]));
        int bc = idx(GeneratorSymbol::t(ls[j], ls[l]));
        auto rel = [&](int x, int y, int z) {
          Tensor t = word2(x, y);
          tensor_axpy(t, 1, word2(x, z));
          rels.push_back({2, std::move(t)});
        };
        rel(ac, ab, bc);
        rel(ab, ac, bc);
        rel(bc, ab, ac);
      }

  // s's are central
  for (int s : sgen)
    for (int g = 0; g < (int)gens.size(); ++g)
      if (g != s) rels.push_back({2, word2(s, g)});
  return rels;
}

std::vector<std::string> default_labels(int n) {
  static const char *names[] = {"a", "b", "c", "d", "e", "f", "g", "h"};
  if (n < 1 || n > 8) throw std::invalid_argument("label count out of range");
  return std::vector<std::string>(names, names + n);
}

namespace {

std::vector<GeneratorSymbol> build_gens(const std::vector<std::string> &labels,
                                        bool with_s) {
  std::vector<std::string> ls = labels;
  std::sort(ls.begin(), ls.end());
  if (std::adjacent_find(ls.begin(), ls.end()) != ls.end())
    throw std::invalid_argument("duplicate labels");
  std::vector<GeneratorSymbol> gens;
  for (size_t i = 0; i < ls.size(); ++i)
    for (size_t j = i + 1; j < ls.size(); ++j)
      gens.push_back(GeneratorSymbol::t(ls[i], ls[j]));
  if (with_s)
    for (auto &l : ls) gens.push_back(GeneratorSymbol::s(l));
  return gens;
}

AlgebraPtr cached_algebra(const std::vector<std::string> &labels, int W,
                          bool with_s) {
  if (labels.empty()) throw std::invalid_argument("empty label set");
  static std::map<std::tuple<std::string, int, bool>, AlgebraPtr> cache;
  std::vector<std::string> ls = labels;
  std::sort(ls.begin(), ls.end());
  std::string key;
  for (auto &l : ls) key += l + ",";
  auto k = std::make_tuple(key, W, with_s);
  auto it = cache.find(k);
  if (it != cache.end()) return it->second;
  auto gens = build_gens(ls, with_s);
  auto alg = std::make_shared<GradedLieAlgebra>(gens, t_tilde_relations(gens), W);
  cache.emplace(k, alg);
  return alg;
}

}  // namespace

AlgebraPtr t_tilde(const std::vector<std::string> &labels, int W) {
  return cached_algebra(labels, W, true);
}

AlgebraPtr t_plain(const std::vector<std::string> &labels, int W) {
  if (labels.size() < 2)
    throw std::invalid_argument("t_A needs at least two labels");
  return cached_algebra(labels, W, false);
}

}  // namespace wb

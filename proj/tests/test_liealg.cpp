#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "wb/liealg.hpp"

using namespace wb;

namespace {

// Independent dimension oracle for the Drinfeld-Kohno algebra t_n:
// t_n = (free Lie on n-1 generators) |x t_{n-1}, so for w >= 2
// dim t_n[w] = sum_{k=1}^{n-1} Witt(k, w); weight 1 has C(n,2) generators.
std::int64_t t_dim_oracle(int n, int w) {
  if (w == 1) return (std::int64_t)n * (n - 1) / 2;
  std::int64_t d = 0;
  for (int k = 1; k <= n - 1; ++k) d += witt_number(k, w);
  return d;
}

std::vector<std::pair<int, Tensor>> abelian_relations(int k) {
  std::vector<std::pair<int, Tensor>> rels;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      Tensor t;
      tensor_add(t, Word{i, j}, 1);
      tensor_add(t, Word{j, i}, -1);
      rels.push_back({2, t});
    }
  return rels;
}

std::vector<GeneratorSymbol> generic_gens(int k) {
  std::vector<GeneratorSymbol> g;
  for (int i = 0; i < k; ++i)
    g.push_back(GeneratorSymbol::s("g" + std::to_string(i)));
  return g;
}

}  // namespace

TEST_CASE("lyndon_words: small alphabets") {
  CHECK(lyndon_words(2, 1) == std::vector<Word>{{0}, {1}});
  CHECK(lyndon_words(2, 2) == std::vector<Word>{{0, 1}});
  CHECK(lyndon_words(2, 3).size() == 2);
  for (int k = 1; k <= 4; ++k)
    for (int w = 1; w <= 5; ++w) {
      auto ws = lyndon_words(k, w);
      CHECK((std::int64_t)ws.size() == witt_number(k, w));
      for (auto &x : ws) CHECK(is_lyndon(x));
      CHECK(std::is_sorted(ws.begin(), ws.end()));
    }
}

TEST_CASE("free_lie_bracket basics") {
  FreeLie fl(2, 4);
  auto x = fl.generator(0), y = fl.generator(1);
  CHECK(fl.bracket(x, x).zero());
  auto xy = fl.bracket(x, y);
  REQUIRE(xy.comp.count(2) == 1);
  CHECK(xy.comp.at(2) == SparseVec{{0, frac(1)}});
  // antisymmetry
  CHECK(fl.add(xy, 1, fl.bracket(y, x)).zero());
  // Jacobi on (x, y, [x,y])
  auto j = fl.bracket(x, fl.bracket(y, xy));
  j = fl.add(j, 1, fl.bracket(y, fl.bracket(xy, x)));
  j = fl.add(j, 1, fl.bracket(xy, fl.bracket(x, y)));
  CHECK(j.zero());
}

TEST_CASE("free_lie_bracket: truncation overflow is an error") {
  FreeLie fl(2, 2);
  auto xy = fl.bracket(fl.generator(0), fl.generator(1));
  CHECK_THROWS_AS(fl.bracket(fl.generator(0), xy), std::domain_error);
}

TEST_CASE("nilpotent_quotient: abelian") {
  GradedLieAlgebra L(generic_gens(3), abelian_relations(3), 3);
  CHECK(L.graded_dims() == std::map<int, int>{{1, 3}, {2, 0}, {3, 0}});
}

TEST_CASE("nilpotent_quotient: free on two generators") {
  GradedLieAlgebra L(generic_gens(2), {}, 3);
  CHECK(L.graded_dims() == std::map<int, int>{{1, 2}, {2, 1}, {3, 2}});
}

TEST_CASE("nilpotent_quotient rejects inhomogeneous relations") {
  Tensor bad;
  tensor_add(bad, Word{0, 1}, 1);
  tensor_add(bad, Word{0}, 1);
  CHECK_THROWS(GradedLieAlgebra(generic_gens(2), {{2, bad}}, 3));
}

TEST_CASE("t_n dimensions match the Witt-sum oracle") {
  for (int n = 2; n <= 4; ++n) {
    auto L = t_plain(default_labels(n), 4);
    for (int w = 1; w <= 4; ++w) CHECK(L->dim(w) == t_dim_oracle(n, w));
  }
}

TEST_CASE("t_4 dims at W=3") {
  auto L = t_plain(default_labels(4), 3);
  CHECK(L->graded_dims() == std::map<int, int>{{1, 6}, {2, 4}, {3, 10}});
}

TEST_CASE("t~ examples") {
  auto L1 = t_tilde({"a"}, 2);
  CHECK(L1->graded_dims() == std::map<int, int>{{1, 1}, {2, 0}});

  auto L2 = t_tilde({"a", "b"}, 3);
  CHECK(L2->graded_dims() == std::map<int, int>{{1, 3}, {2, 0}, {3, 0}});

  auto L3 = t_tilde({"a", "b", "c"}, 3);
  CHECK(L3->graded_dims() == std::map<int, int>{{1, 6}, {2, 1}, {3, 2}});

  CHECK_THROWS(t_tilde({}, 2));
}

TEST_CASE("t~ decomposes as t + abelian s part") {
  for (int n = 2; n <= 3; ++n) {
    int W = 4;
    auto Lt = t_tilde(default_labels(n), W);
    auto Lp = t_plain(default_labels(n), W);
    for (int w = 1; w <= W; ++w)
      CHECK(Lt->dim(w) == Lp->dim(w) + (w == 1 ? n : 0));

    // s generators are central: bracket with every basis element vanishes
    for (int g = 0; g < Lt->num_generators(); ++g) {
      if (Lt->generators()[g].kind != GeneratorSymbol::S) continue;
      auto sg = Lt->generator(g);
      for (int w = 1; w < W; ++w)
        for (int i = 0; i < Lt->dim(w); ++i) {
          LieElement x;
          x.comp[w][i] = 1;
          CHECK(Lt->bracket(sg, x).zero());
        }
    }

    // the t-span is closed under bracket: coordinates never touch basis
    // words that involve an s letter
    int num_t = n * (n - 1) / 2;
    auto is_t_word = [&](const Word &word) {
      for (int l : word)
        if (l >= num_t) return false;
      return true;
    };
    for (int w1 = 1; w1 < W; ++w1)
      for (int w2 = 1; w1 + w2 <= W; ++w2)
        for (int i = 0; i < Lt->dim(w1); ++i) {
          if (!is_t_word(Lt->basis_word(w1, i))) continue;
          for (int j = 0; j < Lt->dim(w2); ++j) {
            if (!is_t_word(Lt->basis_word(w2, j))) continue;
            for (auto &[l, c] : Lt->bracket_basis(w1, i, w2, j))
              CHECK(is_t_word(Lt->basis_word(w1 + w2, l)));
          }
        }
  }
}

TEST_CASE("antisymmetry and Jacobi hold exactly in t~_3 up to W=4") {
  auto L = t_tilde(default_labels(3), 4);
  int W = 4;
  std::vector<std::pair<int, int>> basis;
  for (int w = 1; w <= W; ++w)
    for (int i = 0; i < L->dim(w); ++i) basis.push_back({w, i});
  auto elt = [](int w, int i) {
    LieElement e;
    e.comp[w][i] = 1;
    return e;
  };
  for (auto [w1, i] : basis)
    for (auto [w2, j] : basis) {
      if (w1 + w2 > W) continue;
      auto xy = L->bracket(elt(w1, i), elt(w2, j));
      auto yx = L->bracket(elt(w2, j), elt(w1, i));
      CHECK(lie_add(xy, 1, yx).zero());
      for (auto [w3, l] : basis) {
        if (w1 + w2 + w3 > W) continue;
        auto x = elt(w1, i), y = elt(w2, j), z = elt(w3, l);
        auto jac = L->bracket(x, L->bracket(y, z));
        jac = lie_add(jac, 1, L->bracket(y, L->bracket(z, x)));
        jac = lie_add(jac, 1, L->bracket(z, L->bracket(x, y)));
        CHECK(jac.zero());
      }
    }
}

TEST_CASE("from_tensor round-trips Lyndon expansions") {
  FreeLie fl(3, 4);
  for (int w = 1; w <= 4; ++w)
    for (int i = 0; i < (int)fl.words(w).size(); ++i) {
      auto t = lyndon_expansion(fl.words(w)[i]);
      CHECK(fl.from_tensor(w, t) == SparseVec{{i, frac(1)}});
    }
}

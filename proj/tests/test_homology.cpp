#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "wb/homology.hpp"

#include <random>

using namespace wb;

namespace {

BasisId gen_id(const GradedLieAlgebra &L, const GeneratorSymbol &g) {
  int i = L.generator_index(g);
  REQUIRE(i >= 0);
  return {1, i};
}

BVExpression random_expression(std::vector<std::string> labels,
                               std::mt19937 &rng) {
  auto coin = [&](int n) { return (int)(rng() % n); };
  BVExpression e;
  if (labels.size() == 1) {
    e = BVExpression::leaf(labels[0]);
  } else {
    std::shuffle(labels.begin(), labels.end(), rng);
    size_t cut = 1 + coin((int)labels.size() - 1);
    std::vector<std::string> left(labels.begin(), labels.begin() + cut);
    std::vector<std::string> right(labels.begin() + cut, labels.end());
    auto a = random_expression(left, rng);
    auto b = random_expression(right, rng);
    e = coin(2) ? BVExpression::product({std::move(a), std::move(b)})
                : BVExpression::bracket(std::move(a), std::move(b));
  }
  while (coin(3) == 0) e = BVExpression::delta(std::move(e));
  return e;
}

}  // namespace

TEST_CASE("abelian algebra: exterior algebra with zero differential") {
  auto L = t_tilde({"a", "b"}, 3);  // 3-dimensional abelian
  auto C = ce_complex(L, 3);
  CHECK(C.dim(0, 0) == 1);
  CHECK(C.dim(1, 1) == 3);
  CHECK(C.dim(2, 2) == 3);
  CHECK(C.dim(3, 3) == 1);
  for (auto &[kw, m] : C.diff)
    for (int j = 0; j < m.cols(); ++j) CHECK(reduce(m).rank == 0);
  auto rk = homology_ranks(C);
  long total = 0;
  for (auto &[kw, r] : rk) total += r;
  CHECK(total == 8);
}

TEST_CASE("t_3: nonzero differential on t_12 ^ t_13") {
  auto L = t_plain({"a", "b", "c"}, 2);
  WedgeKey key{gen_id(*L, GeneratorSymbol::t("a", "b")),
               gen_id(*L, GeneratorSymbol::t("a", "c"))};
  WedgeChain x{{key, Scalar(1)}};
  CHECK(!ce_d(*L, x).empty());
}

TEST_CASE("d^2 = 0 on the full t~_3 complex") {
  auto L = t_tilde({"a", "b", "c"}, 4);
  auto C = ce_complex(L, 4);
  for (auto &[kw, mons] : C.basis)
    for (auto &key : mons) {
      WedgeChain x{{key, Scalar(1)}};
      CHECK(ce_d(*L, ce_d(*L, x)).empty());
    }
}

TEST_CASE("differential escapes nothing and matrices match ce_d") {
  auto L = t_tilde({"a", "b", "c"}, 3);
  auto C = ce_complex(L, 3);
  for (auto &[kw, m] : C.diff) {
    auto [k, w] = kw;
    CHECK(m.rows() == C.dim(k - 1, w));
    CHECK(m.cols() == C.dim(k, w));
  }
}

TEST_CASE("homology rank totals match the dimension formula") {
  auto total = [](const AlgebraPtr &L, int W) {
    long t = 0;
    for (auto &[kw, r] : homology_ranks(ce_complex(L, W))) t += r;
    return t;
  };
  CHECK(total(t_tilde({"a"}, 1), 1) == 2);
  CHECK(total(t_tilde({"a", "b"}, 3), 3) == 8);
  CHECK(total(t_tilde({"a", "b", "c"}, 5), 5) == 48);
}

TEST_CASE("Kuenneth: t~ ranks = t ranks convolved with the s exterior part") {
  for (int n : {2, 3}) {
    auto A = default_labels(n);
    int W = n == 2 ? 3 : 5;
    auto rt = homology_ranks(ce_complex(t_plain(A, W), W));
    auto rtt = homology_ranks(ce_complex(t_tilde(A, W), W));
    std::map<std::pair<int, int>, int> conv;
    for (auto &[kw, r] : rt)
      for (int j = 0; j <= n; ++j) {
        auto [k, w] = kw;
        if (w + j > W) continue;
        long binom = 1;
        for (int i = 0; i < j; ++i) binom = binom * (n - i) / (i + 1);
        conv[{k + j, w + j}] += r * (int)binom;
      }
    CHECK(conv == rtt);
  }
}

TEST_CASE("bv_to_chains on the generators") {
  auto L2 = t_tilde({"a", "b"}, 1);
  BVElement ab = bv_normal_form(bv_parse("a·b"));
  CHECK(bv_to_chains(ab, *L2) == WedgeChain{{WedgeKey{}, Scalar(1)}});

  BVElement da = bv_normal_form(bv_parse("Δa"));
  auto L1 = t_tilde({"a"}, 1);
  CHECK(bv_to_chains(da, *L1) ==
        WedgeChain{{{gen_id(*L1, GeneratorSymbol::s("a"))}, Scalar(1)}});

  BVElement brk = bv_normal_form(bv_parse("[a,b]"));
  CHECK(bv_to_chains(brk, *L2) ==
        WedgeChain{{{gen_id(*L2, GeneratorSymbol::t("a", "b"))}, Scalar(1)}});

  auto L4 = t_tilde({"a", "b", "c", "d"}, 1);
  BVElement pr = bv_normal_form(bv_parse("[a,b]·[c,d]"));
  WedgeKey key{gen_id(*L4, GeneratorSymbol::t("a", "b")),
               gen_id(*L4, GeneratorSymbol::t("c", "d"))};
  std::sort(key.begin(), key.end());
  CHECK(bv_to_chains(pr, *L4) == WedgeChain{{key, Scalar(1)}});
}

TEST_CASE("images are diagonal cycles") {
  auto L = t_tilde({"a", "b", "c"}, 2);
  for (auto &m : bv_basis({"a", "b", "c"})) {
    BVElement e;
    bv_add(e, m, 1);
    WedgeChain img = bv_to_chains(e, *L);
    for (auto &[tup, c] : img) {
      CHECK((int)tup.size() == m.degree());
      for (auto &[w, i] : tup) CHECK(w == 1);
    }
    CHECK(ce_d(*L, img).empty());
  }
}

TEST_CASE("bv_to_chains is well-defined on the quotient") {
  std::mt19937 rng(20240901);
  std::vector<std::string> letters{"a", "b", "c"};
  for (int trial = 0; trial < 100; ++trial) {
    int n = 1 + (int)(rng() % 3);
    std::vector<std::string> A(letters.begin(), letters.begin() + n);
    BVExpression e = random_expression(A, rng);
    auto L = t_tilde(A, 2);
    CHECK(chains_of_expression(e, *L) ==
          bv_to_chains(bv_normal_form(e), *L));
  }
}

TEST_CASE("wedge_apply: relabeling acts factorwise") {
  auto m = relabel_morphism({"a", "b"}, {{"a", "b"}, {"b", "a"}}, 2);
  auto L = m.src();
  // source and image keys happen to be sorted the same way, so the sign is +1
  WedgeKey key{gen_id(*L, GeneratorSymbol::t("a", "b")),
               gen_id(*L, GeneratorSymbol::s("a"))};
  WedgeKey want{gen_id(*m.dst(), GeneratorSymbol::t("a", "b")),
                gen_id(*m.dst(), GeneratorSymbol::s("b"))};
  std::sort(key.begin(), key.end());
  std::sort(want.begin(), want.end());
  REQUIRE(key[0].second < key[1].second);
  REQUIRE(want[0].second < want[1].second);
  WedgeChain x{{key, Scalar(1)}};
  CHECK(wedge_apply(m, x) == WedgeChain{{want, Scalar(1)}});
}

TEST_CASE("verify_bv_quasiiso") {
  auto r1 = verify_bv_quasiiso({"a"}, 1);
  CHECK(r1.pass);
  CHECK(r1.total == 2);
  CHECK(r1.ranks.at({0, 0}) == 1);
  CHECK(r1.ranks.at({1, 1}) == 1);

  auto r2 = verify_bv_quasiiso({"a", "b"}, 3);
  INFO(r2.offender);
  CHECK(r2.pass);
  CHECK(r2.total == 8);

  auto r3 = verify_bv_quasiiso({"a", "b", "c"}, 4);
  INFO(r3.offender);
  CHECK(r3.pass);
  CHECK(r3.total == 48);
  CHECK(r3.weight_cap == 5);  // diagonal classes reach weight 2n-1
}

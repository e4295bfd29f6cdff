#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "wb/operadcore.hpp"

using namespace wb;

namespace {

LieElement gen(const AlgebraPtr &L, const GeneratorSymbol &g) {
  int i = L->generator_index(g);
  REQUIRE(i >= 0);
  return L->generator(i);
}

}  // namespace

TEST_CASE("relabel: identity bijection is the identity map") {
  auto A = default_labels(2);
  auto m = relabel_morphism(A, {{"a", "a"}, {"b", "b"}}, 3);
  auto L = m.src();
  for (int g = 0; g < L->num_generators(); ++g)
    CHECK(m.gen_image(g) == L->generator(g));
}

TEST_CASE("relabel: swap fixes t_ab") {
  auto m = relabel_morphism({"a", "b"}, {{"a", "b"}, {"b", "a"}}, 2);
  auto L = m.src();
  auto tab = gen(L, GeneratorSymbol::t("a", "b"));
  CHECK(m.apply(tab) == tab);
  // s_a goes to s_b
  CHECK(m.apply(gen(L, GeneratorSymbol::s("a"))) ==
        gen(L, GeneratorSymbol::s("b")));
}

TEST_CASE("relabel: functoriality of a 3-cycle") {
  auto A = default_labels(3);
  std::map<std::string, std::string> cyc{{"a", "b"}, {"b", "c"}, {"c", "a"}};
  std::map<std::string, std::string> cyc2{{"a", "c"}, {"b", "a"}, {"c", "b"}};
  auto m = relabel_morphism(A, cyc, 3);
  auto m2 = relabel_morphism(A, cyc2, 3);
  auto twice = compose(m, m);
  for (int g = 0; g < m.src()->num_generators(); ++g)
    CHECK(twice.gen_image(g) == m2.gen_image(g));
}

TEST_CASE("relabel: non-bijective map is an error") {
  CHECK_THROWS(relabel_morphism({"a", "b"}, {{"a", "c"}, {"b", "c"}}, 2));
}

TEST_CASE("insert_map generator images match the composition table") {
  auto A = default_labels(2);  // {a, x} played by {a, b}
  auto ins = insert_map("a", A, {"p", "q"}, 2);
  auto C = ins.from_ambient.dst();

  // o_a(t_ab) = t_bp + t_bq
  auto tab = ins.from_ambient.src()->generator_index(GeneratorSymbol::t("a", "b"));
  auto expected = lie_add(gen(C, GeneratorSymbol::t("b", "p")), 1,
                          gen(C, GeneratorSymbol::t("b", "q")));
  CHECK(ins.from_ambient.gen_image(tab) == expected);

  // o_a(s_b) = s_b
  auto sb = ins.from_ambient.src()->generator_index(GeneratorSymbol::s("b"));
  CHECK(ins.from_ambient.gen_image(sb) == gen(C, GeneratorSymbol::s("b")));

  // o_a(s_a) = s_p + s_q + t_pq
  auto sa = ins.from_ambient.src()->generator_index(GeneratorSymbol::s("a"));
  auto want = lie_add(lie_add(gen(C, GeneratorSymbol::s("p")), 1,
                              gen(C, GeneratorSymbol::s("q"))),
                      1, gen(C, GeneratorSymbol::t("p", "q")));
  CHECK(ins.from_ambient.gen_image(sa) == want);

  // inserted part is label-preserving
  auto srcB = ins.from_inserted.src();
  for (int g = 0; g < srcB->num_generators(); ++g)
    CHECK(ins.from_inserted.gen_image(g) ==
          gen(C, srcB->generators()[g]));
}

TEST_CASE("insert_map rejects label clashes and bad slots") {
  CHECK_THROWS(insert_map("a", {"a", "b"}, {"b", "p"}, 2));
  CHECK_THROWS(insert_map("z", {"a", "b"}, {"p"}, 2));
}

TEST_CASE("insert maps are Lie homomorphisms killing all relations") {
  for (auto nB : {1, 2}) {
    std::vector<std::string> B(nB == 1 ? std::vector<std::string>{"p"}
                                       : std::vector<std::string>{"p", "q"});
    auto ins = insert_map("a", default_labels(3), B, 4);
    CHECK(ins.from_ambient.is_homomorphism());
    CHECK(ins.from_inserted.is_homomorphism());
    CHECK(ins.from_ambient.kills_relations(
        t_tilde_relations(ins.from_ambient.src()->generators())));
  }
}

TEST_CASE("smallest double-composition example") {
  // compose generators of t~_{a,b} into singleton slots, both orders
  auto A = default_labels(2);
  auto m1 = insert_map("a", A, {"p"}, 2);
  auto m2 = insert_map("b", {"b", "p"}, {"q"}, 2);
  auto n1 = insert_map("b", A, {"q"}, 2);
  auto n2 = insert_map("a", {"a", "q"}, {"p"}, 2);
  auto src = m1.from_ambient.src();
  for (int g = 0; g < src->num_generators(); ++g)
    CHECK(m2.from_ambient.apply(m1.from_ambient.apply(src->generator(g))) ==
          n2.from_ambient.apply(n1.from_ambient.apply(src->generator(g))));
}

TEST_CASE("double insertion into s_a agrees with the direct formula") {
  // o_a then o_p on s_a, |B| = |C| = 2: both routes give the weight-1 sum
  // over the final label set
  auto f = insert_map("a", {"a"}, {"p", "q"}, 2);
  auto g = insert_map("p", {"p", "q"}, {"u", "v"}, 2);
  auto sa = f.from_ambient.src()->generator(0);
  auto via = g.from_ambient.apply(f.from_ambient.apply(sa));

  auto h = insert_map("a", {"a"}, {"q", "u", "v"}, 2);
  auto direct = h.from_ambient.apply(sa);
  CHECK(via == direct);
}

TEST_CASE("operad law checker passes") {
  auto rep = check_operad_laws(3, 3, 20);
  INFO(rep.counterexample);
  CHECK(rep.pass);
  CHECK(rep.checks > 100);
}

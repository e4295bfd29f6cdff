#include "wb/operadcore.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace wb {

LieMorphism::LieMorphism(AlgebraPtr src, AlgebraPtr dst,
                         std::vector<LieElement> gen_image)
    : src_(std::move(src)), dst_(std::move(dst)),
      gen_image_(std::move(gen_image)) {
  if ((int)gen_image_.size() != src_->num_generators())
    throw std::invalid_argument("LieMorphism: one image per generator");
}

namespace {

LieElement image_of_word(const GradedLieAlgebra &dst,
                         const std::vector<LieElement> &gen_image,
                         const Word &word) {
  if (word.size() == 1) return gen_image[word[0]];
  int s = standard_split(word);
  Word u(word.begin(), word.begin() + s), v(word.begin() + s, word.end());
  return dst.bracket(image_of_word(dst, gen_image, u),
                     image_of_word(dst, gen_image, v));
}

}  // namespace

const LieElement &LieMorphism::apply_basis(int w, int i) const {
  auto key = std::make_pair(w, i);
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;
  LieElement img = image_of_word(*dst_, gen_image_, src_->basis_word(w, i));
  return cache_.emplace(key, std::move(img)).first->second;
}

LieElement LieMorphism::apply(const LieElement &x) const {
  LieElement r;
  for (auto &[w, coords] : x.comp)
    for (auto &[i, c] : coords) r = lie_add(std::move(r), c, apply_basis(w, i));
  return r;
}

bool LieMorphism::is_homomorphism() const {
  int W = std::min(src_->W(), dst_->W());
  for (int w1 = 1; w1 < W; ++w1)
    for (int w2 = w1; w1 + w2 <= W; ++w2)
      for (int i = 0; i < src_->dim(w1); ++i)
        for (int j = 0; j < src_->dim(w2); ++j) {
          LieElement br;
          auto &sc = src_->bracket_basis(w1, i, w2, j);
          if (!sc.empty()) br.comp[w1 + w2] = sc;
          LieElement lhs = apply(br);
          LieElement rhs =
              dst_->bracket(apply_basis(w1, i), apply_basis(w2, j));
          if (!(lhs == rhs)) return false;
        }
  return true;
}

bool LieMorphism::kills_relations(
    const std::vector<std::pair<int, Tensor>> &rels) const {
  for (auto &[w, t] : rels) {
    if (w != 2)
      throw std::invalid_argument("kills_relations: weight-2 relations only");
    LieElement img;
    for (auto &[word, c] : t) {
      // relation words come in antisymmetric pairs; use the ordered ones
      if (word[0] < word[1])
        img = lie_add(std::move(img), c,
                      dst_->bracket(gen_image_[word[0]], gen_image_[word[1]]));
      else if (word[0] > word[1])
        img = lie_add(std::move(img), -c,
                      dst_->bracket(gen_image_[word[1]], gen_image_[word[0]]));
    }
    if (!img.zero()) return false;
  }
  return true;
}

LieMorphism compose(const LieMorphism &g, const LieMorphism &f) {
  if (f.dst() != g.src())
    throw std::invalid_argument("compose: middle algebras differ");
  std::vector<LieElement> images;
  for (int i = 0; i < f.src()->num_generators(); ++i)
    images.push_back(g.apply(f.gen_image(i)));
  return LieMorphism(f.src(), g.dst(), std::move(images));
}

LieMorphism relabel_morphism(const std::vector<std::string> &A,
                             const std::map<std::string, std::string> &sigma,
                             int W) {
  std::set<std::string> image;
  for (auto &a : A) {
    auto it = sigma.find(a);
    if (it == sigma.end())
      throw std::invalid_argument("relabel: map not defined on " + a);
    image.insert(it->second);
  }
  if (image.size() != A.size())
    throw std::invalid_argument("relabel: not a bijection");

  auto src = t_tilde(A, W);
  auto dst = t_tilde(std::vector<std::string>(image.begin(), image.end()), W);
  std::vector<LieElement> images;
  for (auto &g : src->generators()) {
    GeneratorSymbol tg =
        g.kind == GeneratorSymbol::T
            ? GeneratorSymbol::t(sigma.at(g.a), sigma.at(g.b))
            : GeneratorSymbol::s(sigma.at(g.a));
    images.push_back(dst->generator(dst->generator_index(tg)));
  }
  return LieMorphism(src, dst, std::move(images));
}

LieElement InsertMap::apply(const LieElement &x, const LieElement &y) const {
  return lie_add(from_ambient.apply(x), 1, from_inserted.apply(y));
}

InsertMap insert_map(const std::string &a, const std::vector<std::string> &A,
                     const std::vector<std::string> &B, int W) {
  if (std::find(A.begin(), A.end(), a) == A.end())
    throw std::invalid_argument("insert_map: slot not in ambient label set");
  std::vector<std::string> C;
  for (auto &x : A)
    if (x != a) C.push_back(x);
  for (auto &x : B) {
    if (std::find(C.begin(), C.end(), x) != C.end())
      throw std::invalid_argument("insert_map: label clash on " + x);
    C.push_back(x);
  }
  auto srcA = t_tilde(A, W), srcB = t_tilde(B, W), dst = t_tilde(C, W);

  auto gen = [&](const GeneratorSymbol &g) {
    return dst->generator(dst->generator_index(g));
  };

  std::vector<LieElement> imgA;
  for (auto &g : srcA->generators()) {
    if (g.kind == GeneratorSymbol::T) {
      if (g.a != a && g.b != a) {
        imgA.push_back(gen(g));
      } else {
        const std::string &x = (g.a == a) ? g.b : g.a;
        LieElement e;
        for (auto &y : B)
          e = lie_add(std::move(e), 1, gen(GeneratorSymbol::t(x, y)));
        imgA.push_back(std::move(e));
      }
    } else if (g.a != a) {
      imgA.push_back(gen(g));
    } else {
      LieElement e;
      for (auto &x : B) e = lie_add(std::move(e), 1, gen(GeneratorSymbol::s(x)));
      for (size_t i = 0; i < B.size(); ++i)
        for (size_t j = i + 1; j < B.size(); ++j)
          e = lie_add(std::move(e), 1, gen(GeneratorSymbol::t(B[i], B[j])));
      imgA.push_back(std::move(e));
    }
  }

  std::vector<LieElement> imgB;
  for (auto &g : srcB->generators()) imgB.push_back(gen(g));

  return InsertMap{LieMorphism(srcA, dst, std::move(imgA)),
                   LieMorphism(srcB, dst, std::move(imgB)), a};
}

LieElement random_element(const GradedLieAlgebra &L, int maxw,
                          std::mt19937 &rng) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<int> keep(0, 2);
  LieElement e;
  for (int w = 1; w <= std::min(maxw, L.W()); ++w)
    for (int i = 0; i < L.dim(w); ++i)
      if (keep(rng) == 0) vec_add(e.comp[w], i, frac(coeff(rng)));
  for (auto it = e.comp.begin(); it != e.comp.end();)
    it = it->second.empty() ? e.comp.erase(it) : std::next(it);
  return e;
}

namespace {

std::vector<std::string> prefixed_labels(const std::string &p, int n) {
  std::vector<std::string> v;
  for (int i = 1; i <= n; ++i) v.push_back(p + std::to_string(i));
  return v;
}

}  // namespace

LawReport check_operad_laws(int max_arity, int W, int samples, unsigned seed) {
  LawReport rep;
  std::mt19937 rng(seed);

  auto expect = [&](bool ok, const std::string &what) {
    ++rep.checks;
    if (!ok) rep.fail(what);
  };

  // (i) parallel-composition commutativity, exhaustive on generators (W=1)
  for (int nA = 2; nA <= max_arity; ++nA)
    for (int nB = 1; nB <= 2; ++nB)
      for (int nC = 1; nC <= 2; ++nC) {
        auto A = default_labels(nA);
        auto B = prefixed_labels("p", nB), C = prefixed_labels("q", nC);
        const std::string &a = A[0], &b = A[1];

        auto A1x = [&](const std::string &slot, const std::vector<std::string> &ins) {
          std::vector<std::string> r;
          for (auto &l : A)
            if (l != slot) r.push_back(l);
          r.insert(r.end(), ins.begin(), ins.end());
          return r;
        };
        auto m1 = insert_map(a, A, B, 1);
        auto m2 = insert_map(b, A1x(a, B), C, 1);
        auto n1 = insert_map(b, A, C, 1);
        auto n2 = insert_map(a, A1x(b, C), B, 1);
        auto srcA = m1.from_ambient.src();
        for (int g = 0; g < srcA->num_generators(); ++g) {
          auto x = srcA->generator(g);
          expect(m2.from_ambient.apply(m1.from_ambient.apply(x)) ==
                     n2.from_ambient.apply(n1.from_ambient.apply(x)),
                 "parallel commutativity on generator " +
                     srcA->generators()[g].name());
        }
        auto srcB = m1.from_inserted.src();
        for (int g = 0; g < srcB->num_generators(); ++g) {
          auto y = srcB->generator(g);
          expect(m2.from_ambient.apply(m1.from_inserted.apply(y)) ==
                     n2.from_inserted.apply(y),
                 "parallel commutativity on inserted generator");
        }
        auto srcC = n1.from_inserted.src();
        for (int g = 0; g < srcC->num_generators(); ++g) {
          auto z = srcC->generator(g);
          expect(m2.from_inserted.apply(z) ==
                     n2.from_ambient.apply(n1.from_inserted.apply(z)),
                 "parallel commutativity on second inserted generator");
        }
      }

  // (ii) sequential associativity, exhaustive on generators (W=1)
  for (int nA = 1; nA <= max_arity; ++nA)
    for (int nB = 1; nB <= max_arity; ++nB)
      for (int nC = 1; nC <= max_arity; ++nC) {
        auto A = default_labels(nA);
        auto B = prefixed_labels("p", nB), C = prefixed_labels("q", nC);
        const std::string &a = A[0], &p = B[0];

        std::vector<std::string> A1;
        for (auto &l : A)
          if (l != a) A1.push_back(l);
        A1.insert(A1.end(), B.begin(), B.end());
        std::vector<std::string> B2;
        for (auto &l : B)
          if (l != p) B2.push_back(l);
        B2.insert(B2.end(), C.begin(), C.end());

        auto f = insert_map(a, A, B, 1);
        auto g = insert_map(p, A1, C, 1);
        auto h = insert_map(p, B, C, 1);
        auto k = insert_map(a, A, B2, 1);

        auto srcA = f.from_ambient.src();
        for (int i = 0; i < srcA->num_generators(); ++i) {
          auto x = srcA->generator(i);
          expect(g.from_ambient.apply(f.from_ambient.apply(x)) ==
                     k.from_ambient.apply(x),
                 "sequential associativity on ambient generator " +
                     srcA->generators()[i].name());
        }
        auto srcB = f.from_inserted.src();
        for (int i = 0; i < srcB->num_generators(); ++i) {
          auto y = srcB->generator(i);
          expect(g.from_ambient.apply(f.from_inserted.apply(y)) ==
                     k.from_inserted.apply(h.from_ambient.apply(y)),
                 "sequential associativity on inserted generator");
        }
        auto srcC = h.from_inserted.src();
        for (int i = 0; i < srcC->num_generators(); ++i) {
          auto z = srcC->generator(i);
          expect(g.from_inserted.apply(z) ==
                     k.from_inserted.apply(h.from_inserted.apply(z)),
                 "sequential associativity on innermost generator");
        }
      }

  // singleton slot behaves as a relabeling
  {
    auto A = default_labels(3);
    auto ins = insert_map("a", A, {"x"}, 2);
    std::map<std::string, std::string> sg{{"a", "x"}, {"b", "b"}, {"c", "c"}};
    auto rel = relabel_morphism(A, sg, 2);
    for (int i = 0; i < ins.from_ambient.src()->num_generators(); ++i)
      expect(ins.from_ambient.gen_image(i) == rel.gen_image(i),
             "singleton insertion vs relabeling");
  }

  // sampled-element checks at full weight
  int Ws = std::min(W, 3);
  for (int s = 0; s < samples; ++s) {
    auto A = default_labels(3);
    auto B = prefixed_labels("p", 2), C = prefixed_labels("q", 2);

    // equivariance: relabel then insert == insert then relabel
    {
      std::vector<std::string> perm = A;
      std::shuffle(perm.begin(), perm.end(), rng);
      std::map<std::string, std::string> sigma;
      for (size_t i = 0; i < A.size(); ++i) sigma[A[i]] = perm[i];

      auto srcA = t_tilde(A, Ws);
      auto x = random_element(*srcA, Ws, rng);
      auto y = random_element(*t_tilde(B, Ws), Ws, rng);

      auto ins1 = insert_map(A[0], A, B, Ws);
      std::vector<std::string> A1;
      for (auto &l : A)
        if (l != A[0]) A1.push_back(l);
      A1.insert(A1.end(), B.begin(), B.end());
      std::map<std::string, std::string> sigma1;
      for (auto &l : A1)
        sigma1[l] = sigma.count(l) ? sigma.at(l) : l;
      auto rel1 = relabel_morphism(A1, sigma1, Ws);

      auto relA = relabel_morphism(A, sigma, Ws);
      auto ins2 = insert_map(sigma.at(A[0]), perm, B, Ws);

      expect(rel1.apply(ins1.apply(x, y)) ==
                 ins2.apply(relA.apply(x), y),
             "equivariance on sampled elements");
    }

    // parallel commutativity on sampled elements
    {
      auto srcA = t_tilde(A, Ws);
      auto x = random_element(*srcA, Ws, rng);
      std::vector<std::string> AB;  // (A - a) u B
      for (auto &l : A)
        if (l != A[0]) AB.push_back(l);
      AB.insert(AB.end(), B.begin(), B.end());
      std::vector<std::string> AC;
      for (auto &l : A)
        if (l != A[1]) AC.push_back(l);
      AC.insert(AC.end(), C.begin(), C.end());

      auto m1 = insert_map(A[0], A, B, Ws);
      auto m2 = insert_map(A[1], AB, C, Ws);
      auto n1 = insert_map(A[1], A, C, Ws);
      auto n2 = insert_map(A[0], AC, B, Ws);
      expect(m2.from_ambient.apply(m1.from_ambient.apply(x)) ==
                 n2.from_ambient.apply(n1.from_ambient.apply(x)),
             "parallel commutativity on sampled element");
    }
  }

  return rep;
}

}  // namespace wb

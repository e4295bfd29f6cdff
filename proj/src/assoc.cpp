#include "wb/assoc.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "json.hpp"

namespace wb {

namespace {

using nlohmann::json;

int index_in(const std::vector<PBWKey> &basis, const PBWKey &k) {
  auto it = std::lower_bound(basis.begin(), basis.end(), k);
  if (it == basis.end() || *it != k)
    throw std::logic_error("assoc: monomial outside the PBW basis");
  return (int)(it - basis.begin());
}

// The two hexagons and the pentagon, as exact residuals (lhs - rhs).
struct EquationContext {
  TruncatedUEA U3, U4;
  LieElement t12, t13, t23;
  LieElement T12, T13, T23, T24, T34;

  explicit EquationContext(int N)
      : U3(t_plain({"1", "2", "3"}, N), N),
        U4(t_plain({"1", "2", "3", "4"}, N), N) {
    auto gen = [](const TruncatedUEA &U, const char *a, const char *b) {
      auto &L = *U.lie();
      return L.generator(L.generator_index(GeneratorSymbol::t(a, b)));
    };
    t12 = gen(U3, "1", "2");
    t13 = gen(U3, "1", "3");
    t23 = gen(U3, "2", "3");
    T12 = gen(U4, "1", "2");
    T13 = gen(U4, "1", "3");
    T23 = gen(U4, "2", "3");
    T24 = gen(U4, "2", "4");
    T34 = gen(U4, "3", "4");
  }
};

UEAElement uea_sub(UEAElement x, const UEAElement &y) {
  for (auto &[k, c] : y) uea_add(x, k, -c);
  return x;
}

UEAElement phi_eval(const AlgebraPtr &F, const LieElement &lp,
                    const TruncatedUEA &U, const LieElement &x,
                    const LieElement &y, int power) {
  LieMorphism f(F, U.lie(), {x, y});
  LieElement l = f.apply(lp);
  if (power < 0) l = lie_scale(l, -1);
  return exp_truncated(U, U.from_lie(l));
}

UEAElement exp_lie(const TruncatedUEA &U, const LieElement &l) {
  return exp_truncated(U, U.from_lie(l));
}

std::array<UEAElement, 3> residuals(const AlgebraPtr &F, const LieElement &lp,
                                    const EquationContext &ctx) {
  auto &U3 = ctx.U3;
  auto &U4 = ctx.U4;
  Scalar half = frac(1, 2);
  auto mul3 = [&](std::initializer_list<UEAElement> fs) {
    UEAElement r = U3.one();
    for (auto &f : fs) r = U3.mul(r, f);
    return r;
  };
  auto mul4 = [&](std::initializer_list<UEAElement> fs) {
    UEAElement r = U4.one();
    for (auto &f : fs) r = U4.mul(r, f);
    return r;
  };

  UEAElement hex1 = uea_sub(
      exp_lie(U3, lie_scale(lie_add(ctx.t13, 1, ctx.t23), half)),
      mul3({phi_eval(F, lp, U3, ctx.t13, ctx.t12, 1),
            exp_lie(U3, lie_scale(ctx.t13, half)),
            phi_eval(F, lp, U3, ctx.t13, ctx.t23, -1),
            exp_lie(U3, lie_scale(ctx.t23, half)),
            phi_eval(F, lp, U3, ctx.t12, ctx.t23, 1)}));

  UEAElement hex2 = uea_sub(
      exp_lie(U3, lie_scale(lie_add(ctx.t12, 1, ctx.t13), half)),
      mul3({phi_eval(F, lp, U3, ctx.t23, ctx.t13, -1),
            exp_lie(U3, lie_scale(ctx.t13, half)),
            phi_eval(F, lp, U3, ctx.t12, ctx.t13, 1),
            exp_lie(U3, lie_scale(ctx.t12, half)),
            phi_eval(F, lp, U3, ctx.t12, ctx.t23, -1)}));

  UEAElement pent = uea_sub(
      mul4({phi_eval(F, lp, U4, ctx.T12, lie_add(ctx.T23, 1, ctx.T24), 1),
            phi_eval(F, lp, U4, lie_add(ctx.T13, 1, ctx.T23), ctx.T34, 1)}),
      mul4({phi_eval(F, lp, U4, ctx.T23, ctx.T34, 1),
            phi_eval(F, lp, U4, lie_add(ctx.T12, 1, ctx.T13),
                     lie_add(ctx.T24, 1, ctx.T34), 1),
            phi_eval(F, lp, U4, ctx.T12, ctx.T23, 1)}));

  return {hex1, hex2, pent};
}

// weight-d coefficients of the three residuals, stacked
SparseVec stack_weight(const std::array<UEAElement, 3> &rs,
                       const EquationContext &ctx, int d) {
  SparseVec v;
  int off = 0;
  for (int eq = 0; eq < 3; ++eq) {
    const TruncatedUEA &U = eq < 2 ? ctx.U3 : ctx.U4;
    auto &basis = U.basis(d);
    for (auto &[k, c] : rs[eq])
      if (pbw_weight(k) == d) vec_add(v, off + index_in(basis, k), c);
    off += (int)basis.size();
  }
  return v;
}

}  // namespace

UEAElement uea_scale(const UEAElement &x, const Scalar &c) {
  UEAElement r;
  if (c == 0) return r;
  for (auto &[k, v] : x) r.emplace(k, c * v);
  return r;
}

UEAElement exp_truncated(const TruncatedUEA &U, const UEAElement &x) {
  if (U.chi(x) != 0)
    throw std::invalid_argument("exp_truncated: nonzero counit");
  UEAElement acc = U.one(), term = U.one();
  for (int k = 1; k <= U.W(); ++k) {
    term = uea_scale(U.mul(term, x), frac(1, k));
    if (term.empty()) break;
    for (auto &[m, c] : term) uea_add(acc, m, c);
  }
  return acc;
}

UEAElement log_truncated(const TruncatedUEA &U, const UEAElement &u) {
  if (U.chi(u) != 1)
    throw std::invalid_argument("log_truncated: counit is not 1");
  UEAElement v = u;
  uea_add(v, PBWKey{}, -1);
  UEAElement acc, pw = U.one();
  for (int k = 1; k <= U.W(); ++k) {
    pw = U.mul(pw, v);
    if (pw.empty()) break;
    Scalar c = frac(k % 2 ? 1 : -1, k);
    for (auto &[m, x] : pw) uea_add(acc, m, c * x);
  }
  return acc;
}

bool is_grouplike(const TruncatedUEA &U, const UEAElement &u) {
  if (U.chi(u) != 1) return false;
  for (auto &[k, c] : log_truncated(U, u))
    if (k.size() != 1) return false;
  return true;
}

AlgebraPtr associator_alphabet(int W) {
  return std::make_shared<const GradedLieAlgebra>(
      std::vector<GeneratorSymbol>{GeneratorSymbol::s("A"),
                                   GeneratorSymbol::s("B")},
      std::vector<std::pair<int, Tensor>>{}, std::max(W, 1));
}

AssociatorTruncation solve_associator(int N) {
  if (N < 0 || N > 4)
    throw std::invalid_argument("solve_associator: need 0 <= N <= 4");
  AssociatorTruncation phi;
  phi.N = N;
  phi.F = associator_alphabet(std::max(N, 1));
  if (N == 0) return phi;
  EquationContext ctx(N);
  for (int d = 1; d <= N; ++d) {
    auto base = stack_weight(residuals(phi.F, phi.log_phi, ctx), ctx, d);
    if (d % 2) {
      // evenness: no odd-weight Lie coefficients; the equations must already
      // close at this weight
      if (!base.empty())
        throw std::logic_error(
            "solve_associator: odd-degree residual does not vanish");
      continue;
    }
    int m = phi.F->dim(d);
    int rows = 2 * ctx.U3.dim(d) + ctx.U4.dim(d);
    SparseMatrix M(rows, m);
    for (int i = 0; i < m; ++i) {
      LieElement cand = phi.log_phi;
      SparseVec e{{i, Scalar(1)}};
      cand = lie_add(cand, 1, LieElement{{{d, e}}});
      auto col = stack_weight(residuals(phi.F, cand, ctx), ctx, d);
      for (auto &[r, c] : base) vec_add(col, r, -c);
      M.set_column(i, col);
    }
    SparseVec b;
    for (auto &[r, c] : base) b.emplace(r, -c);
    auto sol = solve(M, b);
    if (!sol)
      throw std::logic_error("solve_associator: inconsistent linear system");
    SparseVec lw = *sol;
    if (!lw.empty()) phi.log_phi.comp[d] = lw;
  }
  return phi;
}

UEAElement eval_associator(const AssociatorTruncation &phi,
                           const TruncatedUEA &U, const LieElement &x,
                           const LieElement &y, int power) {
  if (power != 1 && power != -1)
    throw std::invalid_argument("eval_associator: power must be +-1");
  return phi_eval(phi.F, phi.log_phi, U, x, y, power);
}

AssociatorReport check_associator(const AssociatorTruncation &phi) {
  AssociatorReport rep;
  int N = std::max(phi.N, 1);
  EquationContext ctx(N);
  auto rs = residuals(phi.F, phi.log_phi, ctx);
  rep.hexagon1 = rs[0].empty();
  rep.hexagon2 = rs[1].empty();
  rep.pentagon = rs[2].empty();
  TruncatedUEA UF(phi.F->W() >= N ? phi.F : associator_alphabet(N), N);
  rep.grouplike =
      is_grouplike(UF, exp_truncated(UF, UF.from_lie(phi.log_phi)));
  rep.even = true;
  for (auto &[w, v] : phi.log_phi.comp)
    if (w % 2 && !v.empty()) rep.even = false;
  rep.pass = rep.hexagon1 && rep.hexagon2 && rep.pentagon && rep.grouplike &&
             rep.even;
  if (!rep.pass) rep.detail = "associator equations fail at truncation N=" +
                              std::to_string(phi.N);
  return rep;
}

std::string associator_to_json(const AssociatorTruncation &phi) {
  json j;
  j["N"] = phi.N;
  j["log_phi"] = json::object();
  for (auto &[w, v] : phi.log_phi.comp) {
    json row = json::object();
    for (auto &[i, c] : v) row[std::to_string(i)] = c.get_str();
    j["log_phi"][std::to_string(w)] = std::move(row);
  }
  return j.dump();
}

AssociatorTruncation associator_from_json(const std::string &text) {
  json j = json::parse(text);
  AssociatorTruncation phi;
  phi.N = j.at("N").get<int>();
  phi.F = associator_alphabet(std::max(phi.N, 1));
  for (auto &[ws, row] : j.at("log_phi").items()) {
    int w = std::stoi(ws);
    if (w < 2 || w > phi.N)
      throw std::invalid_argument("associator json: weight out of range");
    SparseVec v;
    for (auto &[is, cs] : row.items()) {
      Scalar c(cs.get<std::string>());
      c.canonicalize();
      vec_add(v, std::stoi(is), c);
    }
    if (!v.empty()) phi.log_phi.comp[w] = std::move(v);
  }
  return phi;
}

}  // namespace wb

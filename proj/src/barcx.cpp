#include "wb/barcx.hpp"

#include <algorithm>
#include <stdexcept>

namespace wb {

void bar_add(BarChain &x, const BarKey &k, const Scalar &c) {
  if (c == 0) return;
  auto it = x.find(k);
  if (it == x.end()) {
    x.emplace(k, c);
  } else {
    it->second += c;
    if (it->second == 0) x.erase(it);
  }
}

int bar_weight(const BarKey &k) {
  int w = 0;
  for (auto &f : k) w += pbw_weight(f);
  return w;
}

BarChain bar_d(const TruncatedUEA &U, const BarChain &x) {
  BarChain r;
  for (auto &[key, c] : x) {
    int n = (int)key.size();
    for (int i = 0; i + 1 < n; ++i) {
      UEAElement prod = U.mul({{key[i], Scalar(1)}}, {{key[i + 1], Scalar(1)}});
      Scalar sign = ((i + 1) % 2) ? -1 : 1;
      for (auto &[m, cm] : prod) {
        if (m.empty()) continue;  // cannot happen: weights are positive
        BarKey k2(key.begin(), key.begin() + i);
        k2.push_back(m);
        k2.insert(k2.end(), key.begin() + i + 2, key.end());
        bar_add(r, k2, sign * c * cm);
      }
    }
  }
  return r;
}

int BarComplex::dim(int n, int w) const {
  auto it = basis.find({n, w});
  return it == basis.end() ? 0 : (int)it->second.size();
}

int BarComplex::index_of(int n, int w, const BarKey &key) const {
  auto it = index_.find({n, w});
  if (it == index_.end()) return -1;
  auto jt = it->second.find(key);
  return jt == it->second.end() ? -1 : jt->second;
}

BarComplex bar_complex(const TruncatedUEA &U, int W) {
  if (U.W() < W) throw std::invalid_argument("bar_complex: UEA too short");
  BarComplex C;
  C.W = W;
  C.basis[{0, 0}].push_back({});
  // tensors of augmentation-ideal monomials, total weight <= W
  BarKey cur;
  int wsum = 0;
  auto rec = [&](auto &&self) -> void {
    if (!cur.empty()) C.basis[{(int)cur.size(), wsum}].push_back(cur);
    for (int fw = 1; wsum + fw <= W; ++fw)
      for (auto &m : U.basis(fw)) {
        cur.push_back(m);
        wsum += fw;
        self(self);
        wsum -= fw;
        cur.pop_back();
      }
  };
  rec(rec);

  for (auto &[nw, mons] : C.basis) {
    std::sort(mons.begin(), mons.end());
    auto &idx = C.index_[nw];
    for (int i = 0; i < (int)mons.size(); ++i) idx[mons[i]] = i;
  }
  for (auto &[nw, mons] : C.basis) {
    auto [n, w] = nw;
    if (n == 0) continue;
    SparseMatrix m(C.dim(n - 1, w), (int)mons.size());
    for (int j = 0; j < (int)mons.size(); ++j) {
      BarChain x{{mons[j], Scalar(1)}};
      for (auto &[key, c] : bar_d(U, x)) {
        int i = C.index_of(n - 1, w, key);
        if (i < 0) throw std::logic_error("bar_complex: differential escapes");
        m.set(i, j, c);
      }
    }
    C.diff.emplace(nw, std::move(m));
  }
  return C;
}

std::map<std::pair<int, int>, int> bar_homology_ranks(const BarComplex &C) {
  std::map<std::pair<int, int>, int> rk, drank;
  for (auto &[nw, m] : C.diff) drank[nw] = reduce(m).rank;
  for (auto &[nw, mons] : C.basis) {
    auto [n, w] = nw;
    int dn = drank.count(nw) ? drank[nw] : 0;
    int dn1 = drank.count({n + 1, w}) ? drank[{n + 1, w}] : 0;
    int h = (int)mons.size() - dn - dn1;
    if (h != 0) rk[nw] = h;
  }
  return rk;
}

TaggedBarChain tag_chain(const BarChain &x, int tag) {
  TaggedBarChain r;
  for (auto &[key, c] : x) {
    TaggedBarKey k;
    for (auto &f : key) k.push_back({tag, f});
    r.emplace(std::move(k), c);
  }
  return r;
}

TaggedBarChain em_shuffle(const TaggedBarChain &x, const TaggedBarChain &y) {
  TaggedBarChain r;
  for (auto &[u, cu] : x)
    for (auto &[v, cv] : y) {
      int p = (int)u.size(), q = (int)v.size();
      // iterate over subsets of positions taken by u
      std::vector<int> pick(p + q, 0);
      std::fill(pick.begin(), pick.begin() + p, 1);
      std::sort(pick.begin(), pick.end());
      do {
        TaggedBarKey key;
        int sign = 0, used_u = 0, used_v = 0;
        for (int i = 0; i < p + q; ++i)
          if (pick[i]) {
            // u-factor jumps over the v-factors already placed
            sign += used_v;
            key.push_back(u[used_u++]);
          } else {
            key.push_back(v[used_v++]);
          }
        auto it = r.find(key);
        Scalar c = (sign % 2 ? -1 : 1) * cu * cv;
        if (it == r.end()) {
          r.emplace(std::move(key), c);
        } else {
          it->second += c;
          if (it->second == 0) r.erase(it);
        }
      } while (std::next_permutation(pick.begin(), pick.end()));
    }
  return r;
}

BarChain antisym_embed(const WedgeChain &omega) {
  BarChain r;
  for (auto &[tup, c] : omega) {
    std::vector<int> perm(tup.size());
    for (size_t i = 0; i < perm.size(); ++i) perm[i] = (int)i;
    do {
      int inv = 0;
      for (size_t i = 0; i < perm.size(); ++i)
        for (size_t j = i + 1; j < perm.size(); ++j)
          if (perm[i] > perm[j]) ++inv;
      BarKey key;
      for (int i : perm) key.push_back({tup[i]});
      bar_add(r, key, (inv % 2 ? -1 : 1) * c);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return r;
}

BarQuasiIsoReport verify_bar_quasiiso(const std::vector<std::string> &A,
                                      int W) {
  BarQuasiIsoReport rep;
  auto L = t_tilde(A, W);
  TruncatedUEA U(L, W);
  auto ce = ce_complex(L, W);
  auto bar = bar_complex(U, W);
  rep.ce_ranks = homology_ranks(ce);
  rep.bar_ranks = bar_homology_ranks(bar);
  if (rep.ce_ranks != rep.bar_ranks) {
    rep.pass = false;
    rep.detail = "rank tables differ";
    return rep;
  }
  // induced map: antisym images of CE cycles must span bar cycles modulo
  // boundaries (surjective + equal ranks => isomorphism)
  for (auto &[kw, mons] : ce.basis) {
    auto [k, w] = kw;
    if (k == 0) continue;
    auto &bmons = bar.basis.at(kw);
    auto cycles = reduce(ce.diff.at(kw)).kernel_basis;
    std::vector<SparseVec> img_cols;
    for (auto &z : cycles) {
      WedgeChain zc;
      for (auto &[j, c] : z) wedge_chain_add(zc, mons[j], c);
      SparseVec col;
      for (auto &[key, c] : antisym_embed(zc)) {
        int i = bar.index_of(k, w, key);
        if (i < 0) {
          rep.pass = false;
          rep.detail = "antisym image escapes the bar basis";
          return rep;
        }
        col[i] = c;
      }
      img_cols.push_back(std::move(col));
    }
    // bar boundaries from degree k+1
    std::vector<SparseVec> bnd_cols;
    auto it = bar.diff.find({k + 1, w});
    if (it != bar.diff.end()) {
      std::map<int, SparseVec> bycol;
      for (int r = 0; r < it->second.rows(); ++r)
        for (auto &[cidx, v] : it->second.row(r)) bycol[cidx][r] = v;
      for (auto &[cidx, col] : bycol) bnd_cols.push_back(std::move(col));
    }
    int nb = (int)bnd_cols.size();
    SparseMatrix B((int)bmons.size(), nb);
    SparseMatrix IB((int)bmons.size(), (int)img_cols.size() + nb);
    for (int j = 0; j < nb; ++j)
      for (auto &[i, v] : bnd_cols[j]) {
        B.set(i, j, v);
        IB.set(i, (int)img_cols.size() + j, v);
      }
    for (int j = 0; j < (int)img_cols.size(); ++j)
      for (auto &[i, v] : img_cols[j]) IB.set(i, j, v);
    int bar_rank_d = bar.diff.count(kw) ? reduce(bar.diff.at(kw)).rank : 0;
    int cycle_dim = (int)bmons.size() - bar_rank_d;
    if (reduce(IB).rank != cycle_dim) {
      rep.pass = false;
      rep.detail = "induced map not surjective at degree " +
                   std::to_string(k) + ", weight " + std::to_string(w);
      return rep;
    }
  }
  return rep;
}

}  // namespace wb

#include "wb/uea.hpp"

#include <stdexcept>

namespace wb {

int pbw_weight(const PBWKey &k) {
  int w = 0;
  for (auto &[bw, i] : k) w += bw;
  return w;
}

void uea_add(UEAElement &x, const PBWKey &k, const Scalar &c) {
  if (c == 0) return;
  auto it = x.find(k);
  if (it == x.end()) {
    x.emplace(k, c);
  } else {
    it->second += c;
    if (it->second == 0) x.erase(it);
  }
}

TruncatedUEA::TruncatedUEA(AlgebraPtr L, int W) : L_(std::move(L)), W_(W) {
  if (L_->W() < W_)
    throw std::invalid_argument("uea_truncated: algebra too short");
  basis_.resize(W_ + 1);
  basis_[0].push_back({});
  // extend monomials of weight v by ids >= their last entry
  for (int w = 1; w <= W_; ++w) {
    for (int gw = 1; gw <= w; ++gw)
      for (int i = 0; i < L_->dim(gw); ++i) {
        BasisId id{gw, i};
        for (auto &m : basis_[w - gw]) {
          if (!m.empty() && id < m.back()) continue;
          PBWKey k = m;
          k.push_back(id);
          basis_[w].push_back(std::move(k));
        }
      }
    std::sort(basis_[w].begin(), basis_[w].end());
    basis_[w].erase(std::unique(basis_[w].begin(), basis_[w].end()),
                    basis_[w].end());
  }
}

int TruncatedUEA::dim(int w) const {
  return (w < 0 || w > W_) ? 0 : (int)basis_[w].size();
}

const std::vector<PBWKey> &TruncatedUEA::basis(int w) const {
  return basis_.at(w);
}

UEAElement TruncatedUEA::from_lie(const LieElement &x) const {
  UEAElement r;
  for (auto &[w, vec] : x.comp) {
    if (w > W_) continue;
    for (auto &[i, c] : vec) uea_add(r, {BasisId{w, i}}, c);
  }
  return r;
}

UEAElement TruncatedUEA::straighten(const std::vector<BasisId> &word) const {
  int w = 0;
  for (auto &[bw, i] : word) w += bw;
  if (w > W_) return {};
  auto it = memo_.find(word);
  if (it != memo_.end()) return it->second;
  UEAElement r;
  size_t desc = word.size();
  for (size_t i = 0; i + 1 < word.size(); ++i)
    if (word[i + 1] < word[i]) {
      desc = i;
      break;
    }
  if (desc == word.size()) {
    r = {{word, Scalar(1)}};
  } else {
    // x y = y x + [x, y]
    auto x = word[desc], y = word[desc + 1];
    std::vector<BasisId> swapped = word;
    std::swap(swapped[desc], swapped[desc + 1]);
    r = straighten(swapped);
    const SparseVec &br = L_->bracket_basis(x.first, x.second, y.first,
                                            y.second);
    for (auto &[j, c] : br) {
      std::vector<BasisId> merged(word.begin(), word.begin() + desc);
      merged.push_back({x.first + y.first, j});
      merged.insert(merged.end(), word.begin() + desc + 2, word.end());
      for (auto &[k, c2] : straighten(merged)) uea_add(r, k, c * c2);
    }
  }
  memo_.emplace(word, r);
  return r;
}

UEAElement TruncatedUEA::mul(const UEAElement &x, const UEAElement &y) const {
  UEAElement r;
  for (auto &[u, cu] : x)
    for (auto &[v, cv] : y) {
      std::vector<BasisId> word = u;
      word.insert(word.end(), v.begin(), v.end());
      for (auto &[k, c] : straighten(word)) uea_add(r, k, cu * cv * c);
    }
  return r;
}

Scalar TruncatedUEA::chi(const UEAElement &x) const {
  auto it = x.find(PBWKey{});
  return it == x.end() ? Scalar(0) : it->second;
}

}  // namespace wb

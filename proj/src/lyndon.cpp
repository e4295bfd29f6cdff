#include "wb/lyndon.hpp"

namespace wb {

bool is_lyndon(const Word &w) {
  if (w.empty()) return false;
  for (size_t i = 1; i < w.size(); ++i) {
    // w must be strictly smaller than each proper suffix
    if (!std::lexicographical_compare(w.begin(), w.end(), w.begin() + i,
                                      w.end()))
      return false;
  }
  return true;
}

std::vector<Word> lyndon_words(int k, int w) {
  std::vector<Word> out;
  if (w < 1 || k < 1) return out;
  // Duval: generate Lyndon words of length <= w in lex order, keep length w.
  Word cur{0};
  while (!cur.empty()) {
    if ((int)cur.size() == w) out.push_back(cur);
    int n = (int)cur.size();
    while ((int)cur.size() < w) cur.push_back(cur[cur.size() - n]);
    while (!cur.empty() && cur.back() == k - 1) cur.pop_back();
    if (!cur.empty()) cur.back()++;
  }
  return out;
}

std::int64_t witt_number(int k, int w) {
  // (1/w) sum_{d | w} mu(d) k^{w/d}
  auto mobius = [](int n) {
    int m = 1;
    for (int p = 2; p * p <= n; ++p)
      if (n % p == 0) {
        n /= p;
        if (n % p == 0) return 0;
        m = -m;
      }
    if (n > 1) m = -m;
    return m;
  };
  std::int64_t total = 0;
  for (int d = 1; d <= w; ++d) {
    if (w % d) continue;
    int mu = mobius(d);
    if (!mu) continue;
    std::int64_t pw = 1;
    for (int i = 0; i < w / d; ++i) pw *= k;
    total += mu * pw;
  }
  return total / w;
}

int standard_split(const Word &w) {
  // longest proper Lyndon suffix
  for (size_t i = 1; i < w.size(); ++i) {
    Word suf(w.begin() + i, w.end());
    if (is_lyndon(suf)) return (int)i;
  }
  throw std::logic_error("standard_split: not a Lyndon word");
}

void tensor_add(Tensor &t, const Word &w, const Scalar &c) {
  if (c == 0) return;
  auto it = t.find(w);
  if (it == t.end()) {
    t.emplace(w, c);
  } else {
    it->second += c;
    if (it->second == 0) t.erase(it);
  }
}

void tensor_axpy(Tensor &t, const Scalar &c, const Tensor &s) {
  if (c == 0) return;
  for (auto &[w, x] : s) tensor_add(t, w, c * x);
}

Tensor tensor_concat(const Tensor &a, const Tensor &b) {
  Tensor r;
  for (auto &[u, cu] : a)
    for (auto &[v, cv] : b) {
      Word w = u;
      w.insert(w.end(), v.begin(), v.end());
      tensor_add(r, w, cu * cv);
    }
  return r;
}

Tensor tensor_bracket(const Tensor &a, const Tensor &b) {
  Tensor r = tensor_concat(a, b);
  tensor_axpy(r, -1, tensor_concat(b, a));
  return r;
}

Tensor lyndon_expansion(const Word &w) {
  if (w.size() == 1) return Tensor{{w, Scalar(1)}};
  int s = standard_split(w);
  Word u(w.begin(), w.begin() + s), v(w.begin() + s, w.end());
  return tensor_bracket(lyndon_expansion(u), lyndon_expansion(v));
}

}  // namespace wb

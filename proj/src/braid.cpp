#include "wb/braid.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace wb {

namespace {

void check_letter(int letter, int n) {
  int i = std::abs(letter);
  if (letter == 0 || i > n - 1)
    throw std::invalid_argument("braid: generator index out of range");
}

std::vector<int> identity_perm(int n) {
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  return p;
}

std::vector<int> half_twist(int n) {
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = n - 1 - i;
  return p;
}

// pi -> pi * s_g (one more crossing at the right, positions g, g+1):
// swap the values g and g+1.
void swap_values(std::vector<int> &pi, int g) {
  for (auto &v : pi)
    if (v == g)
      v = g + 1;
    else if (v == g + 1)
      v = g;
}

// pi -> tau(pi) = Delta pi Delta^{-1}
std::vector<int> flip(const std::vector<int> &pi) {
  int n = (int)pi.size();
  std::vector<int> r(n);
  for (int i = 0; i < n; ++i) r[i] = n - 1 - pi[n - 1 - i];
  return r;
}

// Make the adjacent pair (A, B) left-weighted: move every starting letter of
// B that A can still absorb.  Returns true if anything moved.
bool left_weight(std::vector<int> &A, std::vector<int> &B) {
  int n = (int)A.size();
  std::vector<int> apos(n);
  for (int i = 0; i < n; ++i) apos[A[i]] = i;
  bool changed = false, again = true;
  while (again) {
    again = false;
    for (int g = 0; g + 1 < n; ++g) {
      if (B[g] <= B[g + 1]) continue;          // s_g does not start B
      if (apos[g] > apos[g + 1]) continue;     // s_g already finishes A
      std::swap(A[apos[g]], A[apos[g + 1]]);   // A := A s_g
      std::swap(apos[g], apos[g + 1]);
      std::swap(B[g], B[g + 1]);               // B := s_g^{-1} B
      changed = again = true;
    }
  }
  return changed;
}

}  // namespace

ArtinWord braid_inverse(const ArtinWord &w) {
  ArtinWord r(w.rbegin(), w.rend());
  for (auto &x : r) x = -x;
  return r;
}

std::vector<int> word_permutation(const ArtinWord &w, int n) {
  auto pi = identity_perm(n);
  for (int letter : w) {
    check_letter(letter, n);
    swap_values(pi, std::abs(letter) - 1);
  }
  return pi;
}

std::string braid_word_to_string(const ArtinWord &w) {
  std::ostringstream os;
  bool first = true;
  for (int letter : w) {
    if (!first) os << ' ';
    first = false;
    os << 's' << std::abs(letter);
    if (letter < 0) os << "^-1";
  }
  return os.str();
}

ArtinWord braid_word_parse(const std::string &text) {
  ArtinWord w;
  std::istringstream is(text);
  std::string tok;
  while (is >> tok) {
    if (tok.size() < 2 || tok[0] != 's')
      throw std::invalid_argument("braid word: bad token '" + tok + "'");
    size_t caret = tok.find('^');
    int i = std::stoi(tok.substr(1, caret == std::string::npos
                                        ? std::string::npos
                                        : caret - 1));
    int e = 1;
    if (caret != std::string::npos) e = std::stoi(tok.substr(caret + 1));
    if (i <= 0 || (e != 1 && e != -1))
      throw std::invalid_argument("braid word: bad token '" + tok + "'");
    w.push_back(e * i);
  }
  return w;
}

GarsideNF garside_normal_form(const ArtinWord &w, int n) {
  if (n < 1) throw std::invalid_argument("garside_normal_form: n < 1");
  GarsideNF nf;
  nf.n = n;
  auto w0 = half_twist(n);
  for (int letter : w) {
    check_letter(letter, n);
    int g = std::abs(letter) - 1;
    if (letter > 0) {
      auto p = identity_perm(n);
      std::swap(p[g], p[g + 1]);
      nf.factors.push_back(std::move(p));
    } else {
      // sigma_g^{-1} = Delta^{-1} (Delta sigma_g^{-1}); push the Delta^{-1}
      // to the front past the accumulated factors.
      nf.delta -= 1;
      for (auto &f : nf.factors) f = flip(f);
      auto p = w0;
      swap_values(p, g);
      nf.factors.push_back(std::move(p));
    }
  }
  auto id = identity_perm(n);
  bool changed = true;
  while (changed) {
    changed = false;
    auto junk = std::remove(nf.factors.begin(), nf.factors.end(), id);
    if (junk != nf.factors.end()) {
      nf.factors.erase(junk, nf.factors.end());
      changed = true;
    }
    for (size_t j = 0; j + 1 < nf.factors.size(); ++j)
      if (left_weight(nf.factors[j], nf.factors[j + 1])) changed = true;
  }
  while (!nf.factors.empty() && nf.factors.front() == w0) {
    nf.factors.erase(nf.factors.begin());
    nf.delta += 1;
  }
  return nf;
}

bool braid_trivial(const ArtinWord &w, int n) {
  return garside_normal_form(w, n).trivial();
}

bool handle_reduce_trivial(ArtinWord w, int n) {
  for (int letter : w) check_letter(letter, n);
  for (long iter = 0; iter < 1000000; ++iter) {
    // leftmost-closing handle: sigma_i^{e} v sigma_i^{-e} with every letter
    // of v of index > i (so v itself is handle-free by minimality of the
    // closing position)
    int hj = -1, hk = -1;
    for (int j = 0; j < (int)w.size() && hj < 0; ++j) {
      int ij = std::abs(w[j]);
      for (int k = j - 1; k >= 0; --k) {
        int ik = std::abs(w[k]);
        if (ik < ij) break;
        if (ik == ij) {
          if (w[k] == -w[j]) {
            hj = j;
            hk = k;
          }
          break;
        }
      }
    }
    if (hj < 0) return w.empty();
    int i = std::abs(w[hk]);
    int e = w[hk] > 0 ? 1 : -1;
    ArtinWord out(w.begin(), w.begin() + hk);
    for (int p = hk + 1; p < hj; ++p) {
      if (std::abs(w[p]) == i + 1) {
        int d = w[p] > 0 ? 1 : -1;
        out.push_back(-e * (i + 1));
        out.push_back(d * i);
        out.push_back(e * (i + 1));
      } else {
        out.push_back(w[p]);
      }
    }
    out.insert(out.end(), w.begin() + hj + 1, w.end());
    w = std::move(out);
  }
  throw std::runtime_error("handle_reduce_trivial: reduction did not settle");
}

}  // namespace wb

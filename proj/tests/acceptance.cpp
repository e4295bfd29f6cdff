// Acceptance gate: one line per criterion, exact rational checks throughout.
#include <chrono>
#include <cstdio>
#include <random>

#include "wb/barcx.hpp"
#include "wb/bv.hpp"
#include "wb/phi.hpp"
#include "wb/report.hpp"

using namespace wb;

namespace {

int failures = 0;

void report(int crit, bool pass, const std::string &what, double secs) {
  std::printf("%s  criterion %2d: %s (%.2f s)\n", pass ? "PASS" : "FAIL", crit,
              what.c_str(), secs);
  if (!pass) ++failures;
}

template <typename F>
void criterion(int crit, const std::string &what, F f) {
  auto start = std::chrono::steady_clock::now();
  bool pass = false;
  std::string note = what;
  try {
    pass = f(note);
  } catch (const std::exception &e) {
    note += std::string(" [exception: ") + e.what() + "]";
  }
  double secs = std::chrono::duration<double>(
                    std::chrono::steady_clock::now() - start)
                    .count();
  report(crit, pass, note, secs);
}

long factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::map<std::pair<int, int>, int> ce_table(AlgebraPtr L, int W) {
  return homology_ranks(ce_complex(L, W));
}

ArtinWord random_word(int n, int len, std::mt19937 &rng) {
  ArtinWord w;
  for (int i = 0; i < len; ++i) {
    int g = 1 + (int)(rng() % (n - 1));
    w.push_back(rng() % 2 ? g : -g);
  }
  return w;
}

// Applies one relation-preserving rewrite, so the result represents the same
// braid group element.
ArtinWord rewrite_once(ArtinWord w, int n, std::mt19937 &rng) {
  switch (rng() % 4) {
    case 0: {  // insert a cancelling pair
      int g = 1 + (int)(rng() % (n - 1));
      size_t pos = rng() % (w.size() + 1);
      w.insert(w.begin() + pos, {g, -g});
      return w;
    }
    case 1: {  // delete a cancelling pair if one exists
      for (size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] == -w[i + 1]) {
          w.erase(w.begin() + i, w.begin() + i + 2);
          return w;
        }
      return w;
    }
    case 2: {  // commute distant generators
      for (size_t i = 0; i + 1 < w.size(); ++i)
        if (std::abs(std::abs(w[i]) - std::abs(w[i + 1])) >= 2) {
          std::swap(w[i], w[i + 1]);
          return w;
        }
      return w;
    }
    default: {  // braid relation on a same-sign i,i+1,i triple
      for (size_t i = 0; i + 2 < w.size(); ++i)
        if (w[i] == w[i + 2] && std::abs(std::abs(w[i]) - std::abs(w[i + 1])) == 1 &&
            (w[i] > 0) == (w[i + 1] > 0)) {
          int a = w[i], b = w[i + 1];
          w[i] = b;
          w[i + 1] = a;
          w[i + 2] = b;
          return w;
        }
      return w;
    }
  }
}

}  // namespace

int main() {
  criterion(1, "BV basis sizes 2^n n! for n = 1..4", [](std::string &note) {
    for (int n = 1; n <= 4; ++n)
      if ((long)bv_basis(default_labels(n)).size() != (1L << n) * factorial(n)) {
        note += " [wrong count at n=" + std::to_string(n) + "]";
        return false;
      }
    return true;
  });

  criterion(2, "Gerstenhaber sub-basis sizes n! for n = 1..4",
            [](std::string &note) {
    for (int n = 1; n <= 4; ++n)
      if ((long)g_basis(default_labels(n)).size() != factorial(n)) {
        note += " [wrong count at n=" + std::to_string(n) + "]";
        return false;
      }
    return true;
  });

  criterion(3,
            "CE homology totals 2^n n! for n = 1..3 (full diagonal window "
            "w <= 2n-1)",
            [](std::string &note) {
    for (int n = 1; n <= 3; ++n) {
      int W = 2 * n - 1;
      long total = 0;
      for (auto &[kw, r] : ce_table(t_tilde(default_labels(n), W), W))
        total += r;
      if (total != (1L << n) * factorial(n)) {
        note += " [n=" + std::to_string(n) + " total " + std::to_string(total) +
                "]";
        return false;
      }
    }
    return true;
  });

  criterion(4, "Kunneth factorization for n = 1..3", [](std::string &note) {
    for (int n = 1; n <= 3; ++n) {
      int W = 2 * n - 1;
      auto full = ce_table(t_tilde(default_labels(n), W), W);
      std::map<std::pair<int, int>, int> plain;
      if (n == 1)
        plain[{0, 0}] = 1;  // t on one strand is the zero Lie algebra
      else
        plain = ce_table(t_plain(default_labels(n), W), W);
      std::map<std::pair<int, int>, int> conv;
      for (auto &[kw, r] : plain)
        for (int j = 0; j <= n; ++j) {
          auto [k, w] = kw;
          if (w + j <= W) conv[{k + j, w + j}] += r * (int)binom(n, j);
        }
      if (conv != full) {
        note += " [mismatch at n=" + std::to_string(n) + "]";
        return false;
      }
    }
    return true;
  });

  criterion(5, "BV -> H(t~) quasiisomorphism for n = 1..3",
            [](std::string &note) {
    for (int n = 1; n <= 3; ++n) {
      auto rep = verify_bv_quasiiso(default_labels(n), 2 * n - 1);
      if (!rep.pass || rep.total != (1L << n) * factorial(n)) {
        note += " [n=" + std::to_string(n) + ": " + rep.offender + "]";
        return false;
      }
    }
    return true;
  });

  criterion(6, "operad laws for t~ (arity <= 3, 100 sampled elements)",
            [](std::string &note) {
    auto rep = check_operad_laws(3, 3, 100);
    if (!rep.pass) note += " [" + rep.counterexample + "]";
    return rep.pass;
  });

  criterion(7, "bar homology equals CE homology for n = 1..3, w <= 3",
            [](std::string &note) {
    for (int n = 1; n <= 3; ++n) {
      auto rep = verify_bar_quasiiso(default_labels(n), 3);
      if (!rep.pass) {
        note += " [n=" + std::to_string(n) + ": " + rep.detail + "]";
        return false;
      }
    }
    return true;
  });

  criterion(8, "associator at N = 3: zero residuals, |c_2| = 1/24",
            [](std::string &note) {
    auto phi = solve_associator(3);
    auto rep = check_associator(phi);
    if (!rep.pass) {
      note += " [" + rep.detail + "]";
      return false;
    }
    auto it = phi.log_phi.comp.find(2);
    if (it == phi.log_phi.comp.end() || it->second.size() != 1 ||
        abs(it->second.begin()->second) != frac(1, 24)) {
      note += " [wrong degree-2 coefficient]";
      return false;
    }
    return true;
  });

  criterion(9, "phi functoriality and cabling compatibility at N = 3",
            [](std::string &note) {
    auto rep = verify_phi_functoriality(solve_associator(3), 3, 25);
    if (!rep.pass) note += " [" + rep.detail + "]";
    return rep.pass;
  });

  criterion(10, "homology generator identities (s_a, 1, t_ab)",
            [](std::string &note) {
    auto rep = verify_homology_identity(solve_associator(3), 3);
    if (!rep.pass) note += " [" + rep.detail + "]";
    return rep.pass;
  });

  criterion(11, "Garside vs handle reduction, 1000 word pairs",
            [](std::string &note) {
    std::mt19937 rng(2024);
    for (int t = 0; t < 1000; ++t) {
      int n = 2 + (int)(rng() % 3);
      auto w1 = random_word(n, 1 + (int)(rng() % 12), rng);
      ArtinWord w2;
      if (t % 2 == 0) {  // known-equal pair via relation-preserving rewrites
        w2 = w1;
        for (int r = 0; r < 5; ++r) w2 = rewrite_once(w2, n, rng);
      } else {
        w2 = random_word(n, 1 + (int)(rng() % 12), rng);
      }
      ArtinWord cmp = w1;
      auto inv = braid_inverse(w2);
      cmp.insert(cmp.end(), inv.begin(), inv.end());
      bool garside = garside_normal_form(w1, n) == garside_normal_form(w2, n);
      if (garside != handle_reduce_trivial(cmp, n)) {
        note += " [disagree on " + braid_word_to_string(cmp) + "]";
        return false;
      }
    }
    return true;
  });

  criterion(12, "byte-identical consecutive 'all' runs", [](std::string &note) {
    auto cfg = parse_cli({"all", "--n", "2", "--W", "3", "--N", "2",
                          "--samples", "10"});
    auto r1 = run_report(cfg);
    auto r2 = run_report(cfg);
    if (r1.exit_code != 0) {
      note += " [all run failed]";
      return false;
    }
    if (r1.output != r2.output) {
      note += " [outputs differ]";
      return false;
    }
    return true;
  });

  if (failures) std::printf("%d criteria FAILED\n", failures);
  return failures ? 1 : 0;
}

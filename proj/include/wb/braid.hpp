#ifndef WB_BRAID_HPP
#define WB_BRAID_HPP

#include <string>
#include <vector>

namespace wb {

// Artin word on n strands: +i is sigma_i, -i is sigma_i^{-1}, 1 <= i <= n-1.
using ArtinWord = std::vector<int>;

ArtinWord braid_inverse(const ArtinWord &w);
// perm[i] = final position (0-based) of the strand starting at position i.
std::vector<int> word_permutation(const ArtinWord &w, int n);

std::string braid_word_to_string(const ArtinWord &w);  // "s1 s2^-1 ..."
ArtinWord braid_word_parse(const std::string &text);

// Left-greedy normal form: a power of the half twist followed by a strictly
// descending-closure sequence of permutation braids (stored as permutations).
struct GarsideNF {
  int n = 1;
  long delta = 0;
  std::vector<std::vector<int>> factors;
  bool trivial() const { return delta == 0 && factors.empty(); }
  bool operator==(const GarsideNF &) const = default;
};

GarsideNF garside_normal_form(const ArtinWord &w, int n);
bool braid_trivial(const ArtinWord &w, int n);

// Independent oracle: Dehornoy handle reduction (leftmost-closing strategy);
// a word is trivial iff it reduces to the empty word.
bool handle_reduce_trivial(ArtinWord w, int n);

}  // namespace wb

#endif

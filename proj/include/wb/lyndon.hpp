#ifndef WB_LYNDON_HPP
#define WB_LYNDON_HPP

#include "wb/exactla.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace wb {

// A word over an integer alphabet {0,...,k-1}.
using Word = std::vector<int>;

// Element of the free associative algebra (tensor algebra), graded by length.
using Tensor = std::map<Word, Scalar>;

bool is_lyndon(const Word &w);

// All Lyndon words of length exactly w over a k-letter alphabet, in
// lexicographic order (Duval's algorithm).
std::vector<Word> lyndon_words(int k, int w);

// Witt number: dimension of the length-w component of the free Lie algebra
// on k generators.
std::int64_t witt_number(int k, int w);

// Position of the standard factorization w = u v (v = longest proper Lyndon
// suffix); returns |u|.  Requires |w| >= 2 and w Lyndon.
int standard_split(const Word &w);

void tensor_add(Tensor &t, const Word &w, const Scalar &c);
void tensor_axpy(Tensor &t, const Scalar &c, const Tensor &s);
Tensor tensor_concat(const Tensor &a, const Tensor &b);
// Commutator ab - ba in the tensor algebra.
Tensor tensor_bracket(const Tensor &a, const Tensor &b);

// Expansion of the standard (Lyndon) bracketing of a Lyndon word in the
// tensor algebra.
Tensor lyndon_expansion(const Word &w);

}  // namespace wb

#endif

#pragma once

#include <cstddef>
#include <vector>

#include "ocycles/word.hpp"

namespace ocycles {

// Every enumerator returns its objects in strictly increasing lexicographic
// order without duplicates, so Euler tours built downstream are reproducible.

/// Distinct arrangements of a multiset; count n! / prod(mult!).
std::vector<Word> enumerate_multiset_permutations(const MultisetSpec& m);

/// Valid juggling sequences of length n with at most b_max balls.
///
/// Built from (permutation, increment) pairs: each permutation pi of
/// {0, ..., n-1} fixes base heights (pi_i - i) mod n, and every increment of
/// n on a digit adds exactly one ball, so no height cap is needed.
std::vector<Word> enumerate_juggling_sequences(std::size_t n, std::size_t b_max);

/// Length-n words over {0, ..., h-1} using every letter (surjections [n] -> [h]).
std::vector<Word> enumerate_surjective_strings(std::size_t n, std::size_t h);

/// Injective words of length k over {0, ..., n-1}; count n! / (n-k)!.
std::vector<Word> enumerate_k_permutations(std::size_t n, std::size_t k);

}  // namespace ocycles

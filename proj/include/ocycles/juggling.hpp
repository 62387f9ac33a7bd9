#pragma once

#include <cstddef>

#include "ocycles/word.hpp"

namespace ocycles {

/// True iff the landing beats i + t_i (mod n) are pairwise distinct.
bool validate_juggling(const Word& t);

/// pi_i = (t_i + i) mod n. The input is valid iff the result is a permutation.
Word permutation_sequence(const Word& t);

/// True iff all entries of `w` are distinct.
bool all_distinct(const Word& w);

/// Average throw height (sum t_i) / n. Throws DomainError for invalid input.
std::size_t ball_count(const Word& t);

/// Subtracts n from digit i. Requires t_i >= n. Validity is preserved.
Word reduce_digit(const Word& t, std::size_t i);

/// Repeatedly reduces until every digit is < n.
Word canonical_reduction(const Word& t);

/// A word known to be a valid juggling sequence.
class JugglingSequence {
public:
    /// Throws DomainError if `t` is not valid.
    explicit JugglingSequence(Word t);

    const Word& word() const noexcept { return word_; }
    std::size_t period() const noexcept { return word_.size(); }
    std::size_t balls() const noexcept { return balls_; }
    Word permutation() const { return permutation_sequence(word_); }

private:
    Word word_;
    std::size_t balls_;
};

}  // namespace ocycles

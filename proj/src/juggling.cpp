#include "ocycles/juggling.hpp"

#include <algorithm>
#include <vector>

#include "ocycles/error.hpp"

namespace ocycles {

bool all_distinct(const Word& w) {
    std::vector<Symbol> sorted(w.vec());
    std::sort(sorted.begin(), sorted.end());
    return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

Word permutation_sequence(const Word& t) {
    const std::size_t n = t.size();
    std::vector<Symbol> pi(n);
    for (std::size_t i = 0; i < n; ++i) pi[i] = static_cast<Symbol>((t[i] % n + i) % n);
    return Word(std::move(pi));
}

bool validate_juggling(const Word& t) {
    const std::size_t n = t.size();
    std::vector<bool> landed(n, false);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t beat = (t[i] % n + i) % n;
        if (landed[beat]) return false;
        landed[beat] = true;
    }
    return true;
}

std::size_t ball_count(const Word& t) {
    if (!validate_juggling(t)) throw DomainError("ball count of an invalid juggling sequence: " + t.str());
    return t.sum() / t.size();
}

Word reduce_digit(const Word& t, std::size_t i) {
    const std::size_t n = t.size();
    if (i >= n) throw ParameterError("digit index out of range");
    if (t[i] < n) throw ParameterError("reduce_digit requires t_i >= n");
    return t.with(i, static_cast<Symbol>(t[i] - n));
}

Word canonical_reduction(const Word& t) {
    std::vector<Symbol> out(t.vec());
    for (Symbol& x : out) x %= static_cast<Symbol>(t.size());
    return Word(std::move(out));
}

JugglingSequence::JugglingSequence(Word t) : word_(std::move(t)), balls_(ball_count(word_)) {}

}  // namespace ocycles

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace ocycles {

using Symbol = std::uint32_t;

/// A fixed-length string of nonnegative integer symbols.
///
/// Words are the common carrier for permutations, strings over an alphabet
/// and juggling sequences. Symbols are 0-based: permutations live over
/// {0, ..., n-1} and strings with ground set of size h over {0, ..., h-1}.
/// Ordering is lexicographic.
class Word {
public:
    Word(std::initializer_list<Symbol> symbols);
    explicit Word(std::vector<Symbol> symbols);
    explicit Word(std::span<const Symbol> symbols);

    std::size_t size() const noexcept { return symbols_.size(); }
    Symbol operator[](std::size_t i) const { return symbols_[i]; }
    std::span<const Symbol> symbols() const noexcept { return symbols_; }
    const std::vector<Symbol>& vec() const noexcept { return symbols_; }

    /// First `len` symbols.
    Word prefix(std::size_t len) const;
    /// Last `len` symbols.
    Word suffix(std::size_t len) const;

    /// Copy with position i replaced.
    Word with(std::size_t i, Symbol value) const;

    Symbol sum() const noexcept;

    /// Space-separated decimal rendering, e.g. "0 1 5".
    std::string str() const;
    /// Concatenated rendering for words whose symbols are all single digits
    /// ("015"); falls back to str() otherwise.
    std::string compact() const;

    auto operator<=>(const Word&) const = default;
    bool operator==(const Word&) const = default;

private:
    std::vector<Symbol> symbols_;
};

std::ostream& operator<<(std::ostream& os, const Word& w);

/// Multiset of symbols, stored as symbol -> multiplicity (all >= 1).
class MultisetSpec {
public:
    explicit MultisetSpec(std::map<Symbol, std::size_t> counts);
    /// Builds the multiset from a list of elements, e.g. {0, 0, 1}.
    static MultisetSpec from_elements(std::span<const Symbol> elements);
    /// The set {0, ..., n-1}.
    static MultisetSpec range(std::size_t n);

    const std::map<Symbol, std::size_t>& counts() const noexcept { return counts_; }
    std::size_t size() const noexcept { return size_; }
    /// Elements in nondecreasing order; the lexicographically least arrangement.
    std::vector<Symbol> sorted_elements() const;
    std::size_t distinct() const noexcept { return counts_.size(); }

private:
    std::map<Symbol, std::size_t> counts_;
    std::size_t size_ = 0;
};

/// Left rotation: x_s ... x_{n-1} x_0 ... x_{s-1}. Requires 0 <= s <= n.
Word rotate(const Word& x, std::size_t s);

/// Partition of a word into m = n/d contiguous blocks of length d.
struct BlockDecomposition {
    Word source;
    std::size_t block_size;
    std::vector<Word> blocks;

    std::size_t block_count() const noexcept { return blocks.size(); }
    /// Sum of the digits of block i.
    Symbol weight(std::size_t i) const;
};

BlockDecomposition block_decompose(const Word& x, std::size_t d);

/// Least j >= 0 such that rotating by s, j times, starts the word at block i
/// of its gcd(n, s)-block decomposition, i.e. j*s = i*gcd(n, s) (mod n).
/// Requires 1 <= s <= n-1 and i < n / gcd(n, s).
std::size_t block_rotation_exponent(std::size_t n, std::size_t s, std::size_t i);

}  // namespace ocycles

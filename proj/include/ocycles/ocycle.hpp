#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ocycles/digraph.hpp"
#include "ocycles/word.hpp"

namespace ocycles {

/// A cyclic ordering of m length-n objects in which consecutive objects
/// overlap in s symbols.
///
/// `compressed` is the cyclic string of length m*(n-s) obtained by
/// concatenating the first n-s symbols of each object in order. Reading n
/// symbols cyclically from position j*(n-s) reproduces object j.
struct OverlapCycle {
    std::size_t overlap = 0;
    std::size_t word_length = 0;
    std::vector<Word> objects;
    std::vector<Symbol> compressed;
};

OverlapCycle assemble_ocycle(const EulerTour& tour, std::size_t s);

/// Objects read from a compressed cyclic string at stride n-s. Throws
/// ParameterError if the length is not a positive multiple of n-s.
std::vector<Word> decode_cycle(std::span<const Symbol> compressed, std::size_t n, std::size_t s);

/// Cycle built from a compressed string alone.
OverlapCycle cycle_from_compressed(std::vector<Symbol> compressed, std::size_t n, std::size_t s);

struct Finding {
    enum class Kind {
        BadParameters,
        LengthMismatch,
        CompressedMismatch,
        MissingObject,
        DuplicateObject,
        UnexpectedObject,
        OverlapViolation,
        ClosureViolation,
    };

    Kind kind;
    /// Cycle position for most kinds; index into the sorted expected set for
    /// MissingObject.
    std::size_t position = 0;
    std::optional<Word> object;
    std::string detail;
};

std::string to_string(Finding::Kind kind);

struct VerificationReport {
    std::vector<Finding> findings;

    bool pass() const noexcept { return findings.empty(); }
    bool has(Finding::Kind kind) const;
};

/// Checks that the cycle lists each expected object exactly once, nothing
/// else, and that every adjacent pair (including last -> first) overlaps in
/// s symbols. Failures are reported, never thrown.
VerificationReport verify_ocycle(const OverlapCycle& cycle, std::span<const Word> expected, std::size_t s);

/// n - s > gcd(n, s). Requires 1 <= s <= n-1.
bool existence_predicate(std::size_t n, std::size_t s);

}  // namespace ocycles

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ocycles/word.hpp"

namespace ocycles::harness {

/// How a sweep row is judged.
enum class Scope {
    /// Prediction and oracle must agree.
    Asserted,
    /// Outside the hypotheses of the existence theorem (every arrangement of
    /// the multiset is reachable by block rotation and in-block shuffles, so
    /// the disconnection argument has nothing to separate). Reported only.
    TheoremScope,
    /// No claim is made; the oracle outcome is recorded for reference.
    Recorded,
};

std::string to_string(Scope scope);

/// The single-ball sequence d 0..0 (n-d) 0..0 that separates the juggling
/// digraph when n - s = gcd(n, s) = d.
struct JugglingWitness {
    Word sequence;
    Word permutation;
    bool valid = false;
    std::size_t balls = 0;
    Symbol first_block_weight = 0;
    std::size_t block_size = 0;
    Word prefix_vertex;
    Word zero_vertex;
    /// prefix_vertex and zero_vertex are in different weak components.
    bool separated = false;

    bool holds() const noexcept {
        return valid && balls == 1 && first_block_weight == block_size && separated;
    }
};

struct SweepResult {
    std::string family;
    std::size_t n = 0;
    std::size_t s = 0;
    /// Extra family parameters in a fixed order, e.g. {"b", 2} or {"k", 3}.
    std::vector<std::pair<std::string, std::size_t>> params;
    /// Multiset elements for multiset-permutation rows.
    std::vector<Symbol> multiset;

    Scope scope = Scope::Asserted;
    /// Existence as claimed by the theorem; empty for recorded-only rows.
    std::optional<bool> predicted;
    /// Euler feasibility of the transition digraph.
    bool observed = false;

    std::size_t object_count = 0;
    std::size_t vertex_count = 0;
    std::size_t component_count = 0;
    bool balanced = false;
    /// Set when a tour was built: whether the assembled cycle verified.
    std::optional<bool> tour_verified;
    /// Least vertices of the first two components when disconnected.
    std::vector<Word> component_witness;
    std::optional<JugglingWitness> juggling_witness;

    bool agreement() const noexcept { return !predicted || *predicted == observed; }
    /// Row passes under its scope: agreement, a verified tour whenever one was
    /// built, and a holding witness when one is attached.
    bool ok() const noexcept;
    std::optional<std::size_t> param(const std::string& key) const;
};

enum class MultisetFamily {
    /// {0, 1, ..., n-1}
    AllDistinct,
    /// {0, 0, 1, ..., n-2}
    RepeatedSymbol,
};

inline constexpr MultisetFamily kDefaultFamilies[] = {MultisetFamily::AllDistinct, MultisetFamily::RepeatedSymbol};

std::vector<Symbol> family_elements(MultisetFamily family, std::size_t n);

/// Number of classes of arrangements of `m` under in-block permutation and
/// cyclic rotation of the blocks, for blocks of size d.
std::size_t block_arrangement_classes(const MultisetSpec& m, std::size_t d);

/// Generic row: builds the digraph of `objects`, decides feasibility, tours
/// and verifies when feasible.
SweepResult evaluate(std::string family, std::span<const Word> objects, std::size_t s,
                     std::optional<bool> predicted, Scope scope);

/// Multiset-permutation theorem: feasibility = (n - s > gcd(n, s)).
/// Multisets with a single arrangement are skipped; rows whose multiset has a
/// single block-arrangement class are reported with Scope::TheoremScope.
std::vector<SweepResult> check_perm_theorem(
    std::size_t n_max,
    std::span<const MultisetFamily> families = std::span<const MultisetFamily>(kDefaultFamilies));

/// Juggling theorem for period n <= n_max and at most b <= b_max balls. Every
/// predicted-infeasible row carries the weight-class witness.
std::vector<SweepResult> check_juggling_theorem(std::size_t n_max, std::size_t b_max);

/// Surjective strings: existence asserted for s <= n-2, h <= n-1; s = n-1
/// rows are recorded.
std::vector<SweepResult> check_strings_theorem(std::size_t n_max);

/// k-permutations of {0..n-1}: existence asserted for 1 <= s < k < n.
std::vector<SweepResult> check_k_perm_construction(std::size_t n_max);

/// Requires n - s = gcd(n, s) and b >= 1; throws ParameterError otherwise.
SweepResult weight_class_witness(std::size_t n, std::size_t s, std::size_t b);

/// The sequence d 0..0 (n-d) 0..0 with n-d at position d.
Word weight_witness_sequence(std::size_t n, std::size_t d);

struct LemmaOutcome {
    std::string name;
    std::size_t checks = 0;
    std::vector<std::string> counterexamples;

    bool pass() const noexcept { return counterexamples.empty(); }
};

struct LemmaReport {
    std::vector<LemmaOutcome> lemmas;

    bool pass() const noexcept;
};

struct LemmaConfig {
    std::size_t trials = 1000;
    /// Random trials draw n uniformly from [1, random_n_max].
    std::size_t random_n_max = 8;
    /// Exhaustive over all words of length <= exhaustive_n with digits < 2n.
    std::size_t exhaustive_n = 4;
    /// Block reachability is scanned for every n <= reach_n_max.
    std::size_t reach_n_max = 12;
    std::uint64_t seed = 2013;
};

/// Rotation/validity equivalence, the permutation-sequence shift identity,
/// digit reduction and block reachability, each checked exhaustively on
/// small words and on seeded random trials.
LemmaReport lemma_property_suite(const LemmaConfig& config = {});

}  // namespace ocycles::harness

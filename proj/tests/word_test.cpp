#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "ocycles/error.hpp"
#include "ocycles/word.hpp"
#include "oracles.hpp"

namespace {

using ocycles::block_decompose;
using ocycles::block_rotation_exponent;
using ocycles::MultisetSpec;
using ocycles::ParameterError;
using ocycles::rotate;
using ocycles::Symbol;
using ocycles::Word;

Word random_word(std::mt19937_64& rng, std::size_t n, Symbol max_digit) {
    std::uniform_int_distribution<Symbol> digit(0, max_digit);
    std::vector<Symbol> out(n);
    for (auto& x : out) x = digit(rng);
    return Word(out);
}

TEST(Word, RejectsEmpty) {
    EXPECT_THROW(Word(std::vector<Symbol>{}), ParameterError);
}

TEST(Word, PrefixSuffixAndRendering) {
    const Word w{0, 1, 2, 12};
    EXPECT_EQ(w.prefix(2), (Word{0, 1}));
    EXPECT_EQ(w.suffix(3), (Word{1, 2, 12}));
    EXPECT_EQ(w.str(), "0 1 2 12");
    EXPECT_EQ(Word({0, 1, 5}).compact(), "015");
    EXPECT_EQ(w.compact(), "0 1 2 12");
    EXPECT_THROW(w.prefix(0), ParameterError);
    EXPECT_THROW(w.suffix(5), ParameterError);
}

TEST(Word, LexicographicOrder) {
    EXPECT_LT((Word{0, 1, 2}), (Word{0, 2, 1}));
    EXPECT_LT((Word{1, 0}), (Word{1, 0, 0}));
}

TEST(Rotate, Examples) {
    EXPECT_EQ(rotate(Word{0, 1, 2, 3, 4}, 2), (Word{2, 3, 4, 0, 1}));
    const Word x{3, 1, 4, 1, 5};
    EXPECT_EQ(rotate(x, 0), x);
    EXPECT_EQ(rotate(x, 5), x);
    EXPECT_THROW(rotate(x, 6), ParameterError);
}

TEST(Rotate, InverseAndOrderProperty) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 500; ++trial) {
        const std::size_t n = 1 + rng() % 9;
        const Word x = random_word(rng, n, 9);
        const std::size_t s = rng() % (n + 1);
        EXPECT_EQ(rotate(rotate(x, s), n - s), x);
        if (s >= 1 && s < n) {
            Word y = x;
            for (std::size_t r = 0; r < n / std::gcd(n, s); ++r) y = rotate(y, s);
            EXPECT_EQ(y, x) << "n=" << n << " s=" << s;
        }
    }
}

TEST(BlockDecompose, Examples) {
    const Word x{0, 1, 2, 3, 4, 5};
    const auto pairs = block_decompose(x, 2);
    ASSERT_EQ(pairs.block_count(), 3u);
    EXPECT_EQ(pairs.blocks[0], (Word{0, 1}));
    EXPECT_EQ(pairs.blocks[1], (Word{2, 3}));
    EXPECT_EQ(pairs.blocks[2], (Word{4, 5}));
    EXPECT_EQ(pairs.weight(2), 9u);

    const auto whole = block_decompose(x, 6);
    ASSERT_EQ(whole.block_count(), 1u);
    EXPECT_EQ(whole.blocks[0], x);

    const auto singles = block_decompose(x, 1);
    ASSERT_EQ(singles.block_count(), 6u);
    EXPECT_EQ(singles.blocks[4], (Word{4}));

    EXPECT_THROW(block_decompose(x, 4), ParameterError);
    EXPECT_THROW(block_decompose(x, 0), ParameterError);
}

TEST(BlockDecompose, ConcatenationRestoresSource) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + rng() % 12;
        const Word x = random_word(rng, n, 5);
        for (std::size_t d = 1; d <= n; ++d) {
            if (n % d) continue;
            std::vector<Symbol> joined;
            for (const Word& b : block_decompose(x, d).blocks) joined.insert(joined.end(), b.vec().begin(), b.vec().end());
            EXPECT_EQ(Word(joined), x);
        }
    }
}

TEST(BlockRotationExponent, FrozenExamples) {
    // Frozen from oracle::scan_block_exponent.
    EXPECT_EQ(block_rotation_exponent(6, 4, 1), 2u);
    EXPECT_EQ(block_rotation_exponent(5, 2, 3), 4u);
    EXPECT_EQ(oracle::scan_block_exponent(6, 4, 1), 2u);
    EXPECT_EQ(oracle::scan_block_exponent(5, 2, 3), 4u);
}

TEST(BlockRotationExponent, MatchesScanEverywhere) {
    for (std::size_t n = 2; n <= 16; ++n) {
        for (std::size_t s = 1; s < n; ++s) {
            EXPECT_EQ(block_rotation_exponent(n, s, 0), 0u);
            for (std::size_t i = 0; i < n / std::gcd(n, s); ++i) {
                const std::size_t expected = oracle::scan_block_exponent(n, s, i);
                ASSERT_NE(expected, static_cast<std::size_t>(-1)) << "no exponent for n=" << n << " s=" << s;
                EXPECT_EQ(block_rotation_exponent(n, s, i), expected) << "n=" << n << " s=" << s << " i=" << i;
            }
        }
    }
}

TEST(BlockRotationExponent, RejectsBadArguments) {
    EXPECT_THROW(block_rotation_exponent(6, 0, 0), ParameterError);
    EXPECT_THROW(block_rotation_exponent(6, 6, 0), ParameterError);
    EXPECT_THROW(block_rotation_exponent(6, 4, 3), ParameterError);
}

TEST(MultisetSpec, Basics) {
    const std::vector<Symbol> elements{2, 0, 0, 1};
    const auto m = MultisetSpec::from_elements(elements);
    EXPECT_EQ(m.size(), 4u);
    EXPECT_EQ(m.distinct(), 3u);
    EXPECT_EQ(m.sorted_elements(), (std::vector<Symbol>{0, 0, 1, 2}));
    EXPECT_EQ(MultisetSpec::range(3).sorted_elements(), (std::vector<Symbol>{0, 1, 2}));
    EXPECT_THROW(MultisetSpec(std::map<Symbol, std::size_t>{{0, 0}}), ParameterError);
    EXPECT_THROW(MultisetSpec(std::map<Symbol, std::size_t>{}), ParameterError);
}

}  // namespace

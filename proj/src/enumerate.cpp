#include "ocycles/enumerate.hpp"

#include <algorithm>
#include <numeric>

#include "ocycles/error.hpp"

namespace ocycles {

std::vector<Word> enumerate_multiset_permutations(const MultisetSpec& m) {
    std::vector<Symbol> current = m.sorted_elements();
    std::vector<Word> out;
    do {
        out.emplace_back(current);
    } while (std::next_permutation(current.begin(), current.end()));
    return out;
}

namespace {

// Adds n to digits of `heights` in every way that spends at most `budget`
// extra balls. Each distinct increment vector is visited once because
// positions are only revisited at or after `from`.
void distribute_increments(std::vector<Symbol>& heights, std::size_t from, std::size_t budget, std::vector<Word>& out) {
    out.emplace_back(heights);
    if (budget == 0) return;
    const auto n = static_cast<Symbol>(heights.size());
    for (std::size_t i = from; i < heights.size(); ++i) {
        heights[i] += n;
        distribute_increments(heights, i, budget - 1, out);
        heights[i] -= n;
    }
}

}  // namespace

std::vector<Word> enumerate_juggling_sequences(std::size_t n, std::size_t b_max) {
    if (n == 0) throw ParameterError("juggling period must be >= 1");
    std::vector<Word> out;
    std::vector<std::size_t> pi(n);
    std::iota(pi.begin(), pi.end(), 0);
    do {
        std::vector<Symbol> base(n);
        std::size_t total = 0;
        for (std::size_t i = 0; i < n; ++i) {
            base[i] = static_cast<Symbol>((pi[i] + n - i) % n);
            total += base[i];
        }
        const std::size_t b0 = total / n;
        if (b0 > b_max) continue;
        distribute_increments(base, 0, b_max - b0, out);
    } while (std::next_permutation(pi.begin(), pi.end()));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Word> enumerate_surjective_strings(std::size_t n, std::size_t h) {
    if (h < 1 || h > n) throw ParameterError("surjective strings require 1 <= h <= n");
    std::vector<Word> out;
    std::vector<Symbol> current(n, 0);
    std::vector<std::size_t> uses(h, 0);
    uses[0] = n;
    std::size_t covered = 1;
    // Odometer over {0..h-1}^n with the last position varying fastest.
    while (true) {
        if (covered == h) out.emplace_back(current);
        std::size_t pos = n;
        while (pos > 0 && current[pos - 1] + 1 == h) --pos;
        if (pos == 0) break;
        for (std::size_t i = pos - 1; i < n; ++i) {
            const Symbol next = (i == pos - 1) ? current[i] + 1 : 0;
            if (--uses[current[i]] == 0) --covered;
            if (uses[next]++ == 0) ++covered;
            current[i] = next;
        }
    }
    return out;
}

namespace {

void extend_injective(std::size_t n, std::size_t k, std::vector<Symbol>& current, std::vector<bool>& used,
                      std::vector<Word>& out) {
    if (current.size() == k) {
        out.emplace_back(current);
        return;
    }
    for (std::size_t x = 0; x < n; ++x) {
        if (used[x]) continue;
        used[x] = true;
        current.push_back(static_cast<Symbol>(x));
        extend_injective(n, k, current, used, out);
        current.pop_back();
        used[x] = false;
    }
}

}  // namespace

std::vector<Word> enumerate_k_permutations(std::size_t n, std::size_t k) {
    if (k < 1 || k > n) throw ParameterError("k-permutations require 1 <= k <= n");
    std::vector<Word> out;
    std::vector<Symbol> current;
    std::vector<bool> used(n, false);
    extend_injective(n, k, current, used, out);
    return out;
}

}  // namespace ocycles

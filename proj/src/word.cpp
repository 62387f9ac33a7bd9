#include "ocycles/word.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>

#include "ocycles/error.hpp"

namespace ocycles {

Word::Word(std::initializer_list<Symbol> symbols) : symbols_(symbols) {
    if (symbols_.empty()) throw ParameterError("word must have length >= 1");
}

Word::Word(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {
    if (symbols_.empty()) throw ParameterError("word must have length >= 1");
}

Word::Word(std::span<const Symbol> symbols) : Word(std::vector<Symbol>(symbols.begin(), symbols.end())) {}

Word Word::prefix(std::size_t len) const {
    if (len == 0 || len > size()) throw ParameterError("prefix length out of range");
    return Word(std::span<const Symbol>(symbols_).first(len));
}

Word Word::suffix(std::size_t len) const {
    if (len == 0 || len > size()) throw ParameterError("suffix length out of range");
    return Word(std::span<const Symbol>(symbols_).last(len));
}

Word Word::with(std::size_t i, Symbol value) const {
    if (i >= size()) throw ParameterError("index out of range");
    auto copy = symbols_;
    copy[i] = value;
    return Word(std::move(copy));
}

Symbol Word::sum() const noexcept {
    return std::accumulate(symbols_.begin(), symbols_.end(), Symbol{0});
}

std::string Word::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
        if (i) os << ' ';
        os << symbols_[i];
    }
    return os.str();
}

std::string Word::compact() const {
    if (std::any_of(symbols_.begin(), symbols_.end(), [](Symbol x) { return x > 9; })) return str();
    std::string out;
    out.reserve(symbols_.size());
    for (Symbol x : symbols_) out.push_back(static_cast<char>('0' + x));
    return out;
}

std::ostream& operator<<(std::ostream& os, const Word& w) { return os << w.compact(); }

MultisetSpec::MultisetSpec(std::map<Symbol, std::size_t> counts) : counts_(std::move(counts)) {
    for (const auto& [symbol, mult] : counts_) {
        if (mult == 0) throw ParameterError("multiset multiplicities must be >= 1");
        size_ += mult;
    }
    if (size_ == 0) throw ParameterError("multiset must be nonempty");
}

MultisetSpec MultisetSpec::from_elements(std::span<const Symbol> elements) {
    std::map<Symbol, std::size_t> counts;
    for (Symbol x : elements) ++counts[x];
    return MultisetSpec(std::move(counts));
}

MultisetSpec MultisetSpec::range(std::size_t n) {
    std::map<Symbol, std::size_t> counts;
    for (std::size_t i = 0; i < n; ++i) counts[static_cast<Symbol>(i)] = 1;
    return MultisetSpec(std::move(counts));
}

std::vector<Symbol> MultisetSpec::sorted_elements() const {
    std::vector<Symbol> out;
    out.reserve(size_);
    for (const auto& [symbol, mult] : counts_) out.insert(out.end(), mult, symbol);
    return out;
}

Word rotate(const Word& x, std::size_t s) {
    const std::size_t n = x.size();
    if (s > n) throw ParameterError("rotation amount must lie in [0, n]");
    std::vector<Symbol> out(x.vec());
    std::rotate(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(s % n), out.end());
    return Word(std::move(out));
}

Symbol BlockDecomposition::weight(std::size_t i) const { return blocks.at(i).sum(); }

BlockDecomposition block_decompose(const Word& x, std::size_t d) {
    if (d == 0 || x.size() % d != 0) throw ParameterError("block size must divide the word length");
    BlockDecomposition out{x, d, {}};
    const auto symbols = x.symbols();
    for (std::size_t start = 0; start < x.size(); start += d) out.blocks.emplace_back(symbols.subspan(start, d));
    return out;
}

namespace {

// Inverse of a modulo m, for gcd(a, m) = 1.
std::size_t mod_inverse(std::size_t a, std::size_t m) {
    long long old_r = static_cast<long long>(a % m), r = static_cast<long long>(m);
    long long old_x = 1, x = 0;
    while (r != 0) {
        const long long q = old_r / r;
        old_r -= q * r;
        std::swap(old_r, r);
        old_x -= q * x;
        std::swap(old_x, x);
    }
    const auto mm = static_cast<long long>(m);
    return static_cast<std::size_t>(((old_x % mm) + mm) % mm);
}

}  // namespace

std::size_t block_rotation_exponent(std::size_t n, std::size_t s, std::size_t i) {
    if (n < 2 || s < 1 || s > n - 1) throw ParameterError("block_rotation_exponent requires 1 <= s <= n-1");
    const std::size_t d = std::gcd(n, s);
    const std::size_t m = n / d;
    const std::size_t k = s / d;
    if (i >= m) throw ParameterError("block index out of range");
    // j*s = i*d (mod n)  <=>  j*k = i (mod m), and gcd(m, k) = 1.
    if (m == 1) return 0;
    return (i * mod_inverse(k, m)) % m;
}

}  // namespace ocycles

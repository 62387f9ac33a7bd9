#include "ocycles/harness.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "ocycles/digraph.hpp"
#include "ocycles/enumerate.hpp"
#include "ocycles/error.hpp"
#include "ocycles/juggling.hpp"
#include "ocycles/ocycle.hpp"

namespace ocycles::harness {

std::string to_string(Scope scope) {
    switch (scope) {
        case Scope::Asserted: return "asserted";
        case Scope::TheoremScope: return "theorem-scope";
        case Scope::Recorded: return "recorded";
    }
    return "unknown";
}

bool SweepResult::ok() const noexcept {
    if (juggling_witness && !juggling_witness->holds()) return false;
    if (scope != Scope::Asserted) return true;
    if (tour_verified && !*tour_verified) return false;
    return agreement();
}

std::optional<std::size_t> SweepResult::param(const std::string& key) const {
    for (const auto& [name, value] : params) {
        if (name == key) return value;
    }
    return std::nullopt;
}

std::vector<Symbol> family_elements(MultisetFamily family, std::size_t n) {
    std::vector<Symbol> out;
    switch (family) {
        case MultisetFamily::AllDistinct:
            for (std::size_t i = 0; i < n; ++i) out.push_back(static_cast<Symbol>(i));
            break;
        case MultisetFamily::RepeatedSymbol:
            out.push_back(0);
            for (std::size_t i = 0; i + 1 < n; ++i) out.push_back(static_cast<Symbol>(i));
            break;
    }
    return out;
}

std::size_t block_arrangement_classes(const MultisetSpec& m, std::size_t d) {
    if (d == 0 || m.size() % d != 0) throw ParameterError("block size must divide the multiset size");
    const std::size_t blocks = m.size() / d;
    std::set<std::vector<std::vector<Symbol>>> classes;
    for (const Word& w : enumerate_multiset_permutations(m)) {
        std::vector<std::vector<Symbol>> contents;
        for (const Word& block : block_decompose(w, d).blocks) {
            auto c = block.vec();
            std::sort(c.begin(), c.end());
            contents.push_back(std::move(c));
        }
        auto least = contents;
        for (std::size_t r = 1; r < blocks; ++r) {
            std::rotate(contents.begin(), contents.begin() + 1, contents.end());
            least = std::min(least, contents);
        }
        classes.insert(std::move(least));
    }
    return classes.size();
}

SweepResult evaluate(std::string family, std::span<const Word> objects, std::size_t s,
                     std::optional<bool> predicted, Scope scope) {
    const auto g = build_digraph(objects, s);
    SweepResult r;
    r.family = std::move(family);
    r.n = g.word_length();
    r.s = s;
    r.scope = scope;
    r.predicted = predicted;
    r.object_count = g.edges().size();
    r.vertex_count = g.vertices().size();
    r.balanced = is_balanced(g);
    const auto components = weak_components(g);
    r.component_count = components.size();
    r.observed = r.balanced && r.component_count == 1;
    if (r.observed) {
        const auto cycle = assemble_ocycle(euler_tour(g), s);
        r.tour_verified = verify_ocycle(cycle, objects, s).pass();
    } else if (r.component_count > 1) {
        r.component_witness = {components[0].front(), components[1].front()};
    }
    return r;
}

std::vector<SweepResult> check_perm_theorem(std::size_t n_max, std::span<const MultisetFamily> families) {
    if (n_max < 2) throw ParameterError("check_perm_theorem requires n_max >= 2");
    std::vector<SweepResult> out;
    for (std::size_t n = 2; n <= n_max; ++n) {
        for (MultisetFamily family : families) {
            const auto elements = family_elements(family, n);
            const auto spec = MultisetSpec::from_elements(elements);
            const auto objects = enumerate_multiset_permutations(spec);
            if (objects.size() < 2) continue;
            const std::string name = family == MultisetFamily::AllDistinct ? "perms" : "msetperms";
            for (std::size_t s = 1; s < n; ++s) {
                const bool predicted = existence_predicate(n, s);
                Scope scope = Scope::Asserted;
                if (!predicted && block_arrangement_classes(spec, std::gcd(n, s)) < 2) scope = Scope::TheoremScope;
                auto row = evaluate(name, objects, s, predicted, scope);
                row.multiset = elements;
                out.push_back(std::move(row));
            }
        }
    }
    return out;
}

Word weight_witness_sequence(std::size_t n, std::size_t d) {
    if (d == 0 || d >= n) throw ParameterError("witness requires 1 <= d <= n-1");
    std::vector<Symbol> t(n, 0);
    t[0] = static_cast<Symbol>(d);
    t[d] = static_cast<Symbol>(n - d);
    return Word(std::move(t));
}

namespace {

JugglingWitness build_witness(const TransitionDigraph& g, std::size_t n, std::size_t s) {
    const std::size_t d = n - s;
    const Word t = weight_witness_sequence(n, d);
    const bool valid = validate_juggling(t);
    JugglingWitness w{t,
                      permutation_sequence(t),
                      valid,
                      valid ? ball_count(t) : 0,
                      block_decompose(t, d).weight(0),
                      d,
                      t.prefix(s),
                      Word(std::vector<Symbol>(s, 0)),
                      false};
    const auto a = g.vertex_index(w.prefix_vertex);
    const auto b = g.vertex_index(w.zero_vertex);
    if (a && b) {
        const auto labels = component_labels(g);
        w.separated = labels[*a] != labels[*b];
    }
    return w;
}

}  // namespace

SweepResult weight_class_witness(std::size_t n, std::size_t s, std::size_t b) {
    if (s < 1 || s + 1 > n) throw ParameterError("weight_class_witness requires 1 <= s <= n-1");
    if (n - s != std::gcd(n, s)) throw ParameterError("weight_class_witness requires n - s = gcd(n, s)");
    if (b < 1) throw ParameterError("weight_class_witness requires b >= 1");
    const auto objects = enumerate_juggling_sequences(n, b);
    auto row = evaluate("juggling-witness", objects, s, false, Scope::Asserted);
    row.params = {{"b", b}};
    row.juggling_witness = build_witness(build_digraph(objects, s), n, s);
    return row;
}

std::vector<SweepResult> check_juggling_theorem(std::size_t n_max, std::size_t b_max) {
    if (n_max < 2) throw ParameterError("check_juggling_theorem requires n_max >= 2");
    if (b_max < 1) throw ParameterError("check_juggling_theorem requires b_max >= 1");
    std::vector<SweepResult> out;
    for (std::size_t n = 2; n <= n_max; ++n) {
        for (std::size_t b = 1; b <= b_max; ++b) {
            const auto objects = enumerate_juggling_sequences(n, b);
            for (std::size_t s = 1; s < n; ++s) {
                const bool predicted = existence_predicate(n, s);
                auto row = evaluate("juggling", objects, s, predicted, Scope::Asserted);
                row.params = {{"b", b}};
                if (!predicted) row.juggling_witness = build_witness(build_digraph(objects, s), n, s);
                out.push_back(std::move(row));
            }
        }
    }
    return out;
}

std::vector<SweepResult> check_strings_theorem(std::size_t n_max) {
    if (n_max < 3) throw ParameterError("check_strings_theorem requires n_max >= 3");
    std::vector<SweepResult> out;
    for (std::size_t n = 3; n <= n_max; ++n) {
        for (std::size_t h = 1; h < n; ++h) {
            const auto objects = enumerate_surjective_strings(n, h);
            for (std::size_t s = 1; s < n; ++s) {
                const bool claimed = s + 2 <= n;
                auto row = evaluate("surjections", objects, s, claimed ? std::optional<bool>(true) : std::nullopt,
                                    claimed ? Scope::Asserted : Scope::Recorded);
                row.params = {{"h", h}};
                out.push_back(std::move(row));
            }
        }
    }
    return out;
}

std::vector<SweepResult> check_k_perm_construction(std::size_t n_max) {
    if (n_max < 3) throw ParameterError("check_k_perm_construction requires n_max >= 3");
    std::vector<SweepResult> out;
    for (std::size_t n = 3; n <= n_max; ++n) {
        for (std::size_t k = 2; k < n; ++k) {
            const auto objects = enumerate_k_permutations(n, k);
            for (std::size_t s = 1; s < k; ++s) {
                auto row = evaluate("kperms", objects, s, true, Scope::Asserted);
                row.n = n;
                row.params = {{"k", k}};
                out.push_back(std::move(row));
            }
        }
    }
    return out;
}

bool LemmaReport::pass() const noexcept {
    return std::all_of(lemmas.begin(), lemmas.end(), [](const LemmaOutcome& l) { return l.pass(); });
}

namespace {

constexpr std::size_t kMaxCounterexamples = 10;

void record(LemmaOutcome& out, bool holds, const std::string& what) {
    ++out.checks;
    if (!holds && out.counterexamples.size() < kMaxCounterexamples) out.counterexamples.push_back(what);
}

std::string describe(const Word& t, const std::string& extra) { return "T=" + t.str() + (extra.empty() ? "" : " " + extra); }

void check_rotation_validity(LemmaOutcome& out, const Word& t) {
    const bool valid = validate_juggling(t);
    for (std::size_t s = 0; s <= t.size(); ++s) {
        const Word r = rotate(t, s);
        bool holds = validate_juggling(r) == valid;
        if (holds && valid) holds = ball_count(r) == ball_count(t);
        record(out, holds, describe(t, "s=" + std::to_string(s)));
    }
}

void check_shift_identity(LemmaOutcome& out, const Word& t) {
    if (!validate_juggling(t)) return;
    const std::size_t n = t.size();
    const Word pi = permutation_sequence(t);
    for (std::size_t s = 0; s < n; ++s) {
        const Word lhs = permutation_sequence(rotate(t, s));
        const Word rotated_pi = rotate(pi, s);
        for (std::size_t i = 0; i < n; ++i) {
            const std::size_t rhs = (rotated_pi[i] + n - s) % n;
            record(out, lhs[i] == rhs, describe(t, "s=" + std::to_string(s) + " i=" + std::to_string(i)));
        }
    }
}

void check_reduction(LemmaOutcome& out, const Word& t) {
    const std::size_t n = t.size();
    const bool valid = validate_juggling(t);
    for (std::size_t i = 0; i < n; ++i) {
        if (t[i] < n) continue;
        const Word reduced = reduce_digit(t, i);
        bool holds = validate_juggling(reduced) == valid;
        if (holds && valid) holds = ball_count(reduced) + 1 == ball_count(t);
        record(out, holds, describe(t, "i=" + std::to_string(i)));
    }
}

void check_reachability(LemmaOutcome& out, std::size_t n, std::size_t s, std::size_t i) {
    const std::size_t d = std::gcd(n, s);
    const std::size_t m = n / d;
    std::vector<Symbol> identity(n);
    std::iota(identity.begin(), identity.end(), 0);
    const Word x(identity);
    const std::string where = "n=" + std::to_string(n) + " s=" + std::to_string(s) + " i=" + std::to_string(i);
    const std::size_t j = block_rotation_exponent(n, s, i);
    Word walked = x;
    for (std::size_t step = 0; step < j; ++step) walked = rotate(walked, s);
    const bool holds = j < m && (j * s) % n == (i * d) % n && walked == rotate(x, i * d);
    record(out, holds, where + " j=" + std::to_string(j));
    if (i == 0) {
        Word full = x;
        for (std::size_t step = 0; step < m; ++step) full = rotate(full, s);
        record(out, full == x, where + " (order of rotation)");
    }
}

}  // namespace

LemmaReport lemma_property_suite(const LemmaConfig& config) {
    if (config.trials < 1) throw ParameterError("lemma_property_suite requires trials >= 1");
    LemmaOutcome rotation{"rotation-validity", 0, {}};
    LemmaOutcome shift{"permutation-shift", 0, {}};
    LemmaOutcome reduction{"digit-reduction", 0, {}};
    LemmaOutcome reach{"block-reachability", 0, {}};

    for (std::size_t n = 1; n <= config.exhaustive_n; ++n) {
        const auto base = static_cast<Symbol>(2 * n);
        std::vector<Symbol> digits(n, 0);
        while (true) {
            const Word t(digits);
            check_rotation_validity(rotation, t);
            check_shift_identity(shift, t);
            check_reduction(reduction, t);
            std::size_t pos = n;
            while (pos > 0 && digits[pos - 1] + 1 == base) digits[--pos] = 0;
            if (pos == 0) break;
            ++digits[pos - 1];
        }
    }
    for (std::size_t n = 2; n <= config.reach_n_max; ++n) {
        for (std::size_t s = 1; s < n; ++s) {
            for (std::size_t i = 0; i < n / std::gcd(n, s); ++i) check_reachability(reach, n, s, i);
        }
    }

    std::mt19937_64 rng(config.seed);
    auto uniform = [&rng](std::size_t lo, std::size_t hi) {
        return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
    };
    for (std::size_t trial = 0; trial < config.trials; ++trial) {
        const std::size_t n = uniform(1, config.random_n_max);
        std::vector<Symbol> digits(n);
        for (Symbol& x : digits) x = static_cast<Symbol>(uniform(0, 2 * n - 1));
        const Word arbitrary(digits);
        check_rotation_validity(rotation, arbitrary);
        check_reduction(reduction, arbitrary);

        // A valid sequence: random permutation sequence, then random lifts by n.
        std::vector<std::size_t> pi(n);
        std::iota(pi.begin(), pi.end(), 0);
        std::shuffle(pi.begin(), pi.end(), rng);
        std::vector<Symbol> heights(n);
        for (std::size_t i = 0; i < n; ++i) heights[i] = static_cast<Symbol>((pi[i] + n - i) % n + n * uniform(0, 1));
        const Word valid(heights);
        check_shift_identity(shift, valid);
        check_reduction(reduction, valid);

        if (n >= 2) {
            const std::size_t s = uniform(1, n - 1);
            check_reachability(reach, n, s, uniform(0, n / std::gcd(n, s) - 1));
        }
    }
    return LemmaReport{{rotation, shift, reduction, reach}};
}

}  // namespace ocycles::harness

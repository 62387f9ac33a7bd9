#include "ocycles/ocycle.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "ocycles/error.hpp"

namespace ocycles {

OverlapCycle assemble_ocycle(const EulerTour& tour, std::size_t s) {
    if (tour.edges.empty()) throw ParameterError("cannot assemble an empty tour");
    const std::size_t n = tour.edges.front().label.size();
    if (s < 1 || s + 1 > n) throw ParameterError("overlap s must satisfy 1 <= s <= n-1");

    OverlapCycle cycle;
    cycle.overlap = s;
    cycle.word_length = n;
    cycle.objects.reserve(tour.edges.size());
    cycle.compressed.reserve(tour.edges.size() * (n - s));
    for (const Edge& e : tour.edges) {
        cycle.objects.push_back(e.label);
        const auto head = e.label.symbols().first(n - s);
        cycle.compressed.insert(cycle.compressed.end(), head.begin(), head.end());
    }
    return cycle;
}

std::vector<Word> decode_cycle(std::span<const Symbol> compressed, std::size_t n, std::size_t s) {
    if (s >= n) throw ParameterError("overlap s must be < n");
    const std::size_t stride = n - s;
    if (compressed.empty() || compressed.size() % stride != 0) {
        throw ParameterError("compressed length must be a positive multiple of n-s");
    }
    const std::size_t total = compressed.size();
    std::vector<Word> out;
    out.reserve(total / stride);
    std::vector<Symbol> buf(n);
    for (std::size_t start = 0; start < total; start += stride) {
        for (std::size_t i = 0; i < n; ++i) buf[i] = compressed[(start + i) % total];
        out.emplace_back(buf);
    }
    return out;
}

OverlapCycle cycle_from_compressed(std::vector<Symbol> compressed, std::size_t n, std::size_t s) {
    OverlapCycle cycle;
    cycle.overlap = s;
    cycle.word_length = n;
    cycle.objects = decode_cycle(compressed, n, s);
    cycle.compressed = std::move(compressed);
    return cycle;
}

std::string to_string(Finding::Kind kind) {
    switch (kind) {
        case Finding::Kind::BadParameters: return "bad-parameters";
        case Finding::Kind::LengthMismatch: return "length-mismatch";
        case Finding::Kind::CompressedMismatch: return "compressed-mismatch";
        case Finding::Kind::MissingObject: return "missing-object";
        case Finding::Kind::DuplicateObject: return "duplicate-object";
        case Finding::Kind::UnexpectedObject: return "unexpected-object";
        case Finding::Kind::OverlapViolation: return "overlap-violation";
        case Finding::Kind::ClosureViolation: return "closure-violation";
    }
    return "unknown";
}

bool VerificationReport::has(Finding::Kind kind) const {
    return std::any_of(findings.begin(), findings.end(), [kind](const Finding& f) { return f.kind == kind; });
}

VerificationReport verify_ocycle(const OverlapCycle& cycle, std::span<const Word> expected, std::size_t s) {
    using Kind = Finding::Kind;
    VerificationReport report;
    auto add = [&report](Kind kind, std::size_t pos, std::optional<Word> obj, std::string detail) {
        report.findings.push_back(Finding{kind, pos, std::move(obj), std::move(detail)});
    };

    const std::size_t n = cycle.word_length;
    if (s != cycle.overlap || s < 1 || s + 1 > n) {
        add(Kind::BadParameters, 0, std::nullopt,
            "overlap " + std::to_string(s) + " is not usable for words of length " + std::to_string(n));
        return report;
    }

    bool lengths_ok = true;
    for (std::size_t j = 0; j < cycle.objects.size(); ++j) {
        if (cycle.objects[j].size() != n) {
            add(Kind::LengthMismatch, j, cycle.objects[j], "object length differs from " + std::to_string(n));
            lengths_ok = false;
        }
    }

    if (!cycle.compressed.empty()) {
        if (cycle.compressed.size() != cycle.objects.size() * (n - s)) {
            add(Kind::CompressedMismatch, 0, std::nullopt,
                "compressed length " + std::to_string(cycle.compressed.size()) + " != m*(n-s) = " +
                    std::to_string(cycle.objects.size() * (n - s)));
        } else if (lengths_ok) {
            const auto decoded = decode_cycle(cycle.compressed, n, s);
            for (std::size_t j = 0; j < decoded.size(); ++j) {
                if (decoded[j] != cycle.objects[j]) {
                    add(Kind::CompressedMismatch, j, decoded[j], "compressed string decodes differently here");
                    break;
                }
            }
        }
    }

    const std::size_t m = cycle.objects.size();
    if (lengths_ok) {
        for (std::size_t j = 0; j < m; ++j) {
            const Word& a = cycle.objects[j];
            const Word& b = cycle.objects[(j + 1) % m];
            if (a.suffix(s) != b.prefix(s)) {
                add(j + 1 < m ? Kind::OverlapViolation : Kind::ClosureViolation, j, a,
                    "suffix " + a.suffix(s).str() + " != next prefix " + b.prefix(s).str());
            }
        }
    }

    std::vector<Word> sorted_expected(expected.begin(), expected.end());
    std::sort(sorted_expected.begin(), sorted_expected.end());
    sorted_expected.erase(std::unique(sorted_expected.begin(), sorted_expected.end()), sorted_expected.end());
    std::vector<bool> seen(sorted_expected.size(), false);
    for (std::size_t j = 0; j < m; ++j) {
        const Word& obj = cycle.objects[j];
        const auto it = std::lower_bound(sorted_expected.begin(), sorted_expected.end(), obj);
        if (it == sorted_expected.end() || *it != obj) {
            add(Kind::UnexpectedObject, j, obj, "not in the expected set");
            continue;
        }
        const auto idx = static_cast<std::size_t>(it - sorted_expected.begin());
        if (seen[idx]) {
            add(Kind::DuplicateObject, j, obj, "appears more than once");
        }
        seen[idx] = true;
    }
    for (std::size_t i = 0; i < sorted_expected.size(); ++i) {
        if (!seen[i]) add(Kind::MissingObject, i, sorted_expected[i], "never appears in the cycle");
    }
    return report;
}

bool existence_predicate(std::size_t n, std::size_t s) {
    if (s < 1 || s + 1 > n) throw ParameterError("existence_predicate requires 1 <= s <= n-1");
    return n - s > std::gcd(n, s);
}

}  // namespace ocycles

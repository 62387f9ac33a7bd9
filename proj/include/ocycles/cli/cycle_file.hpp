#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "ocycles/word.hpp"

namespace ocycles::cli {

/// Object family and its parameters, as carried on the command line and in
/// cycle file headers.
struct FamilyParams {
    /// perms | msetperms | kperms | surjections | juggling
    std::string family;
    std::size_t n = 0;
    std::optional<std::size_t> k;
    std::optional<std::size_t> h;
    std::optional<std::size_t> b;
    std::vector<Symbol> multiset;
};

/// Length of each object of the family (k for kperms, n otherwise).
std::size_t object_length(const FamilyParams& p);

/// All objects of the family in lexicographic order. Throws ParameterError
/// for unknown families or missing/invalid parameters.
std::vector<Word> family_objects(const FamilyParams& p);

/// Whether the family has a gcd existence criterion (perms, msetperms, juggling).
bool has_gcd_criterion(const std::string& family);

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A serialized overlap cycle.
///
/// Text layout: one JSON header line, one body line holding the compressed
/// cyclic string as space-separated integers, then optionally one expanded
/// object per line. The JSON layout is a single object with "header",
/// "cycle" and optional "objects".
struct CycleFile {
    FamilyParams params;
    std::size_t s = 0;
    std::size_t m = 0;
    std::vector<Symbol> body;
    std::vector<Word> objects;
};

nlohmann::json header_json(const CycleFile& f);
std::string write_text(const CycleFile& f);
nlohmann::json write_json(const CycleFile& f);

/// Accepts either layout. Throws ParseError on malformed input, including a
/// body whose length differs from m*(n-s).
CycleFile parse_cycle_file(std::string_view content);

}  // namespace ocycles::cli

#include "ocycles/cli/cycle_file.hpp"

#include <sstream>

#include "ocycles/enumerate.hpp"
#include "ocycles/error.hpp"

namespace ocycles::cli {

namespace {

std::size_t require(const std::optional<std::size_t>& v, const char* name, const std::string& family) {
    if (!v) throw ParameterError(family + " requires --" + name);
    return *v;
}

}  // namespace

std::size_t object_length(const FamilyParams& p) {
    if (p.family == "kperms") return require(p.k, "k", p.family);
    if (p.family == "msetperms") return p.multiset.size();
    return p.n;
}

std::vector<Word> family_objects(const FamilyParams& p) {
    if (p.family == "perms") {
        if (p.n < 1) throw ParameterError("perms requires --n >= 1");
        return enumerate_multiset_permutations(MultisetSpec::range(p.n));
    }
    if (p.family == "msetperms") {
        if (p.multiset.empty()) throw ParameterError("msetperms requires --multiset");
        return enumerate_multiset_permutations(MultisetSpec::from_elements(p.multiset));
    }
    if (p.family == "kperms") return enumerate_k_permutations(p.n, require(p.k, "k", p.family));
    if (p.family == "surjections") return enumerate_surjective_strings(p.n, require(p.h, "h", p.family));
    if (p.family == "juggling") {
        if (p.n < 1) throw ParameterError("juggling requires --n >= 1");
        return enumerate_juggling_sequences(p.n, require(p.b, "b", p.family));
    }
    throw ParameterError("unknown family '" + p.family + "'");
}

bool has_gcd_criterion(const std::string& family) {
    return family == "perms" || family == "msetperms" || family == "juggling";
}

nlohmann::json header_json(const CycleFile& f) {
    nlohmann::json h;
    h["family"] = f.params.family;
    h["n"] = f.params.n;
    h["s"] = f.s;
    h["m"] = f.m;
    if (f.params.k) h["k"] = *f.params.k;
    if (f.params.h) h["h"] = *f.params.h;
    if (f.params.b) h["b"] = *f.params.b;
    if (!f.params.multiset.empty()) h["multiset"] = f.params.multiset;
    return h;
}

std::string write_text(const CycleFile& f) {
    std::ostringstream os;
    os << header_json(f).dump() << '\n';
    for (std::size_t i = 0; i < f.body.size(); ++i) {
        if (i) os << ' ';
        os << f.body[i];
    }
    os << '\n';
    for (const Word& w : f.objects) os << w.str() << '\n';
    return os.str();
}

nlohmann::json write_json(const CycleFile& f) {
    nlohmann::json j;
    j["header"] = header_json(f);
    j["cycle"] = f.body;
    if (!f.objects.empty()) {
        nlohmann::json objects = nlohmann::json::array();
        for (const Word& w : f.objects) objects.push_back(w.vec());
        j["objects"] = std::move(objects);
    }
    return j;
}

namespace {

template <class T>
T field(const nlohmann::json& j, const char* key) {
    if (!j.contains(key)) throw ParseError(std::string("header is missing '") + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception&) {
        throw ParseError(std::string("header field '") + key + "' has the wrong type");
    }
}

template <class T>
std::optional<T> optional_field(const nlohmann::json& j, const char* key) {
    if (!j.contains(key)) return std::nullopt;
    return field<T>(j, key);
}

void read_header(const nlohmann::json& h, CycleFile& f) {
    if (!h.is_object()) throw ParseError("header must be a JSON object");
    f.params.family = field<std::string>(h, "family");
    f.params.n = field<std::size_t>(h, "n");
    f.s = field<std::size_t>(h, "s");
    f.m = field<std::size_t>(h, "m");
    f.params.k = optional_field<std::size_t>(h, "k");
    f.params.h = optional_field<std::size_t>(h, "h");
    f.params.b = optional_field<std::size_t>(h, "b");
    f.params.multiset = optional_field<std::vector<Symbol>>(h, "multiset").value_or(std::vector<Symbol>{});
}

std::vector<Symbol> parse_symbols(const std::string& line, const char* what) {
    std::vector<Symbol> out;
    std::istringstream is(line);
    std::string token;
    while (is >> token) {
        if (token.find_first_not_of("0123456789") != std::string::npos || token.size() > 9) {
            throw ParseError(std::string("bad symbol '") + token + "' in " + what);
        }
        out.push_back(static_cast<Symbol>(std::stoul(token)));
    }
    return out;
}

void check_shape(const CycleFile& f) {
    const std::size_t len = object_length(f.params);
    if (f.s < 1 || f.s >= len) throw ParseError("header overlap s is out of range for the object length");
    if (f.m == 0) throw ParseError("header object count m must be positive");
    if (f.body.size() != f.m * (len - f.s)) {
        throw ParseError("body has " + std::to_string(f.body.size()) + " symbols, expected m*(n-s) = " +
                         std::to_string(f.m * (len - f.s)));
    }
    for (const Word& w : f.objects) {
        if (w.size() != len) throw ParseError("expanded object " + w.str() + " has the wrong length");
    }
    if (!f.objects.empty() && f.objects.size() != f.m) throw ParseError("expanded object list does not have m entries");
}

}  // namespace

CycleFile parse_cycle_file(std::string_view content) {
    CycleFile f;
    const auto whole = nlohmann::json::parse(content.begin(), content.end(), nullptr, false);
    try {
        if (!whole.is_discarded() && whole.is_object() && whole.contains("cycle")) {
            read_header(whole.at("header"), f);
            f.body = whole.at("cycle").get<std::vector<Symbol>>();
            if (whole.contains("objects")) {
                for (const auto& o : whole.at("objects")) f.objects.emplace_back(o.get<std::vector<Symbol>>());
            }
        } else {
            std::istringstream is{std::string(content)};
            std::string line;
            if (!std::getline(is, line)) throw ParseError("empty cycle file");
            const auto header = nlohmann::json::parse(line, nullptr, false);
            if (header.is_discarded()) throw ParseError("first line is not a JSON header");
            read_header(header, f);
            if (!std::getline(is, line)) throw ParseError("missing body line");
            f.body = parse_symbols(line, "body");
            while (std::getline(is, line)) {
                if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
                f.objects.emplace_back(parse_symbols(line, "object list"));
            }
        }
        check_shape(f);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed cycle file: ") + e.what());
    } catch (const ParameterError& e) {
        throw ParseError(e.what());
    }
    return f;
}

}  // namespace ocycles::cli

#include "ocycles/cli/commands.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <map>
#include <numeric>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "ocycles/cli/cycle_file.hpp"
#include "ocycles/cli/diagram.hpp"
#include "ocycles/digraph.hpp"
#include "ocycles/error.hpp"
#include "ocycles/harness.hpp"
#include "ocycles/juggling.hpp"
#include "ocycles/ocycle.hpp"

namespace ocycles::cli {

namespace {

using nlohmann::json;

/// Family flags shared by gen and verify.
struct FamilyFlags {
    std::string family;
    std::size_t n = 0, k = 0, h = 0, b = 0;
    std::vector<Symbol> multiset;
    CLI::Option* family_opt = nullptr;
    CLI::Option* n_opt = nullptr;
    CLI::Option* k_opt = nullptr;
    CLI::Option* h_opt = nullptr;
    CLI::Option* b_opt = nullptr;
    CLI::Option* multiset_opt = nullptr;

    void attach(CLI::App* cmd) {
        family_opt = cmd->add_option("--family", family, "perms | msetperms | kperms | surjections | juggling")
                         ->check(CLI::IsMember({"perms", "msetperms", "kperms", "surjections", "juggling"}));
        n_opt = cmd->add_option("--n", n, "object length (alphabet size for kperms)");
        k_opt = cmd->add_option("--k", k, "k for k-permutations");
        h_opt = cmd->add_option("--h", h, "alphabet size for surjective strings");
        b_opt = cmd->add_option("--b", b, "maximum ball count for juggling sequences");
        multiset_opt = cmd->add_option("--multiset", multiset, "comma-separated multiset, e.g. 0,0,1")->delimiter(',');
    }

    /// Applies every flag that was given on top of `p`.
    void apply(FamilyParams& p) const {
        if (family_opt->count()) p.family = family;
        if (n_opt->count()) p.n = n;
        if (k_opt->count()) p.k = k;
        if (h_opt->count()) p.h = h;
        if (b_opt->count()) p.b = b;
        if (multiset_opt->count()) p.multiset = multiset;
        if (p.family == "msetperms" && !p.multiset.empty()) p.n = p.multiset.size();
    }
};

/// Writes to --out when given, otherwise to the command's stream.
class Sink {
public:
    Sink(const std::string& path, std::ostream& fallback) : path_(path), fallback_(fallback) {}

    bool write(const std::string& text, std::ostream& err) const {
        if (path_.empty()) {
            fallback_ << text;
            return true;
        }
        std::ofstream file(path_, std::ios::binary);
        if (!file) {
            err << "error: cannot open " << path_ << " for writing\n";
            return false;
        }
        file << text;
        return static_cast<bool>(file);
    }

private:
    const std::string& path_;
    std::ostream& fallback_;
};

std::string join(std::span<const Symbol> xs, const char* sep = " ") {
    std::ostringstream os;
    for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? sep : "") << xs[i];
    return os.str();
}

// gen ---------------------------------------------------------------------

struct GenOptions {
    FamilyFlags flags;
    std::size_t s = 0;
    std::string format = "text";
    std::string out_path;
    bool expand = false;
};

int cmd_gen(const GenOptions& o, std::ostream& out, std::ostream& err) {
    FamilyParams p;
    o.flags.apply(p);
    std::vector<Word> objects;
    try {
        objects = family_objects(p);
    } catch (const ParameterError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    const std::size_t len = object_length(p);
    if (o.s < 1 || o.s >= len) {
        err << "error: --s must satisfy 1 <= s <= " << (len > 0 ? len - 1 : 0) << " for objects of length " << len
            << '\n';
        return kUsage;
    }

    const auto g = build_digraph(objects, o.s);
    EulerTour tour;
    try {
        tour = euler_tour(g);
    } catch (const InfeasibleError& e) {
        err << "infeasible: no " << o.s << "-overlap cycle for " << p.family << " with n=" << len;
        if (has_gcd_criterion(p.family)) {
            const std::size_t d = std::gcd(len, o.s);
            err << " (n-s = " << len - o.s << (len - o.s == d ? " = " : " > ") << "gcd(n,s) = " << d << ")";
        }
        err << "\n" << e.what() << '\n';
        return kInfeasible;
    }
    const auto cycle = assemble_ocycle(tour, o.s);
    const auto report = verify_ocycle(cycle, objects, o.s);
    if (!report.pass()) {
        err << "internal error: assembled cycle failed verification\n";
        return kVerifyFailed;
    }

    CycleFile f{p, o.s, cycle.objects.size(), cycle.compressed, o.expand ? cycle.objects : std::vector<Word>{}};
    const std::string text = o.format == "json" ? write_json(f).dump() + "\n" : write_text(f);
    return Sink(o.out_path, out).write(text, err) ? kOk : kUsage;
}

// verify ------------------------------------------------------------------

struct VerifyOptions {
    FamilyFlags flags;
    std::string path;
    std::size_t s = 0;
    CLI::Option* s_opt = nullptr;
    std::string format = "text";
};

int cmd_verify(const VerifyOptions& o, std::ostream& out, std::ostream& err) {
    std::string content;
    if (o.path == "-") {
        content.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
        std::ifstream in(o.path, std::ios::binary);
        if (!in) {
            err << "error: cannot read " << o.path << '\n';
            return kUsage;
        }
        content.assign(std::istreambuf_iterator<char>(in), {});
    }

    CycleFile f;
    try {
        f = parse_cycle_file(content);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return kUsage;
    }
    FamilyParams p = f.params;
    o.flags.apply(p);
    const std::size_t s = o.s_opt->count() ? o.s : f.s;

    std::vector<Word> expected;
    OverlapCycle cycle;
    try {
        expected = family_objects(p);
        const std::size_t len = object_length(p);
        cycle = f.objects.empty() ? cycle_from_compressed(f.body, len, s)
                                  : OverlapCycle{s, len, f.objects, f.body};
    } catch (const ParameterError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }

    const auto report = verify_ocycle(cycle, expected, s);
    if (o.format == "json") {
        json j;
        j["pass"] = report.pass();
        j["objects"] = cycle.objects.size();
        j["expected"] = expected.size();
        j["s"] = s;
        j["findings"] = json::array();
        for (const Finding& x : report.findings) {
            json jf{{"kind", to_string(x.kind)}, {"position", x.position}, {"detail", x.detail}};
            jf["object"] = x.object ? json(x.object->vec()) : json(nullptr);
            j["findings"].push_back(std::move(jf));
        }
        out << j.dump() << '\n';
    } else {
        out << (report.pass() ? "pass" : "FAIL") << ": " << cycle.objects.size() << " objects, " << expected.size()
            << " expected, overlap " << s << '\n';
        for (const Finding& x : report.findings) {
            out << "  " << to_string(x.kind) << " at " << x.position;
            if (x.object) out << " [" << x.object->str() << "]";
            out << ": " << x.detail << '\n';
        }
    }
    return report.pass() ? kOk : kVerifyFailed;
}

// check -------------------------------------------------------------------

struct Caps {
    std::size_t perm_n_max = 7;
    std::size_t juggling_n_max = 5;
    std::size_t b_max = 3;
    std::size_t strings_n_max = 6;
    std::size_t kperm_n_max = 6;
    harness::LemmaConfig lemmas;
};

struct CapRange {
    std::size_t lo, hi;
};

bool parse_caps(const std::vector<std::string>& tokens, Caps& caps, std::ostream& err) {
    const std::map<std::string, CapRange> ranges = {
        {"n_max", {2, 8}},         {"perm_n_max", {2, 8}},  {"juggling_n_max", {2, 7}}, {"b_max", {1, 4}},
        {"strings_n_max", {3, 7}}, {"kperm_n_max", {3, 7}}, {"trials", {1, 1000000}},   {"lemma_n_max", {1, 12}},
    };
    for (const std::string& token : tokens) {
        const auto eq = token.find('=');
        if (eq == std::string::npos) {
            err << "error: cap '" << token << "' is not of the form key=value\n";
            return false;
        }
        const std::string key = token.substr(0, eq);
        const std::string text = token.substr(eq + 1);
        const auto range = ranges.find(key);
        if (range == ranges.end()) {
            err << "error: unknown cap '" << key << "'\n";
            return false;
        }
        if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos || text.size() > 9) {
            err << "error: cap '" << key << "' needs a nonnegative integer\n";
            return false;
        }
        const std::size_t value = std::stoul(text);
        if (value < range->second.lo || value > range->second.hi) {
            err << "error: cap " << key << "=" << value << " outside [" << range->second.lo << ", "
                << range->second.hi << "]\n";
            return false;
        }
        if (key == "n_max") {
            caps.perm_n_max = caps.juggling_n_max = value;
            caps.strings_n_max = caps.kperm_n_max = std::max<std::size_t>(value, 3);
        } else if (key == "perm_n_max") {
            caps.perm_n_max = value;
        } else if (key == "juggling_n_max") {
            caps.juggling_n_max = value;
        } else if (key == "b_max") {
            caps.b_max = value;
        } else if (key == "strings_n_max") {
            caps.strings_n_max = value;
        } else if (key == "kperm_n_max") {
            caps.kperm_n_max = value;
        } else if (key == "trials") {
            caps.lemmas.trials = value;
        } else if (key == "lemma_n_max") {
            caps.lemmas.random_n_max = value;
        }
    }
    return true;
}

std::string params_text(const harness::SweepResult& r) {
    std::string text;
    for (const auto& [key, value] : r.params) text += (text.empty() ? "" : ",") + key + "=" + std::to_string(value);
    if (!r.multiset.empty()) text += (text.empty() ? "" : ",") + std::string("M=") + join(r.multiset, ".");
    return text.empty() ? "-" : text;
}

std::string yes_no(std::optional<bool> v) { return v ? (*v ? "yes" : "no") : "-"; }

std::string row_note(const harness::SweepResult& r) {
    std::string note;
    if (r.component_witness.size() == 2) {
        note = "components " + r.component_witness[0].str() + " | " + r.component_witness[1].str();
    } else if (!r.balanced) {
        note = "unbalanced";
    }
    if (r.juggling_witness) {
        const auto& w = *r.juggling_witness;
        if (!note.empty()) note += "; ";
        note += "witness T=" + w.sequence.str() + " balls=" + std::to_string(w.balls) +
                " w(Y0)=" + std::to_string(w.first_block_weight) + " prefix " + w.prefix_vertex.str() +
                (w.separated ? " separated from " : " connected to ") + w.zero_vertex.str();
    }
    return note;
}

json row_json(const harness::SweepResult& r) {
    json j;
    j["family"] = r.family;
    j["n"] = r.n;
    j["s"] = r.s;
    json params = json::object();
    for (const auto& [key, value] : r.params) params[key] = value;
    j["params"] = params;
    if (!r.multiset.empty()) j["multiset"] = r.multiset;
    j["scope"] = to_string(r.scope);
    j["predicted"] = r.predicted ? json(*r.predicted) : json(nullptr);
    j["observed"] = r.observed;
    j["agreement"] = r.agreement();
    j["objects"] = r.object_count;
    j["vertices"] = r.vertex_count;
    j["components"] = r.component_count;
    j["balanced"] = r.balanced;
    j["tour_verified"] = r.tour_verified ? json(*r.tour_verified) : json(nullptr);
    j["ok"] = r.ok();
    json witness = json::array();
    for (const Word& w : r.component_witness) witness.push_back(w.vec());
    j["component_witness"] = witness;
    if (r.juggling_witness) {
        const auto& w = *r.juggling_witness;
        j["juggling_witness"] = {{"sequence", w.sequence.vec()},
                                 {"permutation", w.permutation.vec()},
                                 {"valid", w.valid},
                                 {"balls", w.balls},
                                 {"first_block_weight", w.first_block_weight},
                                 {"block_size", w.block_size},
                                 {"prefix_vertex", w.prefix_vertex.vec()},
                                 {"zero_vertex", w.zero_vertex.vec()},
                                 {"separated", w.separated}};
    }
    return j;
}

struct CheckOptions {
    std::vector<std::string> positionals;
    std::vector<std::string> caps;
    std::uint64_t seed = 2013;
    std::string format = "text";
    std::string out_path;
};

int cmd_check(const CheckOptions& o, std::ostream& out, std::ostream& err) {
    std::string suite = "all";
    std::vector<std::string> cap_tokens = o.caps;
    if (!o.positionals.empty()) {
        suite = o.positionals.front();
        cap_tokens.insert(cap_tokens.end(), o.positionals.begin() + 1, o.positionals.end());
    }
    const std::vector<std::string> suites = {"perms", "juggling", "strings", "kperms", "lemmas", "all"};
    if (std::find(suites.begin(), suites.end(), suite) == suites.end()) {
        err << "error: unknown suite '" << suite << "' (perms|juggling|strings|kperms|lemmas|all)\n";
        return kUsage;
    }
    Caps caps;
    caps.lemmas.seed = o.seed;
    if (!parse_caps(cap_tokens, caps, err)) return kUsage;

    const bool all = suite == "all";
    std::vector<harness::SweepResult> rows;
    auto append = [&rows](std::vector<harness::SweepResult> more) {
        rows.insert(rows.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
    };
    if (all || suite == "perms") append(harness::check_perm_theorem(caps.perm_n_max));
    if (all || suite == "juggling") append(harness::check_juggling_theorem(caps.juggling_n_max, caps.b_max));
    if (all || suite == "strings") append(harness::check_strings_theorem(caps.strings_n_max));
    if (all || suite == "kperms") append(harness::check_k_perm_construction(caps.kperm_n_max));
    std::optional<harness::LemmaReport> lemmas;
    if (all || suite == "lemmas") lemmas = harness::lemma_property_suite(caps.lemmas);

    const bool rows_ok = std::all_of(rows.begin(), rows.end(), [](const auto& r) { return r.ok(); });
    const bool pass = rows_ok && (!lemmas || lemmas->pass());

    std::ostringstream os;
    if (o.format == "json") {
        json j;
        j["suite"] = suite;
        j["rows"] = json::array();
        for (const auto& r : rows) j["rows"].push_back(row_json(r));
        j["lemmas"] = json::array();
        if (lemmas) {
            for (const auto& l : lemmas->lemmas) {
                j["lemmas"].push_back(
                    {{"name", l.name}, {"checks", l.checks}, {"counterexamples", l.counterexamples}, {"pass", l.pass()}});
            }
        }
        j["pass"] = pass;
        os << j.dump() << '\n';
    } else {
        std::size_t failures = 0, scoped = 0, recorded = 0;
        if (!rows.empty()) {
            os << std::left << std::setw(18) << "family" << std::setw(4) << "n" << std::setw(4) << "s" << std::setw(16)
               << "params" << std::setw(9) << "objects" << std::setw(7) << "comps" << std::setw(10) << "predicted"
               << std::setw(10) << "observed" << std::setw(15) << "scope" << std::setw(7) << "status"
               << "note\n";
        }
        for (const auto& r : rows) {
            if (!r.ok()) ++failures;
            if (r.scope == harness::Scope::TheoremScope) ++scoped;
            if (r.scope == harness::Scope::Recorded) ++recorded;
            os << std::left << std::setw(18) << r.family << std::setw(4) << r.n << std::setw(4) << r.s
               << std::setw(16) << params_text(r) << std::setw(9) << r.object_count << std::setw(7)
               << r.component_count << std::setw(10) << yes_no(r.predicted) << std::setw(10) << yes_no(r.observed)
               << std::setw(15) << to_string(r.scope) << std::setw(7) << (r.ok() ? "ok" : "FAIL") << row_note(r)
               << '\n';
        }
        if (lemmas) {
            for (const auto& l : lemmas->lemmas) {
                os << "lemma " << std::left << std::setw(20) << l.name << " checks=" << l.checks
                   << " counterexamples=" << l.counterexamples.size() << ' ' << (l.pass() ? "ok" : "FAIL") << '\n';
                for (const auto& c : l.counterexamples) os << "  counterexample " << c << '\n';
            }
        }
        os << "summary: rows=" << rows.size() << " failures=" << failures << " theorem-scope=" << scoped
           << " recorded=" << recorded;
        if (lemmas) os << " lemmas=" << (lemmas->pass() ? "ok" : "FAIL");
        os << '\n' << "result: " << (pass ? "PASS" : "FAIL") << '\n';
    }
    if (!Sink(o.out_path, out).write(os.str(), err)) return kUsage;
    return pass ? kOk : kVerifyFailed;
}

// siteswap ----------------------------------------------------------------

struct SiteswapOptions {
    std::vector<Symbol> digits;
    std::string format = "text";
};

int cmd_siteswap(const SiteswapOptions& o, std::ostream& out) {
    const Word t(o.digits);
    const bool valid = validate_juggling(t);
    const Word pi = permutation_sequence(t);
    if (o.format == "json") {
        json j{{"sequence", t.vec()}, {"period", t.size()}, {"valid", valid}, {"permutation", pi.vec()}};
        j["balls"] = valid ? json(ball_count(t)) : json(nullptr);
        out << j.dump() << '\n';
    } else {
        out << "sequence: " << t.str() << '\n'
            << "period: " << t.size() << '\n'
            << "valid: " << (valid ? "yes" : "no") << '\n';
        if (valid) out << "balls: " << ball_count(t) << '\n';
        out << "permutation: " << pi.str() << '\n';
    }
    return kOk;
}

// diagram -----------------------------------------------------------------

struct DiagramOptions {
    std::vector<Symbol> digits;
    std::size_t periods = 3;
    std::string format = "ascii";
    std::string out_path;
};

int cmd_diagram(const DiagramOptions& o, std::ostream& out, std::ostream& err) {
    const auto d = layout_diagram(Word(o.digits), o.periods);
    const std::string text = o.format == "svg" ? render_svg(d) : render_ascii(d);
    return Sink(o.out_path, out).write(text, err) ? kOk : kUsage;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Construct and verify s-overlap cycles of permutations, strings and juggling sequences", "ocycles"};
    app.set_help_flag("--help", "Print this help message and exit");
    app.require_subcommand(1);

    GenOptions gen;
    auto* gen_cmd = app.add_subcommand("gen", "Build an s-overlap cycle and print it as a cycle file");
    gen.flags.attach(gen_cmd);
    gen.flags.family_opt->required();
    gen_cmd->add_option("--s", gen.s, "overlap length")->required();
    gen_cmd->add_option("--format", gen.format)->check(CLI::IsMember({"text", "json"}));
    gen_cmd->add_option("--out", gen.out_path, "write to FILE instead of stdout");
    gen_cmd->add_flag("--expand", gen.expand, "also list every object");

    VerifyOptions verify;
    auto* verify_cmd = app.add_subcommand("verify", "Check a cycle file against its object family");
    verify_cmd->add_option("file", verify.path, "cycle file, or - for stdin")->required();
    verify.flags.attach(verify_cmd);
    verify.s_opt = verify_cmd->add_option("--s", verify.s, "overlap length (default: from header)");
    verify_cmd->add_option("--format", verify.format)->check(CLI::IsMember({"text", "json"}));

    CheckOptions check;
    auto* check_cmd = app.add_subcommand("check", "Sweep the existence theorems and lemmas exhaustively");
    check_cmd->add_option("suite", check.positionals, "perms|juggling|strings|kperms|lemmas|all, then key=value caps");
    check_cmd->add_option("--caps", check.caps, "comma-separated key=value caps")->delimiter(',');
    check_cmd->add_option("--seed", check.seed, "seed for the random lemma trials");
    check_cmd->add_option("--format", check.format)->check(CLI::IsMember({"text", "json"}));
    check_cmd->add_option("--out", check.out_path, "write to FILE instead of stdout");

    SiteswapOptions siteswap;
    auto* siteswap_cmd = app.add_subcommand("siteswap", "Validate a juggling sequence");
    siteswap_cmd->add_option("digits", siteswap.digits, "throw heights, space-separated")->required();
    siteswap_cmd->add_option("--format", siteswap.format)->check(CLI::IsMember({"text", "json"}));

    DiagramOptions diagram;
    auto* diagram_cmd = app.add_subcommand("diagram", "Draw the juggling diagram of a sequence");
    diagram_cmd->add_option("digits", diagram.digits, "throw heights, space-separated")->required();
    diagram_cmd->add_option("--periods", diagram.periods, "number of periods to draw")->check(CLI::PositiveNumber);
    diagram_cmd->add_option("--format", diagram.format)->check(CLI::IsMember({"ascii", "svg"}));
    diagram_cmd->add_option("--out", diagram.out_path, "write to FILE instead of stdout");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*gen_cmd) return cmd_gen(gen, out, err);
        if (*verify_cmd) return cmd_verify(verify, out, err);
        if (*check_cmd) return cmd_check(check, out, err);
        if (*siteswap_cmd) return cmd_siteswap(siteswap, out);
        if (*diagram_cmd) return cmd_diagram(diagram, out, err);
    } catch (const ParameterError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

}  // namespace ocycles::cli

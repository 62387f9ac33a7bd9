#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "ocycles/cli/commands.hpp"

namespace {

using ocycles::cli::run;
using nlohmann::json;

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result call(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream is(text);
    for (std::string line; std::getline(is, line);) out.push_back(line);
    return out;
}

class TempFile {
public:
    explicit TempFile(const std::string& name)
        : path_(std::filesystem::temp_directory_path() / ("ocycles_" + std::to_string(::getpid()) + "_" + name)) {}
    ~TempFile() { std::filesystem::remove(path_); }
    std::string path() const { return path_.string(); }
    void write(const std::string& content) const { std::ofstream(path_, std::ios::binary) << content; }

private:
    std::filesystem::path path_;
};

TEST(Gen, PermsThreeOverlapOne) {
    const auto r = call({"gen", "--family", "perms", "--n", "3", "--s", "1"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto ls = lines(r.out);
    ASSERT_EQ(ls.size(), 2u);
    const auto header = json::parse(ls[0]);
    EXPECT_EQ(header["m"], 6);
    EXPECT_EQ(header["family"], "perms");
    std::istringstream body(ls[1]);
    std::size_t symbols = 0;
    for (int x; body >> x;) ++symbols;
    EXPECT_EQ(symbols, 12u);
}

TEST(Gen, InfeasibleExplainsGcd) {
    const auto r = call({"gen", "--family", "perms", "--n", "4", "--s", "2"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("n-s = 2 = gcd(n,s) = 2"), std::string::npos) << r.err;
    EXPECT_NE(r.err.find("different components"), std::string::npos);
    EXPECT_TRUE(r.out.empty());
}

TEST(Gen, JugglingOneBallPeriodThree) {
    const auto r = call({"gen", "--family", "juggling", "--n", "3", "--b", "1", "--s", "1", "--expand"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto ls = lines(r.out);
    EXPECT_EQ(json::parse(ls[0])["m"], 8);
    EXPECT_EQ(ls.size(), 2u + 8u);
}

TEST(Gen, BadParametersExitOne) {
    EXPECT_EQ(call({"gen", "--family", "perms", "--n", "3", "--s", "3"}).code, 1);
    EXPECT_EQ(call({"gen", "--family", "kperms", "--n", "3", "--s", "1"}).code, 1);
    EXPECT_EQ(call({"gen", "--family", "nope", "--n", "3", "--s", "1"}).code, 1);
    EXPECT_EQ(call({"gen", "--n", "3", "--s", "1"}).code, 1);
    EXPECT_EQ(call({}).code, 1);
}

TEST(Gen, TextAndJsonEncodeTheSameData) {
    for (const std::vector<std::string> base : {std::vector<std::string>{"gen", "--family", "kperms", "--n", "4",
                                                                          "--k", "3", "--s", "2", "--expand"},
                                                 {"gen", "--family", "msetperms", "--multiset", "0,0,1,2", "--s", "1"}}) {
        auto text_args = base;
        auto json_args = base;
        json_args.insert(json_args.end(), {"--format", "json"});
        const auto text = call(text_args);
        const auto js = call(json_args);
        ASSERT_EQ(text.code, 0) << text.err;
        ASSERT_EQ(js.code, 0) << js.err;
        const auto ls = lines(text.out);
        const auto doc = json::parse(js.out);
        EXPECT_EQ(json::parse(ls[0]), doc["header"]);
        std::vector<unsigned> body;
        std::istringstream is(ls[1]);
        for (unsigned x; is >> x;) body.push_back(x);
        EXPECT_EQ(doc["cycle"].get<std::vector<unsigned>>(), body);
        if (doc.contains("objects")) EXPECT_EQ(doc["objects"].size() + 2, ls.size());
    }
}

TEST(Verify, RoundTripAndNegatives) {
    const TempFile file("verify.cyc");
    const auto gen = call({"gen", "--family", "surjections", "--n", "4", "--h", "3", "--s", "2", "--out", file.path()});
    ASSERT_EQ(gen.code, 0) << gen.err;
    EXPECT_TRUE(gen.out.empty());

    auto ok = call({"verify", file.path()});
    EXPECT_EQ(ok.code, 0) << ok.out << ok.err;
    EXPECT_EQ(ok.out.rfind("pass", 0), 0u);

    std::ifstream in(file.path());
    std::string header, body;
    std::getline(in, header);
    std::getline(in, body);
    in.close();

    std::string altered = body;
    altered[0] = altered[0] == '0' ? '1' : '0';
    file.write(header + "\n" + altered + "\n");
    const auto bad = call({"verify", file.path()});
    EXPECT_EQ(bad.code, 3);
    EXPECT_NE(bad.out.find("missing-object"), std::string::npos) << bad.out;

    file.write(header + "\n" + body.substr(0, body.size() - 2) + "\n");
    EXPECT_EQ(call({"verify", file.path()}).code, 1);

    EXPECT_EQ(call({"verify", "/nonexistent/ocycles.cyc"}).code, 1);
}

TEST(Verify, ExpandedListMustMatchBodyAndOverlap) {
    const TempFile file("expanded.cyc");
    ASSERT_EQ(call({"gen", "--family", "perms", "--n", "3", "--s", "1", "--expand", "--out", file.path()}).code, 0);
    std::ifstream in(file.path());
    std::vector<std::string> ls;
    for (std::string l; std::getline(in, l);) ls.push_back(l);
    in.close();
    std::swap(ls[3], ls[5]);
    std::string content;
    for (const auto& l : ls) content += l + "\n";
    file.write(content);
    const auto r = call({"verify", file.path(), "--format", "json"});
    EXPECT_EQ(r.code, 3);
    const auto doc = json::parse(r.out);
    EXPECT_FALSE(doc["pass"].get<bool>());
    bool overlap = false;
    for (const auto& f : doc["findings"]) overlap = overlap || f["kind"] == "overlap-violation";
    EXPECT_TRUE(overlap);
}

TEST(Verify, CommandLineParamsOverrideHeader) {
    const TempFile file("override.cyc");
    ASSERT_EQ(call({"gen", "--family", "juggling", "--n", "3", "--b", "1", "--s", "1", "--out", file.path()}).code, 0);
    EXPECT_EQ(call({"verify", file.path(), "--b", "1"}).code, 0);
    EXPECT_EQ(call({"verify", file.path(), "--b", "2"}).code, 3);
}

TEST(Check, JugglingIncludesDisconnectionWitness) {
    const auto r = call({"check", "juggling", "n_max=4", "b_max=1"});
    ASSERT_EQ(r.code, 0) << r.out << r.err;
    bool found = false;
    for (const auto& l : lines(r.out)) {
        if (l.rfind("juggling          4   2", 0) == 0) {
            found = l.find("witness T=2 0 2 0") != std::string::npos && l.find("separated") != std::string::npos;
        }
    }
    EXPECT_TRUE(found) << r.out;
}

TEST(Check, LemmasPass) {
    const auto r = call({"check", "lemmas", "trials=1000"});
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_NE(r.out.find("result: PASS"), std::string::npos);
}

TEST(Check, CapsValidation) {
    EXPECT_EQ(call({"check", "perms", "n_max=99"}).code, 1);
    EXPECT_EQ(call({"check", "perms", "bogus=3"}).code, 1);
    EXPECT_EQ(call({"check", "perms", "n_max"}).code, 1);
    EXPECT_EQ(call({"check", "everything"}).code, 1);
    EXPECT_EQ(call({"check", "perms", "--caps", "n_max=4,trials=5"}).code, 0);
}

TEST(Check, JsonMatchesText) {
    const auto text = call({"check", "perms", "n_max=5"});
    const auto js = call({"check", "perms", "n_max=5", "--format", "json"});
    ASSERT_EQ(text.code, 0);
    ASSERT_EQ(js.code, 0);
    const auto doc = json::parse(js.out);
    const auto ls = lines(text.out);
    // header + rows + summary + result
    ASSERT_EQ(ls.size(), doc["rows"].size() + 3);
    for (std::size_t i = 0; i < doc["rows"].size(); ++i) {
        const auto& row = doc["rows"][i];
        std::istringstream is(ls[i + 1]);
        std::string family;
        std::size_t n, s;
        is >> family >> n >> s;
        EXPECT_EQ(row["family"], family);
        EXPECT_EQ(row["n"], n);
        EXPECT_EQ(row["s"], s);
    }
    EXPECT_TRUE(doc["pass"].get<bool>());
}

TEST(Siteswap, KnownExamples) {
    const auto good = call({"siteswap", "0", "1", "5"});
    EXPECT_EQ(good.code, 0);
    EXPECT_NE(good.out.find("valid: yes"), std::string::npos);
    EXPECT_NE(good.out.find("balls: 2"), std::string::npos);
    EXPECT_NE(good.out.find("permutation: 0 2 1"), std::string::npos);

    const auto bad = call({"siteswap", "1", "0", "5"});
    EXPECT_EQ(bad.code, 0);
    EXPECT_NE(bad.out.find("valid: no"), std::string::npos);
    EXPECT_EQ(bad.out.find("balls:"), std::string::npos);

    const auto zero = call({"siteswap", "0", "--format", "json"});
    const auto doc = json::parse(zero.out);
    EXPECT_TRUE(doc["valid"].get<bool>());
    EXPECT_EQ(doc["balls"], 0);

    EXPECT_EQ(call({"siteswap"}).code, 1);
    EXPECT_EQ(call({"siteswap", "a"}).code, 1);
}

TEST(Diagram, AsciiAndSvg) {
    const auto ascii = call({"diagram", "0", "1", "5", "--periods", "3"});
    EXPECT_EQ(ascii.code, 0);
    EXPECT_NE(ascii.out.find("5 -> 10 (clipped)"), std::string::npos);
    const auto svg = call({"diagram", "0", "1", "5", "--periods", "3", "--format", "svg"});
    EXPECT_EQ(svg.code, 0);
    EXPECT_EQ(svg.out.rfind("<svg", 0), 0u);
    EXPECT_EQ(call({"diagram", "0", "--periods", "0"}).code, 1);
}

TEST(Help, ExitsCleanly) {
    const auto r = call({"--help"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("gen"), std::string::npos);
}

}  // namespace

#include <gtest/gtest.h>

#include "json.hpp"
#include "ocycles/cli/cycle_file.hpp"
#include "ocycles/enumerate.hpp"
#include "ocycles/error.hpp"

namespace {

using namespace ocycles;
using namespace ocycles::cli;

CycleFile sample() {
    FamilyParams p;
    p.family = "perms";
    p.n = 3;
    return CycleFile{p, 1, 6, {0, 1, 2, 0, 1, 0, 2, 1, 0, 2, 1, 2}, {}};
}

TEST(CycleFile, TextLayout) {
    EXPECT_EQ(write_text(sample()), "{\"family\":\"perms\",\"m\":6,\"n\":3,\"s\":1}\n0 1 2 0 1 0 2 1 0 2 1 2\n");
}

TEST(CycleFile, TextAndJsonCarryTheSameData) {
    auto f = sample();
    f.objects = {{0, 1, 2}, {2, 0, 1}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}};
    const auto from_text = parse_cycle_file(write_text(f));
    const auto from_json = parse_cycle_file(write_json(f).dump());
    for (const auto& g : {from_text, from_json}) {
        EXPECT_EQ(g.params.family, "perms");
        EXPECT_EQ(g.params.n, 3u);
        EXPECT_EQ(g.s, 1u);
        EXPECT_EQ(g.m, 6u);
        EXPECT_EQ(g.body, f.body);
        EXPECT_EQ(g.objects, f.objects);
    }
    EXPECT_EQ(header_json(from_text), header_json(from_json));
}

TEST(CycleFile, ExtraParamsSurvive) {
    FamilyParams p;
    p.family = "msetperms";
    p.n = 3;
    p.multiset = {0, 0, 1};
    const CycleFile f{p, 2, 3, {0, 1, 0}, {}};
    const auto g = parse_cycle_file(write_text(f));
    EXPECT_EQ(g.params.multiset, (std::vector<Symbol>{0, 0, 1}));
    FamilyParams j;
    j.family = "juggling";
    j.n = 3;
    j.b = 1;
    const auto h = parse_cycle_file(write_text(CycleFile{j, 1, 1, {0, 0}, {}}));
    EXPECT_EQ(h.params.b, 1u);
    EXPECT_FALSE(h.params.k.has_value());
}

TEST(CycleFile, MalformedInputs) {
    const std::string header = "{\"family\":\"perms\",\"m\":6,\"n\":3,\"s\":1}\n";
    EXPECT_THROW(parse_cycle_file(""), ParseError);
    EXPECT_THROW(parse_cycle_file("not json\n0 1\n"), ParseError);
    EXPECT_THROW(parse_cycle_file(header), ParseError);
    EXPECT_THROW(parse_cycle_file(header + "0 1 2 0 1 0 2 1 0 2 1\n"), ParseError);  // truncated
    EXPECT_THROW(parse_cycle_file(header + "0 1 x 0 1 0 2 1 0 2 1 2\n"), ParseError);
    EXPECT_THROW(parse_cycle_file("{\"family\":\"perms\",\"n\":3,\"s\":1}\n0 1\n"), ParseError);
    EXPECT_THROW(parse_cycle_file("{\"family\":\"perms\",\"m\":1,\"n\":3,\"s\":3}\n\n"), ParseError);
    EXPECT_THROW(parse_cycle_file(header + "0 1 2 0 1 0 2 1 0 2 1 2\n0 1\n"), ParseError);
    EXPECT_THROW(parse_cycle_file("{\"header\":{},\"cycle\":[0]}"), ParseError);
}

TEST(FamilyObjects, AllFamilies) {
    FamilyParams p;
    p.family = "perms";
    p.n = 3;
    EXPECT_EQ(family_objects(p).size(), 6u);
    p.family = "kperms";
    p.n = 4;
    p.k = 2;
    EXPECT_EQ(family_objects(p).size(), 12u);
    EXPECT_EQ(object_length(p), 2u);
    p.family = "surjections";
    p.h = 3;
    EXPECT_EQ(family_objects(p).size(), 36u);
    p.family = "juggling";
    p.n = 3;
    p.b = 1;
    EXPECT_EQ(family_objects(p).size(), 8u);
    p.family = "msetperms";
    p.multiset = {0, 0, 1};
    EXPECT_EQ(family_objects(p).size(), 3u);
    p.family = "bogus";
    EXPECT_THROW(family_objects(p), ParameterError);
    FamilyParams missing;
    missing.family = "kperms";
    missing.n = 4;
    EXPECT_THROW(family_objects(missing), ParameterError);
}

}  // namespace

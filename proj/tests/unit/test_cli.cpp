#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "skl/cli.hpp"
#include "skl/constructions.hpp"
#include "skl/errors.hpp"
#include "skl/verify.hpp"

using namespace skl;

namespace {

struct Invocation {
    int status;
    std::string out, err;
};

Invocation run(std::vector<std::string> args) {
    args.insert(args.begin(), "sklw");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int s = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {s, out.str(), err.str()};
}

json run_json(std::vector<std::string> args) {
    args.insert(args.begin(), "--json");
    const Invocation r = run(args);
    EXPECT_EQ(r.status, 0) << r.err;
    return json::parse(r.out);
}

std::filesystem::path temp_dir(const std::string& name) {
    auto d = std::filesystem::temp_directory_path() / ("skl_cli_" + name);
    std::filesystem::remove_all(d);
    std::filesystem::create_directories(d);
    return d;
}

}  // namespace

TEST(Cli, HilbertExamples) {
    const Invocation a = run({"hilbert", "--preset", "sklyanin", "--params", "1,2,3", "--max-deg", "5"});
    EXPECT_EQ(a.status, 0);
    EXPECT_NE(a.out.find("hilbert: 1 3 6 10 15 21\n"), std::string::npos) << a.out;
    const json b = run_json({"hilbert", "--preset", "badA", "--max-deg", "9", "--cap", "9"});
    EXPECT_EQ(b["results"]["hilbert"], json({1, 3, 6, 9, 15, 24, 39, 63, 102, 165}));
    EXPECT_EQ(b["results"]["series"], "(1 + 2t + 2t^2)/(1 - t - t^2)");
    for (const char* key : {"command", "inputs", "results", "timings"}) EXPECT_TRUE(b.contains(key)) << key;
}

TEST(Cli, TextAndJsonAgree) {
    const std::vector<std::string> args{"character", "--preset", "T", "--params", "1,2", "--max-deg", "4",
                                        "--class", "e1", "--class", "c"};
    const Invocation text = run(args);
    const json doc = run_json(args);
    ASSERT_EQ(text.status, 0);
    for (const auto& [cls, vals] : doc["results"]["characters"].items()) {
        std::string line = cls + ":";
        for (const auto& v : vals) line += " " + v.get<std::string>();
        EXPECT_NE(text.out.find(line + "\n"), std::string::npos) << line;
    }
    const Invocation iso = run({"isotypic", "--preset", "degenerate", "--params", "0,0,1", "--degree", "3"});
    const json iso_doc = run_json({"isotypic", "--preset", "degenerate", "--params", "0,0,1", "--degree", "3"});
    for (const auto& [name, m] : iso_doc["results"]["multiplicities"].items())
        EXPECT_NE(iso.out.find(name + ": " + std::to_string(m.get<int>()) + "\n"), std::string::npos);
}

TEST(Cli, ExitStatuses) {
    EXPECT_EQ(run({"hilbert"}).status, kExitUsage);  // neither preset nor file
    EXPECT_EQ(run({"hilbert", "--preset", "nope"}).status, kExitUsage);
    EXPECT_EQ(run({"hilbert", "--preset", "sklyanin", "--params", "1,2"}).status, kExitUsage);
    EXPECT_EQ(run({"frobnicate"}).status, kExitUsage);
    EXPECT_EQ(run({"hilbert", "--preset", "poly", "--max-deg", "9"}).status, kExitCap);
    EXPECT_EQ(run({"center", "--preset", "poly", "--degree", "8"}).status, kExitCap);
    EXPECT_EQ(run({"hilbert", "--preset", "T", "--params", "1,3/0"}).status, kExitParse);
    const auto dir = temp_dir("bad");
    std::ofstream(dir / "bad.json") << "{not json";
    EXPECT_EQ(run({"hilbert", "--file", (dir / "bad.json").string()}).status, kExitParse);
    EXPECT_EQ(run({"derive", "series", "--coeffs", "1,2,9,1,7,3"}).status, kExitCheckFailed);
    EXPECT_EQ(run({"derive", "series", "--coeffs", "1,2,x,1,7,3"}).status, kExitParse);
}

TEST(Cli, FileInputAndCacheTransparency) {
    const auto dir = temp_dir("cache");
    const auto file = dir / "t2.json";
    save_presentation(preset("T", std::vector<std::string>{"1", "2"}, FieldCtx::get(3)), file);
    const std::vector<std::string> args{"hilbert", "--file", file.string(), "--max-deg", "7",
                                        "--cache", (dir / "c").string()};
    const json cold = run_json(args);
    ASSERT_FALSE(std::filesystem::is_empty(dir / "c"));
    const json warm = run_json(args);
    EXPECT_EQ(cold["results"], warm["results"]);
    EXPECT_EQ(cold["results"]["hilbert"], json({1, 3, 6, 10, 15, 21, 28, 36}));
    // A stale cache from another presentation is ignored.
    for (const auto& e : std::filesystem::directory_iterator(dir / "c")) {
        Engine other(preset("poly", std::vector<std::string>{}, FieldCtx::get(3)));
        other.hilbert(4);
        other.save_cache(e.path());
    }
    EXPECT_EQ(run_json(args)["results"], cold["results"]);
}

TEST(Cli, PointsAndDerive) {
    const Invocation p = run({"points", "--t", "2", "--prev", "0,1,1", "--cur", "1,0,0", "--steps", "2"});
    EXPECT_EQ(p.status, 0);
    EXPECT_NE(p.out.find("2\t[0:1:-2]\n"), std::string::npos) << p.out;
    EXPECT_NE(p.out.find("order of phi^2: none up to 50"), std::string::npos);
    const json free = run_json({"points", "--prev", "0,1,1", "--cur", "1,0,0"});
    EXPECT_EQ(free["results"]["free_choice_line"], 0);
    const json s = run_json({"derive", "series", "--coeffs", "1,3,6,12,24,48,96"});
    EXPECT_EQ(s["results"]["series"], "(1 + t)/(1 - 2t)");
    const json line = run_json({"derive", "preimage-line", "--params", "1,2,3"});
    EXPECT_EQ(line["results"]["preimage_dim"], 2);
    EXPECT_EQ(line["results"]["contains_point"], true);
    const json c = run_json({"center", "--preset", "T", "--params", "1,2", "--degree", "3"});
    EXPECT_EQ(c["results"]["dim"], 1);
    const json i = run_json({"intersect", "--preset", "sklyanin", "--params", "1,2,3"});
    EXPECT_EQ(i["results"]["dim_intersection"], 1);
    EXPECT_EQ(i["results"]["dim_invariant"], 1);
}

TEST(Cli, VerifySubset) {
    const Invocation v = run({"verify", "--only", "1,16"});
    EXPECT_EQ(v.status, 0) << v.out;
    EXPECT_EQ(v.out.find("PASS 01"), 0u);
    EXPECT_NE(v.out.find("PASS 16"), std::string::npos);
    EXPECT_EQ(run({"verify", "--only", "99"}).status, kExitUsage);
    EXPECT_EQ(run({"verify", "--suite", "bogus"}).status, kExitUsage);
}

TEST(Verify, TamperedCorpusFails) {
    json corpus = load_corpus(default_corpus_path());
    for (auto& c : corpus["checks"])
        if (c["id"] == 1) c["items"][0]["expected"] = json({1, 3, 6, 10, 15, 21, 29});
    auto r = run_verify(corpus, "quick", {1});
    ASSERT_EQ(r.size(), 1u);
    EXPECT_FALSE(r[0].pass);
}

TEST(Verify, DerivedValuesNeedTheirOracle) {
    json corpus = load_corpus(default_corpus_path());
    for (auto& c : corpus["checks"])
        if (c["id"] == 11) c["items"][0]["oracle"] = "no_such_oracle";
    auto r = run_verify(corpus, "quick", {11});
    EXPECT_FALSE(r[0].pass);
    EXPECT_NE(r[0].error.find("no_such_oracle"), std::string::npos);
    for (auto& c : corpus["checks"])
        if (c["id"] == 11) c["items"][0].erase("oracle");
    EXPECT_FALSE(run_verify(corpus, "quick", {11})[0].pass);
}

TEST(Verify, EveryDerivedItemNamesAnOracleAndOrderIsCanonical) {
    const json corpus = load_corpus(default_corpus_path());
    std::set<int> ids;
    for (const auto& c : corpus["checks"]) {
        ids.insert(c["id"].get<int>());
        for (const auto& it : c["items"]) {
            const std::string tag = it["tag"];
            EXPECT_TRUE(tag == "PAPER" || tag == "DERIVED" || tag == "TRIVIAL") << tag;
            if (tag == "DERIVED") EXPECT_TRUE(it.contains("oracle")) << it["name"];
        }
    }
    EXPECT_EQ(ids.size(), 18u);
    const auto r = run_verify(corpus, "quick", {17, 3, 16}, 3);
    ASSERT_EQ(r.size(), 3u);
    EXPECT_EQ(r[0].id, 3);
    EXPECT_EQ(r[1].id, 16);
    EXPECT_EQ(r[2].id, 17);
}

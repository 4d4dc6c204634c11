#pragma once

// The verification suite: one check per numbered claim, expected values read
// from a corpus file with provenance tags. DERIVED values are recomputed by a
// named oracle before they are trusted.

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace skl {

using json = nlohmann::json;

struct VerifyItem {
    std::string name;
    std::string tag;     // PAPER, DERIVED or TRIVIAL
    std::string source;
    json expected;       // a value, or {"greater_than": n}
    json computed;
    json oracle;         // oracle value for DERIVED items, null otherwise
    bool pass = false;
};

struct CheckReport {
    int id = 0;
    std::string title;
    std::string suite;           // quick or slow
    double budget_seconds = 0;
    double seconds = 0;
    std::vector<VerifyItem> items;
    std::string error;           // exception text when the check threw
    bool pass = false;
};

// Corpus shipped with the build (data/verify_corpus.json in the source tree).
std::filesystem::path default_corpus_path();
json load_corpus(const std::filesystem::path& path);

// suite: "quick" (everything but the slow checks), "slow", or "all".
// `only` restricts to the listed ids. Checks run concurrently; the result is
// sorted by id. Throws ConfigError for an unknown suite or id.
std::vector<CheckReport> run_verify(const json& corpus, std::string_view suite, const std::vector<int>& only = {},
                                    unsigned threads = 0);

json to_json(const CheckReport& r);
// "PASS 01 title (0.12 s)" followed by one indented line per item.
std::string to_text(const CheckReport& r);

}  // namespace skl

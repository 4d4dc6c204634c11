#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>

#include <json.hpp>

#include "skl/graded_engine.hpp"

namespace skl {

using nlohmann::json;

namespace {

constexpr int kPresentationVersion = 1;
constexpr int kCacheVersion = 1;

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw InputError("cannot write " + path.string());
    out << text;
    if (!out) throw InputError("write failed for " + path.string());
}

json parse_json(std::string_view text, const char* what) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string(what) + ": " + e.what());
    }
}

template <class T>
T field(const json& j, const char* key, const char* what) {
    if (!j.is_object() || !j.contains(key)) throw ParseError(std::string(what) + ": missing field '" + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const json::exception& e) {
        throw ParseError(std::string(what) + ": bad field '" + key + "': " + e.what());
    }
}

std::string hex64(std::uint64_t h) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace

std::string presentation_to_text(const Presentation& p) {
    json rels = json::array();
    for (const auto& r : p.relations()) {
        json terms = json::array();
        for (const auto& [w, c] : r.terms()) terms.push_back({to_string(w, p.names()), to_string(c)});
        rels.push_back(std::move(terms));
    }
    json order = json::array();
    for (Letter g : p.order().largest_first()) order.push_back(p.names().name(g));
    const json doc = {{"format", "skl-presentation"},
                      {"version", kPresentationVersion},
                      {"field", p.ctx().order()},
                      {"generators", p.names().names()},
                      {"order", std::move(order)},
                      {"relations", std::move(rels)}};
    return doc.dump(1) + "\n";
}

Presentation presentation_from_text(std::string_view text) {
    const char* what = "presentation";
    const json doc = parse_json(text, what);
    if (field<std::string>(doc, "format", what) != "skl-presentation") throw ParseError("not a presentation file");
    if (field<int>(doc, "version", what) != kPresentationVersion)
        throw ParseError("unsupported presentation version");
    const int m = field<int>(doc, "field", what);
    if (m < 1) throw ParseError("field order must be positive");
    const FieldCtx& ctx = FieldCtx::get(m);
    GenNames names(field<std::vector<std::string>>(doc, "generators", what));
    for (const auto& nm : names.names())
        if (nm.size() != 1) throw ParseError("generator names must be single characters in files");

    WordOrder order = WordOrder::natural(names.size());
    if (doc.contains("order")) {
        std::vector<Letter> l;
        for (const auto& nm : field<std::vector<std::string>>(doc, "order", what)) {
            if (nm.size() != 1) throw ParseError("bad generator '" + nm + "' in order");
            l.push_back(names.letter(nm[0]));
        }
        try {
            order = WordOrder(std::move(l));
        } catch (const ConfigError& e) {
            throw ParseError(e.what());
        }
    }

    std::vector<NcPoly> rels;
    const json jr = field<json>(doc, "relations", what);
    if (!jr.is_array()) throw ParseError("relations must be a list");
    for (const auto& rel : jr) {
        if (!rel.is_array() || rel.empty()) throw ParseError("relation must be a nonempty list of [word, coefficient]");
        std::optional<NcPoly> p;
        for (const auto& term : rel) {
            if (!term.is_array() || term.size() != 2 || !term[0].is_string() || !term[1].is_string())
                throw ParseError("relation term must be [word, coefficient]");
            const Word w = parse_word(term[0].get<std::string>(), names);
            const CycNum c = parse_cyc(ctx, term[1].get<std::string>());
            if (!p) p.emplace(ctx, names.size(), w.degree());
            p->add_term(w, c);
        }
        rels.push_back(std::move(*p));
    }
    return Presentation(ctx, std::move(names), std::move(rels), std::move(order));
}

Presentation load_presentation(const std::filesystem::path& path) { return presentation_from_text(read_file(path)); }

void save_presentation(const Presentation& p, const std::filesystem::path& path) {
    write_file(path, presentation_to_text(p));
}

std::string presentation_hash(const Presentation& p) {
    // FNV-1a
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : presentation_to_text(p)) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    return hex64(h);
}

void Engine::save_cache(const std::filesystem::path& path) const {
    json slices = json::array();
    for (const auto& s : slices_) {
        json mono = json::array();
        for (Key k = 0; k < s.mono_.size(); ++k)
            if (s.mono_[k]) mono.push_back(k);
        json rows = json::array();
        for (const auto& r : s.rows_) {
            json row = json::array();
            for (const auto& [k, c] : r) row.push_back({k, to_string(c)});
            rows.push_back(std::move(row));
        }
        slices.push_back({{"degree", s.degree()}, {"mono", std::move(mono)}, {"rows", std::move(rows)}});
    }
    const json doc = {{"format", "skl-slice-cache"},
                      {"version", kCacheVersion},
                      {"hash", presentation_hash(pres_)},
                      {"slices", std::move(slices)}};
    // Write then rename so a concurrent reader never sees a partial file.
    const auto tmp = path.string() + ".tmp";
    write_file(tmp, doc.dump());
    std::filesystem::rename(tmp, path);
}

bool Engine::load_cache(const std::filesystem::path& path) {
    if (!std::filesystem::exists(path)) return false;
    const char* what = "slice cache";
    const json doc = parse_json(read_file(path), what);
    if (field<std::string>(doc, "format", what) != "skl-slice-cache") return false;
    if (field<int>(doc, "version", what) != kCacheVersion) return false;
    if (field<std::string>(doc, "hash", what) != presentation_hash(pres_)) return false;

    std::vector<DegreeSlice> loaded;
    for (const auto& js : field<json>(doc, "slices", what)) {
        const auto d = field<std::size_t>(js, "degree", what);
        if (d != loaded.size()) throw ParseError("slice cache degrees out of sequence");
        if (static_cast<int>(d) > cap_) break;
        DegreeSlice s(d, ngens());
        std::vector<SparseVec> rows;
        for (const auto& k : field<std::vector<Key>>(js, "mono", what)) {
            if (k >= s.mono_.size()) throw ParseError("slice cache key out of range");
            s.mono_[k] = true;
        }
        for (const auto& jr : field<json>(js, "rows", what)) {
            SparseVec r;
            for (const auto& e : jr) {
                const Key k = e.at(0).get<Key>();
                if (k >= s.mono_.size()) throw ParseError("slice cache key out of range");
                r.emplace_back(k, parse_cyc(ctx(), e.at(1).get<std::string>()));
            }
            if (r.size() < 2) throw ParseError("slice cache row too short");
            rows.push_back(std::move(r));
        }
        s.finish(std::move(rows));
        loaded.push_back(std::move(s));
    }
    if (loaded.size() <= slices_.size()) return true;
    slices_ = std::move(loaded);
    return true;
}

}  // namespace skl

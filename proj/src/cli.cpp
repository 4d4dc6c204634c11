#include "skl/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <optional>
#include <sstream>

#include "skl/constructions.hpp"
#include "skl/errors.hpp"
#include "skl/group_rep.hpp"
#include "skl/point_modules.hpp"
#include "skl/series.hpp"
#include "skl/verify.hpp"

namespace skl {

namespace {

struct Options {
    std::string preset;
    std::string file;
    std::string params;
    int field = 3;
    bool field_given = false;
    int max_deg = -1;
    int cap = -1;
    int degree = -1;
    bool json_out = false;
    std::string cache;
    std::vector<std::string> classes;
    std::string group = "H3";
    // points
    std::string t, prev, cur;
    unsigned steps = 12;
    unsigned bound = 50;
    // derive series
    std::string coeffs;
    // verify
    std::string suite = "quick";
    std::string only;
    std::string corpus;
    unsigned threads = 0;
};

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    if (s.empty()) return out;
    std::stringstream ss(s);
    for (std::string item; std::getline(ss, item, ',');) out.push_back(item);
    return out;
}

const FieldCtx& field(const Options& o) { return FieldCtx::get(o.field); }

Presentation load_input(const Options& o) {
    if (o.preset.empty() == o.file.empty()) throw ConfigError("give exactly one of --preset and --file");
    if (!o.file.empty()) {
        Presentation p = load_presentation(o.file);
        if (o.field_given && p.ctx().order() != o.field)
            throw ConfigError("--field " + std::to_string(o.field) + " disagrees with the file's field " +
                              std::to_string(p.ctx().order()));
        return p;
    }
    return preset(o.preset, split_commas(o.params), field(o));
}

json inputs_json(const Options& o) {
    json j;
    if (!o.preset.empty()) j["preset"] = o.preset;
    if (!o.file.empty()) j["file"] = o.file;
    if (!o.params.empty()) j["params"] = split_commas(o.params);
    j["field"] = o.field;
    return j;
}

std::filesystem::path cache_file(const Options& o, const Presentation& p) {
    return std::filesystem::path(o.cache) / (presentation_hash(p) + ".json");
}

// Engine with the subcommand's cap plus `headroom` degrees (center needs
// k + 1); reads and refreshes the slice cache around `work`.
template <class F>
void with_engine(const Options& o, int default_cap, int needed, F&& work, int headroom = 0) {
    Presentation p = load_input(o);
    const int cap = o.cap >= 0 ? o.cap : default_cap;
    if (needed > cap)
        throw LimitError("degree " + std::to_string(needed) + " exceeds the cap " + std::to_string(cap) +
                         " (raise it with --cap)");
    Engine e(p, EngineOptions{cap + headroom});
    if (!o.cache.empty() && std::filesystem::exists(cache_file(o, p))) e.load_cache(cache_file(o, p));
    const int before = e.computed_degree();
    work(e);
    if (!o.cache.empty() && e.computed_degree() > before) {
        std::filesystem::create_directories(o.cache);
        e.save_cache(cache_file(o, p));
    }
}

std::string join(const json& arr) {
    std::string s;
    for (const auto& v : arr) s += (s.empty() ? "" : " ") + (v.is_string() ? v.get<std::string>() : v.dump());
    return s;
}

struct Output {
    Output() = default;
    Output(std::string c, json in) : command(std::move(c)), inputs(std::move(in)) {}
    std::string command;
    json inputs;
    json results = json::object();
    std::string text;
    int status = kExitOk;
};

Output cmd_hilbert(const Options& o) {
    Output r{"hilbert", inputs_json(o)};
    const int N = o.max_deg < 0 ? 8 : o.max_deg;
    r.inputs["max_deg"] = N;
    with_engine(o, 8, N, [&](Engine& e) {
        const auto h = e.hilbert(N);
        r.results["hilbert"] = h;
        r.text = "hilbert: " + join(r.results["hilbert"]) + "\n";
        if (h.size() >= 6) {
            const auto g = guess_rational_series(std::vector<Int>(h.begin(), h.end()));
            r.results["series"] = g ? json(to_string(*g)) : json(nullptr);
            r.text += "series: " + (g ? to_string(*g) : std::string("no small rational fit")) + "\n";
        }
    });
    return r;
}

MatAction group_for(const Options& o) {
    if (std::filesystem::exists(o.group)) return load_group(o.group);
    return builtin_group(o.group, field(o));
}

Output cmd_character(const Options& o) {
    Output r{"character", inputs_json(o)};
    const int N = o.max_deg < 0 ? 8 : o.max_deg;
    r.inputs["max_deg"] = N;
    r.inputs["group"] = o.group;
    with_engine(o, 8, N, [&](Engine& e) {
        const MatAction g = group_for(o);
        std::vector<std::pair<std::string, Matrix>> targets;
        if (o.group == "H3") {
            const auto table = CharacterTable::h3(g);
            for (std::size_t k = 0; k < table.class_reps().size(); ++k)
                targets.emplace_back(table.class_names()[k], table.class_reps()[k]);
        } else {
            targets.emplace_back("1", identity_matrix(g.ctx(), g.dim()));
            for (std::size_t k = 0; k < g.generators().size(); ++k)
                targets.emplace_back(g.generator_names()[k], g.generators()[k]);
        }
        if (!o.classes.empty()) {
            std::vector<std::pair<std::string, Matrix>> keep;
            for (const auto& c : o.classes) {
                auto it = std::find_if(targets.begin(), targets.end(), [&](const auto& t) { return t.first == c; });
                if (it == targets.end()) throw ConfigError("unknown class " + c);
                keep.push_back(*it);
            }
            targets = keep;
        }
        json ch = json::object();
        for (const auto& [name, m] : targets) {
            json vals = json::array();
            for (int d = 0; d <= N; ++d) vals.push_back(to_string(char_on_slice(m, e, d)));
            ch[name] = vals;
            r.text += name + ": " + join(vals) + "\n";
        }
        r.results["characters"] = ch;
    });
    return r;
}

Output cmd_isotypic(const Options& o) {
    Output r{"isotypic", inputs_json(o)};
    if (o.degree < 0) throw ConfigError("isotypic needs --degree");
    r.inputs["degree"] = o.degree;
    with_engine(o, 8, o.degree, [&](Engine& e) {
        const auto table = CharacterTable::h3(builtin_group("H3", e.ctx()));
        json m = json::object();
        const auto all = isotypic_multiplicities(table, e, o.degree);
        for (const auto& ir : table.irreps()) {
            const auto& mult = all.at(ir.name);
            m[ir.name] = mult.get_si();
            r.text += ir.name + ": " + mult.get_str() + "\n";
        }
        r.results["multiplicities"] = m;
    });
    return r;
}

Output cmd_center(const Options& o) {
    Output r{"center", inputs_json(o)};
    if (o.degree < 0) throw ConfigError("center needs --degree");
    r.inputs["degree"] = o.degree;
    with_engine(o, 7, o.degree, [&](Engine& e) {
        const auto basis = e.center_basis(o.degree);
        json b = json::array();
        for (const auto& p : basis) b.push_back(to_string(p, e.presentation().names()));
        r.results["dim"] = basis.size();
        r.results["basis"] = b;
        r.text = "dim: " + std::to_string(basis.size()) + "\n";
        for (const auto& s : b) r.text += "  " + s.get<std::string>() + "\n";
    }, 1);
    return r;
}

Output cmd_intersect(const Options& o) {
    Output r{"intersect", inputs_json(o)};
    const Presentation p = load_input(o);
    const auto ov = relation_overlap(p);
    r.results["dim_W_V"] = ov.dims.dim1;
    r.results["dim_V_W"] = ov.dims.dim2;
    r.results["dim_sum"] = ov.dims.dim_sum;
    r.results["dim_intersection"] = ov.dims.dim_intersection;
    json b = json::array();
    for (const auto& q : ov.basis) b.push_back(to_string(q, p.names()));
    r.results["basis"] = b;
    std::optional<std::size_t> inv;
    if (p.ctx().order() % 3 == 0 && p.ngens() == 3) {
        try {
            inv = invariant_dim(builtin_group("H3", p.ctx()), ov.basis);
        } catch (const SymmetryError&) {
        }
    }
    r.results["dim_invariant"] = inv ? json(*inv) : json(nullptr);
    std::ostringstream os;
    os << "dim W(x)V: " << ov.dims.dim1 << "\ndim V(x)W: " << ov.dims.dim2 << "\ndim sum: " << ov.dims.dim_sum
       << "\ndim intersection: " << ov.dims.dim_intersection << "\ndim invariant: "
       << (inv ? std::to_string(*inv) : std::string("n/a (not H3-stable)")) << "\n";
    for (const auto& s : b) os << "  " << s.get<std::string>() << "\n";
    r.text = os.str();
    return r;
}

std::vector<CycNum> point_arg(const FieldCtx& k, const std::string& s, const char* flag) {
    std::vector<CycNum> out;
    for (const auto& c : split_commas(s)) out.push_back(parse_cyc(k, c));
    if (out.size() != 3) throw ConfigError(std::string(flag) + " needs three comma-separated coordinates");
    return out;
}

Output cmd_points(const Options& o) {
    Output r{"points", json::object()};
    const FieldCtx& k = field(o);
    if (o.prev.empty() || o.cur.empty()) throw ConfigError("points needs --prev and --cur");
    const ProjPoint prev(point_arg(k, o.prev, "--prev")), cur(point_arg(k, o.cur, "--cur"));
    std::optional<CycNum> t;
    if (!o.t.empty()) t = parse_cyc(k, o.t);
    r.inputs = {{"prev", to_string(prev)}, {"cur", to_string(cur)}, {"t", t ? json(to_string(*t)) : json(nullptr)},
                {"steps", o.steps}, {"field", o.field}};
    const Orbit orb = orbit(prev, cur, t, o.steps);
    json pts = json::array();
    for (std::size_t i = 0; i < orb.points.size(); ++i) {
        pts.push_back(to_string(orb.points[i]));
        r.text += std::to_string(i) + "\t" + to_string(orb.points[i]) + "\n";
    }
    r.results["points"] = pts;
    if (orb.stopped_at) {
        r.results["free_choice_line"] = orb.stopped_at->line;
        r.text += "next: any point of line " + std::to_string(orb.stopped_at->line) + "\n";
    }
    if (t) {
        const auto ord = phi_order(*t, o.bound);
        r.results["phi_squared_order"] = ord ? json(*ord) : json(nullptr);
        r.text += "order of phi^2: " + (ord ? std::to_string(*ord) : "none up to " + std::to_string(o.bound)) + "\n";
    }
    return r;
}

Output cmd_derive_series(const Options& o) {
    Output r{"derive series", json::object()};
    std::vector<Int> coeffs;
    if (!o.coeffs.empty()) {
        r.inputs["coeffs"] = split_commas(o.coeffs);
        for (const auto& c : split_commas(o.coeffs)) {
            try {
                coeffs.emplace_back(c);
            } catch (const std::invalid_argument&) {
                throw ParseError("not an integer: '" + c + "'");
            }
        }
    } else {
        r.inputs = inputs_json(o);
        const int N = o.max_deg < 0 ? 8 : o.max_deg;
        r.inputs["max_deg"] = N;
        with_engine(o, 8, N, [&](Engine& e) {
            for (auto d : e.hilbert(N)) coeffs.emplace_back(static_cast<unsigned long>(d));
        });
    }
    const auto g = guess_rational_series(coeffs);
    if (g) {
        json num = json::array(), den = json::array();
        for (const auto& c : g->numerator) num.push_back(c.get_str());
        for (const auto& c : g->denominator) den.push_back(c.get_str());
        r.results = {{"numerator", num}, {"denominator", den}, {"series", to_string(*g)}};
        r.text = to_string(*g) + "\n";
    } else {
        r.results = {{"series", nullptr}};
        r.text = "no small rational fit\n";
        r.status = kExitCheckFailed;
    }
    return r;
}

Output cmd_derive_alpha(Options o) {
    if (o.preset.empty() && o.file.empty()) {
        o.preset = "T";
        if (o.params.empty()) o.params = "1,1";
    }
    Output r{"derive alpha", inputs_json(o)};
    with_engine(o, 12, 12, [&](Engine& e) {
        const auto a = derive_center_scalar(e);
        r.results = {{"center3_dim", a.center3_dim},
                     {"center4_dim", a.center4_dim},
                     {"uvw_central", a.uvw_central},
                     {"alpha", a.alpha ? json(to_string(*a.alpha)) : json(nullptr)}};
        r.text = "center dims (3, 4): " + std::to_string(a.center3_dim) + ", " + std::to_string(a.center4_dim) +
                 "\nu, v, w central: " + (a.uvw_central ? "yes" : "no") +
                 "\nalpha: " + (a.alpha ? to_string(*a.alpha) : std::string("none")) + "\n";
        if (!a.alpha || a.alpha->is_zero()) r.status = kExitCheckFailed;
    });
    return r;
}

Output cmd_derive_preimage(const Options& o) {
    Output r{"derive preimage-line", json::object()};
    const ParamPoint p(point_arg(field(o), o.params, "--params"));
    r.inputs = {{"point", to_string(p)}, {"field", o.field}};
    const auto res = central_preimage_line(p);
    r.results["central_cubic"] = to_string(res.central, GenNames());
    r.results["preimage_dim"] = res.preimage_dim;
    r.text = "central cubic: " + to_string(res.central, GenNames()) +
             "\npreimage dim: " + std::to_string(res.preimage_dim) + "\n";
    if (res.line) {
        r.results["line"] = {{"p01", to_string(res.line->p01)},
                             {"p20", to_string(res.line->p20)},
                             {"p12", to_string(res.line->p12)}};
        r.results["contains_point"] = res.line->contains(p.coords());
        r.text += "line (p01, p20, p12): (" + to_string(res.line->p01) + ", " + to_string(res.line->p20) + ", " +
                  to_string(res.line->p12) + ")\n";
    } else {
        r.results["line"] = nullptr;
    }
    return r;
}

Output cmd_verify(const Options& o) {
    Output r{"verify", {{"suite", o.suite}, {"only", o.only}}};
    std::vector<int> only;
    for (const auto& s : split_commas(o.only)) {
        try {
            only.push_back(std::stoi(s));
        } catch (const std::exception&) {
            throw ConfigError("--only takes check numbers, got '" + s + "'");
        }
    }
    const auto path = o.corpus.empty() ? default_corpus_path() : std::filesystem::path(o.corpus);
    r.inputs["corpus"] = path.string();
    const auto reports = run_verify(load_corpus(path), o.suite, only, o.threads);
    json checks = json::array();
    bool all = true;
    for (const auto& c : reports) {
        checks.push_back(to_json(c));
        r.text += to_text(c);
        all = all && c.pass;
    }
    r.results["checks"] = checks;
    r.results["pass"] = all;
    r.text += std::string(all ? "all " : "not all ") + std::to_string(reports.size()) + " checks passed\n";
    r.status = all ? kExitOk : kExitCheckFailed;
    return r;
}

void add_input_flags(CLI::App* sub, Options& o) {
    sub->add_option("--preset", o.preset, "named presentation");
    sub->add_option("--file", o.file, "presentation file");
    sub->add_option("--params", o.params, "comma-separated parameters");
    sub->add_option("--cache", o.cache, "directory for slice caches");
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Graded quotients of free algebras: Hilbert series, characters, centers"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_flag("--json", o.json_out, "print one JSON document");
    auto* field_opt = app.add_option("--field", o.field, "cyclotomic field order m");

    auto* hilbert = app.add_subcommand("hilbert", "dimensions of the degree slices");
    add_input_flags(hilbert, o);
    hilbert->add_option("--max-deg", o.max_deg, "highest degree (default 8)");
    hilbert->add_option("--cap", o.cap, "degree cap");

    auto* character = app.add_subcommand("character", "graded character of group elements");
    add_input_flags(character, o);
    character->add_option("--max-deg", o.max_deg, "highest degree (default 8)");
    character->add_option("--cap", o.cap, "degree cap");
    character->add_option("--class", o.classes, "class or generator name (repeatable)");
    character->add_option("--group", o.group, "builtin group name or group file");

    auto* isotypic = app.add_subcommand("isotypic", "H3 isotypic multiplicities of one slice");
    add_input_flags(isotypic, o);
    isotypic->add_option("--degree", o.degree)->required();
    isotypic->add_option("--cap", o.cap, "degree cap");

    auto* center = app.add_subcommand("center", "central elements of one degree");
    add_input_flags(center, o);
    center->add_option("--degree", o.degree)->required();
    center->add_option("--cap", o.cap, "degree cap");

    auto* intersect = app.add_subcommand("intersect", "overlap of W(x)V and V(x)W for the quadratic relations W");
    add_input_flags(intersect, o);

    auto* points = app.add_subcommand("points", "orbit of a point pair on the coordinate triangle");
    points->add_option("--t", o.t, "twist parameter; omit for the degenerate algebra");
    points->add_option("--prev", o.prev, "first point a,b,c")->required();
    points->add_option("--cur", o.cur, "second point a,b,c")->required();
    points->add_option("--steps", o.steps, "number of successors");
    points->add_option("--bound", o.bound, "search bound for the order of phi^2");

    auto* derive = app.add_subcommand("derive", "derived quantities");
    derive->require_subcommand(1);
    derive->fallthrough();
    auto* series = derive->add_subcommand("series", "rational generating function of a sequence");
    add_input_flags(series, o);
    series->add_option("--coeffs", o.coeffs, "comma-separated integers");
    series->add_option("--max-deg", o.max_deg, "degrees to use from a presentation (default 8)");
    series->add_option("--cap", o.cap, "degree cap");
    auto* alpha = derive->add_subcommand("alpha", "scalar with uvw = alpha g^4 in T_1");
    add_input_flags(alpha, o);
    alpha->add_option("--cap", o.cap, "degree cap (default 12)");
    auto* preimage = derive->add_subcommand("preimage-line", "line of invariant cubics over the central cubic");
    preimage->add_option("--params", o.params, "point a,b,c")->required();

    auto* verify = app.add_subcommand("verify", "run the verification suite");
    verify->add_option("--suite", o.suite, "quick, slow or all")->check(CLI::IsMember({"quick", "slow", "all"}));
    verify->add_option("--only", o.only, "comma-separated check numbers");
    verify->add_option("--corpus", o.corpus, "corpus file");
    verify->add_option("--threads", o.threads, "worker threads (0: all cores)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n" << app.help();
        return kExitUsage;
    }
    o.field_given = field_opt->count() > 0;

    const auto start = std::chrono::steady_clock::now();
    Output r;
    try {
        if (*hilbert) r = cmd_hilbert(o);
        else if (*character) r = cmd_character(o);
        else if (*isotypic) r = cmd_isotypic(o);
        else if (*center) r = cmd_center(o);
        else if (*intersect) r = cmd_intersect(o);
        else if (*points) r = cmd_points(o);
        else if (*series) r = cmd_derive_series(o);
        else if (*alpha) r = cmd_derive_alpha(o);
        else if (*preimage) r = cmd_derive_preimage(o);
        else r = cmd_verify(o);
    } catch (const LimitError& e) {
        err << "cap exceeded: " << e.what() << "\n";
        return kExitCap;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const ConfigError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const InputError& e) {
        err << "input error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DomainError& e) {
        err << "domain error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.json_out) {
        json doc{{"command", r.command}, {"inputs", r.inputs}, {"results", r.results}, {"timings", {{"seconds", secs}}}};
        out << doc.dump(1) << "\n";
    } else {
        out << r.text;
    }
    return r.status;
}

}  // namespace skl

// digitop: command-line front end for the digital-topology workbench.

#include "digitop/builders.hpp"
#include "digitop/enumeration.hpp"
#include "digitop/errors.hpp"
#include "digitop/homotopy.hpp"
#include "digitop/homotopy_spectra.hpp"
#include "digitop/io.hpp"
#include "digitop/spectra.hpp"
#include "digitop/verify.hpp"

#include "CLI11.hpp"

#include <iostream>
#include <optional>
#include <string>
#include <vector>

using namespace digitop;
using io::Json;

namespace {

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kUsage = 2;

struct Globals {
    std::optional<std::uint64_t> budget_nodes;
    std::optional<double> budget_time;
    std::size_t i_max = 3;
    std::size_t j_max = 4;
    std::string format = "text";
    std::uint64_t seed = 1;
    bool deterministic = false;
};

struct Out {
    bool json = false;

    void emit(const Json& obj, const std::string& text) const
    {
        if (json)
            std::cout << obj.dump() << '\n';
        else
            std::cout << text << '\n';
    }
};

verify::RunConfig run_config(const Globals& g)
{
    verify::RunConfig c;
    if (g.budget_nodes || g.budget_time) {
        EnumerationBudget b;
        b.max_nodes = g.budget_nodes;
        if (g.budget_time)
            b.time_budget = std::chrono::milliseconds(static_cast<std::int64_t>(*g.budget_time * 1000));
        c.budget = b;
    }
    c.i_max = g.i_max;
    c.j_max = g.j_max;
    c.seed = g.seed;
    c.deterministic = g.deterministic;
    return c;
}

EnumerationBudget budget(const Globals& g, std::initializer_list<std::size_t> sizes)
{
    auto b = verify::default_budget(std::max(sizes), run_config(g));
    b.validate();
    return b;
}

std::string spectrum_text(const Spectrum& s)
{
    return to_string(s) + (s.exact ? "" : "  (partial: budget exhausted)");
}

Json spectrum_json(const Spectrum& s)
{
    Json j{{"values", s.values}, {"exact", s.exact}};
    if (s.arity)
        j["i"] = *s.arity;
    return j;
}

std::string row_text(std::span<const PointIndex> row)
{
    std::string s = "[";
    for (std::size_t k = 0; k < row.size(); ++k)
        s += (k ? "," : "") + std::to_string(row[k]);
    return s + "]";
}

// "id", "const:<j>" (against --image/--codomain), or a map file.
DigitalMap resolve_map(const std::string& ref, const std::string& image, const std::string& codomain)
{
    auto need = [&](const std::string& r) {
        if (r.empty())
            throw InvalidInput("map '" + ref + "' needs --image");
        return io::resolve_image(r).image;
    };
    if (ref == "id")
        return DigitalMap::identity(need(image));
    if (ref.rfind("const:", 0) == 0) {
        auto x = need(image);
        auto y = codomain.empty() ? x : io::resolve_image(codomain).image;
        std::size_t pos = 0;
        unsigned long v = 0;
        try {
            v = std::stoul(ref.substr(6), &pos);
        } catch (const std::exception&) {
            pos = 0;
        }
        if (pos == 0 || pos != ref.size() - 6)
            throw InvalidInput("bad constant map '" + ref + "'");
        return DigitalMap::constant(x, y, static_cast<PointIndex>(v));
    }
    return io::load_map_file(ref).map;
}

std::vector<DigitalMap> resolve_maps(const std::vector<std::string>& refs, const std::string& image,
                                     const std::string& codomain)
{
    if (refs.empty())
        throw InvalidInput("at least one --map is required");
    std::vector<DigitalMap> maps;
    for (const auto& r : refs)
        maps.push_back(resolve_map(r, image, codomain));
    for (auto& f : maps)
        if (!same_image(f.domain(), maps[0].domain()) || !same_image(f.codomain(), maps[0].codomain()))
            throw InvalidInput("maps do not share domain and codomain");
    return maps;
}

int image_info(const Out& out, const std::string& ref)
{
    auto loaded = io::resolve_image(ref);
    const auto& x = *loaded.image;
    auto blocks = components(x);
    std::vector<std::size_t> sizes;
    for (auto& b : blocks)
        sizes.push_back(b.size());
    bool identity = true;
    for (std::size_t i = 0; i < loaded.permutation.size(); ++i)
        identity = identity && loaded.permutation[i] == i;
    Json j{{"image", ref},
           {"name", x.name()},
           {"dimension", x.dimension()},
           {"points", x.size()},
           {"edges", x.edge_count()},
           {"component_sizes", sizes},
           {"connected", is_connected(x)},
           {"totally_disconnected", is_totally_disconnected(x)},
           {"degree_sequence", degree_sequence(x)},
           {"permutation", loaded.permutation}};
    std::string text = "image " + ref + "\n  dimension " + std::to_string(x.dimension()) + ", " +
                       std::to_string(x.size()) + " points, " + std::to_string(x.edge_count()) + " edges\n" +
                       "  components " + std::to_string(blocks.size()) +
                       (is_connected(x) ? " (connected)" : "") +
                       (is_totally_disconnected(x) ? " (totally disconnected)" : "");
    if (!identity)
        text += "\n  reordered points: document index -> canonical index " + Json(loaded.permutation).dump();
    out.emit(j, text);
    return kOk;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"digitop: coincidence and fixed point invariants of finite digital images"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_option("--budget-nodes", g.budget_nodes, "Search node limit");
    app.add_option("--budget-time", g.budget_time, "Time limit per computation, seconds");
    app.add_option("--i-max", g.i_max, "Largest arity for spectrum unions and suites")->check(CLI::Range(2, 64));
    app.add_option("--j-max", g.j_max, "Largest j for self-coincidence numbers")->check(CLI::Range(1, 64));
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--seed", g.seed, "Seed for random instances");
    app.add_flag("--deterministic", g.deterministic, "Reproducible output (no timings)");

    std::string image, codomain, file, output;
    std::vector<std::string> map_refs;
    std::optional<std::size_t> arity, limit, point, j_value;

    // image
    auto* image_cmd = app.add_subcommand("image", "Inspect or emit images")->require_subcommand(1);
    auto* image_info_cmd = image_cmd->add_subcommand("info", "Summarize an image");
    image_info_cmd->add_option("ref", image, "builtin:<name> or image file");
    image_info_cmd->add_option("--image", image, "builtin:<name> or image file");
    auto* image_build_cmd = image_cmd->add_subcommand("build", "Write a builtin image as JSON");
    image_build_cmd->add_option("name", image, "Builtin name")->required();
    image_build_cmd->add_option("-o,--output", output, "Output file (default stdout)");

    // map
    auto* map_cmd = app.add_subcommand("map", "Validate or evaluate maps")->require_subcommand(1);
    auto* map_check_cmd = map_cmd->add_subcommand("check", "Check a map file for continuity");
    map_check_cmd->add_option("file", file, "Map file")->required();
    auto* map_apply_cmd = map_cmd->add_subcommand("apply", "Evaluate a map at a point");
    map_apply_cmd->add_option("file", file, "Map file")->required();
    map_apply_cmd->add_option("point", point, "Domain point (canonical index)")->required();

    // maps
    auto* maps_cmd = app.add_subcommand("maps", "Enumerate continuous maps")->require_subcommand(1);
    auto* maps_count_cmd = maps_cmd->add_subcommand("count", "Count continuous maps X -> Y");
    auto* maps_enum_cmd = maps_cmd->add_subcommand("enumerate", "List continuous maps X -> Y");
    for (auto* c : {maps_count_cmd, maps_enum_cmd}) {
        c->add_option("--image", image, "Domain")->required();
        c->add_option("--codomain", codomain, "Codomain (default: the domain)");
    }
    maps_enum_cmd->add_option("--limit", limit, "Stop after this many maps");

    // homotopy
    auto* homotopy_cmd = app.add_subcommand("homotopy", "Digital homotopy")->require_subcommand(1);
    auto* class_cmd = homotopy_cmd->add_subcommand("class", "Homotopy class of a map");
    auto* are_cmd = homotopy_cmd->add_subcommand("are-homotopic", "Decide f ~ g with a witness chain");
    auto* rigid_cmd = homotopy_cmd->add_subcommand("rigid", "Is the image (or --map) rigid");
    auto* contract_cmd = homotopy_cmd->add_subcommand("contractible", "Is the image contractible");
    for (auto* c : {class_cmd, are_cmd, rigid_cmd}) {
        c->add_option("--map", map_refs, "id, const:<j>, or map file");
        c->add_option("--codomain", codomain, "Codomain for const:<j>");
    }
    rigid_cmd->add_option("ref", image, "Image");
    for (auto* c : {class_cmd, are_cmd, rigid_cmd, contract_cmd})
        c->add_option("--image", image, "Image for id / const:<j>");
    contract_cmd->add_option("ref", image, "Image");

    // spectrum
    auto* spectrum_cmd = app.add_subcommand("spectrum", "Coincidence and fixed point spectra")->require_subcommand(1);
    auto* cs_cmd = spectrum_cmd->add_subcommand("cs", "CS_i(X,Y), or the union up to --i-max");
    auto* f_cmd = spectrum_cmd->add_subcommand("f", "Fixed point spectrum F(X)");
    auto* cfs_cmd = spectrum_cmd->add_subcommand("cfs", "CFS_i(X), or the union up to --i-max");
    for (auto* c : {cs_cmd, f_cmd, cfs_cmd})
        c->add_option("--image", image, "Image X")->required();
    cs_cmd->add_option("--codomain", codomain, "Codomain Y (default: X)");
    cs_cmd->add_option("--i", arity, "Arity");
    cfs_cmd->add_option("--i", arity, "Arity");

    // hspectrum
    auto* hs_cmd = app.add_subcommand("hspectrum", "Homotopy spectra and minimum numbers")->require_subcommand(1);
    auto* hcs_cmd = hs_cmd->add_subcommand("hcs", "HCS(f_1..f_i)");
    auto* hfs_cmd = hs_cmd->add_subcommand("hfs", "HFS(f_1..f_i)");
    auto* mc_cmd = hs_cmd->add_subcommand("mc", "MC(f_1..f_i)");
    auto* mcf_cmd = hs_cmd->add_subcommand("mcf", "MCF(f_1..f_i)");
    auto* mj_cmd = hs_cmd->add_subcommand("mj", "m_j(X) for j <= --j-max, or m_j(f) with --map and --j");
    for (auto* c : {hcs_cmd, hfs_cmd, mc_cmd, mcf_cmd, mj_cmd}) {
        c->add_option("--map", map_refs, "id, const:<j>, or map file (repeatable)");
        c->add_option("--image", image, "Image for id / const:<j>");
        c->add_option("--codomain", codomain, "Codomain for const:<j>");
    }
    mj_cmd->add_option("--j", j_value, "Single j for --map");

    // verify
    std::string suite;
    std::vector<std::string> fixture_overrides;
    std::size_t instances = 200, max_points = 6;
    auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
    verify_cmd->add_option("suite", suite, "paper-fixtures, random-small, or all")->required();
    verify_cmd->add_option("--fixture", fixture_overrides, "Replace a figure fixture: name=image-file");
    verify_cmd->add_option("--instances", instances, "Random instances")->check(CLI::PositiveNumber);
    verify_cmd->add_option("--max-points", max_points, "Largest random image")->check(CLI::Range(1, 9));

    // conjecture
    std::size_t max_x = 6, max_y = 3;
    auto* conj_cmd = app.add_subcommand("conjecture", "Search disconnected X against edgeless Y");
    conj_cmd->add_option("--max-x", max_x, "Largest domain")->check(CLI::Range(2, 12));
    conj_cmd->add_option("--max-y", max_y, "Largest codomain")->check(CLI::Range(2, 8));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    Out out{g.format == "json"};
    try {
        if (image_info_cmd->parsed()) {
            if (image.empty())
                throw InvalidInput("image info needs an image");
            return image_info(out, image);
        }
        if (image_build_cmd->parsed()) {
            auto text = io::image_to_json(*io::resolve_image(image).image).dump(2);
            if (output.empty())
                std::cout << text << '\n';
            else
                io::write_text_file(output, text);
            return kOk;
        }
        if (map_check_cmd->parsed()) {
            try {
                auto m = io::load_map_file(file);
                out.emit({{"file", file}, {"continuous", true}, {"points", m.map.size()}},
                         file + ": continuous (" + std::to_string(m.map.size()) + " points)");
                return kOk;
            } catch (const ContinuityError& e) {
                out.emit({{"file", file},
                          {"continuous", false},
                          {"edge", {e.edge_u, e.edge_v}},
                          {"images", {e.image_u, e.image_v}}},
                         e.what());
                return kFailure;
            }
        }
        if (map_apply_cmd->parsed()) {
            auto m = io::load_map_file(file).map;
            if (*point >= m.size())
                throw InvalidInput("point " + std::to_string(*point) + " is outside the domain");
            auto v = m(static_cast<PointIndex>(*point));
            auto coords = m.codomain()->point(v).coords;
            out.emit({{"point", *point}, {"value", v}, {"coords", coords}},
                     std::to_string(*point) + " -> " + std::to_string(v) + " " + to_string(m.codomain()->point(v)));
            return kOk;
        }
        if (maps_count_cmd->parsed() || maps_enum_cmd->parsed()) {
            auto x = io::resolve_image(image).image;
            auto y = codomain.empty() ? x : io::resolve_image(codomain).image;
            auto b = budget(g, {x->size(), y->size()});
            if (maps_count_cmd->parsed()) {
                auto c = count_continuous_maps(x, y, b);
                out.emit({{"count", c.count}, {"exhausted", c.exhausted}},
                         std::to_string(c.count) + (c.exhausted ? "" : "  (partial: budget exhausted)"));
                return c.exhausted ? kOk : kUsage;
            }
            if (limit)
                b.max_results = *limit;
            BudgetMeter meter(b);
            std::uint64_t n = 0;
            bool done = visit_continuous_maps(x, y, meter, [&](std::span<const PointIndex> row) {
                ++n;
                out.emit({{"assignment", std::vector<PointIndex>(row.begin(), row.end())}}, row_text(row));
                return true;
            });
            bool capped = limit && meter.results() > *limit;
            if (!out.json)
                std::cerr << n << " maps" << (done ? "" : capped ? " (limit reached)" : " (budget exhausted)") << '\n';
            return done || capped ? kOk : kUsage;
        }
        if (class_cmd->parsed() || are_cmd->parsed() || rigid_cmd->parsed() || contract_cmd->parsed()) {
            if (contract_cmd->parsed()) {
                auto x = io::resolve_image(image).image;
                auto a = is_contractible(x, budget(g, {x->size()}));
                Json j{{"contractible", to_string(a.decision)}};
                std::string text = std::string("contractible: ") + to_string(a.decision);
                if (a.witness) {
                    j["chain_length"] = a.witness->chain.size();
                    text += " (chain of " + std::to_string(a.witness->chain.size()) + " maps)";
                }
                out.emit(j, text);
                return a.decision == Decision::unknown ? kUsage : kOk;
            }
            if (rigid_cmd->parsed()) {
                auto f = map_refs.empty() ? DigitalMap::identity(io::resolve_image(image).image)
                                          : resolve_map(map_refs.front(), image, codomain);
                bool r = is_rigid_map(f);
                out.emit({{"rigid", r}, {"exact", true}}, std::string("rigid: ") + (r ? "true" : "false"));
                return kOk;
            }
            auto maps = resolve_maps(map_refs, image, codomain);
            auto b = budget(g, {maps[0].domain()->size(), maps[0].codomain()->size()});
            if (class_cmd->parsed()) {
                auto cls = homotopy_class(maps[0], b);
                out.emit({{"size", cls.size()}, {"complete", cls.complete()}},
                         "class size " + std::to_string(cls.size()) + (cls.complete() ? "" : " (truncated)"));
                return cls.complete() ? kOk : kUsage;
            }
            if (maps.size() != 2)
                throw InvalidInput("are-homotopic needs exactly two --map options");
            auto a = are_homotopic(maps[0], maps[1], b);
            Json j{{"homotopic", to_string(a.decision)}};
            std::string text = std::string("homotopic: ") + to_string(a.decision);
            if (a.witness) {
                Json chain = Json::array();
                for (auto& h : a.witness->chain) {
                    chain.push_back(std::vector<PointIndex>(h.assignment().begin(), h.assignment().end()));
                    text += "\n  " + row_text(h.assignment());
                }
                j["chain"] = chain;
            }
            out.emit(j, text);
            return a.decision == Decision::unknown ? kUsage : kOk;
        }
        if (cs_cmd->parsed() || f_cmd->parsed() || cfs_cmd->parsed()) {
            auto x = io::resolve_image(image).image;
            auto y = codomain.empty() ? x : io::resolve_image(codomain).image;
            auto b = budget(g, {x->size(), y->size()});
            auto single = [&](const Spectrum& s) {
                out.emit(spectrum_json(s), spectrum_text(s));
                return s.exact ? kOk : kUsage;
            };
            auto unite = [&](const SpectrumUnion& u) {
                Json j = spectrum_json(u.spectrum);
                Json per = Json::array();
                std::string text = spectrum_text(u.spectrum);
                for (auto& s : u.per_arity) {
                    per.push_back(spectrum_json(s));
                    text += "\n  i=" + std::to_string(*s.arity) + ": " + spectrum_text(s);
                }
                j["per_arity"] = per;
                j["closed"] = u.closed;
                if (u.stabilized_at) {
                    j["stabilized_at"] = *u.stabilized_at;
                    text += "\n  stabilized at i=" + std::to_string(*u.stabilized_at) +
                            (u.closed ? " (no new equalizers beyond)" : "");
                }
                out.emit(j, text);
                return u.spectrum.exact ? kOk : kUsage;
            };
            if (f_cmd->parsed())
                return single(fixed_point_spectrum(x, b));
            if (cs_cmd->parsed())
                return arity ? single(coincidence_spectrum(x, y, *arity, b))
                             : unite(coincidence_spectrum_union(x, y, g.i_max, b));
            return arity ? single(common_fixed_spectrum(x, *arity, b))
                         : unite(common_fixed_spectrum_union(x, g.i_max, b));
        }
        if (mj_cmd->parsed() && map_refs.empty()) {
            auto x = io::resolve_image(image).image;
            auto seq = self_coincidence_sequence(x, g.j_max, budget(g, {x->size()}));
            bool exact = true;
            for (auto& e : seq.entries) {
                exact = exact && e.exact;
                out.emit({{"j", e.j}, {"m", e.value}, {"exact", e.exact}},
                         "m_" + std::to_string(e.j) + " = " + std::to_string(e.value) + (e.exact ? "" : " (upper bound)"));
            }
            return exact ? kOk : kUsage;
        }
        if (hcs_cmd->parsed() || hfs_cmd->parsed() || mc_cmd->parsed() || mcf_cmd->parsed() || mj_cmd->parsed()) {
            auto maps = resolve_maps(map_refs, image, codomain);
            auto b = budget(g, {maps[0].domain()->size(), maps[0].codomain()->size()});
            if (hcs_cmd->parsed() || hfs_cmd->parsed()) {
                auto r = hcs_cmd->parsed() ? hcs(maps, b) : hfs(maps, b);
                Json j = spectrum_json(r.values);
                j["classes_complete"] = r.classes_complete;
                j["min"] = r.min_value;
                out.emit(j, spectrum_text(r.values) + "  min " + std::to_string(r.min_value) +
                                (r.classes_complete ? "" : "  (classes truncated)"));
                return r.values.exact ? kOk : kUsage;
            }
            MinimumResult m;
            if (mj_cmd->parsed()) {
                if (!j_value)
                    throw InvalidInput("mj with --map needs --j");
                m = m_j_of_map(maps[0], *j_value, b);
            } else {
                m = mc_cmd->parsed() ? mc(maps, b) : mcf(maps, b);
            }
            out.emit({{"value", m.value}, {"exact", m.exact}},
                     std::to_string(m.value) + (m.exact ? "" : "  (upper bound: budget exhausted)"));
            return m.exact ? kOk : kUsage;
        }
        if (verify_cmd->parsed()) {
            auto s = verify::parse_suite(suite);
            if (!s) {
                std::cerr << "unknown suite '" << suite << "' (expected paper-fixtures, random-small, all)\n";
                return kUsage;
            }
            auto config = run_config(g);
            config.random_instances = instances;
            config.max_points = max_points;
            for (const auto& o : fixture_overrides) {
                auto eq = o.find('=');
                if (eq == std::string::npos)
                    throw InvalidInput("--fixture expects name=image-file, got '" + o + "'");
                config.fixtures[o.substr(0, eq)] = io::resolve_image(o.substr(eq + 1)).image;
            }
            auto reports = verify::run_suite(*s, config);
            std::size_t failed = 0, skipped = 0;
            for (const auto& r : reports) {
                failed += r.verdict == verify::Verdict::fail;
                skipped += r.verdict == verify::Verdict::skipped;
                out.emit(r.to_json(), r.to_text());
            }
            if (!out.json)
                std::cout << reports.size() << " checks: " << reports.size() - failed - skipped << " passed, "
                          << failed << " failed, " << skipped << " skipped\n";
            return failed ? kFailure : kOk;
        }
        if (conj_cmd->parsed()) {
            auto r = verify::conjecture_search(max_x, max_y, g.i_max, run_config(g));
            if (out.json)
                std::cout << Json{{"preamble", r.preamble}}.dump() << '\n';
            else
                std::cout << "reduction: " << r.preamble << '\n';
            for (const auto& rep : r.reports)
                out.emit(rep.to_json(), rep.to_text());
            if (!out.json)
                std::cout << r.reports.size() << " instances, " << r.counterexamples << " counterexamples\n";
            return r.counterexamples ? kFailure : kOk;
        }
    } catch (const ContinuityError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const InvalidInput& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

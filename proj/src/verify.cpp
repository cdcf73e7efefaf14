#include "digitop/verify.hpp"
#include "digitop/builders.hpp"
#include "digitop/enumeration.hpp"
#include "digitop/errors.hpp"
#include "digitop/homotopy.hpp"
#include "digitop/homotopy_spectra.hpp"
#include "digitop/spectra.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <numeric>
#include <sstream>

namespace digitop::verify {

namespace {

using io::Json;

struct Outcome {
    Verdict verdict = Verdict::pass;
    Json detail;
    std::string note;
};

Outcome pass(std::string note = {}) { return {Verdict::pass, nullptr, std::move(note)}; }
Outcome fail(Json detail) { return {Verdict::fail, std::move(detail), {}}; }
Outcome skip(const std::string& why) { return {Verdict::skipped, why, {}}; }

template <class F>
VerificationReport timed(const char* id, const std::string& instance, const RunConfig& config, F&& body)
{
    auto t0 = std::chrono::steady_clock::now();
    Outcome o = body();
    VerificationReport r;
    r.check_id = id;
    r.instance = instance;
    r.verdict = o.verdict;
    r.detail = std::move(o.detail);
    r.note = std::move(o.note);
    r.seed = config.seed;
    if (!config.deterministic)
        r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

EnumerationBudget budget_for(std::initializer_list<std::size_t> sizes, const RunConfig& config)
{
    return default_budget(std::max(sizes), config);
}

Json values_json(const Spectrum& s) { return s.values; }

Json maps_json(const std::vector<DigitalMap>& maps)
{
    Json out = Json::array();
    for (const auto& f : maps)
        out.push_back(std::vector<PointIndex>(f.assignment().begin(), f.assignment().end()));
    return out;
}

Json pair_json(const ImageRef& x, const ImageRef& y)
{
    return {{"X", io::image_to_json(*x)}, {"Y", io::image_to_json(*y)}};
}

std::vector<std::size_t> range(std::size_t lo, std::size_t hi)
{
    std::vector<std::size_t> v(hi - lo + 1);
    std::iota(v.begin(), v.end(), lo);
    return v;
}

std::string note_of(const InclusionFinding& f)
{
    if (!f.strict)
        return {};
    return "strict inclusion " + to_string(f.shorter.values) + " < " + to_string(f.longer.values);
}

} // namespace

const char* to_string(Verdict v)
{
    switch (v) {
    case Verdict::pass:
        return "pass";
    case Verdict::fail:
        return "fail";
    case Verdict::skipped:
        break;
    }
    return "skipped";
}

Json VerificationReport::to_json() const
{
    Json j;
    j["check"] = check_id;
    j["instance"] = instance;
    j["verdict"] = to_string(verdict);
    j["elapsed_ms"] = elapsed_ms;
    j["seed"] = seed;
    if (verdict == Verdict::fail)
        j["counterexample"] = detail;
    else if (verdict == Verdict::skipped)
        j["reason"] = detail;
    if (!note.empty())
        j["note"] = note;
    return j;
}

std::string VerificationReport::to_text() const
{
    std::string v = verdict == Verdict::pass ? "PASS" : verdict == Verdict::fail ? "FAIL" : "SKIP";
    std::ostringstream out;
    out << v << "  " << check_id << "  " << instance;
    if (elapsed_ms > 0)
        out << "  (" << elapsed_ms << " ms)";
    if (!note.empty())
        out << "  note: " << note;
    if (verdict == Verdict::fail)
        out << "\n    counterexample: " << detail.dump();
    else if (verdict == Verdict::skipped)
        out << "  reason: " << (detail.is_string() ? detail.get<std::string>() : detail.dump());
    return out.str();
}

EnumerationBudget default_budget(std::size_t points, const RunConfig& config)
{
    if (config.budget)
        return *config.budget;
    EnumerationBudget b;
    if (points > 10) {
        b.max_nodes = 10'000'000;
        b.time_budget = std::chrono::seconds(60);
    }
    if (const char* env = std::getenv("DIGITOP_BUDGET_NODES")) {
        char* end = nullptr;
        auto n = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && n > 0)
            b.max_nodes = n;
    }
    return b;
}

std::optional<Suite> parse_suite(const std::string& name)
{
    if (name == "paper-fixtures")
        return Suite::paper_fixtures;
    if (name == "random-small")
        return Suite::random_small;
    if (name == "all")
        return Suite::all;
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Random instances

RandomImages::RandomImages(std::uint64_t seed) : rng_(seed) {}

std::uint64_t RandomImages::below(std::uint64_t n)
{
    if (n <= 1)
        return 0;
    const auto limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
    for (;;) {
        auto v = rng_();
        if (v < limit)
            return v % n;
    }
}

ImageRef RandomImages::graph(std::size_t points)
{
    ImageSpec spec;
    spec.dimension = 1;
    for (std::size_t i = 0; i < points; ++i)
        spec.points.push_back({{static_cast<std::int64_t>(2 * i)}});
    ExplicitAdjacency adj;
    for (PointIndex a = 0; a < points; ++a)
        for (PointIndex b = a + 1; b < points; ++b)
            if (below(2))
                adj.edges.emplace_back(a, b);
    spec.adjacency = std::move(adj);
    return DigitalImage::build(std::move(spec));
}

ImageRef RandomImages::lattice(std::size_t dimension, std::size_t max_points)
{
    std::size_t total = 1;
    for (std::size_t i = 0; i < dimension; ++i)
        total *= 3;
    std::vector<std::size_t> codes(total);
    std::iota(codes.begin(), codes.end(), std::size_t{0});
    for (std::size_t k = total; k > 1; --k)
        std::swap(codes[k - 1], codes[below(k)]);
    auto count = 1 + below(std::min(max_points, total));
    ImageSpec spec;
    spec.dimension = dimension;
    for (std::size_t k = 0; k < count; ++k) {
        Point p;
        auto c = codes[k];
        for (std::size_t i = 0; i < dimension; ++i) {
            p.coords.push_back(static_cast<std::int64_t>(c % 3));
            c /= 3;
        }
        spec.points.push_back(std::move(p));
    }
    spec.adjacency = CtAdjacency{static_cast<int>(1 + below(dimension))};
    return DigitalImage::build(std::move(spec));
}

ImageRef RandomImages::next(std::size_t max_points)
{
    if (below(2))
        return graph(1 + below(max_points));
    return lattice(1 + below(3), max_points);
}

DigitalMap RandomImages::map(const ImageRef& x, const ImageRef& y)
{
    auto all = enumerate_continuous_maps(x, y);
    return all.maps.at(below(all.maps.size()));
}

Isomorphism RandomImages::relabel(const ImageRef& x)
{
    std::vector<PointIndex> perm(x->size());
    std::iota(perm.begin(), perm.end(), PointIndex{0});
    for (std::size_t k = perm.size(); k > 1; --k)
        std::swap(perm[k - 1], perm[below(k)]);
    ImageSpec spec;
    spec.dimension = 1;
    spec.name = "relabelled";
    for (std::size_t i = 0; i < x->size(); ++i)
        spec.points.push_back({{static_cast<std::int64_t>(3 * i)}});
    ExplicitAdjacency adj;
    for (auto [a, b] : x->edges())
        adj.edges.emplace_back(perm[a], perm[b]);
    spec.adjacency = std::move(adj);
    // Points at 3i are already in canonical order, so perm stays valid.
    auto z = DigitalImage::build(std::move(spec));
    return Isomorphism::make(x, z, perm);
}

// ---------------------------------------------------------------------------
// Checks

namespace checks {

VerificationReport lemma_cardinality(const ImageRef& x, const ImageRef& y, const std::string& instance,
                                     const RunConfig& config)
{
    return timed("lemma-cardinality", instance, config, [&]() -> Outcome {
        auto u = coincidence_spectrum_union(x, y, config.i_max, budget_for({x->size(), y->size()}, config));
        for (const auto& s : u.per_arity) {
            bool ok = s.contains(x->size()) && (y->size() == 1 || s.contains(0));
            if (!ok && s.exact) {
                auto d = pair_json(x, y);
                d["i"] = *s.arity;
                d["spectrum"] = values_json(s);
                return fail(d);
            }
            if (!ok)
                return skip("budget exhausted at i=" + std::to_string(*s.arity));
        }
        return pass();
    });
}

VerificationReport lemma_full_range(const ImageRef& x, const ImageRef& y, const std::string& instance,
                                    const RunConfig& config)
{
    return timed("lemma-full-range", instance, config, [&]() -> Outcome {
        if (y->edge_count() == 0)
            return skip("precondition: codomain has no adjacent pair");
        auto s = coincidence_spectrum(x, y, 2, budget_for({x->size(), y->size()}, config));
        if (!s.exact)
            return skip("budget exhausted");
        if (s.values != range(0, x->size())) {
            auto d = pair_json(x, y);
            d["spectrum"] = values_json(s);
            return fail(d);
        }
        return pass();
    });
}

VerificationReport monotone(const ImageRef& x, const ImageRef& y, const std::string& instance,
                            const RunConfig& config)
{
    return timed("monotone", instance, config, [&]() -> Outcome {
        auto u = coincidence_spectrum_union(x, y, config.i_max, budget_for({x->size(), y->size()}, config));
        for (std::size_t k = 0; k + 1 < u.per_arity.size(); ++k) {
            const auto& a = u.per_arity[k];
            const auto& b = u.per_arity[k + 1];
            if (!a.exact || !b.exact)
                return skip("budget exhausted at i=" + std::to_string(*b.arity));
            if (!a.is_subset_of(b)) {
                auto d = pair_json(x, y);
                d["i"] = *a.arity;
                d["smaller"] = values_json(a);
                d["larger"] = values_json(b);
                return fail(d);
            }
        }
        return pass();
    });
}

VerificationReport fx_subset(const ImageRef& x, const std::string& instance, const RunConfig& config)
{
    return timed("fx-subset", instance, config, [&]() -> Outcome {
        auto budget = budget_for({x->size()}, config);
        auto f = fixed_point_spectrum(x, budget);
        auto cs = coincidence_spectrum(x, x, 2, budget);
        if (!f.exact || !cs.exact)
            return skip("budget exhausted");
        if (!f.is_subset_of(cs))
            return fail({{"X", io::image_to_json(*x)}, {"F", values_json(f)}, {"CS2", values_json(cs)}});
        return pass();
    });
}

VerificationReport totally_disconnected(const ImageRef& x, const ImageRef& y, const std::string& instance,
                                        const RunConfig& config)
{
    return timed("totally-disconnected", instance, config, [&]() -> Outcome {
        if (!is_connected(*x) || !is_totally_disconnected(*y) || y->size() < 2)
            return skip("precondition: X connected, Y totally disconnected with at least 2 points");
        auto u = coincidence_spectrum_union(x, y, config.i_max, budget_for({x->size(), y->size()}, config));
        const std::vector<std::size_t> want{0, x->size()};
        for (const auto& s : u.per_arity) {
            if (!s.exact)
                return skip("budget exhausted");
            if (s.values != want) {
                auto d = pair_json(x, y);
                d["i"] = *s.arity;
                d["spectrum"] = values_json(s);
                return fail(d);
            }
        }
        return pass();
    });
}

VerificationReport iso_invariance(const std::vector<DigitalMap>& maps, const Isomorphism& phi,
                                  const std::string& instance, const RunConfig& config)
{
    return timed("iso-invariance", instance, config, [&]() -> Outcome {
        std::vector<DigitalMap> conj;
        for (const auto& f : maps)
            conj.push_back(conjugate(f, phi));
        auto before = coincidence_set(maps).size();
        auto after = coincidence_set(conj).size();
        auto detail = [&] {
            return Json{{"X", io::image_to_json(*phi.domain())},
                        {"Z", io::image_to_json(*phi.codomain())},
                        {"phi", phi.forward()},
                        {"maps", maps_json(maps)}};
        };
        if (before != after) {
            auto d = detail();
            d["count"] = before;
            d["conjugated_count"] = after;
            return fail(d);
        }
        auto budget = budget_for({phi.domain()->size()}, config);
        auto fx = fixed_point_spectrum(phi.domain(), budget);
        auto fz = fixed_point_spectrum(phi.codomain(), budget);
        if (fx.exact && fz.exact && fx.values != fz.values) {
            auto d = detail();
            d["F_X"] = values_json(fx);
            d["F_Z"] = values_json(fz);
            return fail(d);
        }
        return pass();
    });
}

VerificationReport nested_coincidence(const std::vector<DigitalMap>& maps, const std::string& instance,
                                      const RunConfig& config)
{
    return timed("nested-coincidence", instance, config, [&]() -> Outcome {
        for (std::size_t k = 1; k < maps.size(); ++k) {
            std::span<const DigitalMap> all(maps);
            auto shorter = coincidence_set(all.first(k));
            auto longer = coincidence_set(all.first(k + 1));
            if (!longer.is_subset_of(shorter))
                return fail({{"X", io::image_to_json(*maps[0].domain())},
                             {"Y", io::image_to_json(*maps[0].codomain())},
                             {"maps", maps_json({maps.begin(), maps.begin() + static_cast<std::ptrdiff_t>(k + 1)})}});
        }
        return pass();
    });
}

VerificationReport hcs_monotone(const std::vector<DigitalMap>& maps, const std::string& instance,
                                const RunConfig& config)
{
    return timed("hcs-monotone", instance, config, [&]() -> Outcome {
        auto budget = budget_for({maps[0].domain()->size(), maps[0].codomain()->size()}, config);
        auto f = hcs_extension(maps, budget);
        if (!f.shorter.values.exact || !f.longer.values.exact)
            return skip("homotopy class or search truncated");
        if (!f.included) {
            auto d = pair_json(maps[0].domain(), maps[0].codomain());
            d["maps"] = maps_json(maps);
            d["HCS"] = values_json(f.shorter.values);
            d["HCS_extended"] = values_json(f.longer.values);
            return fail(d);
        }
        return pass(note_of(f));
    });
}

VerificationReport rigid_hcs(const ImageRef& x, const std::string& instance, const RunConfig& config)
{
    return timed("rigid-hcs", instance, config, [&]() -> Outcome {
        if (!is_rigid_image(x))
            return skip("precondition: image is not rigid");
        auto id = DigitalMap::identity(x);
        for (std::size_t i = 1; i <= config.i_max; ++i) {
            std::vector<DigitalMap> ids(i, id);
            auto r = hcs(ids, budget_for({x->size()}, config));
            if (!r.values.exact)
                return skip("budget exhausted");
            if (r.values.values != std::vector<std::size_t>{x->size()})
                return fail({{"X", io::image_to_json(*x)}, {"i", i}, {"HCS", values_json(r.values)}});
        }
        return pass();
    });
}

VerificationReport mj_monotone(const ImageRef& x, const std::string& instance, const RunConfig& config)
{
    return timed("mj-monotone", instance, config, [&]() -> Outcome {
        auto seq = self_coincidence_sequence(x, config.j_max, budget_for({x->size()}, config));
        Json values = Json::array();
        for (const auto& e : seq.entries)
            values.push_back(e.value);
        if (seq.entries.front().value != x->size() || !seq.non_increasing())
            return fail({{"X", io::image_to_json(*x)}, {"m", values}});
        for (const auto& e : seq.entries)
            if (!e.exact)
                return skip("budget exhausted at j=" + std::to_string(e.j));
        return pass();
    });
}

std::vector<VerificationReport> figure_examples(const RunConfig& config)
{
    auto fixture = [&](const std::string& name) {
        auto it = config.fixtures.find(name);
        return it != config.fixtures.end() ? it->second : builders::from_name(name);
    };
    auto cube = fixture("cube");
    auto sq = fixture("square4");
    auto tee = fixture("tee4");
    auto fig = fixture("figure1");
    auto budget = budget_for({cube->size()}, config);
    std::vector<VerificationReport> out;

    auto expect = [&](const char* instance, const Spectrum& s, const std::vector<std::size_t>& want,
                      const ImageRef& x) {
        out.push_back(timed("figure-examples", instance, config, [&]() -> Outcome {
            if (!s.exact)
                return skip("budget exhausted");
            if (s.values != want)
                return fail({{"X", io::image_to_json(*x)}, {"expected", want}, {"got", values_json(s)}});
            return pass();
        }));
    };
    expect("F(cube)", fixed_point_spectrum(cube, budget), {0, 1, 2, 3, 4, 5, 6, 8}, cube);
    expect("CS_2(cube,cube)", coincidence_spectrum(cube, cube, 2, budget), range(0, cube->size()), cube);
    expect("CS_2(cube,singleton)", coincidence_spectrum(cube, builders::singleton(), 2, budget), {cube->size()},
           cube);

    out.push_back(timed("figure-examples", "C(f,g,c) on square4->tee4", config, [&]() -> Outcome {
        auto point = [](const ImageRef& img, const char* label, PointIndex fallback) {
            auto i = img->index_of_label(label);
            return i ? *i : fallback;
        };
        std::vector<PointIndex> fa(sq->size()), ga(sq->size());
        if (sq->size() != 4 || tee->size() != 4)
            return fail({{"square4", io::image_to_json(*sq)}, {"tee4", io::image_to_json(*tee)}});
        auto x = [&](int k) { return point(sq, ("x" + std::to_string(k)).c_str(), static_cast<PointIndex>(k)); };
        auto y = [&](int k) { return point(tee, ("y" + std::to_string(k)).c_str(), static_cast<PointIndex>(k)); };
        fa[x(0)] = y(1), fa[x(1)] = y(0), fa[x(2)] = y(1), fa[x(3)] = y(2);
        ga[x(0)] = y(0), ga[x(1)] = y(1), ga[x(2)] = y(2), ga[x(3)] = y(1);
        try {
            auto f = DigitalMap::from_assignment(sq, tee, fa);
            auto g = DigitalMap::from_assignment(sq, tee, ga);
            auto c = DigitalMap::constant(sq, tee, y(3));
            auto set = coincidence_set(std::vector{f, g, c});
            if (!set.empty())
                return fail({{"maps", maps_json({f, g, c})}, {"coincidences", set.members()}});
        } catch (const ContinuityError& e) {
            return fail({{"error", e.what()}});
        }
        return pass();
    }));

    out.push_back(timed("figure-examples", "figure1 rigid", config, [&]() -> Outcome {
        if (!is_rigid_image(fig))
            return fail({{"X", io::image_to_json(*fig)}});
        return pass();
    }));
    for (const char* name : {"cube", "cube_minus_vertex"}) {
        auto x = fixture(name);
        out.push_back(timed("figure-examples", std::string(name) + " contractible", config, [&]() -> Outcome {
            auto a = is_contractible(x, budget_for({x->size()}, config));
            if (a.decision == Decision::unknown)
                return skip("budget exhausted");
            if (a.decision == Decision::no)
                return fail({{"X", io::image_to_json(*x)}});
            return pass();
        }));
    }
    return out;
}

} // namespace checks

// ---------------------------------------------------------------------------
// Suites

namespace {

struct Named {
    std::string name;
    ImageRef image;
};

std::vector<Named> fixture_family(const RunConfig& config)
{
    std::vector<std::string> names = {"singleton", "discrete:2", "discrete:3"};
    for (int b = 1; b <= 5; ++b)
        names.push_back("interval:0:" + std::to_string(b));
    for (int n = 1; n <= 6; ++n)
        names.push_back("cycle:" + std::to_string(n));
    for (const char* s : {"square4", "tee4", "cube_minus_vertex", "cube"})
        names.push_back(s);
    std::vector<Named> out;
    for (auto& n : names) {
        auto it = config.fixtures.find(n);
        out.push_back({n, it != config.fixtures.end() ? it->second : builders::from_name(n)});
    }
    return out;
}

void paper_fixture_reports(const RunConfig& config, std::vector<VerificationReport>& out)
{
    auto family = fixture_family(config);
    std::vector<Named> codomains;
    for (const char* n : {"singleton", "discrete:2", "interval:0:1", "cycle:3"})
        codomains.push_back({n, builders::from_name(n)});

    RandomImages rng(config.seed);
    for (const auto& [xn, x] : family) {
        auto targets = codomains;
        targets.push_back({xn, x});
        for (const auto& [yn, y] : targets) {
            auto inst = xn + " -> " + yn;
            out.push_back(checks::lemma_cardinality(x, y, inst, config));
            out.push_back(checks::monotone(x, y, inst, config));
            if (y->edge_count() > 0)
                out.push_back(checks::lemma_full_range(x, y, inst, config));
        }
        out.push_back(checks::fx_subset(x, xn, config));

        auto phi = rng.relabel(x);
        std::vector<DigitalMap> selfs;
        for (int k = 0; k < 3; ++k)
            selfs.push_back(rng.map(x, x));
        out.push_back(checks::iso_invariance(selfs, phi, xn, config));

        std::vector<DigitalMap> chain;
        for (std::size_t k = 0; k <= config.i_max; ++k)
            chain.push_back(rng.map(x, x));
        out.push_back(checks::nested_coincidence(chain, xn, config));
        out.push_back(checks::hcs_monotone({selfs[0], selfs[1]}, xn, config));
        out.push_back(checks::mj_monotone(x, xn, config));
        if (is_rigid_image(x))
            out.push_back(checks::rigid_hcs(x, xn, config));
    }

    auto fig = config.fixtures.count("figure1") ? config.fixtures.at("figure1") : builders::figure1();
    out.push_back(checks::rigid_hcs(fig, "figure1", config));
    out.push_back(checks::mj_monotone(fig, "figure1", config));

    std::vector<Named> connected;
    for (const auto& n : family)
        if (is_connected(*n.image) && n.image->size() <= 8)
            connected.push_back(n);
    connected.push_back({"figure1", fig});
    for (const auto& [xn, x] : connected)
        for (std::size_t m = 2; m <= 3; ++m)
            out.push_back(checks::totally_disconnected(x, builders::discrete(m),
                                                       xn + " -> discrete:" + std::to_string(m), config));

    auto figures = checks::figure_examples(config);
    out.insert(out.end(), figures.begin(), figures.end());
}

void random_reports(const RunConfig& config, std::vector<VerificationReport>& out)
{
    for (std::size_t k = 0; k < config.random_instances; ++k) {
        RandomImages rng(config.seed * 0x9E3779B97F4A7C15ULL + k);
        auto x = rng.next(config.max_points);
        auto y = rng.next(config.max_points);
        char buf[32];
        std::snprintf(buf, sizeof buf, "random#%03zu", k);
        const std::string inst = buf;

        out.push_back(checks::lemma_cardinality(x, y, inst, config));
        out.push_back(checks::monotone(x, y, inst, config));
        if (y->edge_count() > 0)
            out.push_back(checks::lemma_full_range(x, y, inst, config));
        out.push_back(checks::fx_subset(x, inst, config));
        if (is_connected(*x))
            out.push_back(checks::totally_disconnected(x, builders::discrete(2 + rng.below(2)), inst, config));

        std::vector<DigitalMap> selfs;
        for (int i = 0; i < 3; ++i)
            selfs.push_back(rng.map(x, x));
        out.push_back(checks::iso_invariance(selfs, rng.relabel(x), inst, config));

        std::vector<DigitalMap> maps;
        for (std::size_t i = 0; i <= config.i_max; ++i)
            maps.push_back(rng.map(x, y));
        out.push_back(checks::nested_coincidence(maps, inst, config));
        auto arity = 1 + rng.below(2);
        out.push_back(checks::hcs_monotone({maps.begin(), maps.begin() + static_cast<std::ptrdiff_t>(arity)}, inst,
                                           config));
        out.push_back(checks::mj_monotone(x, inst, config));
        if (is_rigid_image(x))
            out.push_back(checks::rigid_hcs(x, inst, config));
    }
}

} // namespace

std::vector<VerificationReport> run_suite(Suite suite, const RunConfig& config)
{
    if (config.i_max < 2)
        throw InvalidInput("i_max must be at least 2");
    if (config.j_max < 1)
        throw InvalidInput("j_max must be at least 1");
    std::vector<VerificationReport> out;
    if (suite != Suite::random_small)
        paper_fixture_reports(config, out);
    if (suite != Suite::paper_fixtures)
        random_reports(config, out);
    std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return std::tie(a.check_id, a.instance) < std::tie(b.check_id, b.instance);
    });
    return out;
}

// ---------------------------------------------------------------------------
// Conjecture

std::vector<std::size_t> subset_sums(const std::vector<std::size_t>& sizes)
{
    auto total = std::accumulate(sizes.begin(), sizes.end(), std::size_t{0});
    std::vector<bool> reach(total + 1, false);
    reach[0] = true;
    for (auto s : sizes)
        for (auto v = total; v >= s; --v)
            if (reach[v - s])
                reach[v] = true;
    std::vector<std::size_t> out;
    for (std::size_t v = 0; v <= total; ++v)
        if (reach[v])
            out.push_back(v);
    return out;
}

ImageRef disjoint_intervals(const std::vector<std::size_t>& sizes)
{
    ImageSpec spec;
    spec.dimension = 1;
    std::int64_t at = 0;
    for (auto s : sizes) {
        for (std::size_t k = 0; k < s; ++k)
            spec.points.push_back({{at++}});
        ++at; // gap keeps components apart
    }
    spec.adjacency = CtAdjacency{1};
    std::string name = "components";
    for (auto s : sizes)
        name += ":" + std::to_string(s);
    spec.name = name;
    return DigitalImage::build(std::move(spec));
}

ConjectureResult conjecture_search(std::size_t max_x_points, std::size_t max_y_points, std::size_t i_max,
                                   const RunConfig& config)
{
    if (i_max < 2)
        throw InvalidInput("conjecture search: i_max must be at least 2");
    ConjectureResult result;
    result.preamble =
        "X ranges over disjoint unions of intervals, one per multiset of component sizes with at least two "
        "components; Y = discrete(m). A map into an edgeless image is constant on each component of X, so "
        "CS_i(X,Y) depends only on the component sizes.";

    // Partitions of k into at least two parts, parts non-increasing.
    std::vector<std::vector<std::size_t>> partitions;
    std::vector<std::size_t> parts;
    std::function<void(std::size_t, std::size_t)> split = [&](std::size_t left, std::size_t cap) {
        if (left == 0) {
            if (parts.size() >= 2)
                partitions.push_back(parts);
            return;
        }
        for (auto p = std::min(left, cap); p >= 1; --p) {
            parts.push_back(p);
            split(left - p, p);
            parts.pop_back();
        }
    };
    for (std::size_t k = 2; k <= max_x_points; ++k)
        split(k, k);

    for (const auto& sizes : partitions) {
        auto x = disjoint_intervals(sizes);
        for (std::size_t m = 2; m <= max_y_points; ++m) {
            auto y = builders::discrete(m);
            auto report = timed("conjecture", x->name() + " -> discrete:" + std::to_string(m), config, [&]() -> Outcome {
                auto u = coincidence_spectrum_union(x, y, i_max, budget_for({x->size(), m}, config));
                const auto& cs2 = u.per_arity.front();
                for (const auto& s : u.per_arity) {
                    if (!s.exact)
                        return skip("budget exhausted");
                    if (s.values != cs2.values) {
                        auto d = pair_json(x, y);
                        d["CS2"] = values_json(cs2);
                        d["i"] = *s.arity;
                        d["CSi"] = values_json(s);
                        return fail(d);
                    }
                }
                auto sums = subset_sums(sizes);
                std::string note = "CS_2 = " + to_string(cs2) + " = subset sums of component sizes";
                if (cs2.values != sums) {
                    auto d = pair_json(x, y);
                    d["CS2"] = values_json(cs2);
                    d["subset_sums"] = sums;
                    d["component_sizes"] = sizes;
                    return fail(d);
                }
                return pass(note);
            });
            result.counterexamples += report.verdict == Verdict::fail;
            result.reports.push_back(std::move(report));
        }
    }
    return result;
}

} // namespace digitop::verify

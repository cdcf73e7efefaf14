// Acceptance run: one line per criterion, exit status 1 if any fails.

#include "digitop/builders.hpp"
#include "digitop/enumeration.hpp"
#include "digitop/homotopy.hpp"
#include "digitop/homotopy_spectra.hpp"
#include "digitop/spectra.hpp"
#include "digitop/verify.hpp"
#include "oracles.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

using namespace digitop;
using verify::Verdict;

namespace {

struct Outcome {
    bool ok;
    std::string detail;
};

int failures = 0;

void criterion(int id, const char* title, double limit_s, const std::function<Outcome()>& body)
{
    auto t0 = std::chrono::steady_clock::now();
    Outcome r;
    try {
        r = body();
    } catch (const std::exception& e) {
        r = {false, std::string("exception: ") + e.what()};
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (limit_s > 0 && s > limit_s) {
        r.ok = false;
        r.detail += " over time limit " + std::to_string(limit_s) + " s";
    }
    failures += !r.ok;
    std::printf("%s  %2d  %-32s %7.2fs  %s\n", r.ok ? "PASS" : "FAIL", id, title, s, r.detail.c_str());
    std::fflush(stdout);
}

std::vector<std::size_t> range(std::size_t lo, std::size_t hi)
{
    std::vector<std::size_t> v(hi - lo + 1);
    std::iota(v.begin(), v.end(), lo);
    return v;
}

std::string show(const std::vector<std::size_t>& v)
{
    std::string s = "{";
    for (std::size_t k = 0; k < v.size(); ++k)
        s += (k ? "," : "") + std::to_string(v[k]);
    return s + "}";
}

// Appends a mismatch description; returns false on mismatch.
bool expect(std::string& log, const std::string& what, const Spectrum& got, const std::vector<std::size_t>& want)
{
    if (got.exact && got.values == want)
        return true;
    log += what + " = " + to_string(got) + (got.exact ? "" : " (inexact)") + ", want " + show(want) + "; ";
    return false;
}

std::size_t count_failed(const std::vector<verify::VerificationReport>& reports, std::initializer_list<const char*> ids,
                         std::size_t* checked = nullptr, std::size_t* skipped = nullptr)
{
    std::size_t bad = 0;
    for (const auto& r : reports)
        for (auto id : ids)
            if (r.check_id == id) {
                bad += r.verdict == Verdict::fail;
                if (checked)
                    *checked += r.verdict == Verdict::pass;
                if (skipped)
                    *skipped += r.verdict == Verdict::skipped;
            }
    return bad;
}

std::vector<std::string> small_family()
{
    return {"singleton", "discrete:2", "discrete:3", "discrete:4", "interval:0:1", "interval:0:2", "interval:0:3",
            "cycle:2",   "cycle:3",    "cycle:4",    "square4",    "tee4"};
}

} // namespace

int main()
{
    const verify::RunConfig config;

    criterion(1, "rigidity of figure1", 5, [] {
        bool r = is_rigid_image(builders::figure1());
        return Outcome{r, std::string("rigid = ") + (r ? "true" : "false")};
    });

    criterion(2, "fixed point spectra of cycles", 60, [] {
        std::string log;
        bool ok = true;
        for (std::size_t n = 1; n <= 7; ++n) {
            std::vector<std::size_t> want;
            if (n == 1)
                want = {1};
            else if (n <= 4)
                want = range(0, n);
            else {
                want = range(0, n / 2 + 1);
                want.push_back(n);
            }
            ok &= expect(log, "F(C" + std::to_string(n) + ")", fixed_point_spectrum(builders::cycle(n)), want);
        }
        return Outcome{ok, ok ? "n = 1..7 match" : log};
    });

    criterion(3, "cube worked example", 600, [&] {
        auto cube = builders::cube();
        auto b = verify::default_budget(cube->size(), config);
        std::string log;
        bool ok = expect(log, "F(cube)", fixed_point_spectrum(cube, b), {0, 1, 2, 3, 4, 5, 6, 8});
        ok &= expect(log, "CS_2(cube,cube)", coincidence_spectrum(cube, cube, 2, b), range(0, 8));
        ok &= expect(log, "CS_2(cube,singleton)", coincidence_spectrum(cube, builders::singleton(), 2, b), {8});
        return Outcome{ok, ok ? "F = {0,1,2,3,4,5,6,8}, CS_2 = {0..8}, {8}" : log};
    });

    criterion(4, "full coincidence range", 0, [] {
        std::vector<std::string> xs{"singleton"};
        for (int n = 1; n <= 5; ++n)
            xs.push_back("interval:0:" + std::to_string(n));
        for (int n = 1; n <= 6; ++n)
            xs.push_back("cycle:" + std::to_string(n));
        std::vector<std::string> ys{"interval:0:1", "interval:0:3", "cycle:3", "cycle:5", "square4", "tee4", "cube"};
        std::string log;
        bool ok = true;
        std::size_t pairs = 0;
        for (const auto& xn : xs)
            for (const auto& yn : ys) {
                auto x = builders::from_name(xn);
                ok &= expect(log, "CS_2(" + xn + "," + yn + ")", coincidence_spectrum(x, builders::from_name(yn), 2),
                             range(0, x->size()));
                ++pairs;
            }
        return Outcome{ok, ok ? std::to_string(pairs) + " pairs" : log};
    });

    criterion(5, "totally disconnected codomain", 0, [] {
        std::vector<std::string> xs{"singleton", "square4", "tee4", "cube_minus_vertex", "cube"};
        for (int n = 1; n <= 7; ++n)
            xs.push_back("interval:0:" + std::to_string(n));
        for (int n = 1; n <= 8; ++n)
            xs.push_back("cycle:" + std::to_string(n));
        std::string log;
        bool ok = true;
        std::size_t cases = 0;
        for (const auto& xn : xs) {
            auto x = builders::from_name(xn);
            for (std::size_t m = 2; m <= 3; ++m) {
                auto u = coincidence_spectrum_union(x, builders::discrete(m), 4);
                for (const auto& s : u.per_arity) {
                    ok &= expect(log, "CS_" + std::to_string(*s.arity) + "(" + xn + ",D" + std::to_string(m) + ")", s,
                                 {0, x->size()});
                    ++cases;
                }
            }
        }
        return Outcome{ok, ok ? std::to_string(cases) + " cases, i = 2..4" : log};
    });

    std::vector<verify::VerificationReport> random;
    criterion(6, "monotonicity and inclusions", 0, [&] {
        auto c = config;
        c.max_points = 5;
        c.random_instances = 200;
        random = verify::run_suite(verify::Suite::random_small, c);
        std::size_t passed = 0, skipped = 0;
        auto bad =
            count_failed(random, {"monotone", "fx-subset", "nested-coincidence", "hcs-monotone"}, &passed, &skipped);
        return Outcome{bad == 0 && skipped == 0, std::to_string(passed) + " passed, " + std::to_string(bad) +
                                                     " failed, " + std::to_string(skipped) + " skipped"};
    });

    criterion(7, "isomorphism invariance", 0, [&] {
        std::size_t passed = 0, failed = 0;
        for (std::size_t k = 0; k < 100; ++k) {
            verify::RandomImages rng(config.seed * 7919 + k);
            auto x = rng.next(5);
            std::vector<DigitalMap> maps;
            for (int i = 0; i < 3; ++i)
                maps.push_back(rng.map(x, x));
            auto r = verify::checks::iso_invariance(maps, rng.relabel(x), "iso#" + std::to_string(k), config);
            passed += r.verdict == Verdict::pass;
            failed += r.verdict != Verdict::pass;
        }
        return Outcome{failed == 0, std::to_string(passed) + " of 100 instances"};
    });

    criterion(8, "self-coincidence numbers", 0, [&] {
        std::string log;
        bool ok = true;
        for (const auto& e : self_coincidence_sequence(builders::figure1(), 4).entries)
            if (!e.exact || e.value != 18) {
                ok = false;
                log += "m_" + std::to_string(e.j) + "(figure1) = " + std::to_string(e.value) + "; ";
            }
        for (std::size_t n = 4; n <= 6; ++n)
            for (const auto& e : self_coincidence_sequence(builders::cycle(n), 4).entries)
                if (e.j >= 2 && (!e.exact || e.value != 0)) {
                    ok = false;
                    log += "m_" + std::to_string(e.j) + "(C" + std::to_string(n) + ") = " + std::to_string(e.value) + "; ";
                }
        std::size_t passed = 0, skipped = 0;
        auto bad = count_failed(random, {"mj-monotone"}, &passed, &skipped);
        ok &= bad == 0;
        return Outcome{ok, log + "non-increasing on " + std::to_string(passed) + " random images (" +
                               std::to_string(bad) + " failed, " + std::to_string(skipped) + " inexact)"};
    });

    criterion(9, "homotopy coincidence spectra", 0, [] {
        std::string log;
        auto fig = builders::figure1();
        auto id = DigitalMap::identity(fig);
        std::vector<DigitalMap> ids{id, id};
        auto a = hcs(ids);
        bool ok = expect(log, "HCS(id,id) on figure1", a.values, {18});
        auto i3 = builders::interval(0, 3);
        auto c = DigitalMap::constant(i3, i3, 0);
        std::vector<DigitalMap> cs{c, c};
        ok &= expect(log, "HCS(c,c) on [0,3]", hcs(cs).values, range(0, 4));
        return Outcome{ok, ok ? "{18} and {0,1,2,3,4}" : log};
    });

    criterion(10, "conjecture search", 60, [&] {
        auto r = verify::conjecture_search(6, 3, 4, config);
        std::size_t with_sums = 0;
        for (const auto& rep : r.reports)
            with_sums += rep.verdict == Verdict::pass && rep.note.find("subset sums") != std::string::npos;
        bool ok = r.counterexamples == 0 && with_sums == r.reports.size() && !r.reports.empty();
        return Outcome{ok, std::to_string(r.reports.size()) + " instances, " + std::to_string(r.counterexamples) +
                               " counterexamples, CS_2 = subset sums on " + std::to_string(with_sums)};
    });

    criterion(11, "oracle equivalence", 0, [] {
        std::size_t pairs = 0, discrepancies = 0;
        std::string log;
        for (const auto& xn : small_family())
            for (const auto& yn : small_family()) {
                auto x = builders::from_name(xn);
                auto y = builders::from_name(yn);
                ++pairs;
                auto brute = oracle::all_maps(*x, *y);
                auto table = enumerate_continuous_maps(x, y).maps;
                table.sort_unique();
                std::vector<oracle::Row> got;
                for (std::size_t r = 0; r < table.size(); ++r)
                    got.emplace_back(table.row(r).begin(), table.row(r).end());
                if (got != brute) {
                    ++discrepancies;
                    log += "maps " + xn + "->" + yn + "; ";
                }

                // Components of the full one-step graph.
                std::vector<std::size_t> comp(brute.size());
                std::iota(comp.begin(), comp.end(), 0);
                std::function<std::size_t(std::size_t)> find = [&](std::size_t a) {
                    return comp[a] == a ? a : comp[a] = find(comp[a]);
                };
                for (std::size_t a = 0; a < brute.size(); ++a)
                    for (std::size_t b = a + 1; b < brute.size(); ++b)
                        if (oracle::one_step(*y, brute[a], brute[b]))
                            comp[find(a)] = find(b);
                for (std::size_t a = 0; a < brute.size(); ++a) {
                    std::vector<oracle::Row> want;
                    for (std::size_t b = 0; b < brute.size(); ++b)
                        if (find(a) == find(b))
                            want.push_back(brute[b]);
                    auto cls = homotopy_class(DigitalMap::from_assignment(x, y, brute[a]));
                    std::vector<oracle::Row> have;
                    for (std::size_t k = 0; k < cls.size(); ++k)
                        have.emplace_back(cls.rows().row(k).begin(), cls.rows().row(k).end());
                    std::sort(have.begin(), have.end());
                    if (!cls.complete() || have != want) {
                        ++discrepancies;
                        log += "class in " + xn + "->" + yn + "; ";
                        break;
                    }
                }

                auto cs = coincidence_spectrum(x, y, 2);
                auto want = oracle::cs(*x, *y, 2);
                if (!cs.exact || cs.values != std::vector<std::size_t>(want.begin(), want.end())) {
                    ++discrepancies;
                    log += "CS_2 " + xn + "->" + yn + "; ";
                }
            }
        return Outcome{discrepancies == 0,
                       log + std::to_string(pairs) + " pairs, " + std::to_string(discrepancies) + " discrepancies"};
    });

    std::printf("%s\n", failures ? "acceptance: FAILED" : "acceptance: all criteria pass");
    return failures ? 1 : 0;
}

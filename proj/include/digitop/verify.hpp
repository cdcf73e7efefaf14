#pragma once

#include "digitop/budget.hpp"
#include "digitop/image.hpp"
#include "digitop/io.hpp"
#include "digitop/isomorphism.hpp"
#include "digitop/map.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace digitop::verify {

enum class Verdict { pass, fail, skipped };

const char* to_string(Verdict v);

struct VerificationReport {
    std::string check_id;
    std::string instance;
    Verdict verdict = Verdict::pass;
    /// Failure: the serialized counterexample. Skip: the reason.
    io::Json detail;
    /// Free-form observations (e.g. a strict inclusion).
    std::string note;
    double elapsed_ms = 0;
    std::uint64_t seed = 0;

    io::Json to_json() const;
    std::string to_text() const;
};

struct RunConfig {
    /// Overrides the size-based default when set.
    std::optional<EnumerationBudget> budget;
    std::size_t i_max = 3;
    std::size_t j_max = 4;
    std::uint64_t seed = 1;
    bool deterministic = true;
    std::size_t random_instances = 200;
    std::size_t max_points = 6;
    /// Replaces a named figure fixture ("cube", "square4", "tee4", "figure1").
    std::map<std::string, ImageRef> fixtures;
};

/// Unlimited when every image has at most 10 points, else 10^7 nodes and
/// 60 s. DIGITOP_BUDGET_NODES (decimal) replaces the node limit.
EnumerationBudget default_budget(std::size_t points, const RunConfig& config);

enum class Suite { paper_fixtures, random_small, all };

std::optional<Suite> parse_suite(const std::string& name);

/// Reports sorted by check id, then instance.
std::vector<VerificationReport> run_suite(Suite suite, const RunConfig& config);

/// Individual checks, exposed for tests and the acceptance binary.
namespace checks {

VerificationReport lemma_cardinality(const ImageRef& x, const ImageRef& y, const std::string& instance,
                                     const RunConfig& config);
VerificationReport lemma_full_range(const ImageRef& x, const ImageRef& y, const std::string& instance,
                                    const RunConfig& config);
VerificationReport monotone(const ImageRef& x, const ImageRef& y, const std::string& instance,
                            const RunConfig& config);
VerificationReport fx_subset(const ImageRef& x, const std::string& instance, const RunConfig& config);
VerificationReport totally_disconnected(const ImageRef& x, const ImageRef& y, const std::string& instance,
                                        const RunConfig& config);
/// #C of maps and of their conjugates by phi : X -> Z, plus F(X) = F(Z).
VerificationReport iso_invariance(const std::vector<DigitalMap>& maps, const Isomorphism& phi,
                                  const std::string& instance, const RunConfig& config);
VerificationReport nested_coincidence(const std::vector<DigitalMap>& maps, const std::string& instance,
                                      const RunConfig& config);
VerificationReport hcs_monotone(const std::vector<DigitalMap>& maps, const std::string& instance,
                                const RunConfig& config);
VerificationReport rigid_hcs(const ImageRef& x, const std::string& instance, const RunConfig& config);
VerificationReport mj_monotone(const ImageRef& x, const std::string& instance, const RunConfig& config);
/// The worked examples, evaluated on the given (possibly replaced) figures.
std::vector<VerificationReport> figure_examples(const RunConfig& config);

} // namespace checks

struct ConjectureInstance {
    std::vector<std::size_t> component_sizes; ///< non-increasing
    std::size_t codomain_points = 0;
};

struct ConjectureResult {
    /// The reduction used, stated once ahead of the reports.
    std::string preamble;
    std::vector<VerificationReport> reports;
    std::size_t counterexamples = 0;
};

/// Every disconnected X with at most max_x_points points, up to component
/// sizes, against discrete(m) for 2 <= m <= max_y_points.
ConjectureResult conjecture_search(std::size_t max_x_points, std::size_t max_y_points, std::size_t i_max,
                                   const RunConfig& config);

/// {sum of sizes over a subset of components}.
std::vector<std::size_t> subset_sums(const std::vector<std::size_t>& sizes);

/// Disjoint union of intervals with the given sizes, spaced apart on Z.
ImageRef disjoint_intervals(const std::vector<std::size_t>& sizes);

/// Seeded instance generator: labeled graphs with edge probability 1/2 and
/// c_t images on subsets of [0,2]^n, n <= 3, each with probability 1/2.
class RandomImages {
public:
    explicit RandomImages(std::uint64_t seed);
    ImageRef next(std::size_t max_points);
    ImageRef graph(std::size_t points);
    ImageRef lattice(std::size_t dimension, std::size_t max_points);
    /// Uniform in [0, n), by rejection so results do not depend on the
    /// standard library's distributions.
    std::uint64_t below(std::uint64_t n);
    /// A uniformly chosen continuous map x -> y (all maps are enumerated).
    DigitalMap map(const ImageRef& x, const ImageRef& y);
    /// A random relabelling of x as an explicit image on Z, with the
    /// isomorphism onto it.
    Isomorphism relabel(const ImageRef& x);

private:
    std::mt19937_64 rng_;
};

} // namespace digitop::verify

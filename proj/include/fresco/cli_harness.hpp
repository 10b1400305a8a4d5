#ifndef FRESCO_CLI_HARNESS_HPP
#define FRESCO_CLI_HARNESS_HPP

#include <fresco/io.hpp>

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace fresco
{

struct SuiteConfig {
    std::uint64_t seed = 1;
    int cases = 200;
    int rank_max = 6;
    int m_max = 2;
    std::vector<Rational> alpha_pool{Rational(1, 2), Rational(1, 3), Rational(2, 3), Rational(1)};
    int value_dim_max = 2;
    int log_bound_max = 2;
    int cert_degree = 40;
    int guard = default_guard;
    std::vector<std::string> properties; // empty: all
};

struct Counterexample {
    std::string property;
    std::uint64_t seed = 0; // replays the case with the same config
    std::string detail;
    Json inputs;
};

struct PropertyResult {
    std::string name;
    int passed = 0;
    int failed = 0;
    int retries = 0; // truncation instabilities and exhausted guards, re-drawn
    int skipped = 0; // instance outside the property's hypotheses
};

struct Report {
    std::string title;
    std::vector<PropertyResult> properties;
    std::vector<Counterexample> counterexamples;
    double wall_seconds = 0;

    bool ok() const;
    const PropertyResult *find(const std::string &name) const;
    Json to_json() const;
    std::string to_text() const;
};

/// Names accepted in SuiteConfig::properties, in execution order.
const std::vector<std::string> &property_names();

struct RandomFresco {
    XiElement generator;
    SubModule module;
    int redraws = 0;
};

/// Seed of case i of a property: replaying it reproduces the instance.
std::uint64_t case_seed(std::uint64_t suite_seed, const std::string &property, int index);

/// Sparse random element, re-drawn until B[a]x has rank in [1, rank_max]
/// and its invariants are readable at the configured degree.
RandomFresco random_fresco(std::uint64_t seed, const SuiteConfig &cfg);
/// Random module generated by 2 or 3 sparse elements, with nilpotent order
/// at least min_order.
SubModule random_module(std::uint64_t seed, const SuiteConfig &cfg, int min_order = 1,
                        std::vector<XiElement> *gens = nullptr);

Report run_suite(const SuiteConfig &cfg);
/// Re-runs one case from the seed recorded in a counterexample.
Report replay_case(const std::string &property, std::uint64_t seed, const SuiteConfig &cfg);

/// Exact checks of the worked example on the theme with Bernstein
/// polynomial (x+1)^2: one property per item, never throws on mismatch.
Report run_registry(int degree = 40);
/// run_registry, throwing RegistryMismatch with every differing item.
Report reproduce_s5(int degree = 40);

} // namespace fresco

#endif

#ifndef FFCHAIN_EXPERIMENTS_HPP
#define FFCHAIN_EXPERIMENTS_HPP

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "ffchain/field.hpp"
#include "ffchain/poly.hpp"

namespace ffchain {

enum class SurveyMode { exhaustive, sampled };

/// Settings for one survey run. Sampled mode draws basis tuples from
/// per-record streams derived from (seed, record index), so output is
/// reproducible and independent of execution order.
struct ExperimentConfig {
    std::uint32_t p = 2;
    unsigned n = 0;
    SurveyMode mode = SurveyMode::exhaustive;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    unsigned beta = 2;
    std::uint64_t guard = kDefaultGuard;
    std::string out;            // empty = stdout
    std::string format = "csv"; // csv or json
};

/// Cycle statistics of one ordered basis pair. mean_num/mean_den is the exact
/// reduced mean cycle length (p^n - p over the number of cycles).
struct PairRecord {
    std::uint64_t f1 = 0;
    std::uint64_t f2 = 0;
    std::uint64_t num_cycles = 0;
    std::uint64_t min_len = 0;
    std::uint64_t max_len = 0;
    std::uint64_t mean_num = 0;
    std::uint64_t mean_den = 1;
    bool spanning = false;
};

/// Loop-length histogram of one ordered basis schedule (beta >= 3): every
/// non-constant start contributes the length of its closed loop.
struct LoopSurveyRecord {
    std::vector<std::uint64_t> bases;
    std::map<std::uint64_t, std::uint64_t> histogram; // length -> number of starts
    std::uint64_t min_len = 0;
    std::uint64_t max_len = 0;
    std::uint64_t num_loops = 0; // distinct loops (orbits)
    bool achieves_beta = false;  // some loop has length exactly beta
};

/// Exact spanning-cycle count over all ordered pairs of degree-n irreducibles.
struct SpanningCensus {
    struct Entry {
        std::uint64_t f1, f2;
        bool spanning;
    };
    std::uint64_t pairs = 0;
    std::uint64_t spanning = 0;
    std::vector<Entry> table;
};

std::vector<PairRecord> run_pair_survey(const ExperimentConfig& cfg);
std::vector<LoopSurveyRecord> run_loop_survey(const ExperimentConfig& cfg);
SpanningCensus spanning_census(Prime p, unsigned n, std::uint64_t guard = kDefaultGuard);

/// Renders num/den to 6 decimal places, half-up, without float drift.
std::string format_mean(std::uint64_t num, std::uint64_t den);

void write_pair_survey_csv(std::ostream& out, const ExperimentConfig& cfg,
                           const std::vector<PairRecord>& records);
void write_loop_survey_csv(std::ostream& out, const ExperimentConfig& cfg,
                           const std::vector<LoopSurveyRecord>& records);
void write_census_csv(std::ostream& out, std::uint32_t p, unsigned n, const SpanningCensus& census);

nlohmann::ordered_json to_json(const ExperimentConfig& cfg, const std::vector<PairRecord>& records);
nlohmann::ordered_json to_json(const ExperimentConfig& cfg,
                               const std::vector<LoopSurveyRecord>& records);
nlohmann::ordered_json to_json(std::uint32_t p, unsigned n, const SpanningCensus& census);

/// "key = value" config files mirroring the survey CLI flags; '#' starts a
/// comment. Unknown keys are rejected.
ExperimentConfig parse_config_file(std::istream& in);

} // namespace ffchain

#endif // FFCHAIN_EXPERIMENTS_HPP

#include "ffchain/experiments.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include "ffchain/chain.hpp"

namespace ffchain {

namespace {

PairRecord record_for_pair(const IrreduciblePoly& f1, const IrreduciblePoly& f2,
                           std::uint64_t guard) {
    const CyclePartition part = partition(f1, f2, guard);
    PairRecord rec;
    rec.f1 = f1.index();
    rec.f2 = f2.index();
    rec.num_cycles = part.cycles.size();
    rec.min_len = part.cycles.front().length();
    rec.max_len = rec.min_len;
    for (const auto& c : part.cycles) {
        rec.min_len = std::min(rec.min_len, c.length());
        rec.max_len = std::max(rec.max_len, c.length());
    }
    rec.mean_num = part.covered();
    rec.mean_den = rec.num_cycles;
    const std::uint64_t g = std::gcd(rec.mean_num, rec.mean_den);
    rec.mean_num /= g;
    rec.mean_den /= g;
    rec.spanning = rec.num_cycles == 1;
    return rec;
}

void require_survey_config(const ExperimentConfig& cfg, const char* who) {
    if (cfg.n == 0) throw std::invalid_argument(std::string(who) + ": n must be >= 1");
    if (cfg.mode == SurveyMode::sampled && cfg.samples == 0)
        throw std::invalid_argument(std::string(who) + ": sampled mode needs samples >= 1");
}

} // namespace

std::vector<PairRecord> run_pair_survey(const ExperimentConfig& cfg) {
    require_survey_config(cfg, "run_pair_survey");
    const Prime p(cfg.p);

    std::vector<PairRecord> records;
    if (cfg.mode == SurveyMode::exhaustive) {
        const std::uint64_t m = count_irreducibles(p, cfg.n);
        if (m * m > cfg.guard)
            throw std::length_error("run_pair_survey: " + std::to_string(m * m) +
                                    " ordered pairs exceed the work guard");
        const auto irreducibles = enumerate_irreducibles(p, cfg.n, cfg.guard);
        for (const auto& f1 : irreducibles) {
            for (const auto& f2 : irreducibles) {
                if (f1 == f2) continue;
                records.push_back(record_for_pair(f1, f2, cfg.guard));
            }
        }
    } else {
        for (std::uint64_t i = 0; i < cfg.samples; ++i) {
            SeededRng rng = SeededRng::derived(cfg.seed, i);
            const IrreduciblePoly f1 = random_irreducible(p, cfg.n, rng);
            IrreduciblePoly f2 = random_irreducible(p, cfg.n, rng);
            while (f2 == f1) f2 = random_irreducible(p, cfg.n, rng); // resample collisions
            records.push_back(record_for_pair(f1, f2, cfg.guard));
        }
    }
    return records;
}

std::vector<LoopSurveyRecord> run_loop_survey(const ExperimentConfig& cfg) {
    require_survey_config(cfg, "run_loop_survey");
    if (cfg.beta < 3)
        throw std::invalid_argument("run_loop_survey: beta must be >= 3 (pairs go to run_pair_survey)");
    const Prime p(cfg.p);
    const std::uint64_t m = count_irreducibles(p, cfg.n);
    if (m < cfg.beta)
        throw std::invalid_argument("run_loop_survey: beta exceeds the number of degree-n irreducibles");

    // Histogram via orbits of the (element, phase) state map: all phase-0
    // states of an orbit share its loop length, so one orbit walk accounts for
    // every start element on it at once.
    const auto survey_schedule = [&](const std::vector<IrreduciblePoly>& bases) {
        LoopSurveyRecord rec;
        for (const auto& f : bases) rec.bases.push_back(f.index());
        const std::uint64_t q = field_order(cfg.p, cfg.n);
        const std::size_t beta = bases.size();
        std::vector<std::vector<std::uint64_t>> tables;
        for (const auto& f : bases) tables.push_back(inverse_table(f, cfg.guard));

        std::vector<bool> visited(q * beta, false);
        for (std::uint64_t start = cfg.p; start < q; ++start) {
            if (visited[start * beta]) continue;
            std::uint64_t cur = start;
            std::size_t phase = 0;
            std::uint64_t length = 0, phase0_states = 0;
            do {
                visited[cur * beta + phase] = true;
                if (phase == 0) ++phase0_states;
                cur = tables[phase][cur];
                phase = (phase + 1) % beta;
                ++length;
            } while (!(cur == start && phase == 0));
            rec.histogram[length] += phase0_states;
            rec.num_loops += 1;
        }
        rec.min_len = rec.histogram.begin()->first;
        rec.max_len = rec.histogram.rbegin()->first;
        rec.achieves_beta = rec.histogram.count(beta) > 0;
        return rec;
    };

    std::vector<LoopSurveyRecord> records;
    if (cfg.mode == SurveyMode::exhaustive) {
        std::uint64_t tuples = 1;
        for (unsigned i = 0; i < cfg.beta; ++i) tuples *= m - i;
        if (tuples > cfg.guard)
            throw std::length_error("run_loop_survey: " + std::to_string(tuples) +
                                    " ordered schedules exceed the work guard");
        const auto irreducibles = enumerate_irreducibles(p, cfg.n, cfg.guard);

        // Ascending odometer over ordered tuples of distinct bases.
        std::vector<std::size_t> pick(cfg.beta, 0);
        const auto distinct = [&] {
            for (unsigned i = 0; i < cfg.beta; ++i) {
                for (unsigned j = i + 1; j < cfg.beta; ++j) {
                    if (pick[i] == pick[j]) return false;
                }
            }
            return true;
        };
        while (true) {
            if (distinct()) {
                std::vector<IrreduciblePoly> bases;
                for (unsigned i = 0; i < cfg.beta; ++i) bases.push_back(irreducibles[pick[i]]);
                records.push_back(survey_schedule(bases));
            }
            unsigned pos = cfg.beta;
            while (pos > 0 && pick[pos - 1] + 1 == irreducibles.size()) pick[--pos] = 0;
            if (pos == 0) break;
            ++pick[pos - 1];
        }
    } else {
        for (std::uint64_t i = 0; i < cfg.samples; ++i) {
            SeededRng rng = SeededRng::derived(cfg.seed, i);
            std::vector<IrreduciblePoly> bases;
            while (bases.size() < cfg.beta) {
                IrreduciblePoly f = random_irreducible(p, cfg.n, rng);
                if (std::find(bases.begin(), bases.end(), f) == bases.end())
                    bases.push_back(std::move(f));
            }
            records.push_back(survey_schedule(bases));
        }
    }
    return records;
}

SpanningCensus spanning_census(Prime p, unsigned n, std::uint64_t guard) {
    const std::uint64_t m = count_irreducibles(p, n);
    if (m * m > guard)
        throw std::length_error("spanning_census: ordered pair count exceeds the work guard");
    const auto irreducibles = enumerate_irreducibles(p, n, guard);

    SpanningCensus census;
    for (const auto& f1 : irreducibles) {
        for (const auto& f2 : irreducibles) {
            if (f1 == f2) continue;
            const CyclePartition part = partition(f1, f2, guard);
            const bool spanning = part.cycles.size() == 1;
            census.table.push_back({f1.index(), f2.index(), spanning});
            census.pairs += 1;
            if (spanning) census.spanning += 1;
        }
    }
    return census;
}

std::string format_mean(std::uint64_t num, std::uint64_t den) {
    if (den == 0) throw std::invalid_argument("format_mean: zero denominator");
    const std::uint64_t scaled = (num * 1000000ull + den / 2) / den; // half-up
    std::string digits = std::to_string(scaled % 1000000ull);
    digits.insert(0, 6 - digits.size(), '0');
    return std::to_string(scaled / 1000000ull) + "." + digits;
}

namespace {

const char* mode_name(SurveyMode mode) {
    return mode == SurveyMode::exhaustive ? "exhaustive" : "sampled";
}

} // namespace

void write_pair_survey_csv(std::ostream& out, const ExperimentConfig& cfg,
                           const std::vector<PairRecord>& records) {
    out << "p,n,f1,f2,num_cycles,min_len,max_len,mean_len,spanning\n";
    for (const auto& r : records) {
        out << cfg.p << ',' << cfg.n << ",#" << r.f1 << ",#" << r.f2 << ',' << r.num_cycles << ','
            << r.min_len << ',' << r.max_len << ',' << format_mean(r.mean_num, r.mean_den) << ','
            << (r.spanning ? "true" : "false") << '\n';
    }
}

void write_loop_survey_csv(std::ostream& out, const ExperimentConfig& cfg,
                           const std::vector<LoopSurveyRecord>& records) {
    out << "p,n,beta,bases,num_loops,min_len,max_len,achieves_beta,histogram\n";
    for (const auto& r : records) {
        out << cfg.p << ',' << cfg.n << ',' << cfg.beta << ',';
        for (std::size_t i = 0; i < r.bases.size(); ++i) {
            if (i > 0) out << ';';
            out << '#' << r.bases[i];
        }
        out << ',' << r.num_loops << ',' << r.min_len << ',' << r.max_len << ','
            << (r.achieves_beta ? "true" : "false") << ',';
        bool first = true;
        for (const auto& [len, count] : r.histogram) {
            if (!first) out << ';';
            out << len << ':' << count;
            first = false;
        }
        out << '\n';
    }
}

void write_census_csv(std::ostream& out, std::uint32_t p, unsigned n,
                      const SpanningCensus& census) {
    out << "p,n,f1,f2,spanning\n";
    for (const auto& e : census.table) {
        out << p << ',' << n << ",#" << e.f1 << ",#" << e.f2 << ','
            << (e.spanning ? "true" : "false") << '\n';
    }
}

nlohmann::ordered_json to_json(const ExperimentConfig& cfg, const std::vector<PairRecord>& records) {
    nlohmann::ordered_json j;
    j["p"] = cfg.p;
    j["n"] = cfg.n;
    j["mode"] = mode_name(cfg.mode);
    if (cfg.mode == SurveyMode::sampled) {
        j["samples"] = cfg.samples;
        j["seed"] = cfg.seed;
    }
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : records) {
        arr.push_back(nlohmann::ordered_json{{"f1", "#" + std::to_string(r.f1)},
                                             {"f2", "#" + std::to_string(r.f2)},
                                             {"num_cycles", r.num_cycles},
                                             {"min_len", r.min_len},
                                             {"max_len", r.max_len},
                                             {"mean_len", format_mean(r.mean_num, r.mean_den)},
                                             {"spanning", r.spanning}});
    }
    j["records"] = std::move(arr);
    return j;
}

nlohmann::ordered_json to_json(const ExperimentConfig& cfg,
                               const std::vector<LoopSurveyRecord>& records) {
    nlohmann::ordered_json j;
    j["p"] = cfg.p;
    j["n"] = cfg.n;
    j["beta"] = cfg.beta;
    j["mode"] = mode_name(cfg.mode);
    if (cfg.mode == SurveyMode::sampled) {
        j["samples"] = cfg.samples;
        j["seed"] = cfg.seed;
    }
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : records) {
        nlohmann::ordered_json bases = nlohmann::ordered_json::array();
        for (std::uint64_t b : r.bases) bases.push_back("#" + std::to_string(b));
        nlohmann::ordered_json hist = nlohmann::ordered_json::object();
        for (const auto& [len, count] : r.histogram) hist[std::to_string(len)] = count;
        arr.push_back(nlohmann::ordered_json{{"bases", std::move(bases)},
                                             {"num_loops", r.num_loops},
                                             {"min_len", r.min_len},
                                             {"max_len", r.max_len},
                                             {"achieves_beta", r.achieves_beta},
                                             {"histogram", std::move(hist)}});
    }
    j["records"] = std::move(arr);
    return j;
}

nlohmann::ordered_json to_json(std::uint32_t p, unsigned n, const SpanningCensus& census) {
    nlohmann::ordered_json j;
    j["p"] = p;
    j["n"] = n;
    j["pairs"] = census.pairs;
    j["spanning"] = census.spanning;
    j["fraction"] = format_mean(census.spanning, census.pairs == 0 ? 1 : census.pairs);
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& e : census.table) {
        arr.push_back(nlohmann::ordered_json{{"f1", "#" + std::to_string(e.f1)},
                                             {"f2", "#" + std::to_string(e.f2)},
                                             {"spanning", e.spanning}});
    }
    j["table"] = std::move(arr);
    return j;
}

ExperimentConfig parse_config_file(std::istream& in) {
    ExperimentConfig cfg;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const auto strip = [](std::string s) {
            const auto b = s.find_first_not_of(" \t\r");
            if (b == std::string::npos) return std::string();
            const auto e = s.find_last_not_of(" \t\r");
            return s.substr(b, e - b + 1);
        };
        if (strip(line).empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config line " + std::to_string(lineno) +
                                        ": expected key = value");
        const std::string key = strip(line.substr(0, eq));
        const std::string value = strip(line.substr(eq + 1));
        const auto to_u64 = [&](const std::string& v) {
            std::uint64_t out{};
            const auto [end, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
            if (ec != std::errc() || end != v.data() + v.size())
                throw std::invalid_argument("config line " + std::to_string(lineno) +
                                            ": bad number \"" + v + "\" for " + key);
            return out;
        };
        if (key == "p") cfg.p = static_cast<std::uint32_t>(to_u64(value));
        else if (key == "n") cfg.n = static_cast<unsigned>(to_u64(value));
        else if (key == "mode") {
            if (value == "exhaustive") cfg.mode = SurveyMode::exhaustive;
            else if (value == "sampled") cfg.mode = SurveyMode::sampled;
            else
                throw std::invalid_argument("config line " + std::to_string(lineno) +
                                            ": mode must be exhaustive or sampled");
        } else if (key == "samples") cfg.samples = to_u64(value);
        else if (key == "seed") cfg.seed = to_u64(value);
        else if (key == "beta") cfg.beta = static_cast<unsigned>(to_u64(value));
        else if (key == "guard") cfg.guard = to_u64(value);
        else if (key == "out") cfg.out = value;
        else if (key == "format") {
            if (value != "csv" && value != "json")
                throw std::invalid_argument("config line " + std::to_string(lineno) +
                                            ": format must be csv or json");
            cfg.format = value;
        } else
            throw std::invalid_argument("config line " + std::to_string(lineno) +
                                        ": unknown key \"" + key + "\"");
    }
    return cfg;
}

} // namespace ffchain

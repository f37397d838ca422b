// ffchain command line: single-shot field algebra, chain/partition/permutation
// queries, graph export, and reproducible surveys.
//
// Exit codes: 0 success, 1 domain error (reducible basis, zero element, guard),
// 2 usage error (bad flags, unparsable polynomial, inconsistent n).

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ffchain/chain.hpp"
#include "ffchain/experiments.hpp"
#include "ffchain/field.hpp"
#include "ffchain/graph.hpp"
#include "ffchain/poly.hpp"
#include "ffchain/serialize.hpp"

namespace {

using namespace ffchain;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CommonOpts {
    std::uint32_t p = 2;
    unsigned n = 0; // 0 = infer from the bases
    std::string format;
    std::string out;
    std::uint64_t guard = kDefaultGuard;
    bool guard_set = false;
};

void add_common(CLI::App* cmd, CommonOpts& opts, std::string default_format) {
    cmd->add_option("--p", opts.p, "Field characteristic (prime)")->capture_default_str();
    cmd->add_option("--n", opts.n, "Extension degree (inferred from the bases when omitted)");
    opts.format = std::move(default_format);
    cmd->add_option("--format", opts.format, "Output format")->capture_default_str();
    cmd->add_option("--out", opts.out, "Write output to this file instead of stdout");
    cmd->add_option("--guard", opts.guard, "Enumeration guard (max p^n swept)")
        ->each([&opts](const std::string&) { opts.guard_set = true; });
}

std::uint64_t effective_guard(const CommonOpts& opts) {
    if (opts.guard_set) return opts.guard;
    if (const char* env = std::getenv("FFCHAIN_GUARD")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw UsageError("FFCHAIN_GUARD is not a number: " + std::string(env));
        }
    }
    return opts.guard;
}

void require_format(const CommonOpts& opts, std::initializer_list<const char*> allowed) {
    for (const char* f : allowed) {
        if (opts.format == f) return;
    }
    std::string msg = "unsupported --format \"" + opts.format + "\" here; expected one of";
    for (const char* f : allowed) msg += std::string(" ") + f;
    throw UsageError(msg);
}

void emit(const CommonOpts& opts, const std::string& text) {
    if (opts.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream file(opts.out, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open output file " + opts.out);
    file << text;
    if (!file.good()) throw std::runtime_error("failed writing output file " + opts.out);
}

std::string json_text(const nlohmann::ordered_json& j) {
    return j.dump(2) + "\n";
}

// Polynomial literals arrive as flag strings; syntax errors are usage errors.
Poly parse_literal(const std::string& text, Prime p) {
    try {
        return parse_poly(text, p);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

// Resolves --n against the basis degrees: inferred when omitted, checked when given.
unsigned resolve_n(const CommonOpts& opts, const std::vector<Poly>& bases) {
    unsigned n = opts.n;
    for (const auto& b : bases) {
        if (b.is_zero() || b.is_constant())
            throw std::domain_error("basis " + to_symbolic(b) + " must have degree >= 1");
        const unsigned bn = static_cast<unsigned>(b.degree().value());
        if (n == 0) n = bn;
        else if (n != bn)
            throw UsageError("--n " + std::to_string(opts.n) + " conflicts with basis degree " +
                             std::to_string(bn));
    }
    if (n == 0) throw UsageError("--n is required when no basis fixes the degree");
    return n;
}

std::vector<IrreduciblePoly> validate_bases(const std::vector<std::string>& texts, Prime p,
                                            const CommonOpts& opts) {
    std::vector<Poly> polys;
    for (const auto& t : texts) polys.push_back(parse_literal(t, p));
    resolve_n(opts, polys);
    std::vector<IrreduciblePoly> out;
    for (auto& poly : polys) out.emplace_back(std::move(poly)); // throws if reducible/non-monic
    return out;
}

std::string poly_line(const Poly& a) {
    return to_symbolic(a) + " (" + to_indexed(a) + ")";
}

// ---- subcommand runners ----

int run_inv(const CommonOpts& opts, const std::string& basis_text, const std::string& elem_text) {
    const Prime p(opts.p);
    const auto bases = validate_bases({basis_text}, p, opts);
    const Poly a = parse_literal(elem_text, p);
    const Poly b = inv(a, bases[0]);
    if (opts.format == "json") {
        nlohmann::ordered_json j;
        j["p"] = opts.p;
        j["n"] = bases[0].degree();
        j["basis"] = to_indexed(bases[0].poly());
        j["elem"] = to_indexed(a);
        j["inverse"] = to_indexed(b);
        emit(opts, json_text(j));
    } else {
        require_format(opts, {"text", "json"});
        emit(opts, poly_line(b) + "\n");
    }
    return 0;
}

int run_chain(const CommonOpts& opts, const std::vector<std::string>& basis_texts,
              const std::string& elem_text, std::uint64_t k) {
    const Prime p(opts.p);
    const auto bases = validate_bases(basis_texts, p, opts);
    const BasisSchedule schedule(bases);
    const Poly a = parse_literal(elem_text, p);
    const Chain chain = k_chain(a, schedule, k);
    if (opts.format == "json") {
        emit(opts, json_text(to_json(chain)));
    } else {
        require_format(opts, {"text", "json"});
        std::string line;
        for (const auto& e : chain.elements) {
            if (!line.empty()) line += " -> ";
            line += to_symbolic(e);
        }
        emit(opts, line + "\n");
    }
    return 0;
}

int run_partition(const CommonOpts& opts, const std::string& f1_text, const std::string& f2_text) {
    const Prime p(opts.p);
    const auto bases = validate_bases({f1_text, f2_text}, p, opts);
    const CyclePartition part = partition(bases[0], bases[1], effective_guard(opts));
    if (opts.format == "json") {
        emit(opts, json_text(to_json(part)));
    } else {
        require_format(opts, {"text", "json"});
        std::string text;
        for (std::size_t i = 0; i < part.cycles.size(); ++i) {
            text += "cycle " + std::to_string(i + 1) + " (len " +
                    std::to_string(part.cycles[i].length()) + "):";
            for (std::uint64_t e : part.cycles[i].elements)
                text += " " + digit_label(Poly::from_index(p, e), part.f1.degree());
            text += "\n";
        }
        text += "covered " + std::to_string(part.covered()) + " of " +
                std::to_string(field_order(opts.p, part.f1.degree()) - opts.p) +
                " non-constant elements\n";
        emit(opts, text);
    }
    return 0;
}

int run_perm(const CommonOpts& opts, const std::string& f1_text, const std::string& f2_text,
             const std::string& orientation) {
    const Prime p(opts.p);
    const auto bases = validate_bases({f1_text, f2_text}, p, opts);
    std::optional<std::vector<bool>> reverse_cycle;
    if (!orientation.empty()) {
        std::vector<bool> bits;
        for (char c : orientation) {
            if (c != '0' && c != '1') throw UsageError("--orientation must be a string of 0/1");
            bits.push_back(c == '1');
        }
        reverse_cycle = std::move(bits);
    }
    const Permutation sigma =
        reverse_cycle ? build_permutation(bases[0], bases[1], *reverse_cycle, effective_guard(opts))
                      : build_permutation(bases[0], bases[1], effective_guard(opts));
    if (opts.format == "json") {
        emit(opts, json_text(to_json(sigma)));
    } else {
        require_format(opts, {"text", "json"});
        std::string text = "mapping:";
        for (std::uint64_t v : sigma.mapping) text += " " + std::to_string(v);
        text += "\ncycles:";
        for (const auto& cycle : sigma.cycles) {
            text += " (";
            for (std::size_t i = 0; i < cycle.size(); ++i)
                text += (i ? " " : "") + std::to_string(cycle[i]);
            text += ")";
        }
        text += "\nfixed points:";
        for (std::uint64_t v : sigma.fixed_points()) text += " " + std::to_string(v);
        emit(opts, text + "\n");
    }
    return 0;
}

int run_loops(const CommonOpts& opts, const std::vector<std::string>& basis_texts,
              const std::string& elem_text) {
    const Prime p(opts.p);
    const auto bases = validate_bases(basis_texts, p, opts);
    const BasisSchedule schedule(bases);
    if (!elem_text.empty()) {
        const Poly a = parse_literal(elem_text, p);
        const ClosedLoop loop = find_closed_loop(a, schedule);
        if (opts.format == "json") {
            emit(opts, json_text(to_json(loop)));
        } else {
            require_format(opts, {"text", "json"});
            std::string line = "k=" + std::to_string(loop.k()) + ":";
            for (const auto& e : loop.elements) line += " " + to_indexed(e);
            emit(opts, line + "\n");
        }
        return 0;
    }
    const LoopEnumeration loops = enumerate_closed_loops(schedule, effective_guard(opts));
    if (opts.format == "json") {
        emit(opts, json_text(to_json(loops)));
    } else {
        require_format(opts, {"text", "json"});
        std::string text;
        for (std::size_t i = 0; i < loops.loops.size(); ++i) {
            const auto& loop = loops.loops[i];
            text += "loop " + std::to_string(i + 1) + " k=" + std::to_string(loop.k()) + ":";
            for (const auto& e : loop.elements) text += " " + to_indexed(e);
            text += "\n";
        }
        emit(opts, text);
    }
    return 0;
}

int run_irreducibles(const CommonOpts& opts, bool count_only) {
    if (opts.n == 0) throw UsageError("irreducibles: --n is required");
    const Prime p(opts.p);
    if (count_only) {
        const std::uint64_t count = count_irreducibles(p, opts.n);
        if (opts.format == "json") {
            emit(opts, json_text(nlohmann::ordered_json{{"p", opts.p}, {"n", opts.n}, {"count", count}}));
        } else {
            require_format(opts, {"text", "json"});
            emit(opts, std::to_string(count) + "\n");
        }
        return 0;
    }
    const auto irreducibles = enumerate_irreducibles(p, opts.n, effective_guard(opts));
    if (opts.format == "json") {
        nlohmann::ordered_json j;
        j["p"] = opts.p;
        j["n"] = opts.n;
        j["count"] = irreducibles.size();
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& f : irreducibles) arr.push_back(to_indexed(f.poly()));
        j["polys"] = std::move(arr);
        emit(opts, json_text(j));
    } else {
        require_format(opts, {"text", "json"});
        std::string text;
        for (const auto& f : irreducibles) text += poly_line(f.poly()) + "\n";
        emit(opts, text);
    }
    return 0;
}

int run_survey(const CommonOpts& file_opts, const std::string& config_path, const std::string& mode,
               std::uint64_t samples, std::uint64_t seed, unsigned beta, bool census,
               const CLI::App* cmd) {
    ExperimentConfig cfg;
    if (!config_path.empty()) {
        std::ifstream file(config_path);
        if (!file) throw std::runtime_error("cannot open config file " + config_path);
        try {
            cfg = parse_config_file(file);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    }
    // flags override the file
    CommonOpts opts = file_opts;
    if (!config_path.empty() && !cmd->count("--format")) opts.format = cfg.format;
    if (!config_path.empty() && !cmd->count("--out") && !cfg.out.empty()) opts.out = cfg.out;
    require_format(opts, {"csv", "json"});
    if (config_path.empty() || cmd->count("--p")) cfg.p = opts.p;
    if (config_path.empty() || cmd->count("--n")) cfg.n = opts.n;
    if (cmd->count("--samples")) cfg.samples = samples;
    if (cmd->count("--seed")) cfg.seed = seed;
    if (config_path.empty() || cmd->count("--beta")) cfg.beta = beta;
    if (cmd->count("--mode")) {
        if (mode == "exhaustive") cfg.mode = SurveyMode::exhaustive;
        else if (mode == "sampled") cfg.mode = SurveyMode::sampled;
        else throw UsageError("--mode must be exhaustive or sampled");
    } else if (cmd->count("--samples")) {
        cfg.mode = SurveyMode::sampled; // a sample count alone selects sampled mode
    }
    if (opts.guard_set || std::getenv("FFCHAIN_GUARD") != nullptr || config_path.empty())
        cfg.guard = effective_guard(opts);
    if (cfg.n == 0) throw UsageError("survey: --n is required");

    const Prime p(cfg.p);
    if (census) {
        const SpanningCensus result = spanning_census(p, cfg.n, cfg.guard);
        if (opts.format == "json") {
            emit(opts, json_text(to_json(cfg.p, cfg.n, result)));
        } else {
            require_format(opts, {"csv", "json"});
            std::ostringstream os;
            write_census_csv(os, cfg.p, cfg.n, result);
            emit(opts, os.str());
        }
        return 0;
    }
    if (cfg.beta >= 3) {
        const auto records = run_loop_survey(cfg);
        if (opts.format == "json") {
            emit(opts, json_text(to_json(cfg, records)));
        } else {
            require_format(opts, {"csv", "json"});
            std::ostringstream os;
            write_loop_survey_csv(os, cfg, records);
            emit(opts, os.str());
        }
        return 0;
    }
    const auto records = run_pair_survey(cfg);
    if (opts.format == "json") {
        emit(opts, json_text(to_json(cfg, records)));
    } else {
        require_format(opts, {"csv", "json"});
        std::ostringstream os;
        write_pair_survey_csv(os, cfg, records);
        emit(opts, os.str());
    }
    return 0;
}

int run_export(const CommonOpts& opts, const std::vector<std::string>& basis_texts,
               const std::string& f1_text, const std::string& f2_text,
               const std::string& elem_text, bool constants) {
    const Prime p(opts.p);
    const std::uint64_t guard = effective_guard(opts);

    if (!elem_text.empty()) {
        if (basis_texts.size() < 2)
            throw UsageError("export with --elem needs at least two --basis flags (a loop schedule)");
        const auto bases = validate_bases(basis_texts, p, opts);
        const ClosedLoop loop = find_closed_loop(parse_literal(elem_text, p), BasisSchedule(bases));
        require_format(opts, {"dot"});
        emit(opts, export_dot(loop));
        return 0;
    }
    if (!f1_text.empty() || !f2_text.empty()) {
        if (f1_text.empty() || f2_text.empty())
            throw UsageError("export: --f1 and --f2 must be given together");
        const auto bases = validate_bases({f1_text, f2_text}, p, opts);
        const MatchingGraph graph = matching_union(bases[0], bases[1], constants, guard);
        if (opts.format == "json") emit(opts, json_text(to_json(graph)));
        else {
            require_format(opts, {"dot", "json"});
            emit(opts, export_dot(graph));
        }
        return 0;
    }
    if (basis_texts.size() == 1) {
        const auto bases = validate_bases(basis_texts, p, opts);
        const MatchingGraph graph = build_matching(bases[0], constants, guard);
        if (opts.format == "json") emit(opts, json_text(to_json(graph)));
        else {
            require_format(opts, {"dot", "json"});
            emit(opts, export_dot(graph));
        }
        return 0;
    }
    throw UsageError("export needs --basis (matching), --f1/--f2 (union), or --basis... --elem (loop)");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Multiplicative-inverse chaining in finite fields under alternating polynomial bases"};
    app.require_subcommand(1);

    CommonOpts inv_opts, chain_opts, part_opts, perm_opts, loops_opts, irr_opts, survey_opts,
        export_opts;

    // inv
    auto* cmd_inv = app.add_subcommand("inv", "Multiplicative inverse of an element under one basis");
    std::string inv_basis, inv_elem;
    add_common(cmd_inv, inv_opts, "text");
    cmd_inv->add_option("--basis", inv_basis, "Monic irreducible basis polynomial")->required();
    cmd_inv->add_option("--elem", inv_elem, "Element to invert")->required();

    // chain
    auto* cmd_chain = app.add_subcommand("chain", "k-chain of an element under a basis schedule");
    std::vector<std::string> chain_bases;
    std::string chain_elem;
    std::uint64_t chain_k = 0;
    add_common(cmd_chain, chain_opts, "text");
    cmd_chain->add_option("--basis", chain_bases, "Schedule bases, in order (repeatable)")->required();
    cmd_chain->add_option("--elem", chain_elem, "Start element")->required();
    cmd_chain->add_option("--k", chain_k, "Number of inverse steps")->required();

    // partition
    auto* cmd_partition = app.add_subcommand("partition", "Cycle partition induced by a basis pair");
    std::string part_f1, part_f2;
    add_common(cmd_partition, part_opts, "text");
    cmd_partition->add_option("--f1", part_f1, "First basis")->required();
    cmd_partition->add_option("--f2", part_f2, "Second basis")->required();

    // perm
    auto* cmd_perm = app.add_subcommand("perm", "Permutation induced by oriented partition cycles");
    std::string perm_f1, perm_f2, perm_orientation;
    add_common(cmd_perm, perm_opts, "text");
    cmd_perm->add_option("--f1", perm_f1, "First basis")->required();
    cmd_perm->add_option("--f2", perm_f2, "Second basis")->required();
    cmd_perm->add_option("--orientation", perm_orientation,
                         "Per-cycle direction bits (1 reverses that cycle)");

    // loops
    auto* cmd_loops = app.add_subcommand("loops", "Closed loops of a beta-basis schedule");
    std::vector<std::string> loops_bases;
    std::string loops_elem;
    add_common(cmd_loops, loops_opts, "text");
    cmd_loops->add_option("--basis", loops_bases, "Schedule bases, in order (repeatable)")->required();
    cmd_loops->add_option("--elem", loops_elem, "Start element (omit to enumerate all loops)");

    // irreducibles
    auto* cmd_irr = app.add_subcommand("irreducibles", "Enumerate monic irreducibles of degree n");
    bool irr_count = false;
    add_common(cmd_irr, irr_opts, "text");
    cmd_irr->add_flag("--count", irr_count, "Print only the necklace count");

    // survey
    auto* cmd_survey = app.add_subcommand("survey", "Cycle/loop statistics over basis tuples");
    std::string survey_config, survey_mode = "exhaustive";
    std::uint64_t survey_samples = 0, survey_seed = 0;
    unsigned survey_beta = 2;
    bool survey_census = false;
    add_common(cmd_survey, survey_opts, "csv");
    cmd_survey->add_option("--config", survey_config, "key = value config file (flags override)");
    cmd_survey->add_option("--mode", survey_mode, "exhaustive or sampled")->capture_default_str();
    cmd_survey->add_option("--samples", survey_samples, "Sample count for sampled mode");
    cmd_survey->add_option("--seed", survey_seed, "Random seed for sampled mode");
    cmd_survey->add_option("--beta", survey_beta, "Schedule size (2 = pair survey)")
        ->capture_default_str();
    cmd_survey->add_flag("--census", survey_census, "Spanning-cycle census over all ordered pairs");

    // export
    auto* cmd_export = app.add_subcommand("export", "DOT/JSON graph export");
    std::vector<std::string> export_bases;
    std::string export_f1, export_f2, export_elem;
    bool export_constants = false;
    add_common(cmd_export, export_opts, "dot");
    cmd_export->add_option("--basis", export_bases, "Basis (one: matching; several with --elem: loop)");
    cmd_export->add_option("--f1", export_f1, "First basis of a matching union");
    cmd_export->add_option("--f2", export_f2, "Second basis of a matching union");
    cmd_export->add_option("--elem", export_elem, "Loop start element");
    cmd_export->add_flag("--constants", export_constants, "Include the constant elements");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (cmd_inv->parsed()) return run_inv(inv_opts, inv_basis, inv_elem);
        if (cmd_chain->parsed()) return run_chain(chain_opts, chain_bases, chain_elem, chain_k);
        if (cmd_partition->parsed()) return run_partition(part_opts, part_f1, part_f2);
        if (cmd_perm->parsed()) return run_perm(perm_opts, perm_f1, perm_f2, perm_orientation);
        if (cmd_loops->parsed()) return run_loops(loops_opts, loops_bases, loops_elem);
        if (cmd_irr->parsed()) return run_irreducibles(irr_opts, irr_count);
        if (cmd_survey->parsed())
            return run_survey(survey_opts, survey_config, survey_mode, survey_samples, survey_seed,
                              survey_beta, survey_census, cmd_survey);
        if (cmd_export->parsed())
            return run_export(export_opts, export_bases, export_f1, export_f2, export_elem,
                              export_constants);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

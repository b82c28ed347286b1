// Command-line front end: enumeration, volumes, exact moments, tree
// combinatorics, Monte Carlo simulation, and the verification suite.

#include "CLI11.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "ncmoments/acceptance.hpp"
#include "ncmoments/json_io.hpp"
#include "ncmoments/moments.hpp"
#include "ncmoments/oracles.hpp"
#include "ncmoments/partition.hpp"
#include "ncmoments/randmat.hpp"
#include "ncmoments/trees.hpp"
#include "ncmoments/volumes.hpp"
#include "ncmoments/word.hpp"

namespace {

using ncmoments::Json;

struct WordFlags {
    std::string word_text;
    int tt_power = -1;

    void attach(CLI::App* cmd, bool required) {
        auto* word_opt =
            cmd->add_option("--word", word_text, "*-word, e.g. \"*1,1,*1,1\"");
        auto* tt_opt = cmd->add_option("--tt-power", tt_power,
                                       "shorthand for the alternating word (*1,1)^n")
                           ->check(CLI::NonNegativeNumber);
        word_opt->excludes(tt_opt);
        tt_opt->excludes(word_opt);
        if (required) {
            // One of the two must be present; enforced in resolve().
            required_ = true;
        }
    }

    bool given() const { return tt_power >= 0 || !word_text.empty(); }

    ncmoments::StarWord resolve() const {
        if (tt_power >= 0) {
            return ncmoments::StarWord::tt_power(tt_power);
        }
        if (word_text.empty() && required_) {
            throw CLI::ValidationError("word", "either --word or --tt-power is required");
        }
        return ncmoments::StarWord::parse(word_text);
    }

private:
    bool required_ = false;
};

int ground_limit(bool unsafe) { return unsafe ? 30 : ncmoments::kDefaultMaxGround; }
int vertex_limit(bool unsafe) { return unsafe ? 14 : ncmoments::kDefaultMaxVertices; }

void emit(const Json& j) { std::cout << j.dump(2) << '\n'; }

Json load_profile_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ncmoments::InvalidArgument("cannot open profile file '" + path + "'");
    }
    return Json::parse(in);
}

// ---------------------------------------------------------------------------
// enumerate

int run_enumerate(int m, const WordFlags& word_flags, const std::string& mode_text,
                  const std::string& format, bool unsafe) {
    using namespace ncmoments;
    const AdaptednessMode mode = mode_text == "creation" ? AdaptednessMode::CreationMode
                                                         : AdaptednessMode::EtaMode;
    std::vector<PairPartition> partitions;
    StarWord word;
    const bool adapted_only = word_flags.given();
    if (adapted_only) {
        word = word_flags.resolve();
        if (m >= 0 && m != word.size()) {
            throw InvalidArgument("--m " + std::to_string(m) + " contradicts word length " +
                                  std::to_string(word.size()));
        }
        partitions = adapted_partitions(word, mode, ground_limit(unsafe));
        m = word.size();
    } else {
        if (m < 0) {
            throw InvalidArgument("enumerate needs --m or a word");
        }
        partitions = enumerate_nc2(m, ground_limit(unsafe));
    }
    if (format == "table") {
        for (const PairPartition& p : partitions) {
            std::string outer;
            for (int k = 1; k <= p.size(); ++k) {
                outer += ' ' + std::to_string(k) + "->" + std::to_string(p.nearest_outer(k));
            }
            std::printf("%-40s outer:%s\n", p.to_string().c_str(), outer.c_str());
        }
        std::printf("%zu partition(s) of m=%d\n", partitions.size(), m);
        return 0;
    }
    Json out;
    out["m"] = m;
    if (adapted_only) {
        out["word"] = word.to_string();
        out["mode"] = mode == AdaptednessMode::CreationMode ? "creation" : "eta";
    }
    out["count"] = partitions.size();
    out["partitions"] = Json::array();
    for (const PairPartition& p : partitions) {
        Json jp;
        jp["blocks"] = partition_to_json(p);
        Json outer = Json::object();
        for (int k = 1; k <= p.size(); ++k) {
            outer[std::to_string(k)] = p.nearest_outer(k);
        }
        jp["nearest_outer"] = std::move(outer);
        out["partitions"].push_back(std::move(jp));
    }
    emit(out);
    return 0;
}

// ---------------------------------------------------------------------------
// volume

int run_volume(int m, const WordFlags& word_flags, bool per_partition,
               const std::string& format, bool unsafe) {
    using namespace ncmoments;
    const StarWord word = word_flags.resolve();
    if (m >= 0 && m != word.size()) {
        throw InvalidArgument("--m " + std::to_string(m) + " contradicts word length " +
                              std::to_string(word.size()));
    }
    const MomentResult result =
        eta_moment(word, OperatorSpec::triangular(), ground_limit(unsafe));
    if (format == "table") {
        for (const auto& [p, weight] : result.contributions) {
            const ColorPoset poset = region_constraints(p, word, AdaptednessMode::EtaMode);
            std::string constraints;
            for (const auto& [a, b] : poset.less) {
                constraints += ' ' + std::to_string(a) + '<' + std::to_string(b);
            }
            std::printf("%-32s %s  volume %s\n", p.to_string().c_str(), constraints.c_str(),
                        weight.to_string().c_str());
        }
        std::printf("total %s over %zu adapted partition(s)\n",
                    result.value.to_string().c_str(), result.contributions.size());
        return 0;
    }
    Json out;
    out["word"] = word.to_string();
    out["m"] = word.size();
    out["value"] = rational_to_json(result.value);
    if (per_partition) {
        out["partitions"] = Json::array();
        for (const auto& [p, weight] : result.contributions) {
            const ColorPoset poset = region_constraints(p, word, AdaptednessMode::EtaMode);
            Json jp;
            jp["blocks"] = partition_to_json(p);
            Json jc = Json::array();
            for (const auto& [a, b] : poset.less) {
                jc.push_back(Json::array({a, b}));
            }
            jp["constraints"] = std::move(jc);
            jp["extensions"] = count_linear_extensions(poset).str();
            jp["volume"] = rational_to_json(weight);
            out["partitions"].push_back(std::move(jp));
        }
    }
    emit(out);
    return 0;
}

// ---------------------------------------------------------------------------
// moment

int run_moment(const std::string& operator_text, const WordFlags& word_flags,
               const std::string& profile_path, int closed_form_n,
               const std::string& format, bool unsafe) {
    using namespace ncmoments;
    const StarWord word = word_flags.resolve();
    OperatorSpec spec;
    if (operator_text == "triangular") {
        spec = OperatorSpec::triangular();
    } else if (operator_text == "circular") {
        spec = OperatorSpec::circular();
    } else if (operator_text == "lower-triangular") {
        spec = OperatorSpec::lower_triangular();
    } else {
        if (profile_path.empty()) {
            throw InvalidArgument("--operator profile requires --profile file.json");
        }
        spec = OperatorSpec::with_profile(profile_from_json(load_profile_json(profile_path)));
    }
    const MomentResult result = eta_moment(word, spec, ground_limit(unsafe));

    bool closed_form_match = true;
    Rational closed_form;
    if (closed_form_n >= 0) {
        closed_form = triangular_moment_closed_form(closed_form_n);
        if (spec.kind == OperatorSpec::Kind::Triangular) {
            closed_form_match = closed_form == result.value;
        }
    }
    if (format == "table") {
        for (const auto& [p, weight] : result.contributions) {
            std::printf("%-40s %s\n", p.to_string().c_str(), weight.to_string().c_str());
        }
        std::printf("%s moment of '%s' = %s\n", operator_text.c_str(),
                    word.to_string().c_str(), result.value.to_string().c_str());
        if (closed_form_n >= 0) {
            std::printf("closed form n=%d: %s (%s)\n", closed_form_n,
                        closed_form.to_string().c_str(),
                        closed_form_match ? "match" : "MISMATCH");
        }
    } else {
        Json out;
        out["operator"] = operator_text;
        out["word"] = word.to_string();
        const Json detail = moment_result_to_json(result);
        out["value"] = detail.at("value");
        out["contributions"] = detail.at("contributions");
        if (closed_form_n >= 0) {
            out["closed_form"] = rational_to_json(closed_form);
            out["closed_form_matches"] = closed_form_match;
        }
        emit(out);
    }
    if (!closed_form_match) {
        std::cerr << "error: closed form " << closed_form.to_string()
                  << " differs from computed value " << result.value.to_string() << '\n';
        return 1;
    }
    return 0;
}

// ---------------------------------------------------------------------------
// trees

int run_trees(int vertices, const std::string& alternating, bool count_only,
              bool bijection, const std::string& format, bool unsafe) {
    using namespace ncmoments;
    if (vertices < 1) {
        throw InvalidArgument("trees needs --vertices >= 1");
    }
    Json out;
    out["vertices"] = vertices;
    if (!alternating.empty()) {
        const AlternationType type =
            alternating == "typeII" ? AlternationType::TypeII : AlternationType::TypeI;
        const auto trees = enumerate_alternating(vertices - 1, type, vertex_limit(unsafe));
        if (format == "table") {
            if (!count_only) {
                for (const auto& t : trees) {
                    std::printf("%s\n", labeled_tree_to_json(t).dump().c_str());
                }
            }
            std::printf("%zu alternating %s tree(s) on %d vertices\n", trees.size(),
                        alternating.c_str(), vertices);
            return 0;
        }
        out["type"] = alternating;
        out["count"] = trees.size();
        if (!count_only) {
            out["trees"] = Json::array();
            for (const auto& t : trees) {
                out["trees"].push_back(labeled_tree_to_json(t));
            }
        }
        emit(out);
        return 0;
    }
    const auto shapes = enumerate_ordered_trees(vertices, vertex_limit(unsafe));
    if (format == "table") {
        if (!count_only) {
            for (const auto& t : shapes) {
                if (bijection) {
                    std::printf("%s  <->  %s\n", tree_to_json(t).dump().c_str(),
                                tree_to_partition(t).to_string().c_str());
                } else {
                    std::printf("%s\n", tree_to_json(t).dump().c_str());
                }
            }
        }
        std::printf("%zu ordered tree(s) on %d vertices\n", shapes.size(), vertices);
        return 0;
    }
    out["count"] = shapes.size();
    if (!count_only) {
        if (bijection) {
            out["pairs"] = Json::array();
            for (const auto& t : shapes) {
                Json pair;
                pair["tree"] = tree_to_json(t);
                pair["partition"] = partition_to_json(tree_to_partition(t));
                out["pairs"].push_back(std::move(pair));
            }
        } else {
            out["trees"] = Json::array();
            for (const auto& t : shapes) {
                out["trees"].push_back(tree_to_json(t));
            }
        }
    }
    emit(out);
    return 0;
}

// ---------------------------------------------------------------------------
// simulate

int run_simulate(const std::string& kind_text, int n, const std::string& ns_text,
                 std::int64_t trials, std::uint64_t seed, const WordFlags& word_flags,
                 const std::string& profile_path, const std::string& format) {
    using namespace ncmoments;
    const StarWord word = word_flags.resolve();
    std::optional<VarianceProfile> profile;
    if (kind_text == "profile") {
        if (profile_path.empty()) {
            throw InvalidArgument("--kind profile requires --profile file.json");
        }
        profile = profile_from_json(load_profile_json(profile_path));
    }
    auto make_spec = [&](int size) {
        if (kind_text == "strict-upper") return EnsembleSpec::strict_upper(size);
        if (kind_text == "iid") return EnsembleSpec::iid_square(size);
        return EnsembleSpec::block_profile(size, *profile);
    };
    std::vector<int> sizes;
    if (!ns_text.empty()) {
        std::stringstream ss(ns_text);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            sizes.push_back(std::stoi(tok));
        }
    } else {
        sizes.push_back(n);
    }
    std::vector<EnsembleSpec> family;
    family.reserve(sizes.size());
    for (int size : sizes) {
        family.push_back(make_spec(size));
    }
    const auto rows = convergence_report(word, family, trials, seed);
    if (format == "csv") {
        std::cout << convergence_rows_to_csv(rows);
        return 0;
    }
    if (format == "table") {
        std::printf("%6s %4s %7s %12s %12s %12s %12s\n", "n", "r", "trials", "estimate",
                    "stderr", "exact", "abs_gap");
        for (const auto& row : rows) {
            std::printf("%6d %4d %7lld %12.6f %12.6f %12s %12.6f\n", row.n, row.r,
                        static_cast<long long>(row.trials), row.estimate, row.stderr_est,
                        row.exact.to_string().c_str(), row.abs_gap);
        }
        return 0;
    }
    if (rows.size() == 1 && ns_text.empty()) {
        // Single run: full estimate detail plus the exact prediction.
        const MomentEstimate estimate = estimate_moment(word, family.front(), trials, seed);
        Json out = moment_estimate_to_json(estimate);
        out["kind"] = kind_text;
        out["exact"] = rational_to_json(rows.front().exact);
        out["abs_gap"] = rows.front().abs_gap;
        emit(out);
        return 0;
    }
    Json out;
    out["kind"] = kind_text;
    out["word"] = word.to_string();
    out["rows"] = convergence_rows_to_json(rows);
    emit(out);
    return 0;
}

// ---------------------------------------------------------------------------
// verify

int run_verify(int max_n, std::uint64_t seed) {
    using namespace ncmoments;
    AcceptanceOptions options;
    options.max_n = max_n;
    options.seed = seed;
    const auto results = run_acceptance(options);
    for (const auto& r : results) {
        const char* status = r.passed ? (r.skipped ? "SKIP" : "PASS") : "FAIL";
        std::printf("[%s] criterion %2d: %s — %s (%.2fs)\n", status, r.id, r.name.c_str(),
                    r.detail.c_str(), r.seconds);
    }
    const bool ok = all_passed(results);
    std::printf("%s\n", ok ? "ALL CRITERIA PASSED" : "VERIFICATION FAILED");
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Exact *-moments of circular and triangular operator families via "
        "noncrossing pairings, with a random-matrix cross-check harness"};
    app.require_subcommand(1);

    // enumerate ------------------------------------------------------------
    auto* enumerate_cmd =
        app.add_subcommand("enumerate", "List noncrossing pair partitions");
    int enum_m = -1;
    WordFlags enum_word;
    std::string enum_mode = "eta";
    std::string enum_format = "json";
    bool enum_unsafe = false;
    enumerate_cmd->add_option("--m", enum_m, "ground-set size (even)");
    enum_word.attach(enumerate_cmd, /*required=*/false);
    enumerate_cmd->add_option("--mode", enum_mode, "adaptedness mode with --word")
        ->check(CLI::IsMember({"eta", "creation"}));
    enumerate_cmd->add_option("--format", enum_format, "output format")
        ->check(CLI::IsMember({"json", "table"}));
    enumerate_cmd->add_flag("--unsafe-limits", enum_unsafe, "lift resource limits");

    // volume ---------------------------------------------------------------
    auto* volume_cmd =
        app.add_subcommand("volume", "Region volumes of adapted pairings");
    int vol_m = -1;
    WordFlags vol_word;
    bool vol_per_partition = false;
    std::string vol_format = "json";
    bool vol_unsafe = false;
    volume_cmd->add_option("--m", vol_m, "ground-set size cross-check");
    vol_word.attach(volume_cmd, /*required=*/true);
    volume_cmd->add_flag("--per-partition", vol_per_partition,
                         "include constraints, extension counts and volumes per pairing");
    volume_cmd->add_option("--format", vol_format, "output format")
        ->check(CLI::IsMember({"json", "table"}));
    volume_cmd->add_flag("--unsafe-limits", vol_unsafe, "lift resource limits");

    // moment ---------------------------------------------------------------
    auto* moment_cmd = app.add_subcommand("moment", "Exact *-moments");
    std::string mom_operator;
    WordFlags mom_word;
    std::string mom_profile;
    int mom_closed_form = -1;
    std::string mom_format = "json";
    bool mom_unsafe = false;
    moment_cmd->add_option("--operator", mom_operator, "operator family")
        ->required()
        ->check(CLI::IsMember({"triangular", "circular", "lower-triangular", "profile"}));
    mom_word.attach(moment_cmd, /*required=*/true);
    moment_cmd->add_option("--profile", mom_profile, "variance profile JSON file");
    moment_cmd->add_option("--closed-form", mom_closed_form,
                           "print n^n/(n+1)! and assert equality for triangular");
    moment_cmd->add_option("--format", mom_format, "output format")
        ->check(CLI::IsMember({"json", "table"}));
    moment_cmd->add_flag("--unsafe-limits", mom_unsafe, "lift resource limits");

    // trees ----------------------------------------------------------------
    auto* trees_cmd = app.add_subcommand("trees", "Ordered rooted tree combinatorics");
    int trees_vertices = 0;
    std::string trees_alternating;
    bool trees_count_only = false;
    bool trees_bijection = false;
    std::string trees_format = "json";
    bool trees_unsafe = false;
    trees_cmd->add_option("--vertices", trees_vertices, "vertex count")->required();
    trees_cmd->add_option("--alternating", trees_alternating, "labeled alternating trees")
        ->check(CLI::IsMember({"typeI", "typeII"}));
    trees_cmd->add_flag("--count-only", trees_count_only, "print only the count");
    trees_cmd->add_flag("--bijection", trees_bijection,
                        "print tree <-> partition pairs (shapes only)");
    trees_cmd->add_option("--format", trees_format, "output format")
        ->check(CLI::IsMember({"json", "table"}));
    trees_cmd->add_flag("--unsafe-limits", trees_unsafe, "lift resource limits");

    // simulate -------------------------------------------------------------
    auto* simulate_cmd =
        app.add_subcommand("simulate", "Monte Carlo moment estimates");
    std::string sim_kind;
    int sim_n = 200;
    std::string sim_ns;
    std::int64_t sim_trials = 200;
    std::uint64_t sim_seed = 42;
    WordFlags sim_word;
    std::string sim_profile;
    std::string sim_format = "json";
    simulate_cmd->add_option("--kind", sim_kind, "matrix ensemble")
        ->required()
        ->check(CLI::IsMember({"strict-upper", "iid", "profile"}));
    simulate_cmd->add_option("--n", sim_n, "matrix size")->check(CLI::PositiveNumber);
    simulate_cmd->add_option("--ns", sim_ns,
                             "comma-separated matrix sizes for a convergence report");
    simulate_cmd->add_option("--trials", sim_trials, "number of trials")
        ->check(CLI::PositiveNumber);
    simulate_cmd->add_option("--seed", sim_seed, "master seed");
    sim_word.attach(simulate_cmd, /*required=*/true);
    simulate_cmd->add_option("--profile", sim_profile, "variance profile JSON file");
    simulate_cmd->add_option("--format", sim_format, "output format")
        ->check(CLI::IsMember({"json", "csv", "table"}));

    // verify ---------------------------------------------------------------
    auto* verify_cmd = app.add_subcommand("verify", "Run the verification suite");
    int verify_max_n = 7;
    std::uint64_t verify_seed = 42;
    verify_cmd->add_option("--max-n", verify_max_n, "combinatorial depth cap")
        ->check(CLI::PositiveNumber);
    verify_cmd->add_option("--seed", verify_seed, "Monte Carlo seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (enumerate_cmd->parsed()) {
            return run_enumerate(enum_m, enum_word, enum_mode, enum_format, enum_unsafe);
        }
        if (volume_cmd->parsed()) {
            return run_volume(vol_m, vol_word, vol_per_partition, vol_format, vol_unsafe);
        }
        if (moment_cmd->parsed()) {
            return run_moment(mom_operator, mom_word, mom_profile, mom_closed_form,
                              mom_format, mom_unsafe);
        }
        if (trees_cmd->parsed()) {
            return run_trees(trees_vertices, trees_alternating, trees_count_only,
                             trees_bijection, trees_format, trees_unsafe);
        }
        if (simulate_cmd->parsed()) {
            return run_simulate(sim_kind, sim_n, sim_ns, sim_trials, sim_seed, sim_word,
                                sim_profile, sim_format);
        }
        if (verify_cmd->parsed()) {
            return run_verify(verify_max_n, verify_seed);
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const ncmoments::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

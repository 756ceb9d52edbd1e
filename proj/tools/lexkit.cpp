// lexkit: command-line front end for lexicon expansion, evaluation,
// text scoring, annotation statistics and the curation service.
//
// Exit codes: 0 success, 2 bad input (usage, unreadable or malformed files),
// 3 no usable data, 1 anything else.

#include <algorithm>
#include <csignal>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lexkit.hpp"
#include "lexkit/service.hpp"

namespace fs = std::filesystem;
using namespace lexkit;
using nlohmann::json;

namespace {

/// Splits "key=value"; without '=' the key is `fallback`.
std::pair<std::string, std::string> split_assignment(const std::string& item, const std::string& fallback) {
    auto eq = item.find('=');
    if (eq == std::string::npos) {
        return {fallback, item};
    }
    return {item.substr(0, eq), item.substr(eq + 1)};
}

void write_file(const fs::path& path, const std::string& content) {
    if (path.has_parent_path()) {
        fs::create_directories(path.parent_path());
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw Error(ErrorCode::Io, "cannot write " + path.string());
    }
    out << content;
}

std::string pretty(const json& j) {
    return j.dump(2) + "\n";
}

/// Options naming the expansion resources; shared by expand, eval and serve.
struct ResourceOptions {
    std::string lang = "en";
    std::string graph;
    std::vector<std::string> synonyms;
    std::vector<std::string> vectors;
    std::vector<std::string> rankings;
    std::size_t top_n = kDefaultTopN;
    double tau = kDefaultTau;
    std::string space;

    void attach(CLI::App* cmd) {
        cmd->add_option("--lang", lang, "Language of the seeds and output")->capture_default_str();
        cmd->add_option("--graph", graph, "Colexification graph bundle directory");
        cmd->add_option("--synonyms", synonyms, "Synonym edge list, as FILE or LANG=FILE");
        cmd->add_option("--vectors", vectors, "Text vector file, as FILE, LANG=FILE or NAME:LANG=FILE");
        cmd->add_option("--ranking", rankings, "Frequency ranking, as FILE or LANG=FILE");
        cmd->add_option("--top-n", top_n, "Keep the N most frequent words of each embedding space")
            ->capture_default_str();
        cmd->add_option("--tau", tau, "Cosine threshold for embedding methods")->capture_default_str();
        cmd->add_option("--space", space, "Embedding space name to use");
    }

    ResourceStore load() const {
        ResourceStore store;
        if (!graph.empty()) {
            store.add_colex(load_colex_bundle(graph));
        }
        for (const auto& item : synonyms) {
            auto [l, path] = split_assignment(item, lang);
            store.add_synonyms(l, load_synonym_graph(path));
        }
        std::map<std::string, FrequencyRanking> ranking_by_lang;
        for (const auto& item : rankings) {
            auto [l, path] = split_assignment(item, lang);
            ranking_by_lang[canonical_language(l)] = load_frequency_ranking(path);
        }
        for (const auto& item : vectors) {
            auto [key, path] = split_assignment(item, lang);
            std::string name = fs::path(path).stem().string();
            std::string l = key;
            if (auto colon = key.find(':'); colon != std::string::npos) {
                name = key.substr(0, colon);
                l = key.substr(colon + 1);
            }
            l = canonical_language(l);
            auto it = ranking_by_lang.find(l);
            if (it == ranking_by_lang.end()) {
                throw Error(ErrorCode::InvalidArgument, "no --ranking given for language '" + l + "'");
            }
            store.add_embedding(name, l, load_embeddings(path, it->second, top_n));
        }
        return store;
    }

    MethodParams params() const { return MethodParams{lang, tau, space}; }
};

MethodId resolve_method(const std::string& method, const std::string& mode) {
    if (method == "embedding") {
        return mode == "centroid" ? MethodId::EmbeddingCentroid : MethodId::EmbeddingThreshold;
    }
    auto m = parse_method(method);
    if (!m) {
        throw Error(ErrorCode::InvalidArgument, "unknown method '" + method + "'");
    }
    return *m;
}

json params_json(const MethodParams& p) {
    return {{"lang", canonical_language(p.lang)}, {"tau", p.tau}, {"space", p.space}};
}

// build-graph ----------------------------------------------------------------

struct BuildGraphOptions {
    std::vector<std::string> dicts;
    std::vector<std::string> translations;
    unsigned min_languages = 2;
    std::string out;
};

std::vector<fs::path> collect_tsv(const std::vector<std::string>& inputs) {
    std::vector<fs::path> files;
    for (const auto& in : inputs) {
        if (fs::is_directory(in)) {
            std::vector<fs::path> found;
            for (const auto& e : fs::directory_iterator(in)) {
                if (e.is_regular_file() && e.path().extension() == ".tsv") {
                    found.push_back(e.path());
                }
            }
            std::sort(found.begin(), found.end());
            files.insert(files.end(), found.begin(), found.end());
        } else if (fs::exists(in)) {
            files.emplace_back(in);
        } else {
            throw Error(ErrorCode::Io, "no such file or directory: " + in);
        }
    }
    return files;
}

int run_build_graph(const BuildGraphOptions& o) {
    std::vector<BilingualDictionary> dicts;
    for (const auto& path : collect_tsv(o.dicts)) {
        DictionaryLoadStats stats;
        dicts.push_back(load_bilingual_tsv(path, &stats));
        std::cerr << path.filename().string() << ": " << stats.pairs << " pairs";
        if (stats.skipped_multiword != 0) {
            std::cerr << ", " << stats.skipped_multiword << " multi-word entries skipped";
        }
        std::cerr << '\n';
    }
    ColexGraph graph = build_colex_graph(dicts, o.min_languages);
    for (const auto& path : collect_tsv(o.translations)) {
        auto dict = load_bilingual_tsv(path);
        graph = translate_labels(graph, dict, dict.target_lang);
    }
    save_colex_bundle(graph, o.out);
    std::cerr << "graph: " << graph.node_count() << " nodes, " << graph.edge_count() << " edges, languages";
    for (const auto& l : graph.languages()) {
        std::cerr << ' ' << l;
    }
    std::cerr << '\n';
    return 0;
}

// expand ---------------------------------------------------------------------

struct ExpandOptions {
    ResourceOptions resources;
    std::string method = "colex";
    std::string mode = "threshold";
    std::string seeds;
    std::vector<std::string> inputs;
    std::string out;
    std::string sidecar;
};

int run_expand(const ExpandOptions& o) {
    WordList seeds = load_word_list(o.seeds);
    const MethodId method = resolve_method(o.method, o.mode);
    const MethodParams params = o.resources.params();

    Expansion expansion{seeds, WordList(seeds.name()), WordList(seeds.name())};
    if (!o.inputs.empty()) {
        if (method != MethodId::Union && method != MethodId::Intersection) {
            throw Error(ErrorCode::InvalidArgument, "--inputs is only valid with --method union or intersection");
        }
        std::vector<Expansion> parts;
        for (const auto& path : o.inputs) {
            WordList lexicon = load_word_list(path);
            parts.push_back({seeds, set_difference(lexicon, seeds), set_difference(seeds, lexicon)});
        }
        expansion = combine(parts, method == MethodId::Union ? CombineMode::Union : CombineMode::Intersection);
    } else {
        ResourceStore store = o.resources.load();
        try {
            expansion = store.method(method, params).expand(seeds);
        } catch (const Error& e) {
            if (e.code() != ErrorCode::NotExpandable) {
                throw;
            }
            expansion.unmatched = seeds;
        }
    }

    const WordList lexicon = expansion.expandable() ? expansion.lexicon() : WordList(seeds.name());
    save_word_list(o.out, lexicon);
    json side = {{"method", to_string(method)},
                 {"params", params_json(params)},
                 {"seeds", seeds.strings()},
                 {"unmatched", expansion.unmatched.strings()},
                 {"expandable", expansion.expandable()},
                 {"seed_count", seeds.size()},
                 {"added_count", expansion.added.size()},
                 {"lexicon_size", lexicon.size()}};
    write_file(o.sidecar.empty() ? o.out + ".json" : o.sidecar, pretty(side));
    return 0;
}

// eval -----------------------------------------------------------------------

struct EvalOptions {
    ResourceOptions resources;
    std::string method = "colex";
    std::string mode = "threshold";
    std::vector<std::string> gold;
    std::string dictionary;
    std::vector<double> fractions;
    bool sweep = false;
    std::size_t seed_count = 0;
    std::string seeds_file;
    std::size_t reps = 50;
    std::size_t baseline_reps = 1000;
    std::uint64_t rng_seed = 0;
    bool strict_fn = false;
    std::string out_json;
    std::string out_csv;
};

int run_eval(const EvalOptions& o) {
    std::optional<WordList> dictionary;
    if (!o.dictionary.empty()) {
        dictionary = load_word_list(o.dictionary);
    }
    std::vector<WordList> gold;
    for (const auto& path : o.gold) {
        gold.push_back(load_lexicon(path, dictionary ? &*dictionary : nullptr));
    }
    const MethodId method_id = resolve_method(o.method, o.mode);
    ResourceStore store = o.resources.load();
    const ExpansionMethod expander = store.method(method_id, o.resources.params());

    ExperimentConfig cfg;
    cfg.method = expander.id();
    cfg.repetitions = o.reps;
    cfg.baseline_repetitions = o.baseline_reps;
    cfg.rng_seed = o.rng_seed;
    cfg.strict_fn = o.strict_fn;

    // Each element is one seed policy; all gold lists run under it.
    std::vector<ExperimentConfig> policies;
    if (!o.seeds_file.empty()) {
        ExperimentConfig c = cfg;
        c.explicit_seeds = load_word_list(o.seeds_file);
        policies.push_back(c);
    } else if (o.seed_count != 0) {
        ExperimentConfig c = cfg;
        c.seed_count = o.seed_count;
        policies.push_back(c);
    } else {
        std::vector<double> fractions = o.sweep ? default_fractions() : o.fractions;
        if (fractions.empty()) {
            throw Error(ErrorCode::InvalidArgument, "give --fraction, --sweep, --seed-count or --seeds-file");
        }
        for (double f : fractions) {
            ExperimentConfig c = cfg;
            c.seed_fraction = f;
            policies.push_back(c);
        }
    }

    std::vector<EvalReport> all;
    json groups = json::array();
    for (const auto& policy : policies) {
        std::vector<EvalReport> group;
        for (const auto& g : gold) {
            group.push_back(random_seed_experiment(g, expander, policy));
        }
        const CrossListSummary agg = aggregate(group);
        groups.push_back({{"seed_fraction", policy.seed_fraction ? json(*policy.seed_fraction) : json()},
                          {"seed_count", policy.seed_count ? json(*policy.seed_count) : json()},
                          {"explicit_seeds", policy.explicit_seeds.has_value()},
                          {"lists", agg.lists},
                          {"coverage", agg.coverage},
                          {"per_list_mean", agg.per_list},
                          {"pooled_mean", agg.pooled},
                          {"baseline_per_list_mean", agg.baseline_per_list},
                          {"mean_lexicon_size", agg.mean_lexicon_size}});
        all.insert(all.end(), group.begin(), group.end());
    }

    json report = {{"method", expander.id()},
                   {"params", params_json(o.resources.params())},
                   {"reports", all},
                   {"aggregates", groups}};
    std::ostringstream csv;
    write_summary_csv(csv, all);
    if (!o.out_json.empty()) {
        write_file(o.out_json, pretty(report));
    }
    if (!o.out_csv.empty()) {
        write_file(o.out_csv, csv.str());
    }
    if (o.out_json.empty() && o.out_csv.empty()) {
        std::cout << csv.str();
    }
    return 0;
}

// score ----------------------------------------------------------------------

struct ScoreOptions {
    std::string corpus;
    std::vector<std::string> lexica;
    std::string reference;
    std::string dictionary;
    bool raw_counts = false;
    bool spearman = false;
    std::size_t bootstrap_reps = kCorrelationBootstrap;
    std::uint64_t rng_seed = 0;
    std::string out_csv;
    std::string out_json;
};

int run_score(const ScoreOptions& o) {
    const auto docs = load_corpus(o.corpus);
    if (docs.empty()) {
        throw Error(ErrorCode::NoData, "corpus " + o.corpus + " holds no documents");
    }
    std::optional<WordList> dictionary;
    if (!o.dictionary.empty()) {
        dictionary = load_word_list(o.dictionary);
    }
    const ScoreMode mode = o.raw_counts ? ScoreMode::RawCount : ScoreMode::Relative;
    const CorrelationMethod cm = o.spearman ? CorrelationMethod::Spearman : CorrelationMethod::Pearson;

    std::vector<std::string> columns;
    std::vector<ScoreSeries> series;
    for (const auto& path : o.lexica) {
        WordList lex = load_lexicon(path, dictionary ? &*dictionary : nullptr);
        columns.push_back(lex.name());
        series.push_back(score_corpus(docs, lex, mode));
    }
    std::optional<ScoreSeries> reference;
    std::string reference_name;
    if (!o.reference.empty()) {
        WordList ref = load_lexicon(o.reference, dictionary ? &*dictionary : nullptr);
        reference_name = ref.name();
        reference = score_corpus(docs, ref, mode);
        columns.push_back(reference_name);
        series.push_back(*reference);
    }

    std::ostringstream csv;
    write_scores_csv(csv, columns, series);
    if (!o.out_csv.empty()) {
        write_file(o.out_csv, csv.str());
    } else {
        std::cout << csv.str();
    }

    if (reference) {
        json corr = json::array();
        for (std::size_t i = 0; i < o.lexica.size(); ++i) {
            json entry = {{"lexicon", columns[i]}};
            try {
                auto c = correlate(series[i], *reference, o.bootstrap_reps, o.rng_seed, cm);
                entry.update({{"r", c.r},
                              {"ci_low", c.ci_low},
                              {"ci_high", c.ci_high},
                              {"documents", c.documents},
                              {"bootstrap_reps", c.bootstrap_reps},
                              {"degenerate_resamples", c.degenerate_resamples}});
            } catch (const Error& e) {
                if (e.code() != ErrorCode::UndefinedCorrelation) {
                    throw;
                }
                entry["r"] = nullptr;
                entry["error"] = e.what();
            }
            corr.push_back(entry);
        }
        json report = {{"reference", reference_name},
                       {"coefficient", o.spearman ? "spearman" : "pearson"},
                       {"score", o.raw_counts ? "raw_count" : "relative_frequency"},
                       {"rng_seed", o.rng_seed},
                       {"correlations", corr}};
        if (!o.out_json.empty()) {
            write_file(o.out_json, pretty(report));
        } else {
            std::cerr << pretty(report);
        }
    }
    return 0;
}

// annotation -----------------------------------------------------------------

struct SampleOptions {
    std::string lexicon;
    std::size_t n = kAnnotationSampleSize;
    std::size_t full_limit = kFullAnnotationLimit;
    std::uint64_t rng_seed = 0;
    std::string out;
};

int run_sample(const SampleOptions& o) {
    WordList sample = sample_for_annotation(load_word_list(o.lexicon), o.n, o.rng_seed, o.full_limit);
    if (o.out.empty()) {
        write_word_list(std::cout, sample);
    } else {
        save_word_list(o.out, sample);
    }
    return 0;
}

struct PrecisionOptions {
    std::string annotations;
    std::string gold;
    std::size_t bootstrap_reps = kBootstrapRepetitions;
    std::uint64_t rng_seed = 0;
    bool majority = false;
    std::string out;
};

int run_precision(const PrecisionOptions& o) {
    const AnnotationSet set = load_annotations_csv(o.annotations);
    if (set.empty()) {
        throw Error(ErrorCode::NoData, o.annotations + " holds no annotations");
    }
    const auto rule = o.majority ? AcceptanceRule::Majority : AcceptanceRule::Unanimous;
    const auto est = adjusted_precision(set, o.bootstrap_reps, o.rng_seed, rule);
    json kappas = json::array();
    for (const auto& pk : pairwise_kappa(set)) {
        kappas.push_back({{"rater_a", pk.rater_a},
                          {"rater_b", pk.rater_b},
                          {"shared_items", pk.shared_items},
                          {"kappa", pk.kappa ? json(*pk.kappa) : json()}});
    }
    json report = {{"annotated", est.annotated},
                   {"accepted", est.accepted},
                   {"adjusted_precision", est.estimate},
                   {"ci_low", est.ci_low},
                   {"ci_high", est.ci_high},
                   {"bootstrap_reps", o.bootstrap_reps},
                   {"rng_seed", o.rng_seed},
                   {"acceptance_rule", o.majority ? "majority" : "unanimous"},
                   {"pairwise_kappa", kappas}};
    if (!o.gold.empty()) {
        const WordList gold = load_word_list(o.gold);
        std::size_t hits = 0;
        for (const auto& [w, _] : set.items()) {
            hits += gold.contains(w.str()) ? 1 : 0;
        }
        report["lower_bound_precision"] = static_cast<double>(hits) / static_cast<double>(set.size());
    }
    if (o.out.empty()) {
        std::cout << pretty(report);
    } else {
        write_file(o.out, pretty(report));
    }
    return 0;
}

// serve ----------------------------------------------------------------------

struct ServeOptions {
    ResourceOptions resources;
    std::string host = "127.0.0.1";
    int port = 8080;
    std::string state_dir = "lexkit-sessions";
};

httplib::Server* g_server = nullptr;

int run_serve(const ServeOptions& o) {
    const ResourceStore store = o.resources.load();
    SessionStore sessions(o.state_dir);
    httplib::Server server;
    install_routes(server, store, sessions);
    g_server = &server;
    std::signal(SIGINT, [](int) {
        if (g_server != nullptr) {
            g_server->stop();
        }
    });
    std::cerr << "listening on http://" << o.host << ':' << o.port << '\n';
    if (!server.listen(o.host, o.port)) {
        throw Error(ErrorCode::Io, "cannot listen on " + o.host + ":" + std::to_string(o.port));
    }
    return 0;
}

int exit_code(const Error& e) {
    switch (e.code()) {
    case ErrorCode::NoData:
        return 3;
    case ErrorCode::ParseError:
    case ErrorCode::Io:
    case ErrorCode::InvalidArgument:
    case ErrorCode::InvalidWord:
    case ErrorCode::InvalidPattern:
    case ErrorCode::LanguageUnavailable:
        return 2;
    default:
        return 1;
    }
}

}

int main(int argc, char** argv) {
    CLI::App app{"lexkit: lexicon expansion and evaluation toolkit"};
    app.require_subcommand(1);

    BuildGraphOptions build;
    auto* cmd_build = app.add_subcommand("build-graph", "Build a colexification graph bundle from bilingual dictionaries");
    cmd_build->add_option("--dict", build.dicts, "Dictionary TSV files or directories (source->English)")->required();
    cmd_build->add_option("--translate", build.translations, "English->X dictionaries used to add X labels");
    cmd_build->add_option("--min-languages", build.min_languages, "Languages needed to keep an edge")
        ->capture_default_str();
    cmd_build->add_option("--out", build.out, "Output bundle directory")->required();

    ExpandOptions expand;
    auto* cmd_expand = app.add_subcommand("expand", "Expand a seed word list");
    expand.resources.attach(cmd_expand);
    cmd_expand->add_option("--method", expand.method,
                           "colex|synonym|embedding|embedding-threshold|embedding-centroid|union|intersection")
        ->capture_default_str();
    cmd_expand->add_option("--mode", expand.mode, "threshold|centroid (with --method embedding)")
        ->check(CLI::IsMember({"threshold", "centroid"}))
        ->capture_default_str();
    cmd_expand->add_option("--seeds", expand.seeds, "Seed word list")->required();
    cmd_expand->add_option("--inputs", expand.inputs, "Saved expansions to combine (union/intersection)");
    cmd_expand->add_option("--out", expand.out, "Output word list")->required();
    cmd_expand->add_option("--sidecar", expand.sidecar, "JSON sidecar path (default: OUT.json)");

    EvalOptions eval;
    auto* cmd_eval = app.add_subcommand("eval", "Benchmark a method against gold word lists");
    eval.resources.attach(cmd_eval);
    cmd_eval->add_option("--method", eval.method, "Expansion method")->capture_default_str();
    cmd_eval->add_option("--mode", eval.mode, "threshold|centroid (with --method embedding)")
        ->check(CLI::IsMember({"threshold", "centroid"}));
    cmd_eval->add_option("--gold", eval.gold, "Gold word lists (may contain trailing-* wildcards)")->required();
    cmd_eval->add_option("--dictionary", eval.dictionary, "Dictionary used to resolve wildcards");
    cmd_eval->add_option("--fraction", eval.fractions, "Seed fraction(s) in (0,1)");
    cmd_eval->add_flag("--sweep", eval.sweep, "Run fractions 0.1, 0.2, ..., 0.9");
    cmd_eval->add_option("--seed-count", eval.seed_count, "Draw this many random seeds per repetition");
    cmd_eval->add_option("--seeds-file", eval.seeds_file, "Use this fixed seed list");
    cmd_eval->add_option("--reps", eval.reps, "Repetitions per setting")->capture_default_str();
    cmd_eval->add_option("--baseline-reps", eval.baseline_reps, "Null-model samples per repetition")
        ->capture_default_str();
    cmd_eval->add_option("--seed", eval.rng_seed, "Random seed")->capture_default_str();
    cmd_eval->add_flag("--strict-fn", eval.strict_fn, "Count seeds missing from W as false negatives");
    cmd_eval->add_option("--out-json", eval.out_json, "Full report (JSON)");
    cmd_eval->add_option("--out-csv", eval.out_csv, "Summary table (CSV)");

    ScoreOptions score;
    auto* cmd_score = app.add_subcommand("score", "Score documents by lexicon frequency and correlate with a reference");
    cmd_score->add_option("--corpus", score.corpus, "JSON-lines file or directory of .txt files")->required();
    cmd_score->add_option("--lexicon", score.lexica, "Lexicon word lists")->required();
    cmd_score->add_option("--reference", score.reference, "Reference lexicon to correlate against");
    cmd_score->add_option("--dictionary", score.dictionary, "Dictionary used to resolve wildcards");
    cmd_score->add_flag("--raw-counts", score.raw_counts, "Score raw hit counts instead of relative frequency");
    cmd_score->add_flag("--spearman", score.spearman, "Use Spearman instead of Pearson correlation");
    cmd_score->add_option("--bootstrap-reps", score.bootstrap_reps, "Bootstrap resamples for the CI")
        ->capture_default_str();
    cmd_score->add_option("--seed", score.rng_seed, "Random seed")->capture_default_str();
    cmd_score->add_option("--out-csv", score.out_csv, "Per-document scores (CSV)");
    cmd_score->add_option("--out-json", score.out_json, "Correlation report (JSON)");

    SampleOptions sample;
    auto* cmd_sample = app.add_subcommand("sample", "Draw the words of a lexicon to annotate");
    cmd_sample->add_option("--lexicon", sample.lexicon, "Expanded word list")->required();
    cmd_sample->add_option("--n", sample.n, "Sample size for long lists")->capture_default_str();
    cmd_sample->add_option("--full-limit", sample.full_limit, "Lists up to this size are annotated in full")
        ->capture_default_str();
    cmd_sample->add_option("--seed", sample.rng_seed, "Random seed")->capture_default_str();
    cmd_sample->add_option("--out", sample.out, "Output word list (default: stdout)");

    PrecisionOptions precision;
    auto* cmd_precision = app.add_subcommand("precision", "Adjusted precision and rater agreement from annotations");
    cmd_precision->add_option("--annotations", precision.annotations, "CSV word,rater,label")->required();
    cmd_precision->add_option("--gold", precision.gold, "Gold list for the lower-bound precision");
    cmd_precision->add_option("--bootstrap-reps", precision.bootstrap_reps, "Bootstrap resamples")
        ->capture_default_str();
    cmd_precision->add_option("--seed", precision.rng_seed, "Random seed")->capture_default_str();
    cmd_precision->add_flag("--majority", precision.majority, "Accept on strict majority instead of unanimity");
    cmd_precision->add_option("--out", precision.out, "Output JSON (default: stdout)");

    ServeOptions serve;
    auto* cmd_serve = app.add_subcommand("serve", "Run the local curation HTTP service");
    serve.resources.attach(cmd_serve);
    cmd_serve->add_option("--host", serve.host, "Bind address")->capture_default_str();
    cmd_serve->add_option("--port", serve.port, "Port")->capture_default_str();
    cmd_serve->add_option("--state-dir", serve.state_dir, "Directory for session logs")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (cmd_build->parsed()) return run_build_graph(build);
        if (cmd_expand->parsed()) return run_expand(expand);
        if (cmd_eval->parsed()) return run_eval(eval);
        if (cmd_score->parsed()) return run_score(score);
        if (cmd_sample->parsed()) return run_sample(sample);
        if (cmd_precision->parsed()) return run_precision(precision);
        if (cmd_serve->parsed()) return run_serve(serve);
    } catch (const Error& e) {
        std::cerr << "lexkit: " << e.what() << '\n';
        return exit_code(e);
    } catch (const std::exception& e) {
        std::cerr << "lexkit: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

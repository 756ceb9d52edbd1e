#ifndef LEXKIT_EVAL_HPP
#define LEXKIT_EVAL_HPP

#include <cmath>
#include <concepts>
#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "core.hpp"
#include "error.hpp"
#include "random.hpp"

namespace lexkit {

struct Confusion {
    WordList tp_words;
    WordList fp_words;
    WordList fn_words;

    std::size_t tp() const { return tp_words.size(); }
    std::size_t fp() const { return fp_words.size(); }
    std::size_t fn() const { return fn_words.size(); }
};

struct Counts {
    std::size_t tp = 0;
    std::size_t fp = 0;
    std::size_t fn = 0;
    friend bool operator==(const Counts&, const Counts&) = default;
};

struct Metrics {
    double precision = 0;
    double recall = 0;
    double f1 = 0;
    friend bool operator==(const Metrics&, const Metrics&) = default;
};

/// Scores `expanded` against `original` given the `seeds` it started from.
/// New words W = expanded \ seeds; TP = original ∩ W; FP = W \ original.
/// FN = original \ (W ∪ seeds) by default: seeds were handed to the method,
/// not retrieved. With `strict_fn` FN = original \ W, seeds included.
/// Seeds outside `original` are tolerated (expert seed lists contain them).
inline Confusion confusion(const WordList& original, const WordList& seeds, const WordList& expanded,
                           bool strict_fn = false) {
    Confusion c;
    WordList added = set_difference(expanded, seeds);
    for (const auto& w : added) {
        (original.contains(w.str()) ? c.tp_words : c.fp_words).insert(w);
    }
    for (const auto& w : original) {
        if (added.contains(w.str())) {
            continue;
        }
        if (!strict_fn && seeds.contains(w.str())) {
            continue;
        }
        c.fn_words.insert(w);
    }
    return c;
}

inline Metrics prf(std::size_t tp, std::size_t fp, std::size_t fn) {
    Metrics m;
    const auto t = static_cast<double>(tp);
    m.precision = tp + fp == 0 ? 0.0 : t / static_cast<double>(tp + fp);
    m.recall = tp + fn == 0 ? 0.0 : t / static_cast<double>(tp + fn);
    m.f1 = m.precision + m.recall == 0 ? 0.0 : 2 * m.precision * m.recall / (m.precision + m.recall);
    return m;
}

inline Metrics prf(const Confusion& c) {
    return prf(c.tp(), c.fp(), c.fn());
}

inline Metrics prf(const Counts& c) {
    return prf(c.tp, c.fp, c.fn);
}

/// Anything that turns a seed list into an Expansion and exposes the
/// candidate universe its null baseline samples from.
template<typename T_>
concept Expander = requires(const T_& e, const WordList& seeds) {
    { e.expand(seeds) } -> std::convertible_to<Expansion>;
    { e.universe() } -> std::convertible_to<const WordList&>;
};

/// Type-erased expander, handy when the method is chosen at run time.
class ExpansionMethod {
public:
    using Fn = std::function<Expansion(const WordList&)>;

    ExpansionMethod(std::string id, Fn fn, WordList universe)
        : id_(std::move(id)), fn_(std::move(fn)), universe_(std::move(universe)) {}

    Expansion expand(const WordList& seeds) const { return fn_(seeds); }
    const WordList& universe() const noexcept { return universe_; }
    const std::string& id() const noexcept { return id_; }

private:
    std::string id_;
    Fn fn_;
    WordList universe_;
};

enum class CombineMode { Union, Intersection };

/// Combines the new-word parts of several expansions of the same seeds.
/// A seed counts as unmatched for a union when no component matched it, and
/// for an intersection when any component missed it.
inline Expansion combine(const std::vector<Expansion>& parts, CombineMode mode) {
    if (parts.size() < 2) {
        throw Error(ErrorCode::InvalidArgument, "combining needs at least two expansions");
    }
    const WordList& seeds = parts.front().seeds;
    Expansion out{seeds, WordList(seeds.name()), WordList(seeds.name())};

    WordList added = set_difference(parts.front().added, seeds);
    for (std::size_t i = 1; i < parts.size(); ++i) {
        WordList next = set_difference(parts[i].added, seeds);
        added = mode == CombineMode::Union ? set_union(added, next) : set_intersection(added, next);
    }
    out.added = sorted(added);

    for (const auto& s : seeds) {
        std::size_t missed = 0;
        for (const auto& p : parts) {
            missed += p.unmatched.contains(s.str()) ? 1 : 0;
        }
        const bool unmatched = mode == CombineMode::Union ? missed == parts.size() : missed > 0;
        if (unmatched) {
            out.unmatched.insert(s);
        }
    }
    return out;
}

/// Set algebra over whole lexica: seeds are removed from every list first,
/// combined, then re-attached in front.
inline WordList combine(const std::vector<WordList>& lexica, const WordList& seeds, CombineMode mode) {
    std::vector<Expansion> parts;
    parts.reserve(lexica.size());
    for (const auto& l : lexica) {
        parts.push_back({seeds, set_difference(l, seeds), WordList()});
    }
    return combine(parts, mode).lexicon();
}

/// Combines several expanders into one (union / intersection models).
/// Its baseline universe is the union of the components' universes.
inline ExpansionMethod combine_methods(std::vector<ExpansionMethod> methods, CombineMode mode) {
    if (methods.size() < 2) {
        throw Error(ErrorCode::InvalidArgument, "combining needs at least two methods");
    }
    WordList universe;
    for (const auto& m : methods) {
        universe = set_union(universe, m.universe());
    }
    auto fn = [methods = std::move(methods), mode](const WordList& seeds) {
        std::vector<Expansion> parts;
        for (const auto& m : methods) {
            try {
                parts.push_back(m.expand(seeds));
            } catch (const Error& e) {
                if (e.code() != ErrorCode::NotExpandable && e.code() != ErrorCode::DegenerateVector) {
                    throw;
                }
                parts.push_back({seeds, WordList(seeds.name()), seeds});
            }
        }
        return combine(parts, mode);
    };
    return ExpansionMethod(mode == CombineMode::Union ? "union" : "intersection", std::move(fn), std::move(universe));
}

struct BaselineResult {
    Metrics mean;
    Metrics stddev;
    std::size_t repetitions = 0;
};

namespace detail {

/// Arithmetic mean in input order; shared by aggregation and recomputation
/// so that both are bit-identical.
inline double mean_of(const std::vector<double>& xs) {
    if (xs.empty()) {
        return 0.0;
    }
    double s = 0;
    for (double x : xs) {
        s += x;
    }
    return s / static_cast<double>(xs.size());
}

/// Sample standard deviation (n - 1); zero for fewer than two values.
inline double stddev_of(const std::vector<double>& xs) {
    if (xs.size() < 2) {
        return 0.0;
    }
    const double m = mean_of(xs);
    double s = 0;
    for (double x : xs) {
        s += (x - m) * (x - m);
    }
    return std::sqrt(s / static_cast<double>(xs.size() - 1));
}

}

/// Null model: `reps` uniform samples of `target_size` words drawn from the
/// universe minus the seeds, each scored as if it were W. Draws use stream
/// `counter` of `rng_seed`.
inline BaselineResult baseline_null(const WordList& universe, std::size_t target_size, const WordList& original,
                                    const WordList& seeds, std::size_t reps, std::uint64_t rng_seed,
                                    std::uint64_t counter = 0, bool strict_fn = false) {
    if (reps == 0) {
        throw Error(ErrorCode::InvalidArgument, "baseline needs at least one repetition");
    }
    std::vector<char> pool_is_gold;
    for (const auto& w : universe) {
        if (!seeds.contains(w.str())) {
            pool_is_gold.push_back(original.contains(w.str()) ? 1 : 0);
        }
    }
    if (target_size > pool_is_gold.size()) {
        throw Error(ErrorCode::InfeasibleSample, "cannot draw " + std::to_string(target_size) + " words from a pool of " +
                                                     std::to_string(pool_is_gold.size()));
    }
    std::size_t gold_total = 0;
    for (const auto& w : original) {
        if (strict_fn || !seeds.contains(w.str())) {
            ++gold_total;
        }
    }

    auto engine = stream_engine(rng_seed, Stream::Baseline, counter);
    std::vector<std::size_t> scratch;
    std::vector<double> p, r, f;
    p.reserve(reps);
    r.reserve(reps);
    f.reserve(reps);
    for (std::size_t k = 0; k < reps; ++k) {
        sample_indices(pool_is_gold.size(), target_size, engine, scratch);
        std::size_t tp = 0;
        for (std::size_t i = 0; i < target_size; ++i) {
            tp += static_cast<std::size_t>(pool_is_gold[scratch[i]]);
        }
        const Metrics m = prf(tp, target_size - tp, gold_total - tp);
        p.push_back(m.precision);
        r.push_back(m.recall);
        f.push_back(m.f1);
    }
    BaselineResult out;
    out.repetitions = reps;
    out.mean = {detail::mean_of(p), detail::mean_of(r), detail::mean_of(f)};
    out.stddev = {detail::stddev_of(p), detail::stddev_of(r), detail::stddev_of(f)};
    return out;
}

struct ExperimentConfig {
    std::string method;
    /// Exactly one of these selects the seeds. With explicit seeds every
    /// repetition uses the same list, so one repetition suffices.
    std::optional<double> seed_fraction;
    std::optional<std::size_t> seed_count;
    std::optional<WordList> explicit_seeds;

    std::size_t repetitions = 50;
    std::uint64_t rng_seed = 0;
    std::size_t baseline_repetitions = 1000;
    bool strict_fn = false;

    void validate() const {
        const int chosen = (seed_fraction ? 1 : 0) + (seed_count ? 1 : 0) + (explicit_seeds ? 1 : 0);
        if (chosen != 1) {
            throw Error(ErrorCode::InvalidArgument, "choose exactly one of seed fraction, seed count or explicit seeds");
        }
        if (seed_fraction && !(*seed_fraction > 0.0 && *seed_fraction < 1.0)) {
            throw Error(ErrorCode::InvalidArgument, "seed fraction must lie in (0, 1)");
        }
        if (seed_count && *seed_count == 0) {
            throw Error(ErrorCode::InvalidArgument, "seed count must be positive");
        }
        if (repetitions == 0) {
            throw Error(ErrorCode::InvalidArgument, "repetitions must be positive");
        }
        if (baseline_repetitions == 0) {
            throw Error(ErrorCode::InvalidArgument, "baseline repetitions must be positive");
        }
    }
};

/// ceil(fraction * n), computed so that exact products (0.9 * 10) are not
/// pushed up by rounding noise.
inline std::size_t seed_count_for(double fraction, std::size_t n) {
    const double raw = fraction * static_cast<double>(n);
    const double nearest = std::round(raw);
    if (std::abs(raw - nearest) <= 1e-9 * std::max(1.0, raw)) {
        return static_cast<std::size_t>(nearest);
    }
    return static_cast<std::size_t>(std::ceil(raw));
}

struct Repetition {
    std::size_t index = 0;
    std::vector<std::string> seeds;
    bool expandable = false;
    Counts counts;
    Metrics metrics;
    std::size_t lexicon_size = 0;
    std::size_t added_size = 0;
    Metrics baseline;

    friend bool operator==(const Repetition&, const Repetition&) = default;
};

struct Summary {
    std::size_t expandable_repetitions = 0;
    Metrics mean;
    Metrics stddev;
    Metrics baseline_mean;
    double mean_lexicon_size = 0;
    double mean_added_size = 0;

    friend bool operator==(const Summary&, const Summary&) = default;
};

struct EvalReport {
    std::string list;
    std::string method;
    std::optional<double> seed_fraction;
    std::optional<std::size_t> seed_count;
    bool explicit_seeds = false;
    std::size_t repetitions = 0;
    std::uint64_t rng_seed = 0;
    std::size_t baseline_repetitions = 0;
    bool strict_fn = false;
    std::size_t original_size = 0;
    std::vector<Repetition> runs;
    Summary summary;

    bool expandable() const { return summary.expandable_repetitions > 0; }

    friend bool operator==(const EvalReport&, const EvalReport&) = default;
};

/// Aggregates over the expandable repetitions only; the others are kept in
/// the trace for coverage accounting.
inline Summary summarize(const std::vector<Repetition>& runs) {
    std::vector<double> p, r, f, bp, br, bf, ls, as;
    for (const auto& run : runs) {
        if (!run.expandable) {
            continue;
        }
        p.push_back(run.metrics.precision);
        r.push_back(run.metrics.recall);
        f.push_back(run.metrics.f1);
        bp.push_back(run.baseline.precision);
        br.push_back(run.baseline.recall);
        bf.push_back(run.baseline.f1);
        ls.push_back(static_cast<double>(run.lexicon_size));
        as.push_back(static_cast<double>(run.added_size));
    }
    Summary s;
    s.expandable_repetitions = p.size();
    s.mean = {detail::mean_of(p), detail::mean_of(r), detail::mean_of(f)};
    s.stddev = {detail::stddev_of(p), detail::stddev_of(r), detail::stddev_of(f)};
    s.baseline_mean = {detail::mean_of(bp), detail::mean_of(br), detail::mean_of(bf)};
    s.mean_lexicon_size = detail::mean_of(ls);
    s.mean_added_size = detail::mean_of(as);
    return s;
}

/// Seeds for repetition `k`: an independent uniform draw without replacement
/// from `original`, kept in the original list's order.
inline WordList draw_seeds(const WordList& original, std::size_t count, std::uint64_t rng_seed, std::size_t k) {
    auto engine = stream_engine(rng_seed, Stream::Seeds, k);
    auto picked = sample_indices(original.size(), count, engine);
    std::sort(picked.begin(), picked.end());
    WordList seeds(original.name());
    for (std::size_t i : picked) {
        seeds.insert(original[i]);
    }
    return seeds;
}

/// Scores one seed set: expand, compare to the gold list, and run the
/// length-matched null baseline on the method's universe.
template<Expander E_>
Repetition run_repetition(const WordList& original, const E_& expander, const WordList& seeds,
                          const ExperimentConfig& cfg, std::size_t k) {
    Repetition rep;
    rep.index = k;
    rep.seeds = seeds.strings();

    std::optional<Expansion> expansion;
    try {
        expansion = expander.expand(seeds);
    } catch (const Error& e) {
        // Centroid expansion signals an empty or cancelling seed set by throwing.
        if (e.code() != ErrorCode::NotExpandable && e.code() != ErrorCode::DegenerateVector) {
            throw;
        }
    }
    if (!expansion || !expansion->expandable()) {
        return rep;
    }
    rep.expandable = true;
    const WordList lexicon = expansion->lexicon();
    const Confusion c = confusion(original, seeds, lexicon, cfg.strict_fn);
    rep.counts = {c.tp(), c.fp(), c.fn()};
    rep.metrics = prf(c);
    rep.lexicon_size = lexicon.size();
    rep.added_size = c.tp() + c.fp();
    rep.baseline = baseline_null(expander.universe(), rep.added_size, original, seeds, cfg.baseline_repetitions,
                                 cfg.rng_seed, k, cfg.strict_fn)
                       .mean;
    return rep;
}

/// Repeated random-seed experiment on one gold list. Repetition k depends
/// only on (rng_seed, k), so any repetition can be replayed alone.
template<Expander E_>
EvalReport random_seed_experiment(const WordList& original, const E_& expander, const ExperimentConfig& cfg) {
    cfg.validate();
    if (original.empty()) {
        throw Error(ErrorCode::InvalidArgument, "gold list '" + original.name() + "' is empty");
    }
    EvalReport report;
    report.list = original.name();
    report.method = cfg.method;
    report.seed_fraction = cfg.seed_fraction;
    report.seed_count = cfg.seed_count;
    report.explicit_seeds = cfg.explicit_seeds.has_value();
    report.rng_seed = cfg.rng_seed;
    report.baseline_repetitions = cfg.baseline_repetitions;
    report.strict_fn = cfg.strict_fn;
    report.original_size = original.size();

    if (cfg.explicit_seeds) {
        report.repetitions = 1;
        report.runs.push_back(run_repetition(original, expander, *cfg.explicit_seeds, cfg, 0));
        report.summary = summarize(report.runs);
        return report;
    }

    std::size_t count = cfg.seed_fraction ? seed_count_for(*cfg.seed_fraction, original.size()) : *cfg.seed_count;
    if (count == 0 || count > original.size()) {
        throw Error(ErrorCode::InvalidArgument, "cannot draw " + std::to_string(count) + " seeds from '" +
                                                    original.name() + "' (" + std::to_string(original.size()) +
                                                    " words)");
    }
    report.repetitions = cfg.repetitions;
    report.runs.reserve(cfg.repetitions);
    for (std::size_t k = 0; k < cfg.repetitions; ++k) {
        WordList seeds = draw_seeds(original, count, cfg.rng_seed, k);
        report.runs.push_back(run_repetition(original, expander, seeds, cfg, k));
    }
    report.summary = summarize(report.runs);
    return report;
}

/// Runs the experiment for each fraction, e.g. 0.1, 0.2, ..., 0.9.
template<Expander E_>
std::vector<EvalReport> fraction_sweep(const WordList& original, const E_& expander, ExperimentConfig cfg,
                                       const std::vector<double>& fractions) {
    std::vector<EvalReport> out;
    for (double f : fractions) {
        cfg.seed_fraction = f;
        cfg.seed_count.reset();
        cfg.explicit_seeds.reset();
        out.push_back(random_seed_experiment(original, expander, cfg));
    }
    return out;
}

inline std::vector<double> default_fractions() {
    return {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
}

/// Share of gold lists with at least one expandable repetition.
inline double coverage(const std::vector<EvalReport>& reports) {
    if (reports.empty()) {
        return 0.0;
    }
    std::size_t covered = 0;
    for (const auto& r : reports) {
        covered += r.expandable() ? 1 : 0;
    }
    return static_cast<double>(covered) / static_cast<double>(reports.size());
}

/// Cross-list aggregates. `per_list` averages each list's means (lists with
/// no expandable repetition are skipped); `pooled` averages every expandable
/// repetition of every list.
struct CrossListSummary {
    Metrics per_list;
    Metrics pooled;
    Metrics baseline_per_list;
    double mean_lexicon_size = 0;
    double coverage = 0;
    std::size_t lists = 0;
};

inline CrossListSummary aggregate(const std::vector<EvalReport>& reports) {
    CrossListSummary out;
    out.lists = reports.size();
    out.coverage = coverage(reports);
    std::vector<double> lp, lr, lf, bp, br, bf, size;
    std::vector<Repetition> pooled;
    for (const auto& rep : reports) {
        if (!rep.expandable()) {
            continue;
        }
        lp.push_back(rep.summary.mean.precision);
        lr.push_back(rep.summary.mean.recall);
        lf.push_back(rep.summary.mean.f1);
        bp.push_back(rep.summary.baseline_mean.precision);
        br.push_back(rep.summary.baseline_mean.recall);
        bf.push_back(rep.summary.baseline_mean.f1);
        size.push_back(rep.summary.mean_lexicon_size);
        pooled.insert(pooled.end(), rep.runs.begin(), rep.runs.end());
    }
    out.per_list = {detail::mean_of(lp), detail::mean_of(lr), detail::mean_of(lf)};
    out.baseline_per_list = {detail::mean_of(bp), detail::mean_of(br), detail::mean_of(bf)};
    out.pooled = summarize(pooled).mean;
    out.mean_lexicon_size = detail::mean_of(size);
    return out;
}

// JSON serialization.

inline void to_json(nlohmann::json& j, const Metrics& m) {
    j = {{"precision", m.precision}, {"recall", m.recall}, {"f1", m.f1}};
}
inline void from_json(const nlohmann::json& j, Metrics& m) {
    j.at("precision").get_to(m.precision);
    j.at("recall").get_to(m.recall);
    j.at("f1").get_to(m.f1);
}

inline void to_json(nlohmann::json& j, const Counts& c) {
    j = {{"tp", c.tp}, {"fp", c.fp}, {"fn", c.fn}};
}
inline void from_json(const nlohmann::json& j, Counts& c) {
    j.at("tp").get_to(c.tp);
    j.at("fp").get_to(c.fp);
    j.at("fn").get_to(c.fn);
}

inline void to_json(nlohmann::json& j, const Repetition& r) {
    j = {{"index", r.index},
         {"seeds", r.seeds},
         {"expandable", r.expandable},
         {"counts", r.counts},
         {"metrics", r.metrics},
         {"lexicon_size", r.lexicon_size},
         {"added_size", r.added_size},
         {"baseline", r.baseline}};
}
inline void from_json(const nlohmann::json& j, Repetition& r) {
    j.at("index").get_to(r.index);
    j.at("seeds").get_to(r.seeds);
    j.at("expandable").get_to(r.expandable);
    j.at("counts").get_to(r.counts);
    j.at("metrics").get_to(r.metrics);
    j.at("lexicon_size").get_to(r.lexicon_size);
    j.at("added_size").get_to(r.added_size);
    j.at("baseline").get_to(r.baseline);
}

inline void to_json(nlohmann::json& j, const Summary& s) {
    j = {{"expandable_repetitions", s.expandable_repetitions},
         {"mean", s.mean},
         {"stddev", s.stddev},
         {"baseline_mean", s.baseline_mean},
         {"mean_lexicon_size", s.mean_lexicon_size},
         {"mean_added_size", s.mean_added_size}};
}
inline void from_json(const nlohmann::json& j, Summary& s) {
    j.at("expandable_repetitions").get_to(s.expandable_repetitions);
    j.at("mean").get_to(s.mean);
    j.at("stddev").get_to(s.stddev);
    j.at("baseline_mean").get_to(s.baseline_mean);
    j.at("mean_lexicon_size").get_to(s.mean_lexicon_size);
    j.at("mean_added_size").get_to(s.mean_added_size);
}

inline void to_json(nlohmann::json& j, const EvalReport& r) {
    nlohmann::json config = {{"method", r.method},
                             {"seed_fraction", r.seed_fraction ? nlohmann::json(*r.seed_fraction) : nlohmann::json()},
                             {"seed_count", r.seed_count ? nlohmann::json(*r.seed_count) : nlohmann::json()},
                             {"explicit_seeds", r.explicit_seeds},
                             {"repetitions", r.repetitions},
                             {"rng_seed", r.rng_seed},
                             {"baseline_repetitions", r.baseline_repetitions},
                             {"strict_fn", r.strict_fn}};
    j = {{"list", r.list},
         {"original_size", r.original_size},
         {"config", config},
         {"repetitions", r.runs},
         {"summary", r.summary}};
}
inline void from_json(const nlohmann::json& j, EvalReport& r) {
    j.at("list").get_to(r.list);
    j.at("original_size").get_to(r.original_size);
    const auto& c = j.at("config");
    c.at("method").get_to(r.method);
    r.seed_fraction = c.at("seed_fraction").is_null() ? std::nullopt : std::optional<double>(c.at("seed_fraction").get<double>());
    r.seed_count = c.at("seed_count").is_null() ? std::nullopt
                                                : std::optional<std::size_t>(c.at("seed_count").get<std::size_t>());
    c.at("explicit_seeds").get_to(r.explicit_seeds);
    c.at("repetitions").get_to(r.repetitions);
    c.at("rng_seed").get_to(r.rng_seed);
    c.at("baseline_repetitions").get_to(r.baseline_repetitions);
    c.at("strict_fn").get_to(r.strict_fn);
    j.at("repetitions").get_to(r.runs);
    j.at("summary").get_to(r.summary);
}

/// One row per report with the columns of the usual results table.
inline void write_summary_csv(std::ostream& out, const std::vector<EvalReport>& reports) {
    out << "list,method,seed_fraction,seed_count,repetitions,expandable_repetitions,precision,recall,f1,"
           "precision_sd,recall_sd,f1_sd,baseline_precision,baseline_recall,baseline_f1,mean_size,mean_new_words\n";
    auto num = [](double x) {
        std::ostringstream s;
        s.precision(6);
        s << std::fixed << x;
        return s.str();
    };
    for (const auto& r : reports) {
        const auto& s = r.summary;
        out << detail::csv_field(r.list) << ',' << detail::csv_field(r.method) << ',' << (r.seed_fraction ? num(*r.seed_fraction) : "") << ','
            << (r.seed_count ? std::to_string(*r.seed_count) : "") << ',' << r.repetitions << ','
            << s.expandable_repetitions << ',' << num(s.mean.precision) << ',' << num(s.mean.recall) << ','
            << num(s.mean.f1) << ',' << num(s.stddev.precision) << ',' << num(s.stddev.recall) << ','
            << num(s.stddev.f1) << ',' << num(s.baseline_mean.precision) << ',' << num(s.baseline_mean.recall) << ','
            << num(s.baseline_mean.f1) << ',' << num(s.mean_lexicon_size) << ',' << num(s.mean_added_size) << '\n';
    }
}

}

#endif

#ifndef LEXKIT_ANNOTATION_HPP
#define LEXKIT_ANNOTATION_HPP

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "core.hpp"
#include "error.hpp"
#include "random.hpp"

namespace lexkit {

enum class Label { Irrelevant, Relevant };

inline std::string_view to_string(Label l) {
    return l == Label::Relevant ? "relevant" : "irrelevant";
}

inline std::optional<Label> parse_label(std::string_view text) {
    if (text == "relevant" || text == "accept" || text == "1") {
        return Label::Relevant;
    }
    if (text == "irrelevant" || text == "reject" || text == "0") {
        return Label::Irrelevant;
    }
    return std::nullopt;
}

/// Unanimous: every rater said relevant. Majority: strictly more than half did.
enum class AcceptanceRule { Unanimous, Majority };

struct RaterLabel {
    std::string rater;
    Label label;
    friend bool operator==(const RaterLabel&, const RaterLabel&) = default;
};

/// Per-word relevance judgements from several raters, in first-seen word order.
class AnnotationSet {
public:
    /// A repeated (word, rater) pair overwrites the earlier label.
    void add(const Word& word, std::string rater, Label label) {
        auto [it, fresh] = index_.emplace(word.str(), items_.size());
        if (fresh) {
            items_.push_back({word, {}});
        }
        auto& labels = items_[it->second].second;
        for (auto& rl : labels) {
            if (rl.rater == rater) {
                rl.label = label;
                return;
            }
        }
        labels.push_back({std::move(rater), label});
    }

    std::size_t size() const noexcept { return items_.size(); }
    bool empty() const noexcept { return items_.empty(); }

    const std::vector<std::pair<Word, std::vector<RaterLabel>>>& items() const noexcept { return items_; }

    const std::vector<RaterLabel>* labels(std::string_view word) const {
        auto it = index_.find(std::string(word));
        return it == index_.end() ? nullptr : &items_[it->second].second;
    }

    /// Throws InvalidArgument when the word has fewer than two labels.
    bool accepted(std::string_view word, AcceptanceRule rule = AcceptanceRule::Unanimous) const {
        const auto* ls = labels(word);
        if (ls == nullptr) {
            throw Error(ErrorCode::InvalidArgument, "word '" + std::string(word) + "' is not annotated");
        }
        return accepted(*ls, word, rule);
    }

    /// Accepted flag for every word, in item order.
    std::vector<bool> acceptance(AcceptanceRule rule = AcceptanceRule::Unanimous) const {
        std::vector<bool> out;
        out.reserve(items_.size());
        for (const auto& [w, ls] : items_) {
            out.push_back(accepted(ls, w.str(), rule));
        }
        return out;
    }

    std::vector<std::string> raters() const {
        std::vector<std::string> out;
        for (const auto& [_, ls] : items_) {
            for (const auto& rl : ls) {
                if (std::find(out.begin(), out.end(), rl.rater) == out.end()) {
                    out.push_back(rl.rater);
                }
            }
        }
        std::sort(out.begin(), out.end());
        return out;
    }

private:
    static bool accepted(const std::vector<RaterLabel>& ls, std::string_view word, AcceptanceRule rule) {
        if (ls.size() < 2) {
            throw Error(ErrorCode::InvalidArgument, "word '" + std::string(word) + "' needs at least two labels");
        }
        const auto yes = static_cast<std::size_t>(
            std::count_if(ls.begin(), ls.end(), [](const RaterLabel& rl) { return rl.label == Label::Relevant; }));
        return rule == AcceptanceRule::Unanimous ? yes == ls.size() : 2 * yes > ls.size();
    }

    std::vector<std::pair<Word, std::vector<RaterLabel>>> items_;
    std::unordered_map<std::string, std::size_t> index_;
};

/// CSV `word,rater,label`; a header row is optional.
inline AnnotationSet read_annotations_csv(std::istream& in) {
    AnnotationSet set;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (unicode::trim(line).empty()) {
            continue;
        }
        auto fields = detail::split_csv_line(line);
        if (fields.size() != 3) {
            throw ParseError(lineno, "expected word,rater,label");
        }
        if (lineno == 1 && fields[0] == "word" && fields[1] == "rater") {
            continue;
        }
        auto label = parse_label(fields[2]);
        if (!label) {
            throw ParseError(lineno, "unknown label '" + fields[2] + "'");
        }
        if (fields[1].empty()) {
            throw ParseError(lineno, "empty rater id");
        }
        try {
            set.add(Word::normalize(fields[0]), fields[1], *label);
        } catch (const Error& e) {
            throw ParseError(lineno, e.what());
        }
    }
    return set;
}

inline AnnotationSet load_annotations_csv(const std::filesystem::path& path) {
    auto in = detail::open_input(path);
    return read_annotations_csv(in);
}

inline void write_annotations_csv(std::ostream& out, const AnnotationSet& set) {
    out << "word,rater,label\n";
    for (const auto& [w, ls] : set.items()) {
        for (const auto& rl : ls) {
            out << detail::csv_field(w.str()) << ',' << detail::csv_field(rl.rater) << ',' << to_string(rl.label)
                << '\n';
        }
    }
}

inline constexpr std::size_t kAnnotationSampleSize = 300;
inline constexpr std::size_t kFullAnnotationLimit = 2000;

/// Lists up to `full_limit` words (or no longer than `n`) are annotated in
/// full; longer ones are sampled uniformly without replacement, keeping the
/// lexicon's order.
inline WordList sample_for_annotation(const WordList& lexicon, std::size_t n = kAnnotationSampleSize,
                                      std::uint64_t rng_seed = 0, std::size_t full_limit = kFullAnnotationLimit) {
    if (n == 0) {
        throw Error(ErrorCode::InvalidArgument, "annotation sample size must be positive");
    }
    if (lexicon.size() <= n || lexicon.size() <= full_limit) {
        return lexicon;
    }
    auto engine = stream_engine(rng_seed, Stream::Annotation, 0);
    auto picked = sample_indices(lexicon.size(), n, engine);
    std::sort(picked.begin(), picked.end());
    WordList out(lexicon.name());
    for (std::size_t i : picked) {
        out.insert(lexicon[i]);
    }
    return out;
}

/// Cohen's kappa for two binary labelings of the same items.
inline double cohen_kappa(std::span<const Label> a, std::span<const Label> b) {
    if (a.size() != b.size()) {
        throw Error(ErrorCode::InvalidArgument, "raters labeled different numbers of items");
    }
    if (a.empty()) {
        throw Error(ErrorCode::InvalidArgument, "no items to compare");
    }
    const auto n = static_cast<double>(a.size());
    std::size_t agree = 0;
    std::size_t a_yes = 0;
    std::size_t b_yes = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        agree += a[i] == b[i] ? 1 : 0;
        a_yes += a[i] == Label::Relevant ? 1 : 0;
        b_yes += b[i] == Label::Relevant ? 1 : 0;
    }
    const double p_o = static_cast<double>(agree) / n;
    const double pa = static_cast<double>(a_yes) / n;
    const double pb = static_cast<double>(b_yes) / n;
    const double p_e = pa * pb + (1 - pa) * (1 - pb);
    if (p_e >= 1.0) {
        throw Error(ErrorCode::UndefinedKappa, "chance agreement is 1 (both raters constant and equal)");
    }
    return (p_o - p_e) / (1 - p_e);
}

struct PairwiseKappa {
    std::string rater_a;
    std::string rater_b;
    std::size_t shared_items = 0;
    /// Absent when the pair shares no items or kappa is undefined.
    std::optional<double> kappa;
};

/// Kappa for every rater pair over the words both labeled. Pairs are
/// reported separately, never pooled.
inline std::vector<PairwiseKappa> pairwise_kappa(const AnnotationSet& set) {
    const auto raters = set.raters();
    std::vector<PairwiseKappa> out;
    for (std::size_t i = 0; i < raters.size(); ++i) {
        for (std::size_t j = i + 1; j < raters.size(); ++j) {
            std::vector<Label> a, b;
            for (const auto& [_, ls] : set.items()) {
                std::optional<Label> la, lb;
                for (const auto& rl : ls) {
                    if (rl.rater == raters[i]) {
                        la = rl.label;
                    } else if (rl.rater == raters[j]) {
                        lb = rl.label;
                    }
                }
                if (la && lb) {
                    a.push_back(*la);
                    b.push_back(*lb);
                }
            }
            PairwiseKappa pk{raters[i], raters[j], a.size(), std::nullopt};
            if (!a.empty()) {
                try {
                    pk.kappa = cohen_kappa(a, b);
                } catch (const Error& e) {
                    if (e.code() != ErrorCode::UndefinedKappa) {
                        throw;
                    }
                }
            }
            out.push_back(std::move(pk));
        }
    }
    return out;
}

inline constexpr std::size_t kBootstrapRepetitions = 10000;

struct PrecisionEstimate {
    double estimate = 0;
    double ci_low = 0;
    double ci_high = 0;
    std::size_t annotated = 0;
    std::size_t accepted = 0;
};

/// Share of accepted words, with a 95% percentile bootstrap interval over
/// resamples (with replacement) of the annotated words.
inline PrecisionEstimate adjusted_precision(const std::vector<bool>& accepted, std::size_t bootstrap_reps = kBootstrapRepetitions,
                                            std::uint64_t rng_seed = 0) {
    if (accepted.empty()) {
        throw Error(ErrorCode::InvalidArgument, "no annotated words");
    }
    if (bootstrap_reps == 0) {
        throw Error(ErrorCode::InvalidArgument, "bootstrap needs at least one repetition");
    }
    PrecisionEstimate out;
    out.annotated = accepted.size();
    out.accepted = static_cast<std::size_t>(std::count(accepted.begin(), accepted.end(), true));
    const auto n = static_cast<double>(accepted.size());
    out.estimate = static_cast<double>(out.accepted) / n;

    auto engine = stream_engine(rng_seed, Stream::Bootstrap, 0);
    std::uniform_int_distribution<std::size_t> pick(0, accepted.size() - 1);
    std::vector<double> estimates;
    estimates.reserve(bootstrap_reps);
    for (std::size_t r = 0; r < bootstrap_reps; ++r) {
        std::size_t hits = 0;
        for (std::size_t i = 0; i < accepted.size(); ++i) {
            hits += accepted[pick(engine)] ? 1 : 0;
        }
        estimates.push_back(static_cast<double>(hits) / n);
    }
    std::sort(estimates.begin(), estimates.end());
    out.ci_low = quantile_sorted(estimates, 0.025);
    out.ci_high = quantile_sorted(estimates, 0.975);
    return out;
}

inline PrecisionEstimate adjusted_precision(const AnnotationSet& set, std::size_t bootstrap_reps = kBootstrapRepetitions,
                                            std::uint64_t rng_seed = 0,
                                            AcceptanceRule rule = AcceptanceRule::Unanimous) {
    return adjusted_precision(set.acceptance(rule), bootstrap_reps, rng_seed);
}

}

#endif

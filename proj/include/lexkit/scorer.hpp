#ifndef LEXKIT_SCORER_HPP
#define LEXKIT_SCORER_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <map>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "core.hpp"
#include "error.hpp"
#include "random.hpp"
#include "unicode.hpp"

namespace lexkit {

/// Maximal runs of letters (combining marks stay attached), lowercased.
/// Nothing is filtered: stop words count like any other token.
inline std::vector<Word> tokenize(std::string_view text) {
    std::vector<Word> tokens;
    if (!unicode::valid_utf8(text)) {
        throw Error(ErrorCode::InvalidArgument, "text is not valid UTF-8");
    }
    std::size_t start = 0;
    bool in_token = false;
    auto flush = [&](std::size_t end) {
        if (in_token && end > start) {
            tokens.push_back(Word::normalize(text.substr(start, end - start)));
        }
        in_token = false;
    };
    unicode::for_each_code_point(text, [&](UChar32 c, std::size_t offset, std::size_t) {
        const bool part = in_token ? unicode::is_word_char(c) : unicode::is_letter(c);
        if (part && !in_token) {
            start = offset;
            in_token = true;
        } else if (!part && in_token) {
            flush(offset);
        }
    });
    flush(text.size());
    return tokens;
}

struct Document {
    std::string id;
    std::string text;
    std::vector<Word> tokens;

    static Document make(std::string id, std::string text) {
        auto tokens = tokenize(text);
        return Document{std::move(id), std::move(text), std::move(tokens)};
    }
};

enum class ScoreMode { Relative, RawCount };

/// Share of tokens that are lexicon words (or their count in RawCount mode).
inline double doc_score(const Document& doc, const WordList& lexicon, ScoreMode mode = ScoreMode::Relative) {
    std::size_t hits = 0;
    for (const auto& t : doc.tokens) {
        hits += lexicon.contains(t.str()) ? 1 : 0;
    }
    if (mode == ScoreMode::RawCount) {
        return static_cast<double>(hits);
    }
    if (doc.tokens.empty()) {
        throw Error(ErrorCode::EmptyDocument, "document '" + doc.id + "' has no tokens");
    }
    return static_cast<double>(hits) / static_cast<double>(doc.tokens.size());
}

/// Per-document scores keyed by document id.
using ScoreSeries = std::map<std::string, double>;

inline ScoreSeries score_corpus(std::span<const Document> docs, const WordList& lexicon,
                                ScoreMode mode = ScoreMode::Relative) {
    ScoreSeries out;
    for (const auto& d : docs) {
        if (!out.emplace(d.id, doc_score(d, lexicon, mode)).second) {
            throw Error(ErrorCode::InvalidArgument, "duplicate document id '" + d.id + "'");
        }
    }
    return out;
}

enum class CorrelationMethod { Pearson, Spearman };

/// Pearson's r with two-pass centring; throws when either side is constant.
inline double pearson(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size() || x.empty()) {
        throw Error(ErrorCode::InvalidArgument, "series must be non-empty and of equal length");
    }
    const auto n = static_cast<double>(x.size());
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double sxy = 0, sxx = 0, syy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double dx = x[i] - mx;
        const double dy = y[i] - my;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if (sxx == 0 || syy == 0) {
        throw Error(ErrorCode::UndefinedCorrelation, "a series is constant");
    }
    return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

/// Ranks with ties sharing their average rank (1-based).
inline std::vector<double> average_ranks(std::span<const double> x) {
    std::vector<std::size_t> order(x.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        order[i] = i;
    }
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return x[a] < x[b]; });
    std::vector<double> ranks(x.size());
    std::size_t i = 0;
    while (i < order.size()) {
        std::size_t j = i;
        while (j + 1 < order.size() && x[order[j + 1]] == x[order[i]]) {
            ++j;
        }
        const double avg = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
        for (std::size_t k = i; k <= j; ++k) {
            ranks[order[k]] = avg;
        }
        i = j + 1;
    }
    return ranks;
}

inline double spearman(std::span<const double> x, std::span<const double> y) {
    const auto rx = average_ranks(x);
    const auto ry = average_ranks(y);
    return pearson(rx, ry);
}

inline double correlation(std::span<const double> x, std::span<const double> y, CorrelationMethod method) {
    return method == CorrelationMethod::Pearson ? pearson(x, y) : spearman(x, y);
}

struct CorrelationResult {
    double r = 0;
    double ci_low = 0;
    double ci_high = 0;
    std::size_t documents = 0;
    std::size_t bootstrap_reps = 0;
    /// Resamples in which a series came out constant; they are left out of the interval.
    std::size_t degenerate_resamples = 0;
};

inline constexpr std::size_t kCorrelationBootstrap = 1000;

/// Correlates two score series over their shared document ids, with a 95%
/// percentile interval from resampling documents.
inline CorrelationResult correlate(const ScoreSeries& a, const ScoreSeries& b,
                                   std::size_t bootstrap_reps = kCorrelationBootstrap, std::uint64_t rng_seed = 0,
                                   CorrelationMethod method = CorrelationMethod::Pearson) {
    if (a.size() != b.size() ||
        !std::equal(a.begin(), a.end(), b.begin(), [](const auto& x, const auto& y) { return x.first == y.first; })) {
        throw Error(ErrorCode::InvalidArgument, "score series cover different documents");
    }
    if (a.size() < 3) {
        throw Error(ErrorCode::InvalidArgument, "correlation needs at least three documents");
    }
    std::vector<double> x, y;
    x.reserve(a.size());
    y.reserve(b.size());
    for (const auto& [_, v] : a) {
        x.push_back(v);
    }
    for (const auto& [_, v] : b) {
        y.push_back(v);
    }

    CorrelationResult out;
    out.documents = x.size();
    out.r = correlation(x, y, method);
    out.bootstrap_reps = bootstrap_reps;
    if (bootstrap_reps == 0) {
        out.ci_low = out.ci_high = out.r;
        return out;
    }

    auto engine = stream_engine(rng_seed, Stream::Correlation, 0);
    std::uniform_int_distribution<std::size_t> pick(0, x.size() - 1);
    std::vector<double> rs;
    std::vector<double> bx(x.size()), by(y.size());
    rs.reserve(bootstrap_reps);
    for (std::size_t k = 0; k < bootstrap_reps; ++k) {
        for (std::size_t i = 0; i < x.size(); ++i) {
            const std::size_t j = pick(engine);
            bx[i] = x[j];
            by[i] = y[j];
        }
        try {
            rs.push_back(correlation(bx, by, method));
        } catch (const Error& e) {
            if (e.code() != ErrorCode::UndefinedCorrelation) {
                throw;
            }
            ++out.degenerate_resamples;
        }
    }
    if (rs.empty()) {
        out.ci_low = out.ci_high = out.r;
        return out;
    }
    std::sort(rs.begin(), rs.end());
    out.ci_low = quantile_sorted(rs, 0.025);
    out.ci_high = quantile_sorted(rs, 0.975);
    return out;
}

/// JSON-lines `{"id": ..., "text": ...}`, or a directory of `.txt` files
/// whose stems are the ids (read in sorted file-name order).
inline std::vector<Document> load_corpus(const std::filesystem::path& path) {
    std::vector<Document> docs;
    if (std::filesystem::is_directory(path)) {
        std::vector<std::filesystem::path> files;
        for (const auto& entry : std::filesystem::directory_iterator(path)) {
            if (entry.is_regular_file() && entry.path().extension() == ".txt") {
                files.push_back(entry.path());
            }
        }
        std::sort(files.begin(), files.end());
        for (const auto& f : files) {
            std::ifstream in(f, std::ios::binary);
            std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
            docs.push_back(Document::make(f.stem().string(), std::move(text)));
        }
        return docs;
    }
    auto in = detail::open_input(path);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (unicode::trim(line).empty()) {
            continue;
        }
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(line);
        } catch (const nlohmann::json::exception& e) {
            throw ParseError(lineno, e.what());
        }
        if (!j.is_object() || !j.contains("id") || !j.contains("text") || !j["text"].is_string()) {
            throw ParseError(lineno, "expected {\"id\": ..., \"text\": ...}");
        }
        std::string id = j["id"].is_string() ? j["id"].get<std::string>() : j["id"].dump();
        docs.push_back(Document::make(std::move(id), j["text"].get<std::string>()));
    }
    return docs;
}

inline void write_scores_csv(std::ostream& out, const std::vector<std::string>& columns,
                             const std::vector<ScoreSeries>& series) {
    out << "id";
    for (const auto& c : columns) {
        out << ',' << detail::csv_field(c);
    }
    out << '\n';
    if (series.empty()) {
        return;
    }
    for (const auto& [id, _] : series.front()) {
        out << detail::csv_field(id);
        for (const auto& s : series) {
            std::ostringstream v;
            v.precision(17);
            v << s.at(id);
            out << ',' << v.str();
        }
        out << '\n';
    }
}

}

#endif

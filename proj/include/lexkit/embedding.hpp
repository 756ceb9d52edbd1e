#ifndef LEXKIT_EMBEDDING_HPP
#define LEXKIT_EMBEDDING_HPP

#include <algorithm>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <istream>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "core.hpp"
#include "error.hpp"

namespace lexkit {

inline constexpr std::size_t kDefaultTopN = 25000;
inline constexpr double kDefaultTau = 0.5;

/// Words ordered from most to least frequent.
class FrequencyRanking {
public:
    FrequencyRanking() = default;
    explicit FrequencyRanking(const WordList& ranked) : words_(ranked.words()) {}

    const std::vector<Word>& words() const noexcept { return words_; }
    std::size_t size() const noexcept { return words_.size(); }

private:
    std::vector<Word> words_;
};

inline FrequencyRanking load_frequency_ranking(const std::filesystem::path& path) {
    return FrequencyRanking(load_word_list(path));
}

/// Row-major |V| x d matrix with one row per vocabulary word.
class EmbeddingSpace {
public:
    EmbeddingSpace(std::vector<Word> vocabulary, std::vector<double> matrix, std::size_t dim)
        : vocabulary_(std::move(vocabulary)), matrix_(std::move(matrix)), dim_(dim) {
        if (dim_ == 0 || matrix_.size() != vocabulary_.size() * dim_) {
            throw Error(ErrorCode::InvalidArgument, "matrix shape does not match vocabulary and dimension");
        }
        norms_.reserve(vocabulary_.size());
        for (std::size_t i = 0; i < vocabulary_.size(); ++i) {
            if (!index_.emplace(vocabulary_[i].str(), i).second) {
                throw Error(ErrorCode::InvalidArgument, "duplicate vocabulary word '" + vocabulary_[i].str() + "'");
            }
            double sq = 0;
            for (double x : row(i)) {
                if (!std::isfinite(x)) {
                    throw Error(ErrorCode::InvalidArgument, "non-finite component for '" + vocabulary_[i].str() + "'");
                }
                sq += x * x;
            }
            norms_.push_back(std::sqrt(sq));
        }
    }

    std::size_t size() const noexcept { return vocabulary_.size(); }
    std::size_t dim() const noexcept { return dim_; }
    const Word& word(std::size_t i) const { return vocabulary_.at(i); }
    const std::vector<Word>& vocabulary() const noexcept { return vocabulary_; }
    double norm(std::size_t i) const { return norms_.at(i); }

    std::span<const double> row(std::size_t i) const {
        return std::span<const double>(matrix_).subspan(i * dim_, dim_);
    }

    std::optional<std::size_t> index(std::string_view word) const {
        auto it = index_.find(std::string(word));
        if (it == index_.end()) {
            return std::nullopt;
        }
        return it->second;
    }

private:
    std::vector<Word> vocabulary_;
    std::vector<double> matrix_;
    std::vector<double> norms_;
    std::unordered_map<std::string, std::size_t> index_;
    std::size_t dim_;
};

namespace detail {

inline std::vector<std::string_view> split_spaces(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) {
            ++i;
        }
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t') {
            ++j;
        }
        if (j > i) {
            out.push_back(line.substr(i, j - i));
        }
        i = j;
    }
    return out;
}

inline std::optional<double> parse_double(std::string_view text) {
    double value = 0;
    const char* first = text.data();
    if (!text.empty() && text.front() == '+') {
        ++first;
    }
    auto [ptr, ec] = std::from_chars(first, text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
        return std::nullopt;
    }
    return value;
}

inline std::optional<std::size_t> parse_count(std::string_view text) {
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
        return std::nullopt;
    }
    return value;
}

}

/// Reads the textual vector format (optional `count dim` header, then
/// `word v1 ... vd` per line) and keeps the words that are among the top_n
/// of the ranking. Rows follow ranking order. When a file lists a word twice
/// (e.g. case variants collapsing under normalization) the first row wins.
inline EmbeddingSpace read_embeddings(std::istream& in, const FrequencyRanking& ranking, std::size_t top_n = kDefaultTopN) {
    std::unordered_map<std::string, std::size_t> rank;
    for (std::size_t i = 0; i < ranking.size() && i < top_n; ++i) {
        rank.emplace(ranking.words()[i].str(), i);
    }

    std::optional<std::size_t> dim;
    std::unordered_map<std::size_t, std::vector<double>> rows;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        auto fields = detail::split_spaces(line);
        if (fields.empty()) {
            continue;
        }
        if (lineno == 1 && fields.size() == 2) {
            auto count = detail::parse_count(fields[0]);
            auto d = detail::parse_count(fields[1]);
            if (count && d) {
                if (*d == 0) {
                    throw ParseError(lineno, "header declares dimension 0");
                }
                dim = *d;
                continue;
            }
        }
        if (fields.size() < 2) {
            throw ParseError(lineno, "expected a word followed by its vector");
        }
        const std::size_t d = fields.size() - 1;
        if (!dim) {
            dim = d;
        } else if (*dim != d) {
            throw ParseError(lineno, "dimension " + std::to_string(d) + " differs from " + std::to_string(*dim));
        }
        std::optional<Word> word;
        try {
            word = Word::normalize(fields[0]);
        } catch (const Error&) {
            continue;
        }
        auto it = rank.find(word->str());
        if (it == rank.end() || rows.count(it->second) != 0) {
            continue;
        }
        std::vector<double> values;
        values.reserve(d);
        for (std::size_t k = 1; k < fields.size(); ++k) {
            auto v = detail::parse_double(fields[k]);
            if (!v || !std::isfinite(*v)) {
                throw ParseError(lineno, "bad vector component '" + std::string(fields[k]) + "'");
            }
            values.push_back(*v);
        }
        rows.emplace(it->second, std::move(values));
    }
    if (rows.empty()) {
        throw Error(ErrorCode::NoData, "no vector file word is among the top " + std::to_string(top_n) + " ranked words");
    }

    std::vector<std::size_t> order;
    order.reserve(rows.size());
    for (const auto& [r, _] : rows) {
        order.push_back(r);
    }
    std::sort(order.begin(), order.end());
    std::vector<Word> vocabulary;
    std::vector<double> matrix;
    vocabulary.reserve(order.size());
    matrix.reserve(order.size() * *dim);
    for (std::size_t r : order) {
        vocabulary.push_back(ranking.words()[r]);
        const auto& v = rows.at(r);
        matrix.insert(matrix.end(), v.begin(), v.end());
    }
    return EmbeddingSpace(std::move(vocabulary), std::move(matrix), *dim);
}

inline EmbeddingSpace load_embeddings(const std::filesystem::path& path, const FrequencyRanking& ranking,
                                      std::size_t top_n = kDefaultTopN) {
    auto in = detail::open_input(path);
    return read_embeddings(in, ranking, top_n);
}

namespace detail {

inline double dot(std::span<const double> u, std::span<const double> v) {
    double s = 0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        s += u[i] * v[i];
    }
    return s;
}

inline double cosine_with_norms(std::span<const double> u, double nu, std::span<const double> v, double nv) {
    return std::clamp(dot(u, v) / (nu * nv), -1.0, 1.0);
}

}

/// u.v / (|u| |v|), clamped to [-1, 1] against rounding.
inline double cosine(std::span<const double> u, std::span<const double> v) {
    if (u.size() != v.size()) {
        throw Error(ErrorCode::InvalidArgument, "vectors differ in dimension");
    }
    const double nu = std::sqrt(detail::dot(u, u));
    const double nv = std::sqrt(detail::dot(v, v));
    if (!(nu > 0) || !(nv > 0)) {
        throw Error(ErrorCode::DegenerateVector, "cosine of a zero vector");
    }
    return detail::cosine_with_norms(u, nu, v, nv);
}

namespace detail {

inline void check_tau(double tau) {
    if (!(tau > 0.0 && tau <= 1.0)) {
        throw Error(ErrorCode::InvalidArgument, "tau must lie in (0, 1]");
    }
}

/// Seeds found in the space; zero rows cannot anchor a cosine and count as unmatched.
inline std::vector<std::size_t> match_seeds(const EmbeddingSpace& space, const WordList& seeds, Expansion& out) {
    std::vector<std::size_t> matched;
    for (const auto& s : seeds) {
        auto idx = space.index(s.str());
        if (idx && space.norm(*idx) > 0) {
            matched.push_back(*idx);
        } else {
            out.unmatched.insert(s);
        }
    }
    return matched;
}

template<typename Keep_>
void scan_vocabulary(const EmbeddingSpace& space, const WordList& seeds, Keep_&& keep, Expansion& out) {
    std::vector<Word> found;
    for (std::size_t i = 0; i < space.size(); ++i) {
        if (space.norm(i) == 0 || seeds.contains(space.word(i).str())) {
            continue;
        }
        if (keep(i)) {
            found.push_back(space.word(i));
        }
    }
    std::sort(found.begin(), found.end());
    for (auto& w : found) {
        out.added.insert(std::move(w));
    }
}

}

/// Every non-seed word within cosine >= tau of at least one in-vocabulary seed.
inline Expansion expand_threshold(const EmbeddingSpace& space, const WordList& seeds, double tau = kDefaultTau) {
    detail::check_tau(tau);
    Expansion out{seeds, WordList(seeds.name()), WordList(seeds.name())};
    const auto matched = detail::match_seeds(space, seeds, out);
    if (matched.empty()) {
        return out;
    }
    detail::scan_vocabulary(
        space, seeds,
        [&](std::size_t i) {
            const auto row = space.row(i);
            const double ni = space.norm(i);
            return std::any_of(matched.begin(), matched.end(), [&](std::size_t s) {
                return detail::cosine_with_norms(row, ni, space.row(s), space.norm(s)) >= tau;
            });
        },
        out);
    return out;
}

/// Every non-seed word within cosine >= tau of the sum of the in-vocabulary
/// seed vectors. Under cosine the sum and the mean point the same way.
inline Expansion expand_centroid(const EmbeddingSpace& space, const WordList& seeds, double tau = kDefaultTau) {
    detail::check_tau(tau);
    Expansion out{seeds, WordList(seeds.name()), WordList(seeds.name())};
    const auto matched = detail::match_seeds(space, seeds, out);
    if (matched.empty()) {
        throw Error(ErrorCode::NotExpandable, "no seed is in the embedding vocabulary");
    }
    std::vector<double> centroid(space.dim(), 0.0);
    for (std::size_t s : matched) {
        const auto row = space.row(s);
        for (std::size_t k = 0; k < centroid.size(); ++k) {
            centroid[k] += row[k];
        }
    }
    const double nc = std::sqrt(detail::dot(centroid, centroid));
    if (!(nc > 0)) {
        throw Error(ErrorCode::DegenerateVector, "seed vectors sum to zero");
    }
    detail::scan_vocabulary(
        space, seeds,
        [&](std::size_t i) { return detail::cosine_with_norms(space.row(i), space.norm(i), centroid, nc) >= tau; },
        out);
    return out;
}

}

#endif

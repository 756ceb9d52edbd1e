#ifndef LEXKIT_CORE_HPP
#define LEXKIT_CORE_HPP

#include <algorithm>
#include <compare>
#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "error.hpp"
#include "unicode.hpp"

namespace lexkit {

/// A normalized surface form: trimmed, lowercased, NFC, no interior white space.
/// The only way to obtain one is through normalization, so every Word in the
/// system compares by plain string equality.
class Word {
public:
    static Word normalize(std::string_view raw) {
        auto folded = unicode::fold(raw);
        if (!folded) {
            throw Error(ErrorCode::InvalidWord, "malformed UTF-8");
        }
        std::string_view trimmed = unicode::trim(*folded);
        if (trimmed.empty()) {
            throw Error(ErrorCode::InvalidWord, "empty after trimming");
        }
        if (unicode::contains_space(trimmed)) {
            throw Error(ErrorCode::InvalidWord, "contains white space: '" + std::string(trimmed) + "'");
        }
        return Word(std::string(trimmed));
    }

    const std::string& str() const noexcept { return surface_; }
    operator std::string_view() const noexcept { return surface_; }

    friend bool operator==(const Word&, const Word&) = default;
    friend auto operator<=>(const Word&, const Word&) = default;

    friend std::ostream& operator<<(std::ostream& os, const Word& w) { return os << w.surface_; }

private:
    explicit Word(std::string surface) : surface_(std::move(surface)) {}
    std::string surface_;
};

inline Word normalize_word(std::string_view raw) {
    return Word::normalize(raw);
}

/// Either an exact word or a stem followed by a single trailing '*'.
class WildcardPattern {
public:
    static WildcardPattern parse(std::string_view raw) {
        std::string_view trimmed = unicode::trim(raw);
        bool star = !trimmed.empty() && trimmed.back() == '*';
        if (star) {
            trimmed.remove_suffix(1);
        }
        if (trimmed.find('*') != std::string_view::npos) {
            throw Error(ErrorCode::InvalidPattern, "only a single trailing '*' is allowed: '" + std::string(raw) + "'");
        }
        if (trimmed.empty()) {
            throw Error(ErrorCode::InvalidPattern, "empty stem: '" + std::string(raw) + "'");
        }
        Word stem = [&] {
            try {
                return Word::normalize(trimmed);
            } catch (const Error& e) {
                throw Error(ErrorCode::InvalidPattern, e.what());
            }
        }();
        return WildcardPattern(std::move(stem), star);
    }

    static WildcardPattern exact(Word w) { return WildcardPattern(std::move(w), false); }

    const Word& stem() const noexcept { return stem_; }
    bool trailing_star() const noexcept { return star_; }

    bool matches(std::string_view word) const {
        if (star_) {
            return word.starts_with(stem_.str());
        }
        return word == stem_.str();
    }

    std::string to_string() const { return star_ ? stem_.str() + "*" : stem_.str(); }

    friend bool operator==(const WildcardPattern&, const WildcardPattern&) = default;

private:
    WildcardPattern(Word stem, bool star) : stem_(std::move(stem)), star_(star) {}
    Word stem_;
    bool star_;
};

/// Insertion-ordered set of words with a name.
class WordList {
public:
    WordList() = default;
    explicit WordList(std::string name) : name_(std::move(name)) {}

    WordList(std::string name, std::vector<Word> words) : name_(std::move(name)) {
        for (auto& w : words) {
            insert(std::move(w));
        }
    }

    /// Normalizes every entry; throws InvalidWord on the first bad one.
    static WordList of(std::initializer_list<std::string_view> raw, std::string name = {}) {
        WordList out(std::move(name));
        for (auto r : raw) {
            out.insert(Word::normalize(r));
        }
        return out;
    }

    template<typename Range_>
    static WordList from_strings(const Range_& raw, std::string name = {}) {
        WordList out(std::move(name));
        for (const auto& r : raw) {
            out.insert(Word::normalize(r));
        }
        return out;
    }

    bool insert(Word w) {
        if (!index_.insert(w.str()).second) {
            return false;
        }
        words_.push_back(std::move(w));
        return true;
    }

    bool contains(std::string_view w) const { return index_.count(std::string(w)) != 0; }

    const std::string& name() const noexcept { return name_; }
    void set_name(std::string name) { name_ = std::move(name); }

    std::size_t size() const noexcept { return words_.size(); }
    bool empty() const noexcept { return words_.empty(); }
    const Word& operator[](std::size_t i) const { return words_[i]; }
    auto begin() const noexcept { return words_.begin(); }
    auto end() const noexcept { return words_.end(); }
    const std::vector<Word>& words() const noexcept { return words_; }

    std::vector<std::string> strings() const {
        std::vector<std::string> out;
        out.reserve(words_.size());
        for (const auto& w : words_) {
            out.push_back(w.str());
        }
        return out;
    }

    /// Ordered equality; the name is not compared.
    friend bool operator==(const WordList& a, const WordList& b) { return a.words_ == b.words_; }

private:
    std::string name_;
    std::vector<Word> words_;
    std::unordered_set<std::string> index_;
};

/// True when both lists hold the same words regardless of order.
inline bool same_set(const WordList& a, const WordList& b) {
    if (a.size() != b.size()) {
        return false;
    }
    return std::all_of(a.begin(), a.end(), [&](const Word& w) { return b.contains(w.str()); });
}

inline WordList sorted(const WordList& in) {
    std::vector<Word> words = in.words();
    std::sort(words.begin(), words.end());
    return WordList(in.name(), std::move(words));
}

/// Words of `a` (in `a`'s order) not in `b`.
inline WordList set_difference(const WordList& a, const WordList& b) {
    WordList out(a.name());
    for (const auto& w : a) {
        if (!b.contains(w.str())) {
            out.insert(w);
        }
    }
    return out;
}

inline WordList set_intersection(const WordList& a, const WordList& b) {
    WordList out(a.name());
    for (const auto& w : a) {
        if (b.contains(w.str())) {
            out.insert(w);
        }
    }
    return out;
}

inline WordList set_union(const WordList& a, const WordList& b) {
    WordList out = a;
    for (const auto& w : b) {
        out.insert(w);
    }
    return out;
}

/// Result of expanding a seed set S against some resource: the lexicon is
/// S ∪ added, where `added` never contains a seed.
struct Expansion {
    WordList seeds;
    WordList added;
    WordList unmatched;

    /// A list is expandable when at least one seed was found in the resource.
    bool expandable() const { return unmatched.size() < seeds.size(); }

    WordList lexicon() const {
        WordList out = set_union(seeds, added);
        out.set_name(seeds.name());
        return out;
    }
};

struct WildcardExpansion {
    WordList words;
    /// Starred patterns that matched nothing in the dictionary; they are dropped.
    std::vector<WildcardPattern> unmatched;
};

/// Resolves patterns against a dictionary. Exact patterns are kept even when
/// the dictionary lacks them; starred patterns yield every dictionary word
/// with that prefix, in lexicographic order.
inline WildcardExpansion expand_wildcards(const std::vector<WildcardPattern>& patterns, const WordList& dictionary) {
    if (dictionary.empty()) {
        throw Error(ErrorCode::InvalidArgument, "wildcard dictionary is empty");
    }
    std::vector<std::string> lexicographic = dictionary.strings();
    std::sort(lexicographic.begin(), lexicographic.end());

    WildcardExpansion out;
    for (const auto& p : patterns) {
        if (!p.trailing_star()) {
            out.words.insert(p.stem());
            continue;
        }
        const std::string& stem = p.stem().str();
        bool any = false;
        for (auto it = std::lower_bound(lexicographic.begin(), lexicographic.end(), stem);
             it != lexicographic.end() && std::string_view(*it).starts_with(stem); ++it) {
            out.words.insert(Word::normalize(*it));
            any = true;
        }
        if (!any) {
            out.unmatched.push_back(p);
        }
    }
    return out;
}

namespace detail {

template<typename Fn_>
void for_each_entry_line(std::istream& in, Fn_&& fn) {
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (!unicode::valid_utf8(line)) {
            throw ParseError(lineno, "malformed UTF-8");
        }
        std::string_view entry = unicode::trim(line);
        if (entry.empty() || entry.front() == '#') {
            continue;
        }
        if (unicode::contains_space(entry)) {
            throw ParseError(lineno, "entries must be single words: '" + std::string(entry) + "'");
        }
        fn(entry, lineno);
    }
}

inline std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out(1);
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
                out.back() += '"';
                ++i;
            } else if (c == '"') {
                quoted = false;
            } else {
                out.back() += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            out.emplace_back();
        } else {
            out.back() += c;
        }
    }
    return out;
}

inline std::string csv_field(std::string_view s) {
    if (s.find_first_of(",\"\n") == std::string_view::npos) {
        return std::string(s);
    }
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    return out + '"';
}

inline std::ifstream open_input(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorCode::Io, "cannot open " + path.string());
    }
    return in;
}

}

/// Reads a word-list file that may contain trailing-star wildcards.
inline std::vector<WildcardPattern> read_patterns(std::istream& in) {
    std::vector<WildcardPattern> out;
    detail::for_each_entry_line(in, [&](std::string_view entry, std::size_t lineno) {
        try {
            out.push_back(WildcardPattern::parse(entry));
        } catch (const Error& e) {
            throw ParseError(lineno, e.what());
        }
    });
    return out;
}

/// Reads a plain word list; any '*' is a parse error.
inline WordList read_word_list(std::istream& in, std::string name = {}) {
    WordList out(std::move(name));
    detail::for_each_entry_line(in, [&](std::string_view entry, std::size_t lineno) {
        if (entry.find('*') != std::string_view::npos) {
            throw ParseError(lineno, "wildcards are not allowed here: '" + std::string(entry) + "'");
        }
        try {
            out.insert(Word::normalize(entry));
        } catch (const Error& e) {
            throw ParseError(lineno, e.what());
        }
    });
    return out;
}

inline std::vector<WildcardPattern> load_patterns(const std::filesystem::path& path) {
    auto in = detail::open_input(path);
    return read_patterns(in);
}

/// The list is named after the file stem.
inline WordList load_word_list(const std::filesystem::path& path) {
    auto in = detail::open_input(path);
    return read_word_list(in, path.stem().string());
}

inline void write_word_list(std::ostream& out, const WordList& list) {
    for (const auto& w : list) {
        out << w.str() << '\n';
    }
}

inline std::string to_text(const WordList& list) {
    std::ostringstream out;
    write_word_list(out, list);
    return out.str();
}

inline void save_word_list(const std::filesystem::path& path, const WordList& list) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error(ErrorCode::Io, "cannot write " + path.string());
    }
    write_word_list(out, list);
}

/// Loads a gold lexicon, resolving wildcards against `dictionary` when given.
/// Without a dictionary, starred entries are rejected.
inline WordList load_lexicon(const std::filesystem::path& path, const WordList* dictionary) {
    auto patterns = load_patterns(path);
    WordList out(path.stem().string());
    if (dictionary != nullptr) {
        out = expand_wildcards(patterns, *dictionary).words;
        out.set_name(path.stem().string());
        return out;
    }
    for (const auto& p : patterns) {
        if (p.trailing_star()) {
            throw Error(ErrorCode::InvalidArgument,
                        path.string() + " contains wildcard '" + p.to_string() + "' but no dictionary was given");
        }
        out.insert(p.stem());
    }
    return out;
}

}

#endif

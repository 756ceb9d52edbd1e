#ifndef LEXKIT_COLEX_HPP
#define LEXKIT_COLEX_HPP

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <regex>
#include <set>
#include <span>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "core.hpp"
#include "error.hpp"

namespace lexkit {

inline constexpr std::string_view kEnglish = "en";

/// Lowercases a language code and folds the ISO 639-3 code for English onto
/// the pivot code so FreeDict-style names ("deu-eng") work unchanged.
inline std::string canonical_language(std::string_view code) {
    std::string out(code);
    std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (out == "eng") {
        return std::string(kEnglish);
    }
    return out;
}

/// Word-to-words translation table for one language pair.
struct BilingualDictionary {
    std::string source_lang;
    std::string target_lang;
    std::map<std::string, std::set<std::string>> entries;

    void add(const Word& source, const Word& target) { entries[source.str()].insert(target.str()); }

    std::size_t pair_count() const {
        std::size_t n = 0;
        for (const auto& [_, targets] : entries) {
            n += targets.size();
        }
        return n;
    }
};

struct DictionaryLoadStats {
    std::size_t pairs = 0;
    std::size_t skipped_multiword = 0;
};

/// Parses `source<TAB>target` lines. Entries whose either side is a multi-word
/// expression are skipped and counted; lines without exactly two fields are
/// errors.
inline BilingualDictionary read_bilingual_tsv(std::istream& in, std::string source_lang, std::string target_lang,
                                              DictionaryLoadStats* stats = nullptr) {
    BilingualDictionary dict{canonical_language(source_lang), canonical_language(target_lang), {}};
    DictionaryLoadStats local;
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
        std::string_view view = unicode::trim(line);
        if (view.empty() || view.front() == '#') {
            continue;
        }
        const auto tab = line.find('\t');
        if (tab == std::string::npos || line.find('\t', tab + 1) != std::string::npos) {
            throw ParseError(lineno, "expected exactly two tab-separated fields");
        }
        std::string_view src = unicode::trim(std::string_view(line).substr(0, tab));
        std::string_view tgt = unicode::trim(std::string_view(line).substr(tab + 1));
        if (src.empty() || tgt.empty()) {
            throw ParseError(lineno, "empty field");
        }
        if (unicode::contains_space(src) || unicode::contains_space(tgt)) {
            ++local.skipped_multiword;
            continue;
        }
        try {
            dict.add(Word::normalize(src), Word::normalize(tgt));
        } catch (const Error& e) {
            throw ParseError(lineno, e.what());
        }
        ++local.pairs;
    }
    if (stats != nullptr) {
        *stats = local;
    }
    return dict;
}

namespace detail {

inline std::optional<std::pair<std::string, std::string>> parse_language_pair(const std::string& text) {
    static const std::regex pattern(R"(^\s*([A-Za-z]{2,3})\s*[-_]\s*([A-Za-z]{2,3})\s*$)");
    std::smatch m;
    if (std::regex_match(text, m, pattern)) {
        return std::make_pair(m[1].str(), m[2].str());
    }
    return std::nullopt;
}

}

/// Loads a dictionary file. The language pair comes from a `# pair: src-tgt`
/// header line if present, otherwise from a file name like `deu-eng.tsv`.
inline BilingualDictionary load_bilingual_tsv(const std::filesystem::path& path, DictionaryLoadStats* stats = nullptr) {
    auto in = detail::open_input(path);
    std::optional<std::pair<std::string, std::string>> pair;

    std::string first;
    while (std::getline(in, first)) {
        std::string_view v = unicode::trim(first);
        if (v.empty()) {
            continue;
        }
        if (v.starts_with("#")) {
            v.remove_prefix(1);
            v = unicode::trim(v);
            if (v.starts_with("pair:")) {
                v.remove_prefix(5);
                pair = detail::parse_language_pair(std::string(v));
            }
        }
        break;
    }
    if (!pair) {
        std::string stem = path.filename().string();
        stem = stem.substr(0, stem.find('.'));
        pair = detail::parse_language_pair(stem);
    }
    if (!pair) {
        throw Error(ErrorCode::InvalidArgument,
                    "cannot determine the language pair of " + path.string() +
                        " (add a '# pair: src-tgt' header or name the file src-tgt.tsv)");
    }
    in.clear();
    in.seekg(0);
    auto dict = read_bilingual_tsv(in, pair->first, pair->second, stats);
    if (dict.entries.empty()) {
        throw Error(ErrorCode::NoData, path.string() + " holds no usable entries");
    }
    return dict;
}

using NodeId = std::uint32_t;

struct Edge {
    NodeId a;
    NodeId b;
    std::uint32_t weight;

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct Neighbor {
    NodeId node;
    std::uint32_t weight;
};

/// Concept network pivoted on English labels. Edges are stored once with
/// a < b; weights count the distinct languages colexifying the pair.
/// Foreign label maps are attached with translate_labels() and never touch
/// the edge structure.
class ColexGraph {
public:
    ColexGraph() = default;

    /// Builds from explicit labels and edges. Labels must be distinct valid
    /// words; edges are canonicalised to a < b and must not repeat.
    static ColexGraph from_edges(std::vector<std::string> en_labels, std::vector<Edge> edges, unsigned min_languages = 2) {
        ColexGraph g;
        g.min_languages_ = min_languages;
        g.en_labels_ = std::move(en_labels);
        for (NodeId i = 0; i < g.en_labels_.size(); ++i) {
            const auto& label = g.en_labels_[i];
            if (Word::normalize(label).str() != label) {
                throw Error(ErrorCode::InvalidArgument, "label is not normalized: '" + label + "'");
            }
            if (!g.en_index_.emplace(label, i).second) {
                throw Error(ErrorCode::InvalidArgument, "duplicate label '" + label + "'");
            }
        }
        const auto n = static_cast<NodeId>(g.en_labels_.size());
        for (auto& e : edges) {
            if (e.a == e.b) {
                throw Error(ErrorCode::InvalidArgument, "self-loop on node " + std::to_string(e.a));
            }
            if (e.a >= n || e.b >= n) {
                throw Error(ErrorCode::InvalidArgument, "edge references unknown node");
            }
            if (e.weight < 1) {
                throw Error(ErrorCode::InvalidArgument, "edge weight must be at least 1");
            }
            if (e.a > e.b) {
                std::swap(e.a, e.b);
            }
        }
        std::sort(edges.begin(), edges.end());
        for (std::size_t i = 1; i < edges.size(); ++i) {
            if (edges[i].a == edges[i - 1].a && edges[i].b == edges[i - 1].b) {
                throw Error(ErrorCode::InvalidArgument, "duplicate edge");
            }
        }
        g.edges_ = std::move(edges);
        g.adjacency_.resize(n);
        for (const auto& e : g.edges_) {
            g.adjacency_[e.a].push_back({e.b, e.weight});
            g.adjacency_[e.b].push_back({e.a, e.weight});
        }
        for (auto& row : g.adjacency_) {
            std::sort(row.begin(), row.end(), [](const Neighbor& x, const Neighbor& y) { return x.node < y.node; });
        }
        return g;
    }

    std::size_t node_count() const noexcept { return en_labels_.size(); }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    unsigned min_languages() const noexcept { return min_languages_; }

    const std::string& label(NodeId id) const { return en_labels_.at(id); }
    const std::vector<std::string>& labels() const noexcept { return en_labels_; }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    std::span<const Neighbor> neighbors(NodeId id) const { return adjacency_.at(id); }

    std::optional<NodeId> node(std::string_view en_label) const {
        auto it = en_index_.find(std::string(en_label));
        if (it == en_index_.end()) {
            return std::nullopt;
        }
        return it->second;
    }

    /// "en" plus every translated language, sorted.
    std::vector<std::string> languages() const {
        std::vector<std::string> out{std::string(kEnglish)};
        for (const auto& [lang, _] : foreign_) {
            out.push_back(lang);
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    bool has_language(std::string_view lang) const {
        return lang == kEnglish || foreign_.count(std::string(lang)) != 0;
    }

    /// Nodes a word of `lang` maps onto. Empty when the word is unknown.
    std::vector<NodeId> lookup(std::string_view lang, std::string_view word) const {
        if (lang == kEnglish) {
            if (auto id = node(word)) {
                return {*id};
            }
            return {};
        }
        const auto& map = foreign(lang);
        auto it = map.word_to_nodes.find(std::string(word));
        if (it == map.word_to_nodes.end()) {
            return {};
        }
        return it->second;
    }

    /// Words of `lang` labelling `id`. Empty for untranslated nodes.
    std::vector<std::string> labels_of(std::string_view lang, NodeId id) const {
        if (lang == kEnglish) {
            return {label(id)};
        }
        return foreign(lang).node_to_words.at(id);
    }

    /// Every label of `lang` that names some node, sorted.
    std::vector<std::string> vocabulary(std::string_view lang) const {
        if (lang == kEnglish) {
            std::vector<std::string> out = en_labels_;
            std::sort(out.begin(), out.end());
            return out;
        }
        std::vector<std::string> out;
        for (const auto& [word, _] : foreign(lang).word_to_nodes) {
            out.push_back(word);
        }
        return out;
    }

    /// Returns a copy with a label map for `lang` attached (replacing any
    /// previous one). Node lists are sorted and deduplicated.
    ColexGraph with_labels(std::string lang, std::map<std::string, std::vector<NodeId>> word_to_nodes) const {
        lang = canonical_language(lang);
        if (lang == kEnglish) {
            throw Error(ErrorCode::InvalidArgument, "English labels are intrinsic to the graph");
        }
        LabelMap map;
        map.node_to_words.resize(node_count());
        for (auto& [word, nodes] : word_to_nodes) {
            std::sort(nodes.begin(), nodes.end());
            nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
            for (NodeId id : nodes) {
                if (id >= node_count()) {
                    throw Error(ErrorCode::InvalidArgument, "label references unknown node");
                }
                map.node_to_words[id].push_back(word);
            }
        }
        map.word_to_nodes = std::move(word_to_nodes);
        for (auto& words : map.node_to_words) {
            std::sort(words.begin(), words.end());
        }
        ColexGraph copy = *this;
        copy.foreign_[lang] = std::move(map);
        return copy;
    }

    friend bool operator==(const ColexGraph& x, const ColexGraph& y) {
        return x.min_languages_ == y.min_languages_ && x.en_labels_ == y.en_labels_ && x.edges_ == y.edges_ &&
               x.foreign_ == y.foreign_;
    }

private:
    struct LabelMap {
        std::map<std::string, std::vector<NodeId>> word_to_nodes;
        std::vector<std::vector<std::string>> node_to_words;
        friend bool operator==(const LabelMap&, const LabelMap&) = default;
    };

    const LabelMap& foreign(std::string_view lang) const {
        auto it = foreign_.find(std::string(lang));
        if (it == foreign_.end()) {
            throw Error(ErrorCode::LanguageUnavailable, "no labels for language '" + std::string(lang) + "'");
        }
        return it->second;
    }

    unsigned min_languages_ = 2;
    std::vector<std::string> en_labels_;
    std::unordered_map<std::string, NodeId> en_index_;
    std::vector<Edge> edges_;
    std::vector<std::vector<Neighbor>> adjacency_;
    std::map<std::string, LabelMap> foreign_;
};

/// Every pair of distinct English translations of one foreign word is a
/// colexification. A language votes at most once per pair; pairs with fewer
/// than `min_languages` votes are dropped, and so are nodes left without edges.
/// Node ids follow the lexicographic order of the English labels.
inline ColexGraph build_colex_graph(std::span<const BilingualDictionary> dictionaries, unsigned min_languages = 2) {
    if (dictionaries.empty()) {
        throw Error(ErrorCode::NoData, "no bilingual dictionaries given");
    }
    if (min_languages == 0) {
        throw Error(ErrorCode::InvalidArgument, "min_languages must be positive");
    }

    std::map<std::string, std::set<std::pair<std::string, std::string>>> pairs_by_language;
    for (const auto& dict : dictionaries) {
        if (dict.target_lang != kEnglish) {
            throw Error(ErrorCode::InvalidArgument,
                        "dictionary " + dict.source_lang + "-" + dict.target_lang + " does not translate into English");
        }
        auto& pairs = pairs_by_language[dict.source_lang];
        for (const auto& [_, targets] : dict.entries) {
            for (auto i = targets.begin(); i != targets.end(); ++i) {
                for (auto j = std::next(i); j != targets.end(); ++j) {
                    pairs.emplace(*i, *j);
                }
            }
        }
    }

    std::map<std::pair<std::string, std::string>, std::uint32_t> votes;
    for (const auto& [_, pairs] : pairs_by_language) {
        for (const auto& p : pairs) {
            ++votes[p];
        }
    }

    std::set<std::string> kept_labels;
    for (const auto& [p, count] : votes) {
        if (count >= min_languages) {
            kept_labels.insert(p.first);
            kept_labels.insert(p.second);
        }
    }
    std::vector<std::string> labels(kept_labels.begin(), kept_labels.end());
    std::unordered_map<std::string, NodeId> ids;
    for (NodeId i = 0; i < labels.size(); ++i) {
        ids.emplace(labels[i], i);
    }
    std::vector<Edge> edges;
    for (const auto& [p, count] : votes) {
        if (count >= min_languages) {
            edges.push_back({ids.at(p.first), ids.at(p.second), count});
        }
    }
    return ColexGraph::from_edges(std::move(labels), std::move(edges), min_languages);
}

/// Attaches `lang` labels: every translation of a node's English label maps
/// onto that node, so a foreign word translating several labels maps onto
/// several nodes. Nodes without a translation get no `lang` label.
inline ColexGraph translate_labels(const ColexGraph& graph, const BilingualDictionary& en_to_lang, std::string lang) {
    if (en_to_lang.source_lang != kEnglish) {
        throw Error(ErrorCode::InvalidArgument, "label dictionary must translate from English");
    }
    std::map<std::string, std::vector<NodeId>> word_to_nodes;
    for (NodeId id = 0; id < graph.node_count(); ++id) {
        auto it = en_to_lang.entries.find(graph.label(id));
        if (it == en_to_lang.entries.end()) {
            continue;
        }
        for (const auto& translation : it->second) {
            word_to_nodes[translation].push_back(id);
        }
    }
    return graph.with_labels(std::move(lang), std::move(word_to_nodes));
}

/// Seeds are mapped onto nodes through the `lang` labels; the new words are
/// the `lang` labels of all neighbours of matched nodes, minus the seeds.
inline Expansion expand_colex(const ColexGraph& graph, const WordList& seeds, std::string_view lang) {
    if (!graph.has_language(lang)) {
        throw Error(ErrorCode::LanguageUnavailable, "graph has no labels for '" + std::string(lang) + "'");
    }
    Expansion out{seeds, WordList(seeds.name()), WordList(seeds.name())};
    std::set<std::string> found;
    for (const auto& seed : seeds) {
        auto nodes = graph.lookup(lang, seed.str());
        if (nodes.empty()) {
            out.unmatched.insert(seed);
            continue;
        }
        for (NodeId id : nodes) {
            for (const auto& nb : graph.neighbors(id)) {
                for (auto& w : graph.labels_of(lang, nb.node)) {
                    if (!seeds.contains(w)) {
                        found.insert(std::move(w));
                    }
                }
            }
        }
    }
    for (const auto& w : found) {
        out.added.insert(Word::normalize(w));
    }
    return out;
}

// Bundle format: a directory with meta.tsv, nodes.tsv, edges.tsv and one
// labels.<lang>.tsv per translated language. Output is fully determined by
// the graph, so saving twice yields identical bytes.

inline constexpr int kBundleVersion = 1;

inline void save_colex_bundle(const ColexGraph& graph, const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    auto open = [&](const std::string& name) {
        std::ofstream out(dir / name, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw Error(ErrorCode::Io, "cannot write " + (dir / name).string());
        }
        return out;
    };
    {
        auto out = open("meta.tsv");
        out << "format\tcolex-bundle\n";
        out << "version\t" << kBundleVersion << '\n';
        out << "min_languages\t" << graph.min_languages() << '\n';
        out << "languages";
        for (const auto& lang : graph.languages()) {
            out << '\t' << lang;
        }
        out << '\n';
    }
    {
        auto out = open("nodes.tsv");
        out << "id\ten_label\n";
        for (NodeId i = 0; i < graph.node_count(); ++i) {
            out << i << '\t' << graph.label(i) << '\n';
        }
    }
    {
        auto out = open("edges.tsv");
        out << "id_a\tid_b\tweight\n";
        for (const auto& e : graph.edges()) {
            out << e.a << '\t' << e.b << '\t' << e.weight << '\n';
        }
    }
    for (const auto& lang : graph.languages()) {
        if (lang == kEnglish) {
            continue;
        }
        auto out = open("labels." + lang + ".tsv");
        out << "word\tnode_id\n";
        for (const auto& word : graph.vocabulary(lang)) {
            for (NodeId id : graph.lookup(lang, word)) {
                out << word << '\t' << id << '\n';
            }
        }
    }
}

namespace detail {

inline std::vector<std::vector<std::string>> read_tsv_rows(const std::filesystem::path& path, std::size_t fields,
                                                           bool header) {
    auto in = open_input(path);
    std::vector<std::vector<std::string>> rows;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (header && lineno == 1) {
            continue;
        }
        if (line.empty()) {
            continue;
        }
        std::vector<std::string> row;
        std::size_t start = 0;
        while (true) {
            auto tab = line.find('\t', start);
            row.push_back(line.substr(start, tab - start));
            if (tab == std::string::npos) {
                break;
            }
            start = tab + 1;
        }
        if (fields != 0 && row.size() != fields) {
            throw ParseError(lineno, path.filename().string() + ": expected " + std::to_string(fields) + " fields");
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

inline std::uint32_t parse_u32(const std::string& text, const std::filesystem::path& path) {
    std::uint32_t value = 0;
    auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || end != text.data() + text.size() || text.empty()) {
        throw Error(ErrorCode::ParseError, path.filename().string() + ": not an unsigned integer: '" + text + "'");
    }
    return static_cast<std::uint32_t>(value);
}

}

inline ColexGraph load_colex_bundle(const std::filesystem::path& dir) {
    std::map<std::string, std::vector<std::string>> meta;
    for (auto& row : detail::read_tsv_rows(dir / "meta.tsv", 0, false)) {
        meta[row.front()] = std::vector<std::string>(row.begin() + 1, row.end());
    }
    if (meta["format"] != std::vector<std::string>{"colex-bundle"}) {
        throw Error(ErrorCode::ParseError, "not a colex bundle: " + dir.string());
    }
    if (meta["version"] != std::vector<std::string>{std::to_string(kBundleVersion)}) {
        throw Error(ErrorCode::ParseError, "unsupported bundle version in " + dir.string());
    }
    if (meta["min_languages"].size() != 1) {
        throw Error(ErrorCode::ParseError, "meta.tsv lacks min_languages");
    }
    const unsigned min_languages = detail::parse_u32(meta["min_languages"].front(), dir / "meta.tsv");

    std::vector<std::string> labels;
    for (auto& row : detail::read_tsv_rows(dir / "nodes.tsv", 2, true)) {
        if (detail::parse_u32(row[0], dir / "nodes.tsv") != labels.size()) {
            throw Error(ErrorCode::ParseError, "nodes.tsv ids must be consecutive from 0");
        }
        labels.push_back(std::move(row[1]));
    }
    std::vector<Edge> edges;
    for (const auto& row : detail::read_tsv_rows(dir / "edges.tsv", 3, true)) {
        edges.push_back({detail::parse_u32(row[0], dir / "edges.tsv"), detail::parse_u32(row[1], dir / "edges.tsv"),
                         detail::parse_u32(row[2], dir / "edges.tsv")});
    }
    ColexGraph graph = ColexGraph::from_edges(std::move(labels), std::move(edges), min_languages);

    for (const auto& lang : meta["languages"]) {
        if (lang == kEnglish) {
            continue;
        }
        const auto path = dir / ("labels." + lang + ".tsv");
        std::map<std::string, std::vector<NodeId>> word_to_nodes;
        for (const auto& row : detail::read_tsv_rows(path, 2, true)) {
            word_to_nodes[row[0]].push_back(detail::parse_u32(row[1], path));
        }
        graph = graph.with_labels(lang, std::move(word_to_nodes));
    }
    return graph;
}

}

#endif

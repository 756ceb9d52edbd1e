#ifndef LEXKIT_SYNONYM_HPP
#define LEXKIT_SYNONYM_HPP

#include <filesystem>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <string>

#include "core.hpp"
#include "error.hpp"

namespace lexkit {

/// Undirected word graph flattened from a synset network.
class SynonymGraph {
public:
    /// Self-loops are ignored; repeated edges collapse.
    void add_edge(const Word& a, const Word& b) {
        if (a == b) {
            return;
        }
        adjacency_[a.str()].insert(b.str());
        adjacency_[b.str()].insert(a.str());
    }

    const std::set<std::string>* neighbors(std::string_view word) const {
        auto it = adjacency_.find(std::string(word));
        return it == adjacency_.end() ? nullptr : &it->second;
    }

    std::size_t degree(std::string_view word) const {
        const auto* nb = neighbors(word);
        return nb == nullptr ? 0 : nb->size();
    }

    std::size_t word_count() const noexcept { return adjacency_.size(); }

    std::size_t edge_count() const {
        std::size_t twice = 0;
        for (const auto& [_, nb] : adjacency_) {
            twice += nb.size();
        }
        return twice / 2;
    }

    const std::map<std::string, std::set<std::string>>& adjacency() const noexcept { return adjacency_; }

    friend bool operator==(const SynonymGraph&, const SynonymGraph&) = default;

private:
    std::map<std::string, std::set<std::string>> adjacency_;
};

inline SynonymGraph read_synonym_graph(std::istream& in) {
    SynonymGraph graph;
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
            throw ParseError(lineno, "expected word_a<TAB>word_b");
        }
        try {
            graph.add_edge(Word::normalize(std::string_view(line).substr(0, tab)),
                           Word::normalize(std::string_view(line).substr(tab + 1)));
        } catch (const Error& e) {
            throw ParseError(lineno, e.what());
        }
    }
    return graph;
}

inline SynonymGraph load_synonym_graph(const std::filesystem::path& path) {
    auto in = detail::open_input(path);
    return read_synonym_graph(in);
}

/// One line per edge with word_a < word_b, sorted.
inline void write_synonym_graph(std::ostream& out, const SynonymGraph& graph) {
    for (const auto& [word, nb] : graph.adjacency()) {
        for (auto it = nb.upper_bound(word); it != nb.end(); ++it) {
            out << word << '\t' << *it << '\n';
        }
    }
}

/// Neighbour union of the seeds, minus the seeds. Seeds absent from the
/// graph are reported as unmatched.
inline Expansion expand_synonym(const SynonymGraph& graph, const WordList& seeds) {
    Expansion out{seeds, WordList(seeds.name()), WordList(seeds.name())};
    std::set<std::string> found;
    for (const auto& seed : seeds) {
        const auto* nb = graph.neighbors(seed.str());
        if (nb == nullptr) {
            out.unmatched.insert(seed);
            continue;
        }
        for (const auto& w : *nb) {
            if (!seeds.contains(w)) {
                found.insert(w);
            }
        }
    }
    for (const auto& w : found) {
        out.added.insert(Word::normalize(w));
    }
    return out;
}

}

#endif

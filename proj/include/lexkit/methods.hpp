#ifndef LEXKIT_METHODS_HPP
#define LEXKIT_METHODS_HPP

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "colex.hpp"
#include "core.hpp"
#include "embedding.hpp"
#include "error.hpp"
#include "eval.hpp"
#include "synonym.hpp"

namespace lexkit {

enum class MethodId { Colex, Synonym, EmbeddingThreshold, EmbeddingCentroid, Union, Intersection };

inline std::string_view to_string(MethodId m) {
    switch (m) {
    case MethodId::Colex: return "colex";
    case MethodId::Synonym: return "synonym";
    case MethodId::EmbeddingThreshold: return "embedding-threshold";
    case MethodId::EmbeddingCentroid: return "embedding-centroid";
    case MethodId::Union: return "union";
    case MethodId::Intersection: return "intersection";
    }
    return "unknown";
}

inline std::optional<MethodId> parse_method(std::string_view text) {
    for (auto m : {MethodId::Colex, MethodId::Synonym, MethodId::EmbeddingThreshold, MethodId::EmbeddingCentroid,
                   MethodId::Union, MethodId::Intersection}) {
        if (text == to_string(m)) {
            return m;
        }
    }
    return std::nullopt;
}

struct MethodParams {
    std::string lang = std::string(kEnglish);
    double tau = kDefaultTau;
    /// Which embedding space to use; empty picks the first one loaded for `lang`.
    std::string space;
};

/// Read-only set of loaded resources. Universes (the candidate pools of the
/// null baseline) are computed once when a resource is added.
class ResourceStore {
public:
    void add_colex(ColexGraph graph) {
        colex_ = std::make_shared<const ColexGraph>(std::move(graph));
        colex_universe_.clear();
        for (const auto& lang : colex_->languages()) {
            colex_universe_[lang] = WordList::from_strings(colex_->vocabulary(lang), "colex:" + lang);
        }
    }

    void add_synonyms(std::string lang, SynonymGraph graph) {
        lang = canonical_language(lang);
        WordList universe("synonym:" + lang);
        for (const auto& [w, _] : graph.adjacency()) {
            universe.insert(Word::normalize(w));
        }
        synonyms_[lang] = {std::make_shared<const SynonymGraph>(std::move(graph)), std::move(universe)};
    }

    void add_embedding(std::string name, std::string lang, EmbeddingSpace space) {
        lang = canonical_language(lang);
        WordList universe("embedding:" + name);
        for (const auto& w : space.vocabulary()) {
            universe.insert(w);
        }
        embeddings_.push_back(
            {std::move(name), std::move(lang), std::make_shared<const EmbeddingSpace>(std::move(space)), std::move(universe)});
    }

    const ColexGraph* colex() const { return colex_.get(); }

    std::vector<std::string> colex_languages() const { return colex_ ? colex_->languages() : std::vector<std::string>{}; }

    std::vector<std::string> synonym_languages() const {
        std::vector<std::string> out;
        for (const auto& [lang, _] : synonyms_) {
            out.push_back(lang);
        }
        return out;
    }

    /// (name, lang) of every loaded embedding space.
    std::vector<std::pair<std::string, std::string>> embedding_spaces() const {
        std::vector<std::pair<std::string, std::string>> out;
        for (const auto& e : embeddings_) {
            out.emplace_back(e.name, e.lang);
        }
        return out;
    }

    /// Languages in which `method` can run with the loaded resources.
    std::vector<std::string> languages(MethodId method) const {
        std::set<std::string> out;
        switch (method) {
        case MethodId::Colex:
            for (auto& l : colex_languages()) out.insert(l);
            break;
        case MethodId::Synonym:
            for (auto& l : synonym_languages()) out.insert(l);
            break;
        case MethodId::EmbeddingThreshold:
        case MethodId::EmbeddingCentroid:
            for (const auto& e : embeddings_) out.insert(e.lang);
            break;
        case MethodId::Union:
        case MethodId::Intersection: {
            std::map<std::string, int> counts;
            for (auto& l : colex_languages()) ++counts[l];
            for (auto& l : synonym_languages()) ++counts[l];
            for (const auto& e : embeddings_) counts[e.lang] += 2;
            for (const auto& [l, c] : counts) {
                if (c >= 2) out.insert(l);
            }
            break;
        }
        }
        return {out.begin(), out.end()};
    }

    /// Builds the expander for `method`. Throws LanguageUnavailable when the
    /// needed resource is not loaded for the requested language.
    ExpansionMethod method(MethodId id, const MethodParams& params) const {
        const std::string lang = canonical_language(params.lang);
        switch (id) {
        case MethodId::Colex: {
            if (!colex_ || !colex_->has_language(lang)) {
                throw Error(ErrorCode::LanguageUnavailable, "no colexification graph labels for '" + lang + "'");
            }
            auto graph = colex_;
            return ExpansionMethod(
                "colex", [graph, lang](const WordList& seeds) { return expand_colex(*graph, seeds, lang); },
                colex_universe_.at(lang));
        }
        case MethodId::Synonym: {
            auto it = synonyms_.find(lang);
            if (it == synonyms_.end()) {
                throw Error(ErrorCode::LanguageUnavailable, "no synonym graph for '" + lang + "'");
            }
            auto graph = it->second.graph;
            return ExpansionMethod(
                "synonym", [graph](const WordList& seeds) { return expand_synonym(*graph, seeds); },
                it->second.universe);
        }
        case MethodId::EmbeddingThreshold:
        case MethodId::EmbeddingCentroid: {
            const auto& e = find_embedding(lang, params.space);
            detail::check_tau(params.tau);
            auto space = e.space;
            const double tau = params.tau;
            if (id == MethodId::EmbeddingThreshold) {
                return ExpansionMethod(
                    "embedding-threshold:" + e.name,
                    [space, tau](const WordList& seeds) { return expand_threshold(*space, seeds, tau); }, e.universe);
            }
            return ExpansionMethod(
                "embedding-centroid:" + e.name,
                [space, tau](const WordList& seeds) { return expand_centroid(*space, seeds, tau); }, e.universe);
        }
        case MethodId::Union:
        case MethodId::Intersection: {
            auto parts = base_methods(lang, params.tau);
            if (parts.size() < 2) {
                throw Error(ErrorCode::LanguageUnavailable,
                            "combining needs at least two methods available for '" + lang + "'");
            }
            return combine_methods(std::move(parts),
                                   id == MethodId::Union ? CombineMode::Union : CombineMode::Intersection);
        }
        }
        throw Error(ErrorCode::InvalidArgument, "unknown method");
    }

    /// Every single method runnable in `lang`: the graph methods, then the
    /// threshold and centroid expanders of each embedding space.
    std::vector<ExpansionMethod> base_methods(const std::string& lang, double tau) const {
        std::vector<ExpansionMethod> out;
        MethodParams p{lang, tau, {}};
        if (colex_ && colex_->has_language(lang)) {
            out.push_back(method(MethodId::Colex, p));
        }
        if (synonyms_.count(lang) != 0) {
            out.push_back(method(MethodId::Synonym, p));
        }
        for (const auto& e : embeddings_) {
            if (e.lang == lang) {
                p.space = e.name;
                out.push_back(method(MethodId::EmbeddingThreshold, p));
                out.push_back(method(MethodId::EmbeddingCentroid, p));
            }
        }
        return out;
    }

private:
    struct SynonymEntry {
        std::shared_ptr<const SynonymGraph> graph;
        WordList universe;
    };
    struct EmbeddingEntry {
        std::string name;
        std::string lang;
        std::shared_ptr<const EmbeddingSpace> space;
        WordList universe;
    };

    const EmbeddingEntry& find_embedding(const std::string& lang, const std::string& name) const {
        for (const auto& e : embeddings_) {
            if (e.lang == lang && (name.empty() || e.name == name)) {
                return e;
            }
        }
        throw Error(ErrorCode::LanguageUnavailable,
                    "no embedding space" + (name.empty() ? std::string() : " '" + name + "'") + " for '" + lang + "'");
    }

    std::shared_ptr<const ColexGraph> colex_;
    std::map<std::string, WordList> colex_universe_;
    std::map<std::string, SynonymEntry> synonyms_;
    std::vector<EmbeddingEntry> embeddings_;
};

}

#endif

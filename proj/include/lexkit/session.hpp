#ifndef LEXKIT_SESSION_HPP
#define LEXKIT_SESSION_HPP

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "annotation.hpp"
#include "core.hpp"
#include "error.hpp"

namespace lexkit {

enum class Decision { Accept, Reject };

inline std::string_view to_string(Decision d) {
    return d == Decision::Accept ? "accept" : "reject";
}

inline std::optional<Decision> parse_decision(std::string_view text) {
    if (text == "accept") {
        return Decision::Accept;
    }
    if (text == "reject") {
        return Decision::Reject;
    }
    return std::nullopt;
}

/// Curation state for one expansion: the candidate lexicon and the latest
/// accept/reject decision per word.
struct Session {
    std::string id;
    std::string method;
    nlohmann::json params = nlohmann::json::object();
    WordList seeds;
    WordList candidates;
    WordList unmatched;
    std::map<std::string, Decision> decisions;

    bool is_candidate(std::string_view word) const { return candidates.contains(word); }

    /// Candidates minus rejected words; pending and accepted words stay.
    WordList curated() const {
        WordList out(seeds.name());
        for (const auto& w : candidates) {
            auto it = decisions.find(w.str());
            if (it == decisions.end() || it->second != Decision::Reject) {
                out.insert(w);
            }
        }
        return out;
    }

    /// Decided words in candidate order as `word,rater,label`.
    std::string annotations_csv(const std::string& rater) const {
        AnnotationSet set;
        for (const auto& w : candidates) {
            auto it = decisions.find(w.str());
            if (it != decisions.end()) {
                set.add(w, rater, it->second == Decision::Accept ? Label::Relevant : Label::Irrelevant);
            }
        }
        std::ostringstream out;
        write_annotations_csv(out, set);
        return out.str();
    }

    std::size_t count(Decision d) const {
        return static_cast<std::size_t>(
            std::count_if(decisions.begin(), decisions.end(), [d](const auto& kv) { return kv.second == d; }));
    }

    nlohmann::json state() const {
        nlohmann::json decided = nlohmann::json::object();
        for (const auto& [w, d] : decisions) {
            decided[w] = to_string(d);
        }
        return {{"session_id", id},
                {"method", method},
                {"params", params},
                {"seeds", seeds.strings()},
                {"expanded", candidates.strings()},
                {"unmatched", unmatched.strings()},
                {"decisions", decided},
                {"counts",
                 {{"candidates", candidates.size()},
                  {"accepted", count(Decision::Accept)},
                  {"rejected", count(Decision::Reject)},
                  {"pending", candidates.size() - decisions.size()}}}};
    }
};

namespace detail {

inline WordList words_from_json(const nlohmann::json& j) {
    WordList out;
    for (const auto& w : j) {
        out.insert(Word::normalize(w.get<std::string>()));
    }
    return out;
}

/// Applies one log event to `session`. Throws on malformed events.
inline void apply_event(Session& session, const nlohmann::json& event) {
    const auto type = event.at("event").get<std::string>();
    if (type == "create") {
        session.id = event.at("session_id").get<std::string>();
        session.method = event.at("method").get<std::string>();
        session.params = event.at("params");
        session.seeds = words_from_json(event.at("seeds"));
        session.candidates = words_from_json(event.at("expanded"));
        session.unmatched = words_from_json(event.at("unmatched"));
        session.decisions.clear();
    } else if (type == "decide") {
        auto d = parse_decision(event.at("decision").get<std::string>());
        if (!d) {
            throw Error(ErrorCode::ParseError, "unknown decision in session log");
        }
        session.decisions[event.at("word").get<std::string>()] = *d;
    } else {
        throw Error(ErrorCode::ParseError, "unknown session event '" + type + "'");
    }
}

}

/// Sessions backed by one append-only JSON-lines log per session under
/// `dir`. Opening a store replays every log, so a restart loses nothing.
class SessionStore {
public:
    explicit SessionStore(std::filesystem::path dir) : dir_(std::move(dir)) {
        std::filesystem::create_directories(dir_);
        for (const auto& entry : std::filesystem::directory_iterator(dir_)) {
            if (entry.path().extension() != ".jsonl") {
                continue;
            }
            auto session = replay(entry.path());
            next_id_ = std::max(next_id_, numeric_suffix(session.id) + 1);
            auto slot = std::make_shared<Slot>();
            slot->session = std::move(session);
            slots_.emplace(slot->session.id, std::move(slot));
        }
    }

    /// Rebuilds a session purely from its log.
    static Session replay(const std::filesystem::path& log) {
        auto in = detail::open_input(log);
        Session session;
        std::string line;
        std::size_t lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            if (line.empty()) {
                continue;
            }
            try {
                detail::apply_event(session, nlohmann::json::parse(line));
            } catch (const nlohmann::json::exception& e) {
                throw ParseError(lineno, log.filename().string() + ": " + e.what());
            }
        }
        return session;
    }

    Session create(std::string method, nlohmann::json params, const Expansion& expansion) {
        std::string id;
        {
            std::unique_lock lock(mutex_);
            char buf[32];
            std::snprintf(buf, sizeof(buf), "s%06zu", next_id_++);
            id = buf;
        }
        auto slot = std::make_shared<Slot>();
        nlohmann::json event = {{"event", "create"},
                                {"session_id", id},
                                {"method", std::move(method)},
                                {"params", std::move(params)},
                                {"seeds", expansion.seeds.strings()},
                                {"expanded", expansion.lexicon().strings()},
                                {"unmatched", expansion.unmatched.strings()}};
        {
            std::lock_guard guard(slot->mutex);
            append(id, event);
            detail::apply_event(slot->session, event);
        }
        Session copy = slot->session;
        std::unique_lock lock(mutex_);
        slots_.emplace(id, std::move(slot));
        return copy;
    }

    /// Records a decision. Returns nullopt for an unknown session; throws
    /// InvalidArgument when `word` is not one of the session's candidates.
    std::optional<Session> decide(const std::string& id, const std::string& word, Decision decision) {
        auto slot = find_slot(id);
        if (!slot) {
            return std::nullopt;
        }
        std::lock_guard guard(slot->mutex);
        if (!slot->session.is_candidate(word)) {
            throw Error(ErrorCode::InvalidArgument, "'" + word + "' is not a candidate of session " + id);
        }
        nlohmann::json event = {{"event", "decide"}, {"word", word}, {"decision", to_string(decision)}};
        append(id, event);
        detail::apply_event(slot->session, event);
        return slot->session;
    }

    std::optional<Session> find(const std::string& id) const {
        auto slot = find_slot(id);
        if (!slot) {
            return std::nullopt;
        }
        std::lock_guard guard(slot->mutex);
        return slot->session;
    }

    std::filesystem::path log_path(const std::string& id) const { return dir_ / (id + ".jsonl"); }

private:
    struct Slot {
        mutable std::mutex mutex;
        Session session;
    };

    std::shared_ptr<Slot> find_slot(const std::string& id) const {
        std::shared_lock lock(mutex_);
        auto it = slots_.find(id);
        return it == slots_.end() ? nullptr : it->second;
    }

    void append(const std::string& id, const nlohmann::json& event) const {
        std::ofstream out(log_path(id), std::ios::binary | std::ios::app);
        out << event.dump() << '\n';
        out.flush();
        if (!out) {
            throw Error(ErrorCode::Io, "cannot append to " + log_path(id).string());
        }
    }

    static std::size_t numeric_suffix(const std::string& id) {
        try {
            return id.size() > 1 ? std::stoul(id.substr(1)) : 0;
        } catch (const std::exception&) {
            return 0;
        }
    }

    std::filesystem::path dir_;
    mutable std::shared_mutex mutex_;
    std::map<std::string, std::shared_ptr<Slot>> slots_;
    std::size_t next_id_ = 1;
};

}

#endif

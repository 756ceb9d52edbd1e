#ifndef LEXKIT_SERVICE_HPP
#define LEXKIT_SERVICE_HPP

#include <string>

#include <httplib.h>
#include <json.hpp>

#include "core.hpp"
#include "error.hpp"
#include "methods.hpp"
#include "session.hpp"

namespace lexkit {

namespace detail {

inline void reply(httplib::Response& res, int status, const nlohmann::json& body) {
    res.status = status;
    res.set_header("Access-Control-Allow-Origin", "*");
    res.set_content(body.dump(), "application/json");
}

inline void reply_error(httplib::Response& res, int status, const std::string& message) {
    reply(res, status, {{"error", message}});
}

inline int http_status(const Error& e) {
    switch (e.code()) {
    case ErrorCode::LanguageUnavailable:
    case ErrorCode::Io:
        return 503;
    default:
        return 400;
    }
}

inline std::optional<nlohmann::json> parse_body(const httplib::Request& req, httplib::Response& res) {
    try {
        auto body = nlohmann::json::parse(req.body);
        if (!body.is_object()) {
            reply_error(res, 400, "request body must be a JSON object");
            return std::nullopt;
        }
        return body;
    } catch (const nlohmann::json::exception& e) {
        reply_error(res, 400, std::string("invalid JSON: ") + e.what());
        return std::nullopt;
    }
}

}

/// Registers the curation API on `server`:
///   POST /expand                 {seeds, method, params} -> candidates + new session
///   GET  /session/{id}           session state
///   POST /session/{id}/decide    {word, decision: accept|reject}
///   GET  /session/{id}/export    curated word list + annotation CSV
///   GET  /methods                loaded resources
/// `resources` and `sessions` must outlive the server.
inline void install_routes(httplib::Server& server, const ResourceStore& resources, SessionStore& sessions) {
    server.Get("/methods", [&resources](const httplib::Request&, httplib::Response& res) {
        nlohmann::json methods = nlohmann::json::array();
        for (auto m : {MethodId::Colex, MethodId::Synonym, MethodId::EmbeddingThreshold, MethodId::EmbeddingCentroid,
                       MethodId::Union, MethodId::Intersection}) {
            methods.push_back({{"id", to_string(m)}, {"languages", resources.languages(m)}});
        }
        nlohmann::json spaces = nlohmann::json::array();
        for (const auto& [name, lang] : resources.embedding_spaces()) {
            spaces.push_back({{"name", name}, {"lang", lang}});
        }
        detail::reply(res, 200, {{"methods", methods}, {"embedding_spaces", spaces}});
    });

    server.Post("/expand", [&resources, &sessions](const httplib::Request& req, httplib::Response& res) {
        auto body = detail::parse_body(req, res);
        if (!body) {
            return;
        }
        try {
            if (!body->contains("seeds") || !(*body)["seeds"].is_array() || !body->contains("method") ||
                !(*body)["method"].is_string()) {
                detail::reply_error(res, 400, "expected {\"seeds\": [...], \"method\": \"...\"}");
                return;
            }
            auto method = parse_method((*body)["method"].get<std::string>());
            if (!method) {
                detail::reply_error(res, 400, "unknown method '" + (*body)["method"].get<std::string>() + "'");
                return;
            }
            nlohmann::json params = body->value("params", nlohmann::json::object());
            MethodParams p;
            p.lang = params.value("lang", std::string(kEnglish));
            p.tau = params.value("tau", kDefaultTau);
            p.space = params.value("space", std::string());
            params = {{"lang", canonical_language(p.lang)}, {"tau", p.tau}, {"space", p.space}};

            WordList seeds("seeds");
            for (const auto& s : (*body)["seeds"]) {
                seeds.insert(Word::normalize(s.get<std::string>()));
            }
            if (seeds.empty()) {
                detail::reply_error(res, 400, "no seed words given");
                return;
            }

            const ExpansionMethod expander = resources.method(*method, p);
            Expansion expansion{seeds, WordList(), seeds};
            try {
                expansion = expander.expand(seeds);
            } catch (const Error& e) {
                if (e.code() != ErrorCode::NotExpandable) {
                    throw;
                }
            }
            Session s = sessions.create(std::string(to_string(*method)), params, expansion);
            detail::reply(res, 200,
                          {{"session_id", s.id},
                           {"expanded", s.candidates.strings()},
                           {"added", expansion.added.strings()},
                           {"unmatched", s.unmatched.strings()},
                           {"expandable", expansion.expandable()}});
        } catch (const Error& e) {
            detail::reply_error(res, detail::http_status(e), e.what());
        } catch (const nlohmann::json::exception& e) {
            detail::reply_error(res, 400, e.what());
        }
    });

    server.Get(R"(/session/([A-Za-z0-9_-]+))", [&sessions](const httplib::Request& req, httplib::Response& res) {
        auto s = sessions.find(req.matches[1]);
        if (!s) {
            detail::reply_error(res, 404, "unknown session");
            return;
        }
        detail::reply(res, 200, s->state());
    });

    server.Post(R"(/session/([A-Za-z0-9_-]+)/decide)", [&sessions](const httplib::Request& req, httplib::Response& res) {
        const std::string id = req.matches[1];
        if (!sessions.find(id)) {
            detail::reply_error(res, 404, "unknown session");
            return;
        }
        auto body = detail::parse_body(req, res);
        if (!body) {
            return;
        }
        try {
            auto decision = parse_decision(body->value("decision", std::string()));
            if (!decision || !body->contains("word")) {
                detail::reply_error(res, 400, "expected {\"word\": ..., \"decision\": \"accept\"|\"reject\"}");
                return;
            }
            const Word word = Word::normalize((*body)["word"].get<std::string>());
            auto s = sessions.decide(id, word.str(), *decision);
            if (!s) {
                detail::reply_error(res, 404, "unknown session");
                return;
            }
            detail::reply(res, 200, s->state());
        } catch (const Error& e) {
            detail::reply_error(res, detail::http_status(e), e.what());
        } catch (const nlohmann::json::exception& e) {
            detail::reply_error(res, 400, e.what());
        }
    });

    server.Get(R"(/session/([A-Za-z0-9_-]+)/export)", [&sessions](const httplib::Request& req, httplib::Response& res) {
        auto s = sessions.find(req.matches[1]);
        if (!s) {
            detail::reply_error(res, 404, "unknown session");
            return;
        }
        const std::string rater = req.has_param("rater") ? req.get_param_value("rater") : "curator";
        const WordList curated = s->curated();
        detail::reply(res, 200,
                      {{"session_id", s->id},
                       {"size", curated.size()},
                       {"wordlist", to_text(curated)},
                       {"annotations_csv", s->annotations_csv(rater)}});
    });
}

}

#endif

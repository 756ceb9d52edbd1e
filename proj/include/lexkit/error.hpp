#ifndef LEXKIT_ERROR_HPP
#define LEXKIT_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace lexkit {

enum class ErrorCode {
    InvalidWord,
    InvalidPattern,
    InvalidArgument,
    ParseError,
    NoData,
    LanguageUnavailable,
    DegenerateVector,
    NotExpandable,
    InfeasibleSample,
    UndefinedKappa,
    EmptyDocument,
    UndefinedCorrelation,
    Io,
};

inline std::string_view to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::InvalidWord: return "InvalidWord";
    case ErrorCode::InvalidPattern: return "InvalidPattern";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NoData: return "NoData";
    case ErrorCode::LanguageUnavailable: return "LanguageUnavailable";
    case ErrorCode::DegenerateVector: return "DegenerateVector";
    case ErrorCode::NotExpandable: return "NotExpandable";
    case ErrorCode::InfeasibleSample: return "InfeasibleSample";
    case ErrorCode::UndefinedKappa: return "UndefinedKappa";
    case ErrorCode::EmptyDocument: return "EmptyDocument";
    case ErrorCode::UndefinedCorrelation: return "UndefinedCorrelation";
    case ErrorCode::Io: return "Io";
    }
    return "Unknown";
}

/// Base exception for every failure raised by the library. The code lets
/// callers (CLI exit codes, HTTP status mapping) dispatch without RTTI games.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

/// Parse failure tied to a 1-based line of some input file.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& message)
        : Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + message), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

}

#endif

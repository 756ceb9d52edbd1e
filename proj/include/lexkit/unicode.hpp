#ifndef LEXKIT_UNICODE_HPP
#define LEXKIT_UNICODE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <unicode/locid.h>
#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>
#include <unicode/utf8.h>

namespace lexkit::unicode {

/// True when `text` is well-formed UTF-8.
inline bool valid_utf8(std::string_view text) {
    const auto* s = reinterpret_cast<const std::uint8_t*>(text.data());
    const auto length = static_cast<std::int32_t>(text.size());
    std::int32_t i = 0;
    while (i < length) {
        UChar32 c;
        U8_NEXT(s, i, length, c);
        if (c < 0) {
            return false;
        }
    }
    return true;
}

/// Calls `fn(code_point, byte_offset, byte_length)` for every code point.
/// Input must be valid UTF-8.
template<typename Fn_>
void for_each_code_point(std::string_view text, Fn_&& fn) {
    const auto* s = reinterpret_cast<const std::uint8_t*>(text.data());
    const auto length = static_cast<std::int32_t>(text.size());
    std::int32_t i = 0;
    while (i < length) {
        const std::int32_t start = i;
        UChar32 c;
        U8_NEXT(s, i, length, c);
        fn(c, static_cast<std::size_t>(start), static_cast<std::size_t>(i - start));
    }
}

inline bool is_space(UChar32 c) {
    return u_isUWhiteSpace(c) != 0;
}

/// Letters, plus combining marks so decomposed accents stay attached.
inline bool is_word_char(UChar32 c) {
    return u_isalpha(c) || (U_GET_GC_MASK(c) & U_GC_M_MASK) != 0;
}

inline bool is_letter(UChar32 c) {
    return u_isalpha(c) != 0;
}

/// Strips leading and trailing Unicode white space.
inline std::string_view trim(std::string_view text) {
    std::size_t first = text.size();
    std::size_t last = 0;
    for_each_code_point(text, [&](UChar32 c, std::size_t offset, std::size_t width) {
        if (!is_space(c)) {
            if (first == text.size()) {
                first = offset;
            }
            last = offset + width;
        }
    });
    if (first == text.size()) {
        return {};
    }
    return text.substr(first, last - first);
}

inline bool contains_space(std::string_view text) {
    bool found = false;
    for_each_code_point(text, [&](UChar32 c, std::size_t, std::size_t) {
        found = found || is_space(c);
    });
    return found;
}

/// Root-locale full lowercase mapping followed by NFC composition.
/// Returns nullopt for malformed UTF-8.
inline std::optional<std::string> fold(std::string_view text) {
    if (!valid_utf8(text)) {
        return std::nullopt;
    }
    auto ustr = icu::UnicodeString::fromUTF8(icu::StringPiece(text.data(), static_cast<std::int32_t>(text.size())));
    ustr.toLower(icu::Locale::getRoot());

    UErrorCode status = U_ZERO_ERROR;
    const icu::Normalizer2* nfc = icu::Normalizer2::getNFCInstance(status);
    if (U_FAILURE(status)) {
        return std::nullopt;
    }
    icu::UnicodeString composed = nfc->normalize(ustr, status);
    if (U_FAILURE(status)) {
        return std::nullopt;
    }
    std::string out;
    composed.toUTF8String(out);
    return out;
}

}

#endif

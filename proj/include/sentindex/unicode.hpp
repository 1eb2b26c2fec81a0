#pragma once

#include <cstdint>
#include <string>
#include <string_view>

// Minimal UTF-8 and code point classification support, sized for social-media
// text in Cyrillic/Latin scripts. Not a full Unicode property database: the
// letter test assumes unknown non-ASCII code points are letters unless they
// fall into known punctuation/symbol/emoji blocks.
namespace sentindex::uni {

inline constexpr char32_t kReplacement = 0xFFFD;

// Decodes the code point starting at s[i] and advances i past it.
// Malformed sequences yield U+FFFD and advance by one byte.
char32_t decode(std::string_view s, std::size_t& i);

void encode(char32_t cp, std::string& out);

bool is_space(char32_t cp);
bool is_digit(char32_t cp);
bool is_letter(char32_t cp);

// Simple case folding for ASCII, Latin-1/Extended-A, Greek and Cyrillic.
// Everything else passes through unchanged.
char32_t to_lower(char32_t cp);

std::string lower_copy(std::string_view s);

bool valid_utf8(std::string_view s);

}  // namespace sentindex::uni

#ifndef ARGFORGE_TEXT_HPP
#define ARGFORGE_TEXT_HPP

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace argforge {

// Whitespace split with punctuation separated into standalone tokens.
// Alphanumeric runs (and any non-ASCII bytes) form tokens; every ASCII
// punctuation character becomes its own single-char token.
std::vector<std::string> tokenize(std::string_view text);

struct TokenOffset {
    std::string text;
    std::size_t begin = 0;  // byte offset into the source
    std::size_t end = 0;    // one past the last byte
};

std::vector<TokenOffset> tokenize_with_offsets(std::string_view text);

std::string to_lower(std::string_view s);
std::vector<std::string> lower_tokens(std::string_view text);

// Trim outer whitespace and collapse internal runs to single spaces.
std::string normalize_whitespace(std::string_view s);

// Lowercase + whitespace-collapse; the dedup key for sentences.
std::string normalize_text(std::string_view s);

std::string join_tokens(const std::vector<std::string>& tokens, std::string_view sep = " ");

bool contains_punct(std::string_view token);
bool contains_digit(std::string_view token);
bool is_alphabetic(std::string_view token);

// True iff `needle` occurs as a contiguous subsequence of `haystack`.
bool contains_subsequence(const std::vector<std::string>& haystack,
                          const std::vector<std::string>& needle);

// One entry per line; blank lines and lines starting with '#' are skipped.
std::vector<std::string> load_word_list(const std::filesystem::path& path);
std::unordered_set<std::string> load_word_set(const std::filesystem::path& path);

std::uint64_t fnv1a64(std::string_view bytes);
std::string fnv1a64_hex(std::string_view bytes);
std::string file_fnv1a64_hex(const std::filesystem::path& path);

} // namespace argforge

#endif

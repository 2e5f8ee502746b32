#include "argforge/text.hpp"

#include <cctype>
#include <fstream>

#include "argforge/errors.hpp"

namespace argforge {

namespace {

inline bool is_ascii_space(unsigned char c) { return std::isspace(c) != 0; }
inline bool is_ascii_punct(unsigned char c) { return c < 0x80 && std::ispunct(c) != 0; }
inline bool is_word_char(unsigned char c) {
    // Non-ASCII bytes are treated as word characters so UTF-8 stays glued.
    return c >= 0x80 || std::isalnum(c) != 0;
}

} // namespace

std::vector<TokenOffset> tokenize_with_offsets(std::string_view text) {
    std::vector<TokenOffset> out;
    std::size_t i = 0;
    const std::size_t n = text.size();
    while (i < n) {
        unsigned char c = static_cast<unsigned char>(text[i]);
        if (is_ascii_space(c)) {
            ++i;
            continue;
        }
        if (is_ascii_punct(c)) {
            out.push_back({std::string(1, text[i]), i, i + 1});
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < n && is_word_char(static_cast<unsigned char>(text[j]))) ++j;
        out.push_back({std::string(text.substr(i, j - i)), i, j});
        i = j;
    }
    return out;
}

std::vector<std::string> tokenize(std::string_view text) {
    std::vector<std::string> out;
    for (auto& t : tokenize_with_offsets(text)) out.push_back(std::move(t.text));
    return out;
}

std::string to_lower(std::string_view s) {
    std::string out(s);
    for (auto& c : out)
        c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

std::vector<std::string> lower_tokens(std::string_view text) {
    auto toks = tokenize(text);
    for (auto& t : toks) t = to_lower(t);
    return toks;
}

std::string normalize_whitespace(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    bool in_space = true;  // leading whitespace dropped
    for (unsigned char c : s) {
        if (is_ascii_space(c)) {
            in_space = true;
        } else {
            if (in_space && !out.empty()) out += ' ';
            out += static_cast<char>(c);
            in_space = false;
        }
    }
    return out;
}

std::string normalize_text(std::string_view s) {
    return to_lower(normalize_whitespace(s));
}

std::string join_tokens(const std::vector<std::string>& tokens, std::string_view sep) {
    std::string out;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        if (i) out += sep;
        out += tokens[i];
    }
    return out;
}

bool contains_punct(std::string_view token) {
    for (unsigned char c : token)
        if (is_ascii_punct(c)) return true;
    return false;
}

bool contains_digit(std::string_view token) {
    for (unsigned char c : token)
        if (std::isdigit(c)) return true;
    return false;
}

bool is_alphabetic(std::string_view token) {
    if (token.empty()) return false;
    for (unsigned char c : token)
        if (c < 0x80 && !std::isalpha(c)) return false;
    return true;
}

bool contains_subsequence(const std::vector<std::string>& haystack,
                          const std::vector<std::string>& needle) {
    if (needle.empty() || needle.size() > haystack.size()) return false;
    for (std::size_t i = 0; i + needle.size() <= haystack.size(); ++i) {
        bool ok = true;
        for (std::size_t j = 0; j < needle.size(); ++j) {
            if (haystack[i + j] != needle[j]) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
    }
    return false;
}

std::vector<std::string> load_word_list(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open word list: " + path.string());
    std::vector<std::string> out;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        auto t = normalize_whitespace(line);
        if (t.empty() || t[0] == '#') continue;
        out.push_back(to_lower(t));
    }
    return out;
}

std::unordered_set<std::string> load_word_set(const std::filesystem::path& path) {
    auto list = load_word_list(path);
    return {list.begin(), list.end()};
}

std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

std::string fnv1a64_hex(std::string_view bytes) {
    static const char* digits = "0123456789abcdef";
    std::uint64_t h = fnv1a64(bytes);
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = digits[h & 0xf];
        h >>= 4;
    }
    return out;
}

std::string file_fnv1a64_hex(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open file for hashing: " + path.string());
    std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return fnv1a64_hex(data);
}

} // namespace argforge

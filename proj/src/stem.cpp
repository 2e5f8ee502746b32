#include "argforge/stem.hpp"

#include <array>
#include <cctype>

#include "argforge/text.hpp"

namespace argforge {

namespace {

bool is_vowel_at(const std::string& w, std::size_t i) {
    char c = w[i];
    if (c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u') return true;
    // y counts as a vowel when preceded by a consonant
    if (c == 'y') return i > 0 && !is_vowel_at(w, i - 1);
    return false;
}

// Porter's measure m: number of VC sequences in [C](VC)^m[V].
int measure(const std::string& w) {
    int m = 0;
    std::size_t i = 0;
    const std::size_t n = w.size();
    while (i < n && !is_vowel_at(w, i)) ++i;  // leading consonants
    while (i < n) {
        while (i < n && is_vowel_at(w, i)) ++i;
        if (i == n) break;
        while (i < n && !is_vowel_at(w, i)) ++i;
        ++m;
    }
    return m;
}

bool has_vowel(const std::string& w) {
    for (std::size_t i = 0; i < w.size(); ++i)
        if (is_vowel_at(w, i)) return true;
    return false;
}

bool ends_double_consonant(const std::string& w) {
    if (w.size() < 2) return false;
    std::size_t n = w.size();
    return w[n - 1] == w[n - 2] && !is_vowel_at(w, n - 1);
}

// *o: stem ends cvc where the final consonant is not w, x or y.
bool ends_cvc(const std::string& w) {
    if (w.size() < 3) return false;
    std::size_t n = w.size();
    if (is_vowel_at(w, n - 3) || !is_vowel_at(w, n - 2) || is_vowel_at(w, n - 1)) return false;
    char c = w[n - 1];
    return c != 'w' && c != 'x' && c != 'y';
}

bool ends_with(const std::string& w, std::string_view suf) {
    return w.size() >= suf.size() && w.compare(w.size() - suf.size(), suf.size(), suf) == 0;
}

std::string stem_of(const std::string& w, std::size_t suffix_len) {
    return w.substr(0, w.size() - suffix_len);
}

struct Rule {
    std::string_view suffix;
    std::string_view replacement;
    int min_measure;  // condition: m(stem) > min_measure
};

// Longest matching suffix wins; its condition decides, no fallback.
bool apply_rules(std::string& w, const Rule* rules, std::size_t count) {
    const Rule* best = nullptr;
    for (std::size_t i = 0; i < count; ++i) {
        if (ends_with(w, rules[i].suffix)) {
            if (!best || rules[i].suffix.size() > best->suffix.size()) best = &rules[i];
        }
    }
    if (!best) return false;
    std::string stem = stem_of(w, best->suffix.size());
    if (measure(stem) > best->min_measure) {
        w = stem + std::string(best->replacement);
        return true;
    }
    return false;
}

void step_1a(std::string& w) {
    if (ends_with(w, "sses")) {
        w = stem_of(w, 2);
    } else if (ends_with(w, "ies")) {
        w = stem_of(w, 2);
    } else if (ends_with(w, "ss")) {
        // unchanged
    } else if (ends_with(w, "s")) {
        w = stem_of(w, 1);
    }
}

void step_1b(std::string& w) {
    if (ends_with(w, "eed")) {
        std::string stem = stem_of(w, 3);
        if (measure(stem) > 0) w = stem + "ee";
        return;
    }
    bool fired = false;
    if (ends_with(w, "ed")) {
        std::string stem = stem_of(w, 2);
        if (has_vowel(stem)) {
            w = stem;
            fired = true;
        }
    } else if (ends_with(w, "ing")) {
        std::string stem = stem_of(w, 3);
        if (has_vowel(stem)) {
            w = stem;
            fired = true;
        }
    }
    if (!fired) return;
    if (ends_with(w, "at") || ends_with(w, "bl") || ends_with(w, "iz")) {
        w += 'e';
    } else if (ends_double_consonant(w) && !ends_with(w, "l") && !ends_with(w, "s") &&
               !ends_with(w, "z")) {
        w = stem_of(w, 1);
    } else if (measure(w) == 1 && ends_cvc(w)) {
        w += 'e';
    }
}

void step_1c(std::string& w) {
    if (ends_with(w, "y")) {
        std::string stem = stem_of(w, 1);
        if (has_vowel(stem)) w = stem + "i";
    }
}

void step_2(std::string& w) {
    static const std::array<Rule, 20> rules = {{
        {"ational", "ate", 0}, {"tional", "tion", 0}, {"enci", "ence", 0},
        {"anci", "ance", 0},   {"izer", "ize", 0},    {"abli", "able", 0},
        {"alli", "al", 0},     {"entli", "ent", 0},   {"eli", "e", 0},
        {"ousli", "ous", 0},   {"ization", "ize", 0}, {"ation", "ate", 0},
        {"ator", "ate", 0},    {"alism", "al", 0},    {"iveness", "ive", 0},
        {"fulness", "ful", 0}, {"ousness", "ous", 0}, {"aliti", "al", 0},
        {"iviti", "ive", 0},   {"biliti", "ble", 0},
    }};
    apply_rules(w, rules.data(), rules.size());
}

void step_3(std::string& w) {
    static const std::array<Rule, 7> rules = {{
        {"icate", "ic", 0}, {"ative", "", 0}, {"alize", "al", 0}, {"iciti", "ic", 0},
        {"ical", "ic", 0},  {"ful", "", 0},   {"ness", "", 0},
    }};
    apply_rules(w, rules.data(), rules.size());
}

void step_4(std::string& w) {
    static const std::array<Rule, 18> rules = {{
        {"al", "", 1},    {"ance", "", 1}, {"ence", "", 1}, {"er", "", 1},
        {"ic", "", 1},    {"able", "", 1}, {"ible", "", 1}, {"ant", "", 1},
        {"ement", "", 1}, {"ment", "", 1}, {"ent", "", 1},  {"ou", "", 1},
        {"ism", "", 1},   {"ate", "", 1},  {"iti", "", 1},  {"ous", "", 1},
        {"ive", "", 1},   {"ize", "", 1},
    }};
    // "ion" only after s or t; handled outside the table because of the
    // extra letter condition.
    const Rule* best = nullptr;
    for (const auto& r : rules) {
        if (ends_with(w, r.suffix) && (!best || r.suffix.size() > best->suffix.size()))
            best = &r;
    }
    bool ion = ends_with(w, "ion");
    if (ion && (!best || 3 > best->suffix.size())) {
        std::string stem = stem_of(w, 3);
        if (!stem.empty() && (stem.back() == 's' || stem.back() == 't') && measure(stem) > 1)
            w = stem;
        return;
    }
    if (best) {
        std::string stem = stem_of(w, best->suffix.size());
        if (measure(stem) > 1) w = stem;
    }
}

void step_5a(std::string& w) {
    if (!ends_with(w, "e")) return;
    std::string stem = stem_of(w, 1);
    int m = measure(stem);
    if (m > 1 || (m == 1 && !ends_cvc(stem))) w = stem;
}

void step_5b(std::string& w) {
    if (measure(w) > 1 && ends_double_consonant(w) && ends_with(w, "l")) w = stem_of(w, 1);
}

} // namespace

std::string porter_stem(std::string_view word) {
    std::string w = to_lower(word);
    if (w.size() <= 2) return w;
    for (char c : w)
        if (!std::isalpha(static_cast<unsigned char>(c))) return w;
    step_1a(w);
    step_1b(w);
    step_1c(w);
    step_2(w);
    step_3(w);
    step_4(w);
    step_5a(w);
    step_5b(w);
    return w;
}

std::string stem_phrase(std::string_view phrase) {
    auto toks = lower_tokens(phrase);
    for (auto& t : toks) t = porter_stem(t);
    return join_tokens(toks);
}

std::vector<std::string> stem_tokens(const std::vector<std::string>& tokens) {
    std::vector<std::string> out;
    out.reserve(tokens.size());
    for (const auto& t : tokens) out.push_back(porter_stem(to_lower(t)));
    return out;
}

} // namespace argforge

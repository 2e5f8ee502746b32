#include "argforge/clients.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>

#include "argforge/errors.hpp"
#include "argforge/text.hpp"

namespace argforge {

Lexicons Lexicons::load(const std::filesystem::path& dir) {
    Lexicons lex;
    lex.cues = load_word_set(dir / "argument_cues.txt");
    lex.positive = load_word_set(dir / "positive.txt");
    lex.negative = load_word_set(dir / "negative.txt");
    auto stop_path = dir / "stopwords_en.txt";
    if (!std::filesystem::exists(stop_path)) stop_path = dir.parent_path() / "stopwords_en.txt";
    lex.stopwords = load_word_set(stop_path);
    for (const auto& phrase : load_word_list(dir / "aspects.txt"))
        lex.aspect_phrases.push_back(lower_tokens(phrase));
    // longest-first so greedy matching prefers multi-token aspects
    std::sort(lex.aspect_phrases.begin(), lex.aspect_phrases.end(),
              [](const auto& a, const auto& b) {
                  if (a.size() != b.size()) return a.size() > b.size();
                  return a < b;
              });
    return lex;
}

BaselineClient::BaselineClient(Lexicons lexicons) : lex_(std::move(lexicons)) {}

std::vector<Label> BaselineClient::classify_arguments(const std::vector<std::string>& texts,
                                                      const std::string& topic) {
    auto topic_toks = lower_tokens(topic);
    std::set<std::string> topic_set(topic_toks.begin(), topic_toks.end());
    std::vector<Label> out;
    out.reserve(texts.size());
    for (const auto& text : texts) {
        auto toks = lower_tokens(text);
        bool has_topic = std::any_of(toks.begin(), toks.end(), [&](const std::string& t) {
            return topic_set.count(t) > 0;
        });
        std::set<std::string> cue_hits;
        for (const auto& t : toks)
            if (lex_.cues.count(t)) cue_hits.insert(t);
        if (has_topic && !cue_hits.empty()) {
            double score = std::min(1.0, 0.5 + 0.1 * static_cast<double>(cue_hits.size()));
            out.push_back({LabelKind::Argument, score});
        } else {
            out.push_back({LabelKind::NonArgument, 0.8});
        }
    }
    return out;
}

std::vector<Label> BaselineClient::classify_stance(const std::vector<std::string>& texts,
                                                   const std::string& /*topic*/) {
    std::vector<Label> out;
    out.reserve(texts.size());
    for (const auto& text : texts) {
        auto toks = lower_tokens(text);
        std::set<std::string> pos, neg;
        for (const auto& t : toks) {
            if (lex_.positive.count(t)) pos.insert(t);
            if (lex_.negative.count(t)) neg.insert(t);
        }
        // Laplace-smoothed probability of pro; ties land on 0.5 which the
        // 0.5 decision threshold resolves to con.
        double p_pro = (1.0 + static_cast<double>(pos.size())) /
                       (2.0 + static_cast<double>(pos.size()) + static_cast<double>(neg.size()));
        if (p_pro > 0.5)
            out.push_back({LabelKind::Pro, p_pro});
        else
            out.push_back({LabelKind::Con, 1.0 - p_pro});
    }
    return out;
}

std::vector<std::vector<AspectSpan>> BaselineClient::detect_aspect_spans(
    const std::vector<std::string>& texts, const std::string& /*topic*/) {
    std::vector<std::vector<AspectSpan>> out;
    out.reserve(texts.size());
    for (const auto& text : texts) {
        auto toks = tokenize(text);
        std::vector<std::string> low(toks.size());
        std::transform(toks.begin(), toks.end(), low.begin(),
                       [](const std::string& t) { return to_lower(t); });
        std::vector<AspectSpan> spans;
        std::size_t i = 0;
        while (i < low.size()) {
            bool matched = false;
            for (const auto& phrase : lex_.aspect_phrases) {
                if (phrase.size() > 4 || i + phrase.size() > low.size()) continue;
                bool eq = true;
                for (std::size_t j = 0; j < phrase.size(); ++j) {
                    if (low[i + j] != phrase[j]) {
                        eq = false;
                        break;
                    }
                }
                if (eq) {
                    std::vector<std::string> surf(toks.begin() + static_cast<long>(i),
                                                  toks.begin() + static_cast<long>(i + phrase.size()));
                    spans.push_back({i, phrase.size(), join_tokens(surf)});
                    i += phrase.size();
                    matched = true;
                    break;
                }
            }
            if (!matched) ++i;
        }
        out.push_back(std::move(spans));
    }
    return out;
}

std::vector<QualityScore> BaselineClient::score_quality(const std::vector<std::string>& texts,
                                                        const std::string& /*topic*/) {
    std::vector<QualityScore> out;
    out.reserve(texts.size());
    for (const auto& text : texts) {
        std::set<std::string> content;
        for (const auto& t : lower_tokens(text))
            if (is_alphabetic(t) && !lex_.stopwords.count(t)) content.insert(t);
        double v = 0.3 + 0.05 * static_cast<double>(content.size());
        out.push_back({std::clamp(v, 0.0, 1.0)});
    }
    return out;
}

namespace {

std::string fill(std::string tmpl, const std::string& topic, const std::string& aspect) {
    auto replace_all = [](std::string& s, const std::string& from, const std::string& to) {
        std::size_t pos = 0;
        while ((pos = s.find(from, pos)) != std::string::npos) {
            s.replace(pos, from.size(), to);
            pos += to.size();
        }
    };
    replace_all(tmpl, "{topic}", topic);
    replace_all(tmpl, "{aspect}", aspect);
    return tmpl;
}

const std::vector<std::string> kConTemplates = {
    "{topic} should be rejected because the {aspect} cannot be ignored .",
    "{topic} produces harmful {aspect} .",
    "critics argue that {topic} leads to serious {aspect} .",
    "the {aspect} associated with {topic} outweighs any benefit .",
};

const std::vector<std::string> kProTemplates = {
    "{topic} should be embraced because the {aspect} speaks for itself .",
    "{topic} delivers valuable {aspect} .",
    "supporters argue that {topic} improves the {aspect} we care about .",
    "the {aspect} linked to {topic} justifies broad support .",
};

const std::vector<std::string> kConNoAspectTemplates = {
    "there are many reasons to doubt {topic} .",
    "most people remain unconvinced about {topic} .",
};

const std::vector<std::string> kProNoAspectTemplates = {
    "there are many reasons to welcome {topic} .",
    "most people remain hopeful about {topic} .",
};

std::string truncate_tokens(const std::string& text, std::size_t max_tokens) {
    auto toks = tokenize(text);
    if (toks.size() <= max_tokens) return text;
    toks.resize(max_tokens);
    return join_tokens(toks);
}

} // namespace

std::string BaselineClient::generate_text(const GenerationRequest& req) {
    if (req.max_tokens == 0) throw MalformedResponseError("max_tokens must be >= 1");
    ControlCode code = parse_control_code(req.control_code);
    const auto& table = ignore_aspect_
                            ? (code.stance == Stance::Con ? kConNoAspectTemplates
                                                          : kProNoAspectTemplates)
                            : (code.stance == Stance::Con ? kConTemplates : kProTemplates);
    const std::string& tmpl = table[req.seed % table.size()];
    std::string text = fill(tmpl, code.topic, code.aspect);
    return truncate_tokens(text, req.max_tokens);
}

HttpClientOptions HttpClientOptions::from_env() {
    HttpClientOptions opts;
    if (const char* ep = std::getenv("ARGFORGE_ENDPOINT")) opts.endpoint = ep;
    if (const char* ms = std::getenv("ARGFORGE_TIMEOUT_MS")) opts.timeout_ms = std::atoi(ms);
    return opts;
}

} // namespace argforge

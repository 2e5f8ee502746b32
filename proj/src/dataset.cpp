#include "argforge/dataset.hpp"

#include <json.hpp>

#include "argforge/errors.hpp"
#include "argforge/jsonl.hpp"
#include "argforge/text.hpp"

namespace argforge {

namespace {

// "(begin,length)" -> pair; tolerant of spaces after the comma.
std::pair<std::size_t, std::size_t> parse_char_span(const std::string& s, std::size_t ordinal) {
    std::size_t open = s.find('(');
    std::size_t comma = s.find(',');
    std::size_t close = s.rfind(')');
    if (open == std::string::npos || comma == std::string::npos || close == std::string::npos ||
        !(open < comma && comma < close))
        throw IoError("record " + std::to_string(ordinal) + ": bad aspect_pos entry '" + s + "'");
    try {
        std::size_t begin = std::stoul(s.substr(open + 1, comma - open - 1));
        std::size_t length = std::stoul(s.substr(comma + 1, close - comma - 1));
        return {begin, length};
    } catch (const std::exception&) {
        throw IoError("record " + std::to_string(ordinal) + ": bad aspect_pos entry '" + s + "'");
    }
}

AspectSpan char_span_to_tokens(const std::vector<TokenOffset>& toks, std::size_t begin,
                               std::size_t length) {
    const std::size_t end = begin + length;
    std::size_t first = toks.size(), last = toks.size();
    for (std::size_t i = 0; i < toks.size(); ++i) {
        if (toks[i].end > begin && toks[i].begin < end) {
            if (first == toks.size()) first = i;
            last = i;
        }
    }
    AspectSpan span;
    if (first == toks.size()) return span;  // span covers no token
    span.start = first;
    span.len = last - first + 1;
    std::vector<std::string> surf;
    for (std::size_t i = first; i <= last; ++i) surf.push_back(toks[i].text);
    span.surface = join_tokens(surf);
    return span;
}

} // namespace

std::vector<AspectDatasetRecord> load_aspect_dataset(const std::filesystem::path& path,
                                                     AspectDatasetStats* stats) {
    std::vector<AspectDatasetRecord> records;
    AspectDatasetStats local;
    for_each_jsonl(path, [&](const nlohmann::json& rec, std::size_t ordinal) {
        AspectDatasetRecord r;
        try {
            r.hash = rec.at("hash").is_string() ? rec.at("hash").get<std::string>()
                                                : rec.at("hash").dump();
            r.stance = rec.at("stance").is_string() ? rec.at("stance").get<std::string>()
                                                    : rec.at("stance").dump();
            r.topic = rec.at("topic").get<std::string>();
            r.sentence = rec.at("sentence").get<std::string>();
            for (const auto& p : rec.at("aspect_pos"))
                r.char_spans.push_back(parse_char_span(p.get<std::string>(), ordinal));
            r.aspect_strings = rec.at("aspect_pos_string").get<std::vector<std::string>>();
        } catch (const nlohmann::json::exception& e) {
            throw IoError(path.string() + ": record " + std::to_string(ordinal) + ": " + e.what());
        }
        if (r.char_spans.size() != r.aspect_strings.size())
            throw IoError(path.string() + ": record " + std::to_string(ordinal) +
                          ": aspect_pos and aspect_pos_string lengths differ");

        auto offsets = tokenize_with_offsets(r.sentence);
        r.tokens.reserve(offsets.size());
        for (const auto& t : offsets) r.tokens.push_back(t.text);

        for (std::size_t i = 0; i < r.char_spans.size(); ++i) {
            auto [begin, length] = r.char_spans[i];
            std::string extracted = begin + length <= r.sentence.size()
                                        ? r.sentence.substr(begin, length)
                                        : std::string();
            if (extracted != r.aspect_strings[i]) {
                ++local.offset_failures;
                if (local.failure_details.size() < 10)
                    local.failure_details.push_back(
                        "record " + std::to_string(ordinal) + ": extracted '" + extracted +
                        "' != aspect_pos_string '" + r.aspect_strings[i] + "'");
            }
            r.token_spans.push_back(char_span_to_tokens(offsets, begin, length));
        }
        ++local.records;
        records.push_back(std::move(r));
    });
    if (stats) *stats = std::move(local);
    return records;
}

std::vector<Argument> dataset_to_arguments(const std::vector<AspectDatasetRecord>& records) {
    std::vector<Argument> out;
    out.reserve(records.size());
    for (const auto& r : records) {
        Argument a;
        a.text = r.sentence;
        a.topic = r.topic;
        std::string stance_lower = to_lower(r.stance);
        a.stance = stance_lower.find("con") != std::string::npos ||
                           stance_lower.find("attack") != std::string::npos ||
                           stance_lower == "against" || stance_lower == "0"
                       ? Stance::Con
                       : Stance::Pro;
        a.confidence = 1.0;
        a.aspects = r.token_spans;
        out.push_back(std::move(a));
    }
    return out;
}

} // namespace argforge

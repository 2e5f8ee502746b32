#include "argforge/countergen.hpp"

#include "argforge/errors.hpp"

namespace argforge {

CounterCodes build_counter_codes(const CounterRequest& req, ModelClient& tagger) {
    CounterCodes out;
    auto spans = tagger.detect_aspect_spans({req.input_text}, req.topic).at(0);
    if (spans.empty()) {
        out.no_aspects = true;
        return out;
    }
    Stance flipped = flip_stance(req.input_stance);
    for (const auto& span : spans) {
        if (out.codes.size() >= req.max_aspects) break;
        out.codes.push_back(make_control_code(req.topic, flipped, span.surface, "."));
    }
    return out;
}

std::vector<CounterResult> generate_counters(const std::vector<ControlCode>& codes,
                                             ModelClient& generator, std::uint64_t seed,
                                             std::size_t max_tokens,
                                             const SynonymTable& synonyms) {
    std::vector<CounterResult> out;
    out.reserve(codes.size());
    for (const auto& code : codes) {
        CounterResult result;
        result.code = code;
        GenerationRequest req{render_control_code(code), max_tokens, seed};
        try {
            result.text = generator.generate_text(req);
            std::vector<std::string> syns;
            auto it = synonyms.find(code.aspect);
            if (it != synonyms.end()) syns = it->second;
            result.aspect_present = aspect_presence(result.text, code.aspect, syns);
        } catch (const std::exception& e) {
            result.error = e.what();
        }
        out.push_back(std::move(result));
    }
    return out;
}

} // namespace argforge

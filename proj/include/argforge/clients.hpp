#ifndef ARGFORGE_CLIENTS_HPP
#define ARGFORGE_CLIENTS_HPP

#include <filesystem>
#include <memory>
#include <string>
#include <unordered_set>
#include <vector>

#include "argforge/types.hpp"

namespace argforge {

// Uniform client surface for the external model roles. Implementations
// must preserve input order and cardinality and be safe to call from
// concurrent pipeline workers.
class ModelClient {
public:
    virtual ~ModelClient() = default;

    virtual std::vector<Label> classify_arguments(const std::vector<std::string>& texts,
                                                  const std::string& topic) = 0;
    virtual std::vector<Label> classify_stance(const std::vector<std::string>& texts,
                                               const std::string& topic) = 0;
    virtual std::vector<std::vector<AspectSpan>> detect_aspect_spans(
        const std::vector<std::string>& texts, const std::string& topic) = 0;
    virtual std::vector<QualityScore> score_quality(const std::vector<std::string>& texts,
                                                    const std::string& topic) = 0;
    virtual std::string generate_text(const GenerationRequest& req) = 0;
};

// Word lists backing the offline baselines. Shipped as data files so
// tests can pin them.
struct Lexicons {
    std::unordered_set<std::string> cues;       // argument cue words
    std::unordered_set<std::string> positive;   // pro-leaning words
    std::unordered_set<std::string> negative;   // con-leaning words
    std::unordered_set<std::string> stopwords;
    std::vector<std::vector<std::string>> aspect_phrases;  // tokenized, lowercase

    // Expects <dir>/argument_cues.txt, positive.txt, negative.txt,
    // aspects.txt and <dir>/../stopwords_en.txt or stopwords_en.txt in dir.
    static Lexicons load(const std::filesystem::path& lexicon_dir);
};

// Deterministic rule-based stand-ins for the external models, so the
// whole pipeline runs offline and reproducibly.
class BaselineClient : public ModelClient {
public:
    explicit BaselineClient(Lexicons lexicons);

    std::vector<Label> classify_arguments(const std::vector<std::string>& texts,
                                          const std::string& topic) override;
    std::vector<Label> classify_stance(const std::vector<std::string>& texts,
                                       const std::string& topic) override;
    std::vector<std::vector<AspectSpan>> detect_aspect_spans(
        const std::vector<std::string>& texts, const std::string& topic) override;
    std::vector<QualityScore> score_quality(const std::vector<std::string>& texts,
                                            const std::string& topic) override;
    std::string generate_text(const GenerationRequest& req) override;

    // When set, generation ignores the aspect field of the control code.
    // Used to show that the aspect-presence measurement discriminates.
    void set_ignore_aspect(bool v) { ignore_aspect_ = v; }

    const Lexicons& lexicons() const { return lex_; }

private:
    Lexicons lex_;
    bool ignore_aspect_ = false;
};

struct HttpClientOptions {
    std::string endpoint;        // e.g. "http://localhost:8777"
    int timeout_ms = 30000;
    std::size_t batch_size = 32;
    int max_retries = 2;         // transport failures only
    std::size_t max_inflight = 4;
    std::string bearer_token;    // optional

    // Reads ARGFORGE_ENDPOINT and ARGFORGE_TIMEOUT_MS.
    static HttpClientOptions from_env();
};

std::unique_ptr<ModelClient> make_http_client(const HttpClientOptions& opts);

} // namespace argforge

#endif

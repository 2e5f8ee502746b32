#include <chrono>
#include <cstdio>
#include <mutex>
#include <semaphore>
#include <thread>

#include <httplib.h>
#include <json.hpp>

#include "argforge/clients.hpp"
#include "argforge/errors.hpp"
#include "argforge/text.hpp"

namespace argforge {

namespace {

using nlohmann::json;

class HttpModelClient : public ModelClient {
public:
    explicit HttpModelClient(HttpClientOptions opts)
        : opts_(std::move(opts)),
          inflight_(static_cast<std::ptrdiff_t>(std::max<std::size_t>(1, opts_.max_inflight))) {
        if (opts_.endpoint.empty())
            throw TransportError("no endpoint configured (set ARGFORGE_ENDPOINT)");
    }

    std::vector<Label> classify_arguments(const std::vector<std::string>& texts,
                                          const std::string& topic) override {
        return label_call("/classify_argument", texts, topic,
                          {LabelKind::Argument, LabelKind::NonArgument});
    }

    std::vector<Label> classify_stance(const std::vector<std::string>& texts,
                                       const std::string& topic) override {
        return label_call("/classify_stance", texts, topic, {LabelKind::Pro, LabelKind::Con});
    }

    std::vector<std::vector<AspectSpan>> detect_aspect_spans(
        const std::vector<std::string>& texts, const std::string& topic) override {
        std::vector<std::vector<AspectSpan>> out;
        out.reserve(texts.size());
        for_each_batch(texts, [&](const std::vector<std::string>& batch) {
            json resp = post_json("/detect_aspects", {{"topic", topic}, {"texts", batch}});
            if (!resp.contains("spans") || !resp["spans"].is_array())
                throw MalformedResponseError("missing 'spans' array");
            if (resp["spans"].size() != batch.size())
                throw MalformedResponseError(
                    "length mismatch: sent " + std::to_string(batch.size()) + " texts, got " +
                    std::to_string(resp["spans"].size()) + " span lists");
            for (std::size_t i = 0; i < batch.size(); ++i)
                out.push_back(parse_spans(resp["spans"][i], batch[i]));
        });
        return out;
    }

    std::vector<QualityScore> score_quality(const std::vector<std::string>& texts,
                                            const std::string& topic) override {
        std::vector<QualityScore> out;
        out.reserve(texts.size());
        for_each_batch(texts, [&](const std::vector<std::string>& batch) {
            json resp = post_json("/score_quality", {{"topic", topic}, {"texts", batch}});
            if (!resp.contains("scores") || !resp["scores"].is_array())
                throw MalformedResponseError("missing 'scores' array");
            if (resp["scores"].size() != batch.size())
                throw MalformedResponseError(
                    "length mismatch: sent " + std::to_string(batch.size()) + " texts, got " +
                    std::to_string(resp["scores"].size()) + " scores");
            for (const auto& s : resp["scores"]) {
                if (!s.is_number())
                    throw MalformedResponseError("score is not a number");
                double v = s.get<double>();
                if (v < 0.0 || v > 1.0)
                    throw MalformedResponseError("score outside [0,1]: " + std::to_string(v));
                out.push_back({v});
            }
        });
        return out;
    }

    std::string generate_text(const GenerationRequest& req) override {
        json resp = post_json("/generate", {{"control_code", req.control_code},
                                            {"max_tokens", req.max_tokens},
                                            {"seed", req.seed}});
        if (!resp.contains("text") || !resp["text"].is_string())
            throw MalformedResponseError("missing 'text' field");
        std::string text = resp["text"].get<std::string>();
        if (normalize_whitespace(text).empty())
            throw MalformedResponseError("empty generation");
        return text;
    }

private:
    template <typename Fn>
    void for_each_batch(const std::vector<std::string>& texts, Fn&& fn) {
        const std::size_t bs = std::max<std::size_t>(1, opts_.batch_size);
        for (std::size_t i = 0; i < texts.size(); i += bs) {
            std::vector<std::string> batch(texts.begin() + static_cast<long>(i),
                                           texts.begin() +
                                               static_cast<long>(std::min(i + bs, texts.size())));
            fn(batch);
        }
    }

    std::vector<Label> label_call(const std::string& path, const std::vector<std::string>& texts,
                                  const std::string& topic, std::vector<LabelKind> allowed) {
        std::vector<Label> out;
        out.reserve(texts.size());
        for_each_batch(texts, [&](const std::vector<std::string>& batch) {
            json resp = post_json(path, {{"topic", topic}, {"texts", batch}});
            if (!resp.contains("labels") || !resp["labels"].is_array())
                throw MalformedResponseError("missing 'labels' array");
            if (resp["labels"].size() != batch.size())
                throw MalformedResponseError(
                    "length mismatch: sent " + std::to_string(batch.size()) + " texts, got " +
                    std::to_string(resp["labels"].size()) + " labels");
            for (const auto& l : resp["labels"]) {
                Label label;
                std::string name = l.value("label", "");
                bool ok = false;
                for (LabelKind k : allowed) {
                    if (name == to_string(k)) {
                        label.kind = k;
                        ok = true;
                        break;
                    }
                }
                if (!ok) throw MalformedResponseError("unexpected label '" + name + "'");
                if (!l.contains("score") || !l["score"].is_number())
                    throw MalformedResponseError("label without numeric score");
                label.score = l["score"].get<double>();
                if (label.score < 0.0 || label.score > 1.0)
                    throw MalformedResponseError("score outside [0,1]: " +
                                                 std::to_string(label.score));
                out.push_back(label);
            }
        });
        return out;
    }

    std::vector<AspectSpan> parse_spans(const json& arr, const std::string& text) {
        if (!arr.is_array()) throw MalformedResponseError("span list is not an array");
        auto toks = tokenize(text);
        std::vector<AspectSpan> spans;
        for (const auto& s : arr) {
            if (!s.contains("start") || !s.contains("len"))
                throw MalformedResponseError("span without start/len");
            long start = s["start"].get<long>();
            long len = s["len"].get<long>();
            if (start < 0 || len < 1 || len > 4)
                throw MalformedResponseError("span with invalid start/len");
            AspectSpan span{static_cast<std::size_t>(start), static_cast<std::size_t>(len), ""};
            if (span.end() > toks.size())
                throw MalformedResponseError("span out of token range");
            std::vector<std::string> surf(toks.begin() + start, toks.begin() + start + len);
            span.surface = join_tokens(surf);
            spans.push_back(span);
        }
        for (std::size_t i = 1; i < spans.size(); ++i) {
            if (spans[i].start < spans[i - 1].start)
                throw MalformedResponseError("spans not sorted by start");
            if (spans_overlap(spans[i - 1], spans[i]))
                throw MalformedResponseError("overlapping spans");
        }
        return spans;
    }

    json post_json(const std::string& path, const json& body) {
        inflight_.acquire();
        struct Release {
            std::counting_semaphore<>& sem;
            ~Release() { sem.release(); }
        } release{inflight_};

        const std::string payload = body.dump();
        std::string last_error;
        for (int attempt = 0; attempt <= opts_.max_retries; ++attempt) {
            if (attempt > 0) {
                std::fprintf(stderr, "[argforge] retry %d/%d for %s (%s)\n", attempt,
                             opts_.max_retries, path.c_str(), last_error.c_str());
                std::this_thread::sleep_for(std::chrono::milliseconds(50 * attempt));
            }
            httplib::Client cli(opts_.endpoint);
            cli.set_connection_timeout(std::chrono::milliseconds(opts_.timeout_ms));
            cli.set_read_timeout(std::chrono::milliseconds(opts_.timeout_ms));
            cli.set_write_timeout(std::chrono::milliseconds(opts_.timeout_ms));
            if (!opts_.bearer_token.empty()) cli.set_bearer_token_auth(opts_.bearer_token);
            auto res = cli.Post(path, payload, "application/json");
            if (!res) {
                last_error = httplib::to_string(res.error());
                continue;  // transport failure: retryable
            }
            if (res->status >= 500) {
                last_error = "server error " + std::to_string(res->status);
                continue;  // retryable
            }
            if (res->status != 200)
                throw MalformedResponseError(path + " returned status " +
                                             std::to_string(res->status));
            try {
                return json::parse(res->body);
            } catch (const json::parse_error& e) {
                throw MalformedResponseError(path + ": response is not JSON: " + e.what());
            }
        }
        throw TransportError(path + ": " + last_error + " after " +
                             std::to_string(opts_.max_retries + 1) + " attempts");
    }

    HttpClientOptions opts_;
    std::counting_semaphore<> inflight_;
};

} // namespace

std::unique_ptr<ModelClient> make_http_client(const HttpClientOptions& opts) {
    return std::make_unique<HttpModelClient>(opts);
}

} // namespace argforge

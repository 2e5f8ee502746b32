#ifndef ARGFORGE_TYPES_HPP
#define ARGFORGE_TYPES_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace argforge {

enum class Stance { Pro, Con };

Stance flip_stance(Stance s);
std::string to_string(Stance s);                  // "PRO" / "CON"
Stance stance_from_string(const std::string& s);  // case-insensitive

enum class Source { Cc, Reddit, Other };

Source source_from_string(const std::string& s);
std::string to_string(Source s);

// Unit of ingestion: one retrieved document.
struct Document {
    std::string id;
    std::string topic;
    std::string text;
    Source source = Source::Other;
};

struct Sentence {
    std::string text;        // no newlines
    std::string normalized;  // lowercased, whitespace-collapsed
    std::string doc_id;
    std::string topic;
};

enum class LabelKind { Argument, NonArgument, Pro, Con };

std::string to_string(LabelKind k);

struct Label {
    LabelKind kind;
    double score = 0.0;  // in [0,1]
};

struct QualityScore {
    double value = 0.0;  // in [0,1]
};

// Token-aligned aspect span; len is 1..4 for detected aspects.
struct AspectSpan {
    std::size_t start = 0;
    std::size_t len = 0;
    std::string surface;

    std::size_t end() const { return start + len; }
    bool operator==(const AspectSpan& o) const {
        return start == o.start && len == o.len && surface == o.surface;
    }
};

bool spans_overlap(const AspectSpan& a, const AspectSpan& b);

struct AspectCandidate {
    AspectSpan span;
    double score = 0.0;  // in [0,1]
};

// Sentence-level argument after classification.
struct Argument {
    std::string text;
    std::string topic;
    Stance stance = Stance::Pro;
    double confidence = 0.0;
    std::vector<AspectSpan> aspects;
};

// Conditioning key: rendered as "topic STANCE aspect punct".
struct ControlCode {
    std::string topic;   // stored lowercase
    Stance stance = Stance::Pro;
    std::string aspect;  // stored lowercase
    std::string punct = ".";  // "." or ":"
};

ControlCode make_control_code(const std::string& topic, Stance stance,
                              const std::string& aspect, const std::string& punct = ".");
std::string render_control_code(const ControlCode& c);
// Inverse of render_control_code; throws MalformedResponseError on garbage.
ControlCode parse_control_code(const std::string& rendered);

struct GenerationRequest {
    std::string control_code;
    std::size_t max_tokens = 64;
    std::uint64_t seed = 0;
};

struct PerClassPRF {
    double precision = 0.0;
    double recall = 0.0;
    double f1 = 0.0;
};

// Output of every evaluation operation: named metric values plus
// optional per-class breakdowns and per-topic exemplars.
struct EvalReport {
    std::map<std::string, double> metrics;
    std::map<std::string, PerClassPRF> per_class;
    std::size_t n = 0;
    std::map<std::string, std::vector<std::pair<double, std::string>>> exemplars_top;
    std::map<std::string, std::vector<std::pair<double, std::string>>> exemplars_bottom;
};

} // namespace argforge

#endif

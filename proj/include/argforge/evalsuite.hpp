#ifndef ARGFORGE_EVALSUITE_HPP
#define ARGFORGE_EVALSUITE_HPP

#include <map>
#include <string>
#include <vector>

#include "argforge/clients.hpp"
#include "argforge/types.hpp"

namespace argforge {

struct RougeScore {
    double precision = 0.0;
    double recall = 0.0;
    double f = 0.0;
};

// LCS-based ROUGE-L. R = LCS/|ref|, P = LCS/|cand|,
// F = (1+b^2)PR / (R + b^2 P). Empty inputs score 0.
RougeScore rouge_l(const std::vector<std::string>& candidate,
                   const std::vector<std::string>& reference, double beta = 1.2);

struct MeteorParams {
    double alpha = 0.9;     // recall weight in the harmonic mean
    double gamma = 0.5;     // fragmentation penalty weight
    double beta_pen = 3.0;  // fragmentation penalty exponent
};

// Unigram alignment in two stages (exact, then stem), each token used at
// most once; score = F_mean * (1 - gamma * (chunks/matches)^beta_pen).
double meteor_lite(const std::vector<std::string>& candidate,
                   const std::vector<std::string>& reference, const MeteorParams& params = {});

// Reference arguments for one (topic, stance), bucketed by aspect stem.
struct ReferenceSet {
    std::string topic;
    Stance stance = Stance::Pro;
    std::map<std::string, std::vector<std::string>> by_stem;
};

struct RefRecord {
    std::string topic;
    Stance stance = Stance::Pro;
    std::string text;
};

// Detects aspects on the reference texts and buckets them by stem.
std::vector<ReferenceSet> build_reference_sets(const std::vector<RefRecord>& records,
                                               ModelClient& tagger);

// Per generated argument the pool is every reference sharing an aspect
// stem; each metric takes the max over the pool. Arguments with empty
// pools are excluded and counted under metrics["excluded"].
EvalReport reference_grouped_eval(const std::vector<Argument>& generated,
                                  const std::vector<ReferenceSet>& refs);

using SynonymTable = std::map<std::string, std::vector<std::string>>;

// True iff the stemmed token sequence of the aspect or any synonym occurs
// contiguously in the stemmed token sequence of the text.
bool aspect_presence(const std::string& text, const std::string& aspect,
                     const std::vector<std::string>& synonyms = {});

// Fraction of (code, text) pairs whose conditioning aspect is present.
double presence_rate(const std::vector<std::pair<ControlCode, std::string>>& generated,
                     const SynonymTable& synonyms = {});

// Gold is the control-code stance; prediction is non_argument when the
// argument classifier says so, else the stance classifier's label.
// Reports F1 for pro and con plus the fraction classified none.
EvalReport stance_correctness_report(
    const std::vector<std::pair<ControlCode, std::string>>& generated,
    ModelClient& argument_client, ModelClient& stance_client);

// Mean/min/max quality plus top-k and bottom-k exemplars per topic.
EvalReport quality_report(const std::vector<std::pair<std::string, std::string>>& topic_texts,
                          ModelClient& quality_client, std::size_t exemplar_k = 2);

struct AspectFrequency {
    std::string lemma;  // stemmed surface
    std::size_t count = 0;
};

// Stems aspect surfaces, counts per topic and returns the top k; ties
// resolve lexicographically.
std::map<std::string, std::vector<AspectFrequency>> aspect_frequency(
    const std::vector<Argument>& args, std::size_t k);

} // namespace argforge

#endif

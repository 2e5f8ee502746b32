#ifndef ARGFORGE_COUNTERGEN_HPP
#define ARGFORGE_COUNTERGEN_HPP

#include <optional>
#include <string>
#include <vector>

#include "argforge/clients.hpp"
#include "argforge/evalsuite.hpp"
#include "argforge/types.hpp"

namespace argforge {

struct CounterRequest {
    std::string topic;
    std::string input_text;
    Stance input_stance = Stance::Pro;
    std::size_t max_aspects = 5;
};

struct CounterCodes {
    std::vector<ControlCode> codes;
    bool no_aspects = false;  // distinguishes "nothing detected" from failure
};

// One control code per detected aspect (span order, up to max_aspects)
// with the stance flipped and punct ".".
CounterCodes build_counter_codes(const CounterRequest& req, ModelClient& tagger);

struct CounterResult {
    ControlCode code;
    std::string text;
    bool aspect_present = false;
    std::optional<std::string> error;  // per-code failure, batch continues
};

std::vector<CounterResult> generate_counters(const std::vector<ControlCode>& codes,
                                             ModelClient& generator, std::uint64_t seed,
                                             std::size_t max_tokens = 64,
                                             const SynonymTable& synonyms = {});

} // namespace argforge

#endif

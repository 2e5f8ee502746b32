#ifndef ARGFORGE_PIPELINE_HPP
#define ARGFORGE_PIPELINE_HPP

#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "argforge/clients.hpp"
#include "argforge/traindoc.hpp"

namespace argforge {

struct TopicConfig {
    std::string name;
    std::string query;  // boolean retrieval query; defaults to the name
    std::vector<std::string> synonyms;
};

struct PipelineConfig {
    std::vector<TopicConfig> topics;
    BoundsConfig bounds;
    std::size_t seq_len = 256;
    std::size_t top_t = 2;
    std::size_t retrieve_limit = 1500000;
    std::string clients = "baseline";  // "baseline" or an http endpoint
    std::uint64_t seed = 1;
    std::filesystem::path data_dir = "data";
    std::vector<std::filesystem::path> corpus_shards;
    std::filesystem::path out_dir;
    std::optional<std::string> stopwords_fnv1a64;  // pin for the shipped list
};

PipelineConfig load_config(const std::filesystem::path& path);

// Collects every violation; throws ValidationError listing all of them.
// With probe=true, non-baseline endpoints are probed for reachability.
void validate_config(const PipelineConfig& config, bool probe = false);

std::shared_ptr<ModelClient> make_client(const PipelineConfig& config);

// ingest -> classify -> stance -> aspects -> training docs. Stage outputs
// are materialized under out_dir; returns the manifest (also written to
// out_dir/manifest.json). Throws StageError naming the failed stage after
// writing a partial manifest.
nlohmann::json run_pipeline(const PipelineConfig& config);

} // namespace argforge

#endif

#include "argforge/pipeline.hpp"

#include <algorithm>
#include <fstream>
#include <map>

#include "argforge/aspect.hpp"
#include "argforge/corpus.hpp"
#include "argforge/errors.hpp"
#include "argforge/jsonl.hpp"
#include "argforge/query.hpp"
#include "argforge/text.hpp"

namespace argforge {

using nlohmann::json;

PipelineConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open config " + path.string());
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw IoError(path.string() + ": " + e.what());
    }

    PipelineConfig cfg;
    for (const auto& t : j.value("topics", json::array())) {
        TopicConfig tc;
        tc.name = t.value("name", "");
        tc.query = t.value("query", tc.name);
        if (t.contains("synonyms"))
            tc.synonyms = t["synonyms"].get<std::vector<std::string>>();
        cfg.topics.push_back(std::move(tc));
    }
    if (j.contains("bounds")) {
        const auto& b = j["bounds"];
        cfg.bounds.min_args = b.value("min_args", cfg.bounds.min_args);
        cfg.bounds.max_args = b.value("max_args", cfg.bounds.max_args);
        cfg.bounds.cap_per_topic_stance =
            b.value("cap_per_topic_stance", cfg.bounds.cap_per_topic_stance);
        cfg.bounds.cap_unique = b.value("cap_unique", cfg.bounds.cap_unique);
    }
    cfg.seq_len = j.value("seq_len", cfg.seq_len);
    cfg.top_t = j.value("top_t", cfg.top_t);
    cfg.retrieve_limit = j.value("retrieve_limit", cfg.retrieve_limit);
    cfg.clients = j.value("clients", cfg.clients);
    cfg.seed = j.value("seed", cfg.seed);
    if (j.contains("data_dir")) cfg.data_dir = j["data_dir"].get<std::string>();
    for (const auto& p : j.value("corpus", json::array()))
        cfg.corpus_shards.emplace_back(p.get<std::string>());
    if (j.contains("out_dir")) cfg.out_dir = j["out_dir"].get<std::string>();
    if (j.contains("stopwords_fnv1a64"))
        cfg.stopwords_fnv1a64 = j["stopwords_fnv1a64"].get<std::string>();
    return cfg;
}

void validate_config(const PipelineConfig& config, bool probe) {
    std::vector<std::string> issues;
    if (config.topics.empty()) issues.push_back("no topics configured");
    for (const auto& t : config.topics) {
        if (t.name.empty()) {
            issues.push_back("topic with empty name");
            continue;
        }
        try {
            parse_query(t.query);
        } catch (const SyntaxError& e) {
            issues.push_back("topic '" + t.name + "': query does not parse: " + e.what());
        }
        for (const auto& s : t.synonyms)
            if (normalize_whitespace(s).empty())
                issues.push_back("topic '" + t.name + "': empty synonym");
    }
    const auto& b = config.bounds;
    if (b.min_args < 1) issues.push_back("bounds: min_args must be >= 1");
    if (b.min_args > b.max_args) issues.push_back("bounds: min_args > max_args");
    if (b.max_args > b.cap_per_topic_stance)
        issues.push_back("bounds: max_args > cap_per_topic_stance");
    if (config.seq_len < 8) issues.push_back("seq_len must be >= 8");
    if (config.retrieve_limit < 1) issues.push_back("retrieve_limit must be >= 1");
    if (config.stopwords_fnv1a64) {
        auto path = config.data_dir / "stopwords_en.txt";
        if (!std::filesystem::exists(path)) {
            issues.push_back("stopword list missing: " + path.string());
        } else if (file_fnv1a64_hex(path) != *config.stopwords_fnv1a64) {
            issues.push_back("stopword list hash mismatch (expected " +
                             *config.stopwords_fnv1a64 + ")");
        }
    }
    if (probe && config.clients != "baseline") {
        HttpClientOptions opts = HttpClientOptions::from_env();
        opts.endpoint = config.clients;
        opts.max_retries = 0;
        try {
            auto client = make_http_client(opts);
            client->score_quality({"probe"}, "probe");
        } catch (const TransportError& e) {
            issues.push_back(std::string("endpoint unreachable: ") + e.what());
        } catch (const std::exception&) {
            // reachable but unexpected response is fine for a probe
        }
    }
    if (!issues.empty()) throw ValidationError(std::move(issues));
}

std::shared_ptr<ModelClient> make_client(const PipelineConfig& config) {
    if (config.clients == "baseline")
        return std::make_shared<BaselineClient>(Lexicons::load(config.data_dir / "lexicons"));
    HttpClientOptions opts = HttpClientOptions::from_env();
    opts.endpoint = config.clients;
    return std::shared_ptr<ModelClient>(make_http_client(opts));
}

namespace {

json span_to_json(const AspectSpan& s) {
    return {{"start", s.start}, {"len", s.len}, {"surface", s.surface}};
}

json config_echo(const PipelineConfig& cfg) {
    json topics = json::array();
    for (const auto& t : cfg.topics)
        topics.push_back({{"name", t.name}, {"query", t.query}, {"synonyms", t.synonyms}});
    return {
        {"topics", topics},
        {"bounds",
         {{"min_args", cfg.bounds.min_args},
          {"max_args", cfg.bounds.max_args},
          {"cap_per_topic_stance", cfg.bounds.cap_per_topic_stance}}},
        {"seq_len", cfg.seq_len},
        {"top_t", cfg.top_t},
        {"retrieve_limit", cfg.retrieve_limit},
        {"clients", cfg.clients},
        {"seed", cfg.seed},
    };
}

struct Lock {
    std::filesystem::path path;
    explicit Lock(const std::filesystem::path& dir) : path(dir / ".argforge.lock") {
        if (std::filesystem::exists(path))
            throw IoError("output directory is locked by another run: " + path.string());
        std::ofstream(path) << "locked\n";
    }
    ~Lock() { std::filesystem::remove(path); }
};

void write_manifest(const std::filesystem::path& out_dir, const json& manifest) {
    std::ofstream out(out_dir / "manifest.json", std::ios::binary);
    out << manifest.dump(2) << '\n';
}

} // namespace

json run_pipeline(const PipelineConfig& config) {
    validate_config(config);
    if (config.corpus_shards.empty())
        throw ValidationError({"no corpus shards configured"});
    if (config.out_dir.empty()) throw ValidationError({"no output directory configured"});

    std::filesystem::create_directories(config.out_dir);
    Lock lock(config.out_dir);

    json manifest;
    manifest["config"] = config_echo(config);
    std::vector<std::string> shard_names;
    for (const auto& p : config.corpus_shards) shard_names.push_back(p.filename().string());
    std::sort(shard_names.begin(), shard_names.end());
    manifest["shards"] = shard_names;

    auto client = make_client(config);
    std::string stage = "ingest";
    try {
        // ---- ingest: retrieve, split, dedup, topic-filter --------------
        JsonlWriter sentences_out(config.out_dir / "sentences.jsonl");
        std::map<std::string, std::vector<Sentence>> sentences_by_topic;
        for (const auto& topic : config.topics) {
            QueryAst query = parse_query(topic.query);
            CorpusReader reader(config.corpus_shards, topic.name);
            auto docs = retrieve(reader, query, config.retrieve_limit);

            std::vector<Sentence> split;
            for (const auto& d : docs) {
                auto s = split_sentences(d);
                split.insert(split.end(), s.begin(), s.end());
            }
            auto deduped = dedup(split);
            auto filtered = topic_filter(deduped, topic.name, topic.synonyms);

            json stage_counts = {
                {"retrieved_docs", docs.size()},
                {"sentences", split.size()},
                {"deduped", deduped.size()},
                {"topic_filtered", filtered.size()},
            };
            manifest["stages"][topic.name] = stage_counts;
            for (const auto& s : filtered)
                sentences_out.write({{"doc_id", s.doc_id}, {"topic", s.topic}, {"text", s.text}});
            sentences_by_topic[topic.name] = std::move(filtered);
        }
        sentences_out.close();

        // ---- classify: argument, then stance ---------------------------
        stage = "classify";
        JsonlWriter args_out(config.out_dir / "arguments.jsonl");
        std::map<std::string, std::vector<Argument>> args_by_topic;
        for (const auto& topic : config.topics) {
            const auto& sents = sentences_by_topic[topic.name];
            std::vector<std::string> texts;
            texts.reserve(sents.size());
            for (const auto& s : sents) texts.push_back(s.text);

            std::vector<Argument> args;
            if (!texts.empty()) {
                auto labels = client->classify_arguments(texts, topic.name);
                std::vector<std::string> arg_texts;
                for (std::size_t i = 0; i < texts.size(); ++i)
                    if (labels[i].kind == LabelKind::Argument) arg_texts.push_back(texts[i]);
                if (!arg_texts.empty()) {
                    auto stances = client->classify_stance(arg_texts, topic.name);
                    for (std::size_t i = 0; i < arg_texts.size(); ++i) {
                        Argument a;
                        a.text = arg_texts[i];
                        a.topic = topic.name;
                        a.stance = stances[i].kind == LabelKind::Pro ? Stance::Pro : Stance::Con;
                        a.confidence = stances[i].score;
                        args.push_back(std::move(a));
                    }
                }
            }
            std::size_t pro = 0, con = 0;
            for (const auto& a : args) (a.stance == Stance::Pro ? pro : con) += 1;
            manifest["stages"][topic.name]["arguments"] = args.size();
            manifest["stages"][topic.name]["pro"] = pro;
            manifest["stages"][topic.name]["con"] = con;
            for (const auto& a : args)
                args_out.write({{"text", a.text},
                                {"topic", a.topic},
                                {"stance", to_string(a.stance)},
                                {"confidence", a.confidence}});
            args_by_topic[topic.name] = std::move(args);
        }
        args_out.close();

        // ---- aspects ----------------------------------------------------
        stage = "aspects";
        JsonlWriter aspects_out(config.out_dir / "aspect_args.jsonl");
        std::vector<Argument> all_args;
        for (const auto& topic : config.topics) {
            auto& args = args_by_topic[topic.name];
            if (!args.empty()) {
                std::vector<std::string> texts;
                texts.reserve(args.size());
                for (const auto& a : args) texts.push_back(a.text);
                auto spans = client->detect_aspect_spans(texts, topic.name);
                for (std::size_t i = 0; i < args.size(); ++i) args[i].aspects = spans[i];
            }
            std::size_t with_aspects = 0;
            for (const auto& a : args) with_aspects += a.aspects.empty() ? 0 : 1;
            manifest["stages"][topic.name]["with_aspects"] = with_aspects;
            for (const auto& a : args) {
                json spans = json::array();
                for (const auto& s : a.aspects) spans.push_back(span_to_json(s));
                aspects_out.write({{"text", a.text},
                                   {"topic", a.topic},
                                   {"stance", to_string(a.stance)},
                                   {"confidence", a.confidence},
                                   {"aspects", spans}});
            }
            all_args.insert(all_args.end(), args.begin(), args.end());
        }
        aspects_out.close();

        // ---- training documents ------------------------------------------
        stage = "build-docs";
        auto groups = group_arguments(all_args);
        auto docs = apply_bounds(groups, config.bounds);

        JsonlWriter docs_out(config.out_dir / "training_docs.jsonl");
        JsonlWriter docs_manifest(config.out_dir / "docs_manifest.jsonl");
        json doc_list = json::array();
        std::size_t memberships = 0, chunks = 0;
        for (const auto& doc : docs) {
            docs_manifest.write({{"topic", doc.key.topic},
                                 {"stance", to_string(doc.key.stance)},
                                 {"stem_key", doc.key.stem},
                                 {"n_args", doc.arguments.size()}});
            doc_list.push_back({{"topic", doc.key.topic},
                                {"stance", to_string(doc.key.stance)},
                                {"stem_key", doc.key.stem},
                                {"control_aspect", doc.control_aspect},
                                {"n_args", doc.arguments.size()}});
            memberships += doc.arguments.size();
            for (const auto& chunk : chunk_document(doc, config.seq_len)) {
                docs_out.write({{"control_code", chunk.control_code}, {"text", chunk.text}});
                ++chunks;
            }
        }
        docs_out.close();
        docs_manifest.close();
        manifest["documents"] = doc_list;
        manifest["totals"] = {
            {"documents", docs.size()}, {"memberships", memberships}, {"chunks", chunks}};

        // ---- content hashes ----------------------------------------------
        stage = "manifest";
        json files;
        for (const char* name : {"sentences.jsonl", "arguments.jsonl", "aspect_args.jsonl",
                                 "training_docs.jsonl", "docs_manifest.jsonl"})
            files[name] = file_fnv1a64_hex(config.out_dir / name);
        manifest["files"] = files;
        write_manifest(config.out_dir, manifest);
        return manifest;
    } catch (const std::exception& e) {
        manifest["failed_stage"] = stage;
        manifest["error"] = e.what();
        write_manifest(config.out_dir, manifest);
        throw StageError(stage, e.what());
    }
}

} // namespace argforge

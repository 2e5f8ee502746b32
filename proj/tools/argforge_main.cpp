// argforge: aspect-controlled argument corpus construction and evaluation.
#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "argforge/aspect.hpp"
#include "argforge/corpus.hpp"
#include "argforge/countergen.hpp"
#include "argforge/errors.hpp"
#include "argforge/evalsuite.hpp"
#include "argforge/jsonl.hpp"
#include "argforge/pipeline.hpp"
#include "argforge/query.hpp"
#include "argforge/server.hpp"
#include "argforge/text.hpp"

using namespace argforge;
using nlohmann::json;

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitStage = 3;

std::string read_query_arg(const std::string& arg) {
    if (!arg.empty() && arg[0] == '@') {
        std::ifstream in(arg.substr(1));
        if (!in) throw IoError("cannot open query file " + arg.substr(1));
        std::string content((std::istreambuf_iterator<char>(in)),
                            std::istreambuf_iterator<char>());
        return normalize_whitespace(content);
    }
    return arg;
}

std::shared_ptr<ModelClient> client_from_flag(const std::string& clients,
                                              const std::filesystem::path& data_dir) {
    PipelineConfig cfg;
    cfg.clients = clients;
    cfg.data_dir = data_dir;
    return make_client(cfg);
}

std::vector<Argument> read_arguments(const std::filesystem::path& path) {
    std::vector<Argument> args;
    for_each_jsonl(path, [&](const json& rec, std::size_t) {
        Argument a;
        a.text = rec.at("text").get<std::string>();
        a.topic = rec.at("topic").get<std::string>();
        a.stance = stance_from_string(rec.at("stance").get<std::string>());
        a.confidence = rec.value("confidence", 0.0);
        for (const auto& s : rec.value("aspects", json::array()))
            a.aspects.push_back({s.at("start").get<std::size_t>(),
                                 s.at("len").get<std::size_t>(),
                                 s.at("surface").get<std::string>()});
        args.push_back(std::move(a));
    });
    return args;
}

json report_to_json(const EvalReport& r) {
    json out;
    out["n"] = r.n;
    out["metrics"] = r.metrics;
    if (!r.per_class.empty()) {
        json pc;
        for (const auto& [cls, prf] : r.per_class)
            pc[cls] = {{"precision", prf.precision}, {"recall", prf.recall}, {"f1", prf.f1}};
        out["per_class"] = pc;
    }
    auto exemplars = [](const auto& table) {
        json obj = json::object();
        for (const auto& [topic, items] : table) {
            json lst = json::array();
            for (const auto& [score, text] : items)
                lst.push_back({{"score", score}, {"text", text}});
            obj[topic] = lst;
        }
        return obj;
    };
    if (!r.exemplars_top.empty()) out["exemplars_top"] = exemplars(r.exemplars_top);
    if (!r.exemplars_bottom.empty()) out["exemplars_bottom"] = exemplars(r.exemplars_bottom);
    return out;
}

int cmd_ingest(const std::vector<std::string>& corpus, const std::string& topic,
               const std::string& query_arg, std::size_t limit,
               const std::vector<std::string>& synonyms, const std::string& out_path) {
    QueryAst query = parse_query(read_query_arg(query_arg));
    std::vector<std::filesystem::path> shards(corpus.begin(), corpus.end());
    CorpusReader reader(shards, topic);
    auto docs = retrieve(reader, query, limit);

    std::vector<Sentence> split;
    for (const auto& d : docs) {
        auto s = split_sentences(d);
        split.insert(split.end(), s.begin(), s.end());
    }
    auto deduped = dedup(split);
    auto filtered = topic_filter(deduped, topic, synonyms);

    JsonlWriter out(out_path);
    for (const auto& s : filtered)
        out.write({{"doc_id", s.doc_id}, {"topic", s.topic}, {"text", s.text}});
    std::cerr << "ingest: " << docs.size() << " docs, " << split.size() << " sentences, "
              << deduped.size() << " after dedup, " << filtered.size() << " topical\n";
    return 0;
}

int cmd_classify(const std::string& in_path, const std::string& out_path,
                 const std::string& clients, const std::filesystem::path& data_dir) {
    auto client = client_from_flag(clients, data_dir);
    std::map<std::string, std::vector<std::string>> by_topic;
    std::vector<std::string> topic_order;
    for_each_jsonl(in_path, [&](const json& rec, std::size_t) {
        std::string topic = rec.at("topic").get<std::string>();
        if (!by_topic.count(topic)) topic_order.push_back(topic);
        by_topic[topic].push_back(rec.at("text").get<std::string>());
    });
    JsonlWriter out(out_path);
    std::size_t kept = 0, total = 0;
    for (const auto& topic : topic_order) {
        const auto& texts = by_topic[topic];
        total += texts.size();
        auto labels = client->classify_arguments(texts, topic);
        std::vector<std::string> arg_texts;
        for (std::size_t i = 0; i < texts.size(); ++i)
            if (labels[i].kind == LabelKind::Argument) arg_texts.push_back(texts[i]);
        if (arg_texts.empty()) continue;
        auto stances = client->classify_stance(arg_texts, topic);
        for (std::size_t i = 0; i < arg_texts.size(); ++i) {
            out.write({{"text", arg_texts[i]},
                       {"topic", topic},
                       {"stance", to_string(stances[i].kind == LabelKind::Pro ? Stance::Pro
                                                                              : Stance::Con)},
                       {"confidence", stances[i].score}});
            ++kept;
        }
    }
    std::cerr << "classify: " << kept << " arguments of " << total << " sentences\n";
    return 0;
}

int cmd_aspects(const std::string& in_path, const std::string& out_path,
                const std::string& clients, const std::filesystem::path& data_dir) {
    auto client = client_from_flag(clients, data_dir);
    auto args = read_arguments(in_path);
    std::map<std::string, std::vector<std::size_t>> by_topic;
    for (std::size_t i = 0; i < args.size(); ++i) by_topic[args[i].topic].push_back(i);
    for (const auto& [topic, idxs] : by_topic) {
        std::vector<std::string> texts;
        for (auto i : idxs) texts.push_back(args[i].text);
        auto spans = client->detect_aspect_spans(texts, topic);
        for (std::size_t b = 0; b < idxs.size(); ++b) args[idxs[b]].aspects = spans[b];
    }
    JsonlWriter out(out_path);
    for (const auto& a : args) {
        json spans = json::array();
        for (const auto& s : a.aspects)
            spans.push_back({{"start", s.start}, {"len", s.len}, {"surface", s.surface}});
        out.write({{"text", a.text},
                   {"topic", a.topic},
                   {"stance", to_string(a.stance)},
                   {"confidence", a.confidence},
                   {"aspects", spans}});
    }
    std::cerr << "aspects: tagged " << args.size() << " arguments\n";
    return 0;
}

int cmd_build_docs(const std::string& in_path, const BoundsConfig& bounds, std::size_t seq_len,
                   const std::string& out_dir) {
    auto args = read_arguments(in_path);
    auto groups = group_arguments(args);
    auto docs = apply_bounds(groups, bounds);

    std::filesystem::create_directories(out_dir);
    JsonlWriter docs_out(std::filesystem::path(out_dir) / "training_docs.jsonl");
    JsonlWriter manifest(std::filesystem::path(out_dir) / "docs_manifest.jsonl");
    std::size_t chunks = 0;
    for (const auto& doc : docs) {
        manifest.write({{"topic", doc.key.topic},
                        {"stance", to_string(doc.key.stance)},
                        {"stem_key", doc.key.stem},
                        {"n_args", doc.arguments.size()}});
        for (const auto& chunk : chunk_document(doc, seq_len)) {
            docs_out.write({{"control_code", chunk.control_code}, {"text", chunk.text}});
            ++chunks;
        }
    }
    std::cerr << "build-docs: " << docs.size() << " documents, " << chunks << " chunks\n";
    return 0;
}

int cmd_eval(const std::string& generated_path, const std::string& refs_path,
             const std::string& synonyms_path, const std::string& report_path,
             const std::string& clients, const std::filesystem::path& data_dir) {
    auto client = client_from_flag(clients, data_dir);

    std::vector<std::pair<ControlCode, std::string>> generated;
    for_each_jsonl(generated_path, [&](const json& rec, std::size_t) {
        generated.emplace_back(parse_control_code(rec.at("control_code").get<std::string>()),
                               rec.at("text").get<std::string>());
    });

    SynonymTable synonyms;
    if (!synonyms_path.empty()) {
        std::ifstream in(synonyms_path);
        if (!in) throw IoError("cannot open synonyms file " + synonyms_path);
        json j = json::parse(in);
        for (auto& [key, value] : j.items())
            synonyms[to_lower(key)] = value.get<std::vector<std::string>>();
    }

    json full;
    full["presence_rate"] = presence_rate(generated, synonyms);
    full["stance_correctness"] =
        report_to_json(stance_correctness_report(generated, *client, *client));

    std::vector<std::pair<std::string, std::string>> topic_texts;
    for (const auto& [code, text] : generated) topic_texts.emplace_back(code.topic, text);
    full["quality"] = report_to_json(quality_report(topic_texts, *client));

    if (!refs_path.empty()) {
        std::vector<RefRecord> refs;
        for_each_jsonl(refs_path, [&](const json& rec, std::size_t) {
            refs.push_back({rec.at("topic").get<std::string>(),
                            stance_from_string(rec.at("stance").get<std::string>()),
                            rec.at("text").get<std::string>()});
        });
        auto ref_sets = build_reference_sets(refs, *client);
        std::vector<Argument> gen_args;
        for (const auto& [code, text] : generated) {
            Argument a;
            a.text = text;
            a.topic = code.topic;
            a.stance = code.stance;
            a.aspects = client->detect_aspect_spans({text}, code.topic).at(0);
            gen_args.push_back(std::move(a));
        }
        full["reference_grouped"] = report_to_json(reference_grouped_eval(gen_args, ref_sets));
    }

    if (!report_path.empty()) {
        std::ofstream out(report_path, std::ios::binary);
        out << full.dump(2) << '\n';
    }

    std::cout << "metric                          value\n";
    std::cout << "------------------------------  -----\n";
    auto row = [](const std::string& name, double v) {
        std::printf("%-30s  %.4f\n", name.c_str(), v);
    };
    row("presence_rate", full["presence_rate"].get<double>());
    row("f1_pro", full["stance_correctness"]["metrics"]["f1_pro"].get<double>());
    row("f1_con", full["stance_correctness"]["metrics"]["f1_con"].get<double>());
    row("none_rate", full["stance_correctness"]["metrics"]["none_rate"].get<double>());
    row("quality_mean", full["quality"]["metrics"]["mean"].get<double>());
    if (full.contains("reference_grouped")) {
        row("meteor", full["reference_grouped"]["metrics"]["meteor"].get<double>());
        row("rouge_l_f", full["reference_grouped"]["metrics"]["rouge_l_f"].get<double>());
    }
    return 0;
}

int cmd_counter(const std::string& topic, const std::string& stance_str, const std::string& text,
                std::uint64_t seed, std::size_t max_aspects, std::size_t max_tokens,
                const std::string& clients, const std::filesystem::path& data_dir) {
    auto client = client_from_flag(clients, data_dir);
    CounterRequest req{topic, text, stance_from_string(stance_str), max_aspects};
    auto codes = build_counter_codes(req, *client);
    if (codes.no_aspects) {
        std::cerr << "warning: no aspects detected in the input argument\n";
        return 0;
    }
    auto results = generate_counters(codes.codes, *client, seed, max_tokens);
    for (const auto& r : results) {
        json line = {{"control_code", render_control_code(r.code)},
                     {"text", r.error ? "" : r.text},
                     {"aspect_present", r.aspect_present}};
        if (r.error) line["error"] = *r.error;
        std::cout << line.dump() << '\n';
    }
    return 0;
}

struct RunOverrides {
    std::vector<std::string> corpus;
    std::string out_dir;
    std::string clients;
    long min_args = -1, max_args = -1, cap = -1, seq_len = -1, limit = -1, seed = -1;
    bool cap_unique = false;
    bool probe = false;
};

int cmd_run(const std::string& config_path, const RunOverrides& ov) {
    PipelineConfig cfg = load_config(config_path);
    if (!ov.corpus.empty()) {
        cfg.corpus_shards.clear();
        for (const auto& p : ov.corpus) cfg.corpus_shards.emplace_back(p);
    }
    if (!ov.out_dir.empty()) cfg.out_dir = ov.out_dir;
    if (!ov.clients.empty()) cfg.clients = ov.clients;
    if (ov.min_args >= 0) cfg.bounds.min_args = static_cast<std::size_t>(ov.min_args);
    if (ov.max_args >= 0) cfg.bounds.max_args = static_cast<std::size_t>(ov.max_args);
    if (ov.cap >= 0) cfg.bounds.cap_per_topic_stance = static_cast<std::size_t>(ov.cap);
    if (ov.seq_len >= 0) cfg.seq_len = static_cast<std::size_t>(ov.seq_len);
    if (ov.limit >= 0) cfg.retrieve_limit = static_cast<std::size_t>(ov.limit);
    if (ov.seed >= 0) cfg.seed = static_cast<std::uint64_t>(ov.seed);
    if (ov.cap_unique) cfg.bounds.cap_unique = true;

    validate_config(cfg, ov.probe);
    json manifest = run_pipeline(cfg);
    std::cout << "pipeline complete: " << manifest["totals"]["documents"] << " documents, "
              << manifest["totals"]["chunks"] << " chunks -> " << cfg.out_dir.string() << "\n";
    return 0;
}

int cmd_serve(const std::string& host, int port, const std::filesystem::path& data_dir) {
    auto backend = std::make_shared<BaselineClient>(Lexicons::load(data_dir / "lexicons"));
    ModelServer server(backend);
    std::cerr << "serving baseline models on " << host << ":" << port << "\n";
    if (!server.listen(host, port)) {
        std::cerr << "error: cannot listen on " << host << ":" << port << "\n";
        return kExitStage;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"aspect-controlled argument corpus construction and evaluation"};
    app.require_subcommand(1);

    std::filesystem::path data_dir = "data";
    if (const char* env = std::getenv("ARGFORGE_DATA")) data_dir = env;
    app.add_option("--data-dir", data_dir, "directory with lexicons and stopwords");

    auto* ingest = app.add_subcommand("ingest", "retrieve, split, dedup and topic-filter");
    std::vector<std::string> in_corpus;
    std::string in_topic, in_query, in_out;
    std::size_t in_limit = 1500000;
    std::vector<std::string> in_synonyms;
    ingest->add_option("--corpus", in_corpus, "corpus shard (repeatable)")->required();
    ingest->add_option("--topic", in_topic, "topic name")->required();
    ingest->add_option("--query", in_query, "boolean query string or @file")->required();
    ingest->add_option("--limit", in_limit, "max matching documents");
    ingest->add_option("--synonym", in_synonyms, "topic synonym (repeatable)");
    ingest->add_option("--out", in_out, "output sentences.jsonl")->required();

    auto* classify = app.add_subcommand("classify", "argument and stance classification");
    std::string cl_in, cl_out, cl_clients = "baseline";
    classify->add_option("--in", cl_in, "sentences.jsonl")->required();
    classify->add_option("--out", cl_out, "arguments.jsonl")->required();
    classify->add_option("--clients", cl_clients, "baseline or http endpoint");

    auto* aspects = app.add_subcommand("aspects", "detect aspect spans on arguments");
    std::string as_in, as_out, as_clients = "baseline";
    aspects->add_option("--in", as_in, "arguments.jsonl")->required();
    aspects->add_option("--out", as_out, "aspect_args.jsonl")->required();
    aspects->add_option("--clients", as_clients, "baseline or http endpoint");

    auto* build = app.add_subcommand("build-docs", "group, bound and chunk training documents");
    std::string bd_in, bd_out;
    BoundsConfig bd_bounds;
    std::size_t bd_seq_len = 256;
    build->add_option("--in", bd_in, "classified arguments with aspects")->required();
    build->add_option("--min", bd_bounds.min_args, "min arguments per document");
    build->add_option("--max", bd_bounds.max_args, "max arguments per document");
    build->add_option("--cap", bd_bounds.cap_per_topic_stance, "cap per topic and stance");
    build->add_option("--seq-len", bd_seq_len, "tokens per training chunk");
    build->add_flag("--cap-unique", bd_bounds.cap_unique,
                    "cap counts unique sentences instead of memberships");
    build->add_option("--out", bd_out, "output directory")->required();

    auto* eval = app.add_subcommand("eval", "evaluate generated arguments");
    std::string ev_generated, ev_refs, ev_synonyms, ev_report, ev_clients = "baseline";
    eval->add_option("--generated", ev_generated, "generated (control_code, text) jsonl")
        ->required();
    eval->add_option("--refs", ev_refs, "reference arguments jsonl");
    eval->add_option("--synonyms", ev_synonyms, "aspect synonyms json");
    eval->add_option("--report", ev_report, "report output path");
    eval->add_option("--clients", ev_clients, "baseline or http endpoint");

    auto* counter = app.add_subcommand("counter", "generate counter-arguments");
    std::string co_topic, co_stance, co_text, co_clients = "baseline";
    std::uint64_t co_seed = 1;
    std::size_t co_max_aspects = 5, co_max_tokens = 64;
    counter->add_option("--topic", co_topic)->required();
    counter->add_option("--stance", co_stance, "pro or con")->required();
    counter->add_option("--text", co_text, "input argument")->required();
    counter->add_option("--seed", co_seed);
    counter->add_option("--max-aspects", co_max_aspects);
    counter->add_option("--max-tokens", co_max_tokens);
    counter->add_option("--clients", co_clients, "baseline or http endpoint");

    auto* run = app.add_subcommand("run", "full pipeline from a config file");
    std::string run_config;
    RunOverrides ov;
    run->add_option("--config", run_config, "pipeline config json")->required();
    run->add_option("--corpus", ov.corpus, "override corpus shards (repeatable)");
    run->add_option("--out", ov.out_dir, "override output directory");
    run->add_option("--clients", ov.clients, "override clients");
    run->add_option("--min", ov.min_args, "override min arguments per document");
    run->add_option("--max", ov.max_args, "override max arguments per document");
    run->add_option("--cap", ov.cap, "override per-(topic,stance) cap");
    run->add_option("--seq-len", ov.seq_len, "override chunk length");
    run->add_option("--limit", ov.limit, "override retrieval limit");
    run->add_option("--seed", ov.seed, "override seed");
    run->add_flag("--cap-unique", ov.cap_unique,
                  "cap counts unique sentences instead of memberships");
    run->add_flag("--probe", ov.probe, "probe http endpoints during validation");

    auto* serve = app.add_subcommand("serve", "serve the baseline models over http");
    std::string sv_host = "127.0.0.1";
    int sv_port = 8777;
    serve->add_option("--host", sv_host);
    serve->add_option("--port", sv_port);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*ingest)
            return cmd_ingest(in_corpus, in_topic, in_query, in_limit, in_synonyms, in_out);
        if (*classify) return cmd_classify(cl_in, cl_out, cl_clients, data_dir);
        if (*aspects) return cmd_aspects(as_in, as_out, as_clients, data_dir);
        if (*build) return cmd_build_docs(bd_in, bd_bounds, bd_seq_len, bd_out);
        if (*eval)
            return cmd_eval(ev_generated, ev_refs, ev_synonyms, ev_report, ev_clients, data_dir);
        if (*counter)
            return cmd_counter(co_topic, co_stance, co_text, co_seed, co_max_aspects,
                               co_max_tokens, co_clients, data_dir);
        if (*run) return cmd_run(run_config, ov);
        if (*serve) return cmd_serve(sv_host, sv_port, data_dir);
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const SyntaxError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const StageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitStage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitStage;
    }
    return 0;
}

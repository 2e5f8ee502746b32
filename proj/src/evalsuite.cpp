#include "argforge/evalsuite.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "argforge/errors.hpp"
#include "argforge/stem.hpp"
#include "argforge/text.hpp"
#include "argforge/traindoc.hpp"

namespace argforge {

RougeScore rouge_l(const std::vector<std::string>& candidate,
                   const std::vector<std::string>& reference, double beta) {
    RougeScore out;
    if (candidate.empty() || reference.empty()) return out;

    const std::size_t n = candidate.size(), m = reference.size();
    std::vector<std::size_t> prev(m + 1, 0), cur(m + 1, 0);
    for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = 1; j <= m; ++j) {
            if (candidate[i - 1] == reference[j - 1])
                cur[j] = prev[j - 1] + 1;
            else
                cur[j] = std::max(prev[j], cur[j - 1]);
        }
        std::swap(prev, cur);
    }
    const double lcs = static_cast<double>(prev[m]);
    if (lcs == 0.0) return out;
    out.precision = lcs / static_cast<double>(n);
    out.recall = lcs / static_cast<double>(m);
    const double b2 = beta * beta;
    out.f = (1.0 + b2) * out.precision * out.recall / (out.recall + b2 * out.precision);
    return out;
}

namespace {

// Two-stage greedy alignment: exact token match first, then stem match,
// scanning the candidate left to right and taking the first unused
// reference token each time.
std::vector<std::pair<std::size_t, std::size_t>> align_unigrams(
    const std::vector<std::string>& cand, const std::vector<std::string>& ref) {
    std::vector<bool> cand_used(cand.size(), false), ref_used(ref.size(), false);
    std::vector<std::pair<std::size_t, std::size_t>> pairs;

    std::vector<std::string> cand_low(cand.size()), ref_low(ref.size());
    std::transform(cand.begin(), cand.end(), cand_low.begin(),
                   [](const std::string& t) { return to_lower(t); });
    std::transform(ref.begin(), ref.end(), ref_low.begin(),
                   [](const std::string& t) { return to_lower(t); });

    for (std::size_t i = 0; i < cand.size(); ++i) {
        for (std::size_t j = 0; j < ref.size(); ++j) {
            if (ref_used[j] || cand_low[i] != ref_low[j]) continue;
            cand_used[i] = true;
            ref_used[j] = true;
            pairs.emplace_back(i, j);
            break;
        }
    }
    std::vector<std::string> cand_stem = stem_tokens(cand_low);
    std::vector<std::string> ref_stem = stem_tokens(ref_low);
    for (std::size_t i = 0; i < cand.size(); ++i) {
        if (cand_used[i]) continue;
        for (std::size_t j = 0; j < ref.size(); ++j) {
            if (ref_used[j] || cand_stem[i] != ref_stem[j]) continue;
            cand_used[i] = true;
            ref_used[j] = true;
            pairs.emplace_back(i, j);
            break;
        }
    }
    std::sort(pairs.begin(), pairs.end());
    return pairs;
}

std::size_t count_chunks(const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
    if (pairs.empty()) return 0;
    std::size_t chunks = 1;
    for (std::size_t i = 1; i < pairs.size(); ++i) {
        if (pairs[i].first != pairs[i - 1].first + 1 || pairs[i].second != pairs[i - 1].second + 1)
            ++chunks;
    }
    return chunks;
}

} // namespace

double meteor_lite(const std::vector<std::string>& candidate,
                   const std::vector<std::string>& reference, const MeteorParams& params) {
    if (candidate.empty() || reference.empty()) return 0.0;
    auto pairs = align_unigrams(candidate, reference);
    const double matches = static_cast<double>(pairs.size());
    if (matches == 0.0) return 0.0;
    const double p = matches / static_cast<double>(candidate.size());
    const double r = matches / static_cast<double>(reference.size());
    const double f_mean = p * r / (params.alpha * p + (1.0 - params.alpha) * r);
    const double chunks = static_cast<double>(count_chunks(pairs));
    double frag = chunks / matches;
    double penalty = params.gamma * std::pow(frag, params.beta_pen);
    return f_mean * (1.0 - penalty);
}

std::vector<ReferenceSet> build_reference_sets(const std::vector<RefRecord>& records,
                                               ModelClient& tagger) {
    std::map<std::pair<std::string, Stance>, ReferenceSet> sets;
    std::vector<std::string> texts;
    texts.reserve(records.size());
    for (const auto& r : records) texts.push_back(r.text);

    // tag per (topic) batch to keep topic context right
    std::map<std::string, std::vector<std::size_t>> by_topic;
    for (std::size_t i = 0; i < records.size(); ++i)
        by_topic[records[i].topic].push_back(i);

    for (const auto& [topic, idxs] : by_topic) {
        std::vector<std::string> batch;
        batch.reserve(idxs.size());
        for (auto i : idxs) batch.push_back(records[i].text);
        auto spans_per_text = tagger.detect_aspect_spans(batch, topic);
        for (std::size_t b = 0; b < idxs.size(); ++b) {
            const RefRecord& rec = records[idxs[b]];
            auto key = std::make_pair(normalize_text(rec.topic), rec.stance);
            auto& set = sets[key];
            set.topic = key.first;
            set.stance = rec.stance;
            std::set<std::string> stems;
            for (const auto& span : spans_per_text[b]) stems.insert(stem_key(span.surface));
            for (const auto& s : stems) set.by_stem[s].push_back(rec.text);
        }
    }
    std::vector<ReferenceSet> out;
    out.reserve(sets.size());
    for (auto& [key, set] : sets) out.push_back(std::move(set));
    return out;
}

EvalReport reference_grouped_eval(const std::vector<Argument>& generated,
                                  const std::vector<ReferenceSet>& refs) {
    if (refs.empty()) throw MetricError("empty reference set");
    EvalReport report;
    double meteor_sum = 0.0, rouge_sum = 0.0;
    std::size_t scored = 0, excluded = 0;

    for (const auto& arg : generated) {
        std::set<std::string> stems;
        for (const auto& span : arg.aspects) stems.insert(stem_key(span.surface));
        std::vector<const std::string*> pool;
        for (const auto& set : refs) {
            if (set.topic != normalize_text(arg.topic) || set.stance != arg.stance) continue;
            for (const auto& stem : stems) {
                auto it = set.by_stem.find(stem);
                if (it == set.by_stem.end()) continue;
                for (const auto& text : it->second) pool.push_back(&text);
            }
        }
        if (pool.empty()) {
            ++excluded;
            continue;
        }
        auto cand_toks = lower_tokens(arg.text);
        double best_meteor = 0.0, best_rouge = 0.0;
        for (const std::string* ref_text : pool) {
            auto ref_toks = lower_tokens(*ref_text);
            best_meteor = std::max(best_meteor, meteor_lite(cand_toks, ref_toks));
            best_rouge = std::max(best_rouge, rouge_l(cand_toks, ref_toks).f);
        }
        meteor_sum += best_meteor;
        rouge_sum += best_rouge;
        ++scored;
    }
    report.n = scored;
    report.metrics["excluded"] = static_cast<double>(excluded);
    report.metrics["meteor"] = scored ? meteor_sum / static_cast<double>(scored) : 0.0;
    report.metrics["rouge_l_f"] = scored ? rouge_sum / static_cast<double>(scored) : 0.0;
    return report;
}

bool aspect_presence(const std::string& text, const std::string& aspect,
                     const std::vector<std::string>& synonyms) {
    auto text_stems = stem_tokens(lower_tokens(text));
    auto needle = stem_tokens(lower_tokens(aspect));
    if (!needle.empty() && contains_subsequence(text_stems, needle)) return true;
    for (const auto& syn : synonyms) {
        auto syn_stems = stem_tokens(lower_tokens(syn));
        if (!syn_stems.empty() && contains_subsequence(text_stems, syn_stems)) return true;
    }
    return false;
}

double presence_rate(const std::vector<std::pair<ControlCode, std::string>>& generated,
                     const SynonymTable& synonyms) {
    if (generated.empty()) return 0.0;
    std::size_t hits = 0;
    for (const auto& [code, text] : generated) {
        std::vector<std::string> syns;
        auto it = synonyms.find(code.aspect);
        if (it != synonyms.end()) syns = it->second;
        if (aspect_presence(text, code.aspect, syns)) ++hits;
    }
    return static_cast<double>(hits) / static_cast<double>(generated.size());
}

EvalReport stance_correctness_report(
    const std::vector<std::pair<ControlCode, std::string>>& generated,
    ModelClient& argument_client, ModelClient& stance_client) {
    EvalReport report;
    report.n = generated.size();
    if (generated.empty()) {
        report.metrics["none_rate"] = 0.0;
        return report;
    }

    // batch per topic so classifier context is correct
    std::map<std::string, std::vector<std::size_t>> by_topic;
    for (std::size_t i = 0; i < generated.size(); ++i)
        by_topic[generated[i].first.topic].push_back(i);

    std::vector<LabelKind> pred(generated.size(), LabelKind::NonArgument);
    for (const auto& [topic, idxs] : by_topic) {
        std::vector<std::string> texts;
        texts.reserve(idxs.size());
        for (auto i : idxs) texts.push_back(generated[i].second);
        auto arg_labels = argument_client.classify_arguments(texts, topic);
        std::vector<std::string> arg_texts;
        std::vector<std::size_t> arg_idx;
        for (std::size_t b = 0; b < idxs.size(); ++b) {
            if (arg_labels[b].kind == LabelKind::Argument) {
                arg_texts.push_back(texts[b]);
                arg_idx.push_back(idxs[b]);
            }
        }
        if (!arg_texts.empty()) {
            auto stance_labels = stance_client.classify_stance(arg_texts, topic);
            for (std::size_t b = 0; b < arg_idx.size(); ++b)
                pred[arg_idx[b]] = stance_labels[b].kind;
        }
    }

    std::size_t none_count = 0;
    std::map<LabelKind, std::size_t> tp, pred_total, gold_total;
    for (std::size_t i = 0; i < generated.size(); ++i) {
        LabelKind gold =
            generated[i].first.stance == Stance::Pro ? LabelKind::Pro : LabelKind::Con;
        ++gold_total[gold];
        if (pred[i] == LabelKind::NonArgument) {
            ++none_count;
            continue;
        }
        ++pred_total[pred[i]];
        if (pred[i] == gold) ++tp[gold];
    }

    for (LabelKind cls : {LabelKind::Pro, LabelKind::Con}) {
        PerClassPRF prf;
        double p_den = static_cast<double>(pred_total[cls]);
        double r_den = static_cast<double>(gold_total[cls]);
        prf.precision = p_den > 0 ? static_cast<double>(tp[cls]) / p_den : 0.0;
        prf.recall = r_den > 0 ? static_cast<double>(tp[cls]) / r_den : 0.0;
        prf.f1 = prf.precision + prf.recall > 0
                     ? 2.0 * prf.precision * prf.recall / (prf.precision + prf.recall)
                     : 0.0;
        report.per_class[to_string(cls)] = prf;
        report.metrics["f1_" + to_string(cls)] = prf.f1;
    }
    report.metrics["none_rate"] =
        static_cast<double>(none_count) / static_cast<double>(generated.size());
    return report;
}

EvalReport quality_report(const std::vector<std::pair<std::string, std::string>>& topic_texts,
                          ModelClient& quality_client, std::size_t exemplar_k) {
    EvalReport report;
    report.n = topic_texts.size();
    if (topic_texts.empty()) return report;

    std::map<std::string, std::vector<std::size_t>> by_topic;
    for (std::size_t i = 0; i < topic_texts.size(); ++i)
        by_topic[topic_texts[i].first].push_back(i);

    std::vector<double> scores(topic_texts.size(), 0.0);
    for (const auto& [topic, idxs] : by_topic) {
        std::vector<std::string> texts;
        texts.reserve(idxs.size());
        for (auto i : idxs) texts.push_back(topic_texts[i].second);
        auto out = quality_client.score_quality(texts, topic);
        for (std::size_t b = 0; b < idxs.size(); ++b) scores[idxs[b]] = out[b].value;
    }

    double sum = 0.0, mn = 1.0, mx = 0.0;
    for (double s : scores) {
        sum += s;
        mn = std::min(mn, s);
        mx = std::max(mx, s);
    }
    report.metrics["mean"] = sum / static_cast<double>(scores.size());
    report.metrics["min"] = mn;
    report.metrics["max"] = mx;

    for (const auto& [topic, idxs] : by_topic) {
        std::vector<std::pair<double, std::string>> ranked;
        ranked.reserve(idxs.size());
        for (auto i : idxs) ranked.emplace_back(scores[i], topic_texts[i].second);
        std::stable_sort(ranked.begin(), ranked.end(),
                         [](const auto& a, const auto& b) { return a.first > b.first; });
        std::size_t k = std::min(exemplar_k, ranked.size());
        report.exemplars_top[topic] = {ranked.begin(), ranked.begin() + static_cast<long>(k)};
        std::vector<std::pair<double, std::string>> bottom(ranked.end() - static_cast<long>(k),
                                                           ranked.end());
        std::reverse(bottom.begin(), bottom.end());
        report.exemplars_bottom[topic] = std::move(bottom);
    }
    return report;
}

std::map<std::string, std::vector<AspectFrequency>> aspect_frequency(
    const std::vector<Argument>& args, std::size_t k) {
    std::map<std::string, std::map<std::string, std::size_t>> counts;
    for (const auto& a : args) {
        for (const auto& span : a.aspects) {
            std::string lemma = stem_key(span.surface);
            if (lemma.empty()) continue;
            counts[normalize_text(a.topic)][lemma] += 1;
        }
    }
    std::map<std::string, std::vector<AspectFrequency>> out;
    for (const auto& [topic, lemmas] : counts) {
        std::vector<AspectFrequency> ranked;
        ranked.reserve(lemmas.size());
        for (const auto& [lemma, count] : lemmas) ranked.push_back({lemma, count});
        std::stable_sort(ranked.begin(), ranked.end(),
                         [](const AspectFrequency& a, const AspectFrequency& b) {
                             if (a.count != b.count) return a.count > b.count;
                             return a.lemma < b.lemma;
                         });
        if (ranked.size() > k) ranked.resize(k);
        out[topic] = std::move(ranked);
    }
    return out;
}

} // namespace argforge

#include "argforge/traindoc.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "argforge/stem.hpp"
#include "argforge/text.hpp"

namespace argforge {

std::string stem_key(const std::string& aspect) { return stem_phrase(aspect); }

std::map<GroupKey, ArgGroup> group_arguments(const std::vector<Argument>& args) {
    struct Entry {
        const Argument* arg;
        std::size_t input_idx;
    };
    std::map<GroupKey, std::vector<Entry>> raw;
    std::map<GroupKey, std::map<std::string, std::size_t>> surfaces;

    for (std::size_t idx = 0; idx < args.size(); ++idx) {
        const Argument& a = args[idx];
        std::set<std::string> stems_seen;  // duplicate stems join once
        for (const auto& span : a.aspects) {
            std::string stem = stem_key(span.surface);
            if (stem.empty()) continue;
            GroupKey key{normalize_text(a.topic), a.stance, stem};
            surfaces[key][to_lower(span.surface)] += 1;
            if (!stems_seen.insert(stem).second) continue;
            raw[key].push_back({&a, idx});
        }
    }

    std::map<GroupKey, ArgGroup> out;
    for (auto& [key, entries] : raw) {
        std::stable_sort(entries.begin(), entries.end(), [](const Entry& x, const Entry& y) {
            if (x.arg->confidence != y.arg->confidence)
                return x.arg->confidence > y.arg->confidence;
            return x.input_idx < y.input_idx;
        });
        ArgGroup g;
        g.key = key;
        g.members.reserve(entries.size());
        for (const auto& e : entries) g.members.push_back(*e.arg);
        g.surfaces = surfaces[key];
        out.emplace(key, std::move(g));
    }
    return out;
}

namespace {

std::string pick_control_aspect(const ArgGroup& g) {
    std::string best;
    std::size_t best_count = 0;
    for (const auto& [surface, count] : g.surfaces) {
        if (count > best_count || (count == best_count && (best.empty() || surface < best))) {
            best = surface;
            best_count = count;
        }
    }
    return best.empty() ? g.key.stem : best;
}

} // namespace

std::vector<TrainingDocument> apply_bounds(const std::map<GroupKey, ArgGroup>& groups,
                                           const BoundsConfig& bounds) {
    // bucket surviving groups per (topic, stance)
    std::map<std::pair<std::string, Stance>, std::vector<const ArgGroup*>> buckets;
    for (const auto& [key, group] : groups) {
        if (group.members.size() < bounds.min_args) continue;
        buckets[{key.topic, key.stance}].push_back(&group);
    }

    std::vector<TrainingDocument> out;
    for (auto& [bucket_key, list] : buckets) {
        std::stable_sort(list.begin(), list.end(), [&](const ArgGroup* a, const ArgGroup* b) {
            std::size_t sa = std::min(a->members.size(), bounds.max_args);
            std::size_t sb = std::min(b->members.size(), bounds.max_args);
            if (sa != sb) return sa > sb;
            return a->key.stem < b->key.stem;
        });
        std::size_t admitted = 0;
        std::set<std::string> seen_texts;
        for (const ArgGroup* g : list) {
            std::size_t size = std::min(g->members.size(), bounds.max_args);
            std::size_t weight = size;
            if (bounds.cap_unique) {
                weight = 0;
                for (std::size_t i = 0; i < size; ++i)
                    if (!seen_texts.count(normalize_text(g->members[i].text))) ++weight;
            }
            if (admitted + weight > bounds.cap_per_topic_stance) continue;  // skip, keep trying
            TrainingDocument doc;
            doc.key = g->key;
            doc.arguments.assign(g->members.begin(),
                                 g->members.begin() + static_cast<long>(size));
            doc.control_aspect = pick_control_aspect(*g);
            if (bounds.cap_unique)
                for (const auto& a : doc.arguments) seen_texts.insert(normalize_text(a.text));
            admitted += weight;
            out.push_back(std::move(doc));
        }
    }
    return out;
}

std::vector<Chunk> chunk_document(const TrainingDocument& doc, std::size_t seq_len,
                                  const std::string& punct) {
    if (seq_len < 8) throw std::invalid_argument("seq_len must be >= 8");
    if (doc.arguments.empty()) throw std::invalid_argument("empty training document");

    std::vector<std::string> texts;
    texts.reserve(doc.arguments.size());
    for (const auto& a : doc.arguments) texts.push_back(a.text);
    auto tokens = tokenize(join_tokens(texts));
    if (tokens.empty()) throw std::invalid_argument("empty training document");

    std::string code = render_control_code(
        make_control_code(doc.key.topic, doc.key.stance, doc.control_aspect, punct));

    std::vector<Chunk> out;
    for (std::size_t i = 0; i < tokens.size(); i += seq_len) {
        std::size_t end = std::min(i + seq_len, tokens.size());
        std::vector<std::string> window(tokens.begin() + static_cast<long>(i),
                                        tokens.begin() + static_cast<long>(end));
        out.push_back({code, join_tokens(window)});
    }
    return out;
}

} // namespace argforge

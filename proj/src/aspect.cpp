#include "argforge/aspect.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "argforge/errors.hpp"
#include "argforge/text.hpp"

namespace argforge {

char bio_char(BioTag t) {
    switch (t) {
    case BioTag::B: return 'B';
    case BioTag::I: return 'I';
    case BioTag::O: return 'O';
    }
    return 'O';
}

BioTag bio_from_char(char c) {
    switch (c) {
    case 'B': return BioTag::B;
    case 'I': return BioTag::I;
    case 'O': return BioTag::O;
    default: throw std::invalid_argument(std::string("not a BIO tag: ") + c);
    }
}

bool BioTags::is_valid() const {
    for (std::size_t i = 0; i < tags.size(); ++i) {
        if (tags[i] == BioTag::I && (i == 0 || tags[i - 1] == BioTag::O)) return false;
    }
    return true;
}

std::string BioTags::to_string() const {
    std::string s;
    s.reserve(tags.size());
    for (auto t : tags) s += bio_char(t);
    return s;
}

std::vector<AspectCandidate> extract_candidates(const std::vector<std::string>& tokens) {
    std::vector<AspectCandidate> out;
    const std::size_t n = tokens.size();
    for (std::size_t start = 0; start < n; ++start) {
        for (std::size_t len = 1; len <= 4 && start + len <= n; ++len) {
            std::vector<std::string> surf(tokens.begin() + static_cast<long>(start),
                                          tokens.begin() + static_cast<long>(start + len));
            out.push_back({{start, len, join_tokens(surf)}, 0.0});
        }
    }
    // order by (start, len); construction already yields it, keep explicit
    std::sort(out.begin(), out.end(), [](const AspectCandidate& a, const AspectCandidate& b) {
        if (a.span.start != b.span.start) return a.span.start < b.span.start;
        return a.span.len < b.span.len;
    });
    return out;
}

double heuristic_score(const AspectSpan& candidate, const std::vector<AspectSpan>& gold) {
    if (candidate.len == 0) return 0.0;
    std::size_t covered = 0;
    for (std::size_t t = candidate.start; t < candidate.end(); ++t) {
        for (const auto& g : gold) {
            if (t >= g.start && t < g.end()) {
                ++covered;
                break;
            }
        }
    }
    return static_cast<double>(covered) / static_cast<double>(candidate.len);
}

std::vector<AspectCandidate> filter_candidates(const std::vector<AspectCandidate>& cands,
                                               const std::unordered_set<std::string>& stopwords) {
    std::vector<AspectCandidate> out;
    for (const auto& c : cands) {
        auto toks = lower_tokens(c.span.surface);
        if (toks.empty()) continue;
        if (stopwords.count(toks.front()) || stopwords.count(toks.back())) continue;
        bool bad = false;
        for (const auto& t : toks) {
            if (contains_punct(t) || contains_digit(t)) {
                bad = true;
                break;
            }
        }
        if (!bad) out.push_back(c);
    }
    return out;
}

void rank_candidates(std::vector<AspectCandidate>& cands) {
    std::stable_sort(cands.begin(), cands.end(),
                     [](const AspectCandidate& a, const AspectCandidate& b) {
                         if (a.score != b.score) return a.score > b.score;
                         if (a.span.start != b.span.start) return a.span.start < b.span.start;
                         return a.span.len < b.span.len;
                     });
}

std::vector<AspectSpan> top_t(const std::vector<AspectCandidate>& ranked, std::size_t t) {
    std::vector<AspectSpan> picked;
    for (const auto& c : ranked) {
        if (picked.size() >= t) break;
        bool clash = std::any_of(picked.begin(), picked.end(), [&](const AspectSpan& s) {
            return spans_overlap(s, c.span);
        });
        if (!clash) picked.push_back(c.span);
    }
    return picked;
}

BioTags bio_encode(std::size_t token_count, const std::vector<AspectSpan>& spans) {
    BioTags out;
    out.tags.assign(token_count, BioTag::O);
    for (const auto& s : spans) {
        if (s.len == 0 || s.end() > token_count)
            throw std::invalid_argument("span out of token range");
        for (std::size_t i = s.start; i < s.end(); ++i) {
            if (out.tags[i] != BioTag::O) throw std::invalid_argument("overlapping spans");
            out.tags[i] = i == s.start ? BioTag::B : BioTag::I;
        }
    }
    return out;
}

std::vector<AspectSpan> bio_decode(const BioTags& tags, const std::vector<std::string>& tokens) {
    std::vector<AspectSpan> out;
    std::size_t i = 0;
    const std::size_t n = tags.tags.size();
    while (i < n) {
        if (tags.tags[i] == BioTag::O) {
            ++i;
            continue;
        }
        // B starts a span; a dangling I is coerced to B
        std::size_t start = i;
        ++i;
        while (i < n && tags.tags[i] == BioTag::I) ++i;
        std::size_t len = i - start;
        std::string surface;
        if (start + len <= tokens.size()) {
            std::vector<std::string> surf(tokens.begin() + static_cast<long>(start),
                                          tokens.begin() + static_cast<long>(start + len));
            surface = join_tokens(surf);
        }
        out.push_back({start, len, surface});
    }
    return out;
}

double recall_at_k(const std::vector<RankedSample>& samples, std::size_t k, RecallMode mode) {
    double sum = 0.0;
    std::size_t counted = 0;
    for (const auto& sample : samples) {
        if (sample.gold.empty()) continue;
        std::vector<std::string> topk;
        for (std::size_t i = 0; i < sample.ranked.size() && i < k; ++i)
            topk.push_back(to_lower(sample.ranked[i].span.surface));
        std::size_t matched = 0;
        for (const auto& g : sample.gold) {
            std::string surf = to_lower(g.surface);
            if (std::find(topk.begin(), topk.end(), surf) != topk.end()) ++matched;
        }
        if (mode == RecallMode::PerAspectMean)
            sum += static_cast<double>(matched) / static_cast<double>(sample.gold.size());
        else
            sum += matched > 0 ? 1.0 : 0.0;
        ++counted;
    }
    if (counted == 0) throw MetricError("recall@k undefined: no sample has gold spans");
    return sum / static_cast<double>(counted);
}

EvalReport token_f1_macro(const std::vector<std::vector<BioTag>>& pred,
                          const std::vector<std::vector<BioTag>>& gold) {
    if (pred.size() != gold.size())
        throw std::invalid_argument("prediction/gold sample counts differ");
    for (std::size_t i = 0; i < pred.size(); ++i)
        if (pred[i].size() != gold[i].size())
            throw std::invalid_argument("prediction/gold lengths differ at sample " +
                                        std::to_string(i));

    // confusion[gold][pred] over the flattened token stream
    std::array<std::array<std::size_t, 3>, 3> confusion{};
    for (std::size_t i = 0; i < pred.size(); ++i)
        for (std::size_t j = 0; j < pred[i].size(); ++j)
            ++confusion[static_cast<std::size_t>(gold[i][j])]
                       [static_cast<std::size_t>(pred[i][j])];

    EvalReport report;
    report.n = pred.size();
    const std::array<BioTag, 3> classes = {BioTag::B, BioTag::I, BioTag::O};
    double f1_sum = 0.0, p_sum = 0.0, r_sum = 0.0;
    for (BioTag cls : classes) {
        auto c = static_cast<std::size_t>(cls);
        std::size_t tp = confusion[c][c];
        std::size_t pred_total = 0, gold_total = 0;
        for (std::size_t g = 0; g < 3; ++g) pred_total += confusion[g][c];
        for (std::size_t p = 0; p < 3; ++p) gold_total += confusion[c][p];
        PerClassPRF prf;
        prf.precision = pred_total ? static_cast<double>(tp) / static_cast<double>(pred_total) : 0.0;
        prf.recall = gold_total ? static_cast<double>(tp) / static_cast<double>(gold_total) : 0.0;
        prf.f1 = (prf.precision + prf.recall) > 0.0
                     ? 2.0 * prf.precision * prf.recall / (prf.precision + prf.recall)
                     : 0.0;
        report.per_class[std::string(1, bio_char(cls))] = prf;
        f1_sum += prf.f1;
        p_sum += prf.precision;
        r_sum += prf.recall;
    }
    report.metrics["f1_macro"] = f1_sum / 3.0;
    report.metrics["precision_macro"] = p_sum / 3.0;
    report.metrics["recall_macro"] = r_sum / 3.0;
    return report;
}

} // namespace argforge

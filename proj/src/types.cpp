#include "argforge/types.hpp"

#include "argforge/errors.hpp"
#include "argforge/text.hpp"

namespace argforge {

Stance flip_stance(Stance s) { return s == Stance::Pro ? Stance::Con : Stance::Pro; }

std::string to_string(Stance s) { return s == Stance::Pro ? "PRO" : "CON"; }

Stance stance_from_string(const std::string& s) {
    std::string l = to_lower(s);
    if (l == "pro") return Stance::Pro;
    if (l == "con") return Stance::Con;
    throw std::invalid_argument("not a stance: " + s);
}

Source source_from_string(const std::string& s) {
    std::string l = to_lower(s);
    if (l == "cc") return Source::Cc;
    if (l == "reddit") return Source::Reddit;
    return Source::Other;
}

std::string to_string(Source s) {
    switch (s) {
    case Source::Cc: return "cc";
    case Source::Reddit: return "reddit";
    case Source::Other: return "other";
    }
    return "other";
}

std::string to_string(LabelKind k) {
    switch (k) {
    case LabelKind::Argument: return "argument";
    case LabelKind::NonArgument: return "non_argument";
    case LabelKind::Pro: return "pro";
    case LabelKind::Con: return "con";
    }
    return "non_argument";
}

bool spans_overlap(const AspectSpan& a, const AspectSpan& b) {
    return a.start < b.end() && b.start < a.end();
}

ControlCode make_control_code(const std::string& topic, Stance stance,
                              const std::string& aspect, const std::string& punct) {
    ControlCode c;
    c.topic = normalize_text(topic);
    c.stance = stance;
    c.aspect = normalize_text(aspect);
    c.punct = punct == ":" ? ":" : ".";
    return c;
}

std::string render_control_code(const ControlCode& c) {
    return c.topic + " " + to_string(c.stance) + " " + c.aspect + " " + c.punct;
}

ControlCode parse_control_code(const std::string& rendered) {
    auto toks = tokenize(rendered);
    std::size_t stance_pos = toks.size();
    for (std::size_t i = 0; i < toks.size(); ++i) {
        if (toks[i] == "PRO" || toks[i] == "CON") {
            stance_pos = i;
            break;
        }
    }
    if (stance_pos == toks.size() || stance_pos == 0 || stance_pos + 1 >= toks.size())
        throw MalformedResponseError("not a control code: '" + rendered + "'");
    ControlCode c;
    c.stance = toks[stance_pos] == "PRO" ? Stance::Pro : Stance::Con;
    std::vector<std::string> topic(toks.begin(), toks.begin() + stance_pos);
    std::vector<std::string> rest(toks.begin() + stance_pos + 1, toks.end());
    if (!rest.empty() && (rest.back() == "." || rest.back() == ":")) {
        c.punct = rest.back();
        rest.pop_back();
    }
    if (rest.empty()) throw MalformedResponseError("control code has no aspect: '" + rendered + "'");
    c.topic = to_lower(join_tokens(topic));
    c.aspect = to_lower(join_tokens(rest));
    return c;
}

} // namespace argforge

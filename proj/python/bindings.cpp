#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "argforge/aspect.hpp"
#include "argforge/clients.hpp"
#include "argforge/corpus.hpp"
#include "argforge/countergen.hpp"
#include "argforge/dataset.hpp"
#include "argforge/evalsuite.hpp"
#include "argforge/query.hpp"
#include "argforge/stem.hpp"
#include "argforge/text.hpp"
#include "argforge/traindoc.hpp"

namespace py = pybind11;
using namespace argforge;

namespace {

Stance stance_arg(const std::string& s) { return stance_from_string(s); }

std::vector<BioTag> tags_from_string(const std::string& s) {
    std::vector<BioTag> out;
    out.reserve(s.size());
    for (char c : s) out.push_back(bio_from_char(c));
    return out;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Aspect-controlled argument corpus construction and evaluation";

    py::class_<AspectSpan>(m, "AspectSpan")
        .def(py::init([](std::size_t start, std::size_t len, const std::string& surface) {
                 return AspectSpan{start, len, surface};
             }),
             py::arg("start"), py::arg("len"), py::arg("surface") = "")
        .def_readonly("start", &AspectSpan::start)
        .def_readonly("len", &AspectSpan::len)
        .def_readonly("surface", &AspectSpan::surface)
        .def("__eq__", [](const AspectSpan& a, const AspectSpan& b) { return a == b; })
        .def("__repr__", [](const AspectSpan& s) {
            return "AspectSpan(" + std::to_string(s.start) + ", " + std::to_string(s.len) +
                   ", '" + s.surface + "')";
        });

    // text utilities
    m.def("tokenize", [](const std::string& s) { return tokenize(s); });
    m.def("porter_stem", [](const std::string& w) { return porter_stem(w); });
    m.def("stem_key", &stem_key);
    m.def("normalize_text", [](const std::string& s) { return normalize_text(s); });

    // queries
    m.def("parse_query", [](const std::string& raw) { return to_string(parse_query(raw)); },
          "Parse a boolean query; returns its canonical printed form.");
    m.def("eval_query", [](const std::string& raw, const std::string& text) {
        Document d{"", "", text, Source::Other};
        return eval_query(parse_query(raw), d);
    });

    // sentences
    m.def("split_sentences", [](const std::string& text) {
        std::vector<std::string> out;
        for (const auto& s : split_sentences(Document{"", "", text, Source::Other}))
            out.push_back(s.text);
        return out;
    });

    // aspects and tagging
    m.def("extract_candidates", [](const std::vector<std::string>& tokens) {
        std::vector<std::string> out;
        for (const auto& c : extract_candidates(tokens)) out.push_back(c.span.surface);
        return out;
    });
    m.def("heuristic_score", [](std::size_t start, std::size_t len,
                                const std::vector<std::pair<std::size_t, std::size_t>>& gold) {
        std::vector<AspectSpan> spans;
        for (auto [s, l] : gold) spans.push_back({s, l, ""});
        return heuristic_score({start, len, ""}, spans);
    });
    m.def("bio_encode",
          [](std::size_t token_count, const std::vector<std::pair<std::size_t, std::size_t>>& spans) {
              std::vector<AspectSpan> in;
              for (auto [s, l] : spans) in.push_back({s, l, ""});
              return bio_encode(token_count, in).to_string();
          });
    m.def("bio_decode", [](const std::string& tags, const std::vector<std::string>& tokens) {
        std::vector<std::pair<std::size_t, std::size_t>> out;
        for (const auto& s : bio_decode({tags_from_string(tags)}, tokens))
            out.emplace_back(s.start, s.len);
        return out;
    });
    m.def("token_f1_macro",
          [](const std::vector<std::string>& pred, const std::vector<std::string>& gold) {
              std::vector<std::vector<BioTag>> p, g;
              for (const auto& s : pred) p.push_back(tags_from_string(s));
              for (const auto& s : gold) g.push_back(tags_from_string(s));
              return token_f1_macro(p, g).metrics;
          });

    // metrics
    m.def("rouge_l",
          [](const std::vector<std::string>& cand, const std::vector<std::string>& ref,
             double beta) {
              auto r = rouge_l(cand, ref, beta);
              return py::make_tuple(r.precision, r.recall, r.f);
          },
          py::arg("candidate"), py::arg("reference"), py::arg("beta") = 1.2);
    m.def("meteor_lite",
          [](const std::vector<std::string>& cand, const std::vector<std::string>& ref) {
              return meteor_lite(cand, ref);
          });
    m.def("aspect_presence",
          [](const std::string& text, const std::string& aspect,
             const std::vector<std::string>& synonyms) {
              return aspect_presence(text, aspect, synonyms);
          },
          py::arg("text"), py::arg("aspect"), py::arg("synonyms") = std::vector<std::string>{});

    // control codes
    m.def("render_control_code",
          [](const std::string& topic, const std::string& stance, const std::string& aspect,
             const std::string& punct) {
              return render_control_code(
                  make_control_code(topic, stance_arg(stance), aspect, punct));
          },
          py::arg("topic"), py::arg("stance"), py::arg("aspect"), py::arg("punct") = ".");
    m.def("flip_stance",
          [](const std::string& s) { return to_string(flip_stance(stance_arg(s))); });

    // offline baselines
    py::class_<BaselineClient>(m, "BaselineClient")
        .def(py::init([](const std::string& data_dir) {
                 return BaselineClient(
                     Lexicons::load(std::filesystem::path(data_dir) / "lexicons"));
             }),
             py::arg("data_dir") = "data")
        .def("classify_arguments",
             [](BaselineClient& c, const std::vector<std::string>& texts,
                const std::string& topic) {
                 std::vector<std::pair<std::string, double>> out;
                 for (const auto& l : c.classify_arguments(texts, topic))
                     out.emplace_back(to_string(l.kind), l.score);
                 return out;
             })
        .def("classify_stance",
             [](BaselineClient& c, const std::vector<std::string>& texts,
                const std::string& topic) {
                 std::vector<std::pair<std::string, double>> out;
                 for (const auto& l : c.classify_stance(texts, topic))
                     out.emplace_back(to_string(l.kind), l.score);
                 return out;
             })
        .def("detect_aspect_spans",
             [](BaselineClient& c, const std::vector<std::string>& texts,
                const std::string& topic) {
                 return c.detect_aspect_spans(texts, topic);
             })
        .def("score_quality",
             [](BaselineClient& c, const std::vector<std::string>& texts,
                const std::string& topic) {
                 std::vector<double> out;
                 for (const auto& s : c.score_quality(texts, topic)) out.push_back(s.value);
                 return out;
             })
        .def("generate_text",
             [](BaselineClient& c, const std::string& control_code, std::size_t max_tokens,
                std::uint64_t seed) {
                 return c.generate_text({control_code, max_tokens, seed});
             },
             py::arg("control_code"), py::arg("max_tokens") = 64, py::arg("seed") = 0);

    m.def("build_counter_codes",
          [](const std::string& topic, const std::string& stance, const std::string& text,
             BaselineClient& tagger, std::size_t max_aspects) {
              CounterRequest req{topic, text, stance_arg(stance), max_aspects};
              auto out = build_counter_codes(req, tagger);
              std::vector<std::string> rendered;
              for (const auto& c : out.codes) rendered.push_back(render_control_code(c));
              return rendered;
          },
          py::arg("topic"), py::arg("stance"), py::arg("text"), py::arg("tagger"),
          py::arg("max_aspects") = 5);
}

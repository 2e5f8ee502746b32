#include "argforge/server.hpp"

#include <httplib.h>
#include <json.hpp>

#include "argforge/errors.hpp"

namespace argforge {

using nlohmann::json;

struct ModelServer::Impl {
    std::shared_ptr<ModelClient> backend;
    httplib::Server server;

    explicit Impl(std::shared_ptr<ModelClient> b) : backend(std::move(b)) { routes(); }

    static json parse_body(const httplib::Request& req, httplib::Response& res) {
        try {
            return json::parse(req.body);
        } catch (const json::parse_error&) {
            res.status = 400;
            res.set_content(R"({"error":"body is not JSON"})", "application/json");
            return json();
        }
    }

    static bool take_texts(const json& body, httplib::Response& res, std::string& topic,
                           std::vector<std::string>& texts) {
        if (!body.contains("texts") || !body["texts"].is_array()) {
            res.status = 400;
            res.set_content(R"({"error":"missing texts"})", "application/json");
            return false;
        }
        topic = body.value("topic", "");
        texts = body["texts"].get<std::vector<std::string>>();
        return true;
    }

    void routes() {
        auto label_route = [this](bool stance) {
            return [this, stance](const httplib::Request& req, httplib::Response& res) {
                json body = parse_body(req, res);
                if (res.status == 400) return;
                std::string topic;
                std::vector<std::string> texts;
                if (!take_texts(body, res, topic, texts)) return;
                auto labels = stance ? backend->classify_stance(texts, topic)
                                     : backend->classify_arguments(texts, topic);
                json out = json::array();
                for (const auto& l : labels)
                    out.push_back({{"label", to_string(l.kind)}, {"score", l.score}});
                res.set_content(json{{"labels", out}}.dump(), "application/json");
            };
        };
        server.Post("/classify_argument", label_route(false));
        server.Post("/classify_stance", label_route(true));

        server.Post("/detect_aspects", [this](const httplib::Request& req, httplib::Response& res) {
            json body = parse_body(req, res);
            if (res.status == 400) return;
            std::string topic;
            std::vector<std::string> texts;
            if (!take_texts(body, res, topic, texts)) return;
            auto per_text = backend->detect_aspect_spans(texts, topic);
            json out = json::array();
            for (const auto& spans : per_text) {
                json lst = json::array();
                for (const auto& s : spans)
                    lst.push_back({{"start", s.start}, {"len", s.len}});
                out.push_back(lst);
            }
            res.set_content(json{{"spans", out}}.dump(), "application/json");
        });

        server.Post("/score_quality", [this](const httplib::Request& req, httplib::Response& res) {
            json body = parse_body(req, res);
            if (res.status == 400) return;
            std::string topic;
            std::vector<std::string> texts;
            if (!take_texts(body, res, topic, texts)) return;
            auto scores = backend->score_quality(texts, topic);
            json out = json::array();
            for (const auto& s : scores) out.push_back(s.value);
            res.set_content(json{{"scores", out}}.dump(), "application/json");
        });

        server.Post("/generate", [this](const httplib::Request& req, httplib::Response& res) {
            json body = parse_body(req, res);
            if (res.status == 400) return;
            GenerationRequest gen;
            gen.control_code = body.value("control_code", "");
            gen.max_tokens = body.value("max_tokens", std::size_t{64});
            gen.seed = body.value("seed", std::uint64_t{0});
            if (gen.control_code.empty() || gen.max_tokens < 1) {
                res.status = 400;
                res.set_content(R"({"error":"invalid generation request"})", "application/json");
                return;
            }
            try {
                std::string text = backend->generate_text(gen);
                res.set_content(json{{"text", text}}.dump(), "application/json");
            } catch (const std::exception& e) {
                res.status = 400;
                res.set_content(json{{"error", e.what()}}.dump(), "application/json");
            }
        });
    }
};

ModelServer::ModelServer(std::shared_ptr<ModelClient> backend)
    : impl_(std::make_unique<Impl>(std::move(backend))) {}

ModelServer::~ModelServer() { stop(); }

bool ModelServer::listen(const std::string& host, int port) {
    return impl_->server.listen(host, port);
}

int ModelServer::start_background(const std::string& host) {
    int port = impl_->server.bind_to_any_port(host);
    if (port <= 0) return -1;
    thread_ = std::thread([this] { impl_->server.listen_after_bind(); });
    impl_->server.wait_until_ready();
    return port;
}

void ModelServer::stop() {
    if (impl_) impl_->server.stop();
    if (thread_.joinable()) thread_.join();
}

} // namespace argforge

#include <doctest.h>

#include <atomic>

#include <httplib.h>
#include <json.hpp>

#include "argforge/clients.hpp"
#include "argforge/errors.hpp"
#include "argforge/server.hpp"

using namespace argforge;
using nlohmann::json;

namespace {

HttpClientOptions options_for(int port) {
    HttpClientOptions opts;
    opts.endpoint = "http://127.0.0.1:" + std::to_string(port);
    opts.timeout_ms = 5000;
    opts.max_retries = 1;
    return opts;
}

// Minimal scripted server for protocol-violation cases.
class ScriptedServer {
public:
    explicit ScriptedServer(std::function<void(const httplib::Request&, httplib::Response&)> fn) {
        server_.Post(".*", [fn = std::move(fn)](const httplib::Request& req,
                                                httplib::Response& res) { fn(req, res); });
        port_ = server_.bind_to_any_port("127.0.0.1");
        thread_ = std::thread([this] { server_.listen_after_bind(); });
        server_.wait_until_ready();
    }
    ~ScriptedServer() {
        server_.stop();
        thread_.join();
    }
    int port() const { return port_; }

private:
    httplib::Server server_;
    std::thread thread_;
    int port_ = 0;
};

} // namespace

TEST_CASE("http client round-trips the baseline through the protocol server") {
    auto backend = std::make_shared<BaselineClient>(Lexicons::load("data/lexicons"));
    ModelServer server(backend);
    int port = server.start_background();
    REQUIRE(port > 0);
    auto client = make_http_client(options_for(port));

    std::vector<std::string> texts = {
        "Nuclear energy should be banned because waste is dangerous.",
        "The plant is near the river.",
        "Nuclear energy is safe and clean.",
    };
    auto direct_args = backend->classify_arguments(texts, "nuclear energy");
    auto http_args = client->classify_arguments(texts, "nuclear energy");
    REQUIRE(http_args.size() == direct_args.size());
    for (std::size_t i = 0; i < texts.size(); ++i) {
        CHECK(http_args[i].kind == direct_args[i].kind);
        CHECK(http_args[i].score == doctest::Approx(direct_args[i].score));
    }

    auto direct_spans = backend->detect_aspect_spans(texts, "nuclear energy");
    auto http_spans = client->detect_aspect_spans(texts, "nuclear energy");
    REQUIRE(http_spans.size() == direct_spans.size());
    for (std::size_t i = 0; i < texts.size(); ++i) {
        REQUIRE(http_spans[i].size() == direct_spans[i].size());
        for (std::size_t j = 0; j < http_spans[i].size(); ++j)
            CHECK(http_spans[i][j] == direct_spans[i][j]);
    }

    auto direct_quality = backend->score_quality(texts, "nuclear energy");
    auto http_quality = client->score_quality(texts, "nuclear energy");
    for (std::size_t i = 0; i < texts.size(); ++i)
        CHECK(http_quality[i].value == doctest::Approx(direct_quality[i].value));

    GenerationRequest req{"nuclear energy CON waste .", 64, 1};
    CHECK(client->generate_text(req) == backend->generate_text(req));

    server.stop();
}

TEST_CASE("batching splits large requests and reassembles in order") {
    auto backend = std::make_shared<BaselineClient>(Lexicons::load("data/lexicons"));
    ModelServer server(backend);
    int port = server.start_background();
    auto opts = options_for(port);
    opts.batch_size = 4;
    auto client = make_http_client(opts);

    std::vector<std::string> texts;
    for (int i = 0; i < 19; ++i)
        texts.push_back("Nuclear energy ranks number " + std::to_string(i) +
                        " because cost matters.");
    auto direct = backend->score_quality(texts, "nuclear energy");
    auto http = client->score_quality(texts, "nuclear energy");
    REQUIRE(http.size() == 19);
    for (std::size_t i = 0; i < texts.size(); ++i)
        CHECK(http[i].value == doctest::Approx(direct[i].value));
    server.stop();
}

TEST_CASE("length mismatch is a malformed response") {
    ScriptedServer server([](const httplib::Request&, httplib::Response& res) {
        res.set_content(R"({"labels":[{"label":"argument","score":0.9}]})", "application/json");
    });
    auto client = make_http_client(options_for(server.port()));
    CHECK_THROWS_AS(client->classify_arguments({"a", "b"}, "t"), MalformedResponseError);
}

TEST_CASE("score outside [0,1] is a malformed response") {
    ScriptedServer server([](const httplib::Request&, httplib::Response& res) {
        res.set_content(R"({"scores":[1.2]})", "application/json");
    });
    auto client = make_http_client(options_for(server.port()));
    CHECK_THROWS_AS(client->score_quality({"a"}, "t"), MalformedResponseError);
}

TEST_CASE("overlapping or out-of-range spans are malformed responses") {
    ScriptedServer overlap([](const httplib::Request&, httplib::Response& res) {
        res.set_content(R"({"spans":[[{"start":0,"len":2},{"start":1,"len":1}]]})",
                        "application/json");
    });
    auto client = make_http_client(options_for(overlap.port()));
    CHECK_THROWS_AS(client->detect_aspect_spans({"a b c"}, "t"), MalformedResponseError);

    ScriptedServer range([](const httplib::Request&, httplib::Response& res) {
        res.set_content(R"({"spans":[[{"start":5,"len":1}]]})", "application/json");
    });
    auto client2 = make_http_client(options_for(range.port()));
    CHECK_THROWS_AS(client2->detect_aspect_spans({"a b c"}, "t"), MalformedResponseError);
}

TEST_CASE("unexpected labels and empty generations are malformed responses") {
    ScriptedServer server([](const httplib::Request& req, httplib::Response& res) {
        if (req.path == "/classify_stance")
            res.set_content(R"({"labels":[{"label":"maybe","score":0.5}]})", "application/json");
        else
            res.set_content(R"({"text":"   "})", "application/json");
    });
    auto client = make_http_client(options_for(server.port()));
    CHECK_THROWS_AS(client->classify_stance({"a"}, "t"), MalformedResponseError);
    CHECK_THROWS_AS(client->generate_text({"topic PRO aspect .", 8, 0}), MalformedResponseError);
}

TEST_CASE("transport failures are retried within budget") {
    std::atomic<int> calls{0};
    ScriptedServer server([&calls](const httplib::Request&, httplib::Response& res) {
        int n = ++calls;
        if (n <= 2) {
            res.status = 503;
            res.set_content("busy", "text/plain");
        } else {
            res.set_content(R"({"scores":[0.5]})", "application/json");
        }
    });
    auto opts = options_for(server.port());
    opts.max_retries = 2;
    auto client = make_http_client(opts);
    auto scores = client->score_quality({"a"}, "t");
    REQUIRE(scores.size() == 1);
    CHECK(scores[0].value == doctest::Approx(0.5));
    CHECK(calls.load() == 3);
}

TEST_CASE("retry budget exhaustion raises a transport error") {
    ScriptedServer server([](const httplib::Request&, httplib::Response& res) {
        res.status = 500;
        res.set_content("down", "text/plain");
    });
    auto opts = options_for(server.port());
    opts.max_retries = 1;
    auto client = make_http_client(opts);
    CHECK_THROWS_AS(client->score_quality({"a"}, "t"), TransportError);
}

TEST_CASE("4xx responses are not retried") {
    std::atomic<int> calls{0};
    ScriptedServer server([&calls](const httplib::Request&, httplib::Response& res) {
        ++calls;
        res.status = 400;
        res.set_content(R"({"error":"bad"})", "application/json");
    });
    auto opts = options_for(server.port());
    opts.max_retries = 3;
    auto client = make_http_client(opts);
    CHECK_THROWS_AS(client->score_quality({"a"}, "t"), MalformedResponseError);
    CHECK(calls.load() == 1);
}

TEST_CASE("endpoint options come from the environment") {
    setenv("ARGFORGE_ENDPOINT", "http://example.test:9", 1);
    setenv("ARGFORGE_TIMEOUT_MS", "1234", 1);
    auto opts = HttpClientOptions::from_env();
    CHECK(opts.endpoint == "http://example.test:9");
    CHECK(opts.timeout_ms == 1234);
    unsetenv("ARGFORGE_ENDPOINT");
    unsetenv("ARGFORGE_TIMEOUT_MS");
}

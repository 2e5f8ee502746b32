#ifndef ARGFORGE_SERVER_HPP
#define ARGFORGE_SERVER_HPP

#include <memory>
#include <string>
#include <thread>

#include "argforge/clients.hpp"

namespace argforge {

// Serves a ModelClient (normally the baselines) over the wire protocol,
// so the client side can be exercised end-to-end and external tooling
// has a reference implementation to test against.
class ModelServer {
public:
    explicit ModelServer(std::shared_ptr<ModelClient> backend);
    ~ModelServer();

    ModelServer(const ModelServer&) = delete;
    ModelServer& operator=(const ModelServer&) = delete;

    // Blocks; serves on the given port until stop() is called.
    bool listen(const std::string& host, int port);

    // Binds an ephemeral port and serves on a background thread.
    int start_background(const std::string& host = "127.0.0.1");
    void stop();

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
    std::thread thread_;
};

} // namespace argforge

#endif

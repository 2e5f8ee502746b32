#ifndef ARGFORGE_ERRORS_HPP
#define ARGFORGE_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace argforge {

// Query syntax error; offset is the byte position in the raw query string.
class SyntaxError : public std::runtime_error {
public:
    SyntaxError(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " at offset " + std::to_string(offset)),
          offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Retryable failure while talking to a model server.
class TransportError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Non-retryable: the server responded but the payload violates the protocol.
class MalformedResponseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class MetricError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Aggregated configuration problems; every violation, not just the first.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(std::vector<std::string> issues)
        : std::runtime_error(join(issues)), issues_(std::move(issues)) {}
    const std::vector<std::string>& issues() const { return issues_; }

private:
    static std::string join(const std::vector<std::string>& v) {
        std::string out = "configuration invalid:";
        for (const auto& s : v) {
            out += "\n  - ";
            out += s;
        }
        return out;
    }
    std::vector<std::string> issues_;
};

class StageError : public std::runtime_error {
public:
    StageError(const std::string& stage, const std::string& what)
        : std::runtime_error("stage '" + stage + "' failed: " + what), stage_(stage) {}
    const std::string& stage() const { return stage_; }

private:
    std::string stage_;
};

} // namespace argforge

#endif

#ifndef ARGFORGE_JSONL_HPP
#define ARGFORGE_JSONL_HPP

#include <filesystem>
#include <fstream>
#include <functional>
#include <string>

#include <json.hpp>

#include "argforge/errors.hpp"

namespace argforge {

// Calls fn(record, ordinal) for every non-empty line. Parse failures are
// reported with the 1-based line ordinal.
inline void for_each_jsonl(const std::filesystem::path& path,
                           const std::function<void(const nlohmann::json&, std::size_t)>& fn) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path.string());
    std::string line;
    std::size_t ordinal = 0;
    while (std::getline(in, line)) {
        ++ordinal;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        nlohmann::json rec;
        try {
            rec = nlohmann::json::parse(line);
        } catch (const nlohmann::json::parse_error& e) {
            throw IoError(path.string() + ": record " + std::to_string(ordinal) +
                          ": " + e.what());
        }
        fn(rec, ordinal);
    }
}

class JsonlWriter {
public:
    explicit JsonlWriter(const std::filesystem::path& path) : out_(path, std::ios::binary) {
        if (!out_) throw IoError("cannot open " + path.string() + " for writing");
    }
    void write(const nlohmann::json& rec) { out_ << rec.dump() << '\n'; }
    void close() { out_.close(); }

private:
    std::ofstream out_;
};

} // namespace argforge

#endif

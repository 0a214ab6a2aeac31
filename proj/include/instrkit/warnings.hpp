#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace instrkit {

// Counter for recoverable anomalies (repaired tags, skipped sentences, ...).
// Keeps the total count and the first few messages for diagnostics.
struct WarningLog {
    std::size_t count = 0;
    std::vector<std::string> messages;

    static constexpr std::size_t kMaxMessages = 32;

    void add(std::string msg) {
        ++count;
        if (messages.size() < kMaxMessages) messages.push_back(std::move(msg));
    }
};

inline void warn(WarningLog* log, std::string msg) {
    if (log) log->add(std::move(msg));
}

}  // namespace instrkit

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace instrkit {

enum class BackendKind { Oracle, NoisyOracle, Remote };

const char* backend_kind_name(BackendKind kind);
BackendKind backend_kind_from_name(const std::string& name);

struct BackendConfig {
    BackendKind kind = BackendKind::Oracle;
    int beam_size = 2;          // forwarded to Remote; unused by mocks
    double drop_prob = 0.0;     // NoisyOracle: per-clause deletion probability
    std::uint64_t seed = 0;     // NoisyOracle
    std::string endpoint;       // Remote: full URL, e.g. http://host:port/generate
    int batch_size = 32;
    int max_inflight = 4;       // concurrent Remote batch requests
    int timeout_ms = 30000;     // Remote connect/read timeout

    // Throws ConfigError on invalid fields (beam_size < 1, Remote without an
    // endpoint, drop_prob outside [0, 1], ...).
    void validate() const;
};

// Text-in/text-out generation seam. Oracle returns the context (gold
// targets) verbatim; NoisyOracle deletes each clause of each gold target
// independently with probability drop_prob under the seed (all clauses
// deleted -> "None.", nothing deleted -> the original string); Remote POSTs
// {"inputs": [...], "beam_size": n} per batch and expects {"outputs": [...]},
// issuing up to max_inflight batches concurrently, order-preserving and
// fail-fast. Outputs align 1:1 with sources. Oracle/NoisyOracle require a
// context of equal length; mismatch or any Remote failure throws a
// structured error naming the failing batch.
std::vector<std::string> generate(const std::vector<std::string>& sources,
                                  const BackendConfig& cfg,
                                  const std::vector<std::string>* context = nullptr);

}  // namespace instrkit

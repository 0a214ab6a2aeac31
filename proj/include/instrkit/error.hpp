#pragma once

#include <stdexcept>
#include <string>

namespace instrkit {

// Base class for all toolkit errors; CLI maps these to nonzero exit codes.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed BIO input; carries the 1-based line number of the offending line.
class BioFormatError : public Error {
public:
    BioFormatError(std::size_t line_no, const std::string& what)
        : Error("line " + std::to_string(line_no) + ": " + what), line_no_(line_no) {}

    std::size_t line_no() const { return line_no_; }

private:
    std::size_t line_no_;
};

// A sentence id that does not resolve in the corpus at hand.
class UnknownSentenceError : public Error {
public:
    explicit UnknownSentenceError(const std::string& id)
        : Error("unknown sentence id '" + id + "'") {}
};

// Remote backend transport/protocol failure; carries the failing batch index.
class BackendError : public Error {
public:
    BackendError(std::size_t batch_index, const std::string& what)
        : Error("batch " + std::to_string(batch_index) + ": " + what),
          batch_index_(batch_index) {}

    explicit BackendError(const std::string& what) : Error(what), batch_index_(0) {}

    std::size_t batch_index() const { return batch_index_; }

private:
    std::size_t batch_index_;
};

// Invalid configuration or invariant violation detected at a module boundary.
class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& msg) : Error(msg) {}
};

}  // namespace instrkit

#ifndef ADLAB_CORE_ERROR_HPP
#define ADLAB_CORE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace adlab {

// Maps to process exit code 2 / ADMINLAB_STATUS_CONFIG at the C boundary.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Non-finite values, diverged training, failed solver. Exit code 3.
class NumericError : public std::runtime_error {
public:
    explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

// Unreadable/unwritable files, malformed CSV. Exit code 2 (usage-level).
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

// Zero-variance input to a correlation primitive. Callers that aggregate
// (corr_summary, training logs) catch this and record a degeneracy flag.
class DegenerateInputError : public NumericError {
public:
    explicit DegenerateInputError(const std::string& msg) : NumericError(msg) {}
};

} // namespace adlab

#endif

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace stefan {

// Input rejected before any numerics ran (bad parameters, bad config, bad
// CLI usage).  Carries the full list of violated requirements so callers can
// report every problem at once.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& msg,
                             std::vector<std::string> issues = {})
        : std::runtime_error(msg), issues_(std::move(issues)) {}

    const std::vector<std::string>& issues() const noexcept { return issues_; }

private:
    std::vector<std::string> issues_;
};

// Root finding failed to converge (iteration budget exhausted, bracketing
// impossible, or the residual stayed above tolerance).
class SolveError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A computed solution failed a verification gate or a guaranteed
// monotonicity/consistency property.
class VerificationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace stefan

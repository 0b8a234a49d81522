#pragma once

#include <stdexcept>
#include <string>

namespace wjcm {

// Truncated series failed: either the requested tolerance was not reached
// within the term budget, or the expansion is outside its convergence domain.
class SeriesError : public std::runtime_error {
public:
    explicit SeriesError(const std::string& msg) : std::runtime_error(msg) {}
};

// Adaptive integration did not converge; carries the last estimate so the
// caller can still inspect how far it got.
class QuadratureError : public std::runtime_error {
public:
    QuadratureError(const std::string& msg, double last_estimate)
        : std::runtime_error(msg), last_estimate_(last_estimate) {}
    double last_estimate() const noexcept { return last_estimate_; }

private:
    double last_estimate_;
};

} // namespace wjcm

#pragma once

#include <stdexcept>
#include <string>

namespace abcdoo {

/// Input that violates a parameter range or file format contract.
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// The model could not be realized for otherwise valid input.
class GenerationError : public std::runtime_error {
public:
    GenerationError(std::string phase, const std::string& what)
        : std::runtime_error(phase + ": " + what), phase_(std::move(phase)) {}

    const std::string& phase() const noexcept { return phase_; }

private:
    std::string phase_;
};

} // namespace abcdoo

#pragma once

#include <stdexcept>
#include <string>

namespace aimd {

// config parse/validation failures; CLI exit code 1
struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// filesystem failures; CLI exit code 3
struct IoError : std::runtime_error {
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace aimd

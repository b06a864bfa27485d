#pragma once

#include <stdexcept>
#include <string>

namespace spherig {

// Exit-code taxonomy used by the CLI: input 1, capacity 2, internal 3.

struct input_error : std::runtime_error {
    explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input files get their own class so callers can tell parse
// problems from semantic ones; both map to exit code 1.
struct parse_error : input_error {
    explicit parse_error(const std::string& msg) : input_error(msg) {}
};

struct precondition_error : input_error {
    explicit precondition_error(const std::string& msg) : input_error(msg) {}
};

struct scope_error : input_error {
    explicit scope_error(const std::string& msg) : input_error(msg) {}
};

struct capacity_error : std::runtime_error {
    explicit capacity_error(const std::string& msg) : std::runtime_error(msg) {}
};

struct internal_error : std::logic_error {
    explicit internal_error(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace spherig

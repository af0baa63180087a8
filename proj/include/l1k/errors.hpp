#pragma once

#include <stdexcept>
#include <string>

namespace l1k {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised by the parsers; `position` is a byte offset into the input text.
struct ParseError : Error {
    ParseError(const std::string& msg, std::size_t position)
        : Error(msg + " (at offset " + std::to_string(position) + ")"),
          position(position) {}
    std::size_t position;
};

// Chain analysis and countermodel construction require a Hintikka formula.
struct NotHintikkaError : Error {
    using Error::Error;
};

// Countermodel extraction was asked for a provable formula.
struct ProvableInputError : Error {
    using Error::Error;
};

// The exhaustive semantic oracle only handles modal depth <= 1.
struct DepthExceededError : Error {
    using Error::Error;
};

// Malformed Kripke model, unknown world, or undeclared variable.
struct ModelError : Error {
    using Error::Error;
};

}  // namespace l1k

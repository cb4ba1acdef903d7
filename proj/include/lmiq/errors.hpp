#pragma once

#include <stdexcept>
#include <string>

namespace lmiq {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Raised when a completion does not contain enough in-range integers.
class ParseFailure : public Error {
public:
    ParseFailure(int found, int expected)
        : Error("parse failure: found " + std::to_string(found) + " of " +
                std::to_string(expected) + " expected in-range answers"),
          found(found),
          expected(expected) {}

    int found;
    int expected;
};

class TransportError : public Error {
public:
    using Error::Error;
};

} // namespace lmiq

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace faclang {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Symbol outside the session alphabet, or operands over different alphabets.
class AlphabetError : public Error {
public:
    using Error::Error;
};

// The empty language where a factorial (hence nonempty) language is required.
class EmptyLanguageError : public Error {
public:
    using Error::Error;
};

class NotFactorialError : public Error {
public:
    using Error::Error;
};

// Determinization exceeded the configured state cap.
class ResourceError : public Error {
public:
    using Error::Error;
};

// An operation was called outside its domain, e.g. a non-minimal decomposition
// handed to the canonical combiner.
class PreconditionError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " at position " + std::to_string(position)), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

}  // namespace faclang

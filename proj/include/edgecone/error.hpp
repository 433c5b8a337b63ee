#pragma once

#include <stdexcept>
#include <string>

namespace edgecone {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// malformed input text, bad lengths, out of range indices
class ParseError : public Error {
public:
    using Error::Error;
};

// input is well formed but violates a mathematical precondition
class PreconditionError : public Error {
public:
    using Error::Error;
};

// two independent computations disagree
class InternalError : public Error {
public:
    using Error::Error;
};

class LimitError : public Error {
public:
    using Error::Error;
};

} // namespace edgecone

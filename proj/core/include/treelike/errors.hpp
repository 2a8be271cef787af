#pragma once

#include <stdexcept>
#include <string>

namespace treelike {

/// Base class for all recoverable errors raised by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input: unparsable files, bad generator specs, invalid arguments.
class InputError : public Error {
public:
    using Error::Error;
};

/// A documented precondition was violated (e.g. a metric operation on a
/// disconnected graph).
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// The requested computation exceeds a configured size or search budget.
class SizeLimitError : public Error {
public:
    using Error::Error;
};

/// A randomized generator exhausted its retry budget.
class GenerationError : public Error {
public:
    using Error::Error;
};

/// A search that is guaranteed to succeed under a structural hypothesis
/// failed, i.e. the hypothesis does not hold for the input.
class CounterexampleError : public Error {
public:
    using Error::Error;
};

} // namespace treelike

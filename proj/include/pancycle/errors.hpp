#pragma once

#include <stdexcept>
#include <string>

namespace pancycle {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class MalformedRecord : public Error {
public:
    using Error::Error;
};

class OrderTooLarge : public Error {
public:
    using Error::Error;
};

class InvalidSets : public Error {
public:
    using Error::Error;
};

class PreconditionViolated : public Error {
public:
    using Error::Error;
};

class HypothesesViolated : public Error {
public:
    using Error::Error;
};

// Raised when neither a longer triangulated cycle of length +1 nor +2 exists.
// Under the [5,3] hypotheses this is either a bug or a counterexample, so the
// message always carries the graph6 text and the hypothesis checks.
class ExtensionFailed : public Error {
public:
    using Error::Error;
};

class CertificateGap : public Error {
public:
    using Error::Error;
};

class InputUnreadable : public Error {
public:
    using Error::Error;
};

class CheckpointMismatch : public Error {
public:
    using Error::Error;
};

}  // namespace pancycle

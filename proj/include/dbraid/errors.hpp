#pragma once

#include <stdexcept>
#include <string>

namespace dbraid {

// Error taxonomy. Everything derives from Error so callers can catch broadly;
// the CLI maps subclasses onto exit codes.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// bad type/rank, malformed word, bad CLI arguments
struct ConfigError : Error {
    using Error::Error;
};

// the word's Demazure product is not the longest element
struct BadDemazure : Error {
    using Error::Error;
};

// a structural invariant failed; signals a bug, never recoverable
struct InternalInconsistency : Error {
    using Error::Error;
};

struct NonIntegral : Error {
    using Error::Error;
};
struct NotMutable : Error {
    using Error::Error;
};
struct NotApplicable : Error {
    using Error::Error;
};
struct AssumptionViolated : Error {
    using Error::Error;
};
struct NotAdmissible : Error {
    using Error::Error;
};
struct NotQuasiAdmissible : Error {
    using Error::Error;
};
struct IncomparableLattices : Error {
    using Error::Error;
};
struct DivisionFailure : Error {
    using Error::Error;
};
struct FactorizationFailure : Error {
    using Error::Error;
};

}  // namespace dbraid

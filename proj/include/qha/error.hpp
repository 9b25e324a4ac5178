#pragma once
#include <stdexcept>
#include <string>

namespace qha {

// Error taxonomy; the CLI maps kinds onto process exit codes.
enum class ErrKind {
    Parse,          // malformed DSL input
    Validation,     // well-formed input violating a precondition (bad family params, ...)
    CapExceeded,    // a completion/truncation cap was hit before stabilizing
    OracleBound,    // algebra too large for the bar-resolution oracle
    OracleMismatch, // pipeline and oracle disagree
    NoSolution,     // a decomposition that must exist could not be found
    NonUnique,      // right decomposition cofactors not unique
    Internal,       // broken invariant (d∘d != 0 and friends) - always a bug
};

class Error : public std::runtime_error {
public:
    Error(ErrKind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
    ErrKind kind;
};

[[noreturn]] inline void fail(ErrKind k, const std::string& msg) { throw Error(k, msg); }

} // namespace qha

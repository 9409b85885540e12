#pragma once

#include <stdexcept>
#include <string>

namespace splitham {

// Input text is not valid graph6 (bad length, byte out of range, nonzero padding).
struct Graph6Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A generator or CLI specification is malformed (probability out of range, bad sizes).
struct InvalidSpec : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An internal invariant that should hold by construction was violated; always a bug.
struct InvariantViolation : std::logic_error {
    using std::logic_error::logic_error;
};

// A cover surgery was requested whose preconditions do not hold.
struct IllegalSurgery : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// An operation's stated hypotheses were breached by the caller.
struct PreconditionViolated : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A structure whose existence is guaranteed under the stated hypotheses could not
// be found by a complete search.  On a hypothesis-satisfying input this is a
// counterexample candidate and must be escalated, never swallowed.  Carries the
// graph6 string of the offending graph for reproduction.
struct ExistenceFailure : std::runtime_error {
    std::string graph6;
    ExistenceFailure(const std::string& what, std::string g6)
        : std::runtime_error(what + " [graph6: " + g6 + "]"), graph6(std::move(g6)) {}
};

// A constructed object failed its own independent check; always a bug or a
// counterexample candidate, escalated with the full state in the message.
struct ConstructionFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Exact search exceeded its node budget; the caller must report INCONCLUSIVE.
struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input order exceeds a hard cap (oracle table size, enumeration range).
struct OrderCapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace splitham

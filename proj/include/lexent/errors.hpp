#pragma once

#include <stdexcept>
#include <string>

namespace lexent {

// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct EmptyWord : Error {
    EmptyWord() : Error("operation requires a nonempty word") {}
};

struct EmptyPeriod : Error {
    EmptyPeriod() : Error("eventually periodic string requires a nonempty period") {}
};

struct AlphabetMismatch : Error {
    explicit AlphabetMismatch(const std::string& msg) : Error(msg) {}
};

struct BadParams : Error {
    explicit BadParams(const std::string& msg) : Error(msg) {}
};

// Orbit evaluation hit a partition breakpoint (up to the configured tolerance).
struct SingularPoint : Error {
    explicit SingularPoint(const std::string& msg) : Error(msg) {}
};

// The orbit entered a breakpoint neighborhood at the given step.
struct SingularOrbit : Error {
    int step;
    explicit SingularOrbit(int step_)
        : Error("orbit enters a breakpoint neighborhood at step " + std::to_string(step_)),
          step(step_) {}
};

// The admissibility inequalities between the bounding strings are violated.
struct ConditionViolation : Error {
    explicit ConditionViolation(const std::string& msg) : Error(msg) {}
};

// A root-bracketing step found endpoints with the same sign.
struct BracketFailure : Error {
    explicit BracketFailure(const std::string& msg) : Error(msg) {}
};

}  // namespace lexent

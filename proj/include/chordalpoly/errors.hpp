#pragma once

#include <stdexcept>
#include <string>

namespace chordalpoly {

// Bad user input: malformed files, out-of-range ids, wrong preconditions.
// The CLI maps these to exit code 2.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public InputError {
public:
    ParseError(const std::string& what, int line)
        : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

class NonChordalInput : public InputError {
public:
    using InputError::InputError;
};

class NotInCone : public InputError {
public:
    using InputError::InputError;
};

class NonIntegralPoint : public InputError {
public:
    using InputError::InputError;
};

// A statement that is a proven theorem for the input class failed at runtime.
// This always indicates a bug and is reported loudly; CLI exit code 3.
class TheoryViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

class StuckWithPositiveGap : public TheoryViolation {
public:
    using TheoryViolation::TheoryViolation;
};

class IntegralityViolation : public TheoryViolation {
public:
    using TheoryViolation::TheoryViolation;
};

}  // namespace chordalpoly

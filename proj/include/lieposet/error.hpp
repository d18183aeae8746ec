#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lieposet {

enum class ErrorKind {
    LabelOrderViolation,
    OutOfRange,
    NotInterior,
    SizeBound,
    HeightBound,
    TooSmall,
    JacobiViolation,
    EvenDimension,
    ShapeMismatch,
    RulePreconditionViolated,
    PolarityMismatch,
    RuleBlockMismatch,
    InvalidSequence,
    NotFrobenius,
    RegularSearchExhausted,
    MorseConditionViolated,
    Disconnected,
    ParseError,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Library-wide exception. The kind is stable and machine readable; the
/// message carries the witness (offending pair, face, step index, ...).
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace lieposet

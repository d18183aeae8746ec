#include "lieposet/error.hpp"

namespace lieposet {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::LabelOrderViolation: return "LabelOrderViolation";
        case ErrorKind::OutOfRange: return "OutOfRange";
        case ErrorKind::NotInterior: return "NotInterior";
        case ErrorKind::SizeBound: return "SizeBound";
        case ErrorKind::HeightBound: return "HeightBound";
        case ErrorKind::TooSmall: return "TooSmall";
        case ErrorKind::JacobiViolation: return "JacobiViolation";
        case ErrorKind::EvenDimension: return "EvenDimension";
        case ErrorKind::ShapeMismatch: return "ShapeMismatch";
        case ErrorKind::RulePreconditionViolated: return "RulePreconditionViolated";
        case ErrorKind::PolarityMismatch: return "PolarityMismatch";
        case ErrorKind::RuleBlockMismatch: return "RuleBlockMismatch";
        case ErrorKind::InvalidSequence: return "InvalidSequence";
        case ErrorKind::NotFrobenius: return "NotFrobenius";
        case ErrorKind::RegularSearchExhausted: return "RegularSearchExhausted";
        case ErrorKind::MorseConditionViolated: return "MorseConditionViolated";
        case ErrorKind::Disconnected: return "Disconnected";
        case ErrorKind::ParseError: return "ParseError";
    }
    return "Unknown";
}

}  // namespace lieposet

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hyperprime {

enum class ErrorKind {
    Parse,
    ArityMismatch,
    EmptyArgument,
    OutOfCarrier,
    InvalidStructure,
    RingInvalid,
    EmptySubset,
    GeneratedNotIdeal,
    ZeroElement,
    NotProper,
    NotSub,
    PhiNotSub,
    PremiseFails,
    NotMultiplication,
    QuotientAxiomFailure,
    RingMismatch,
    NotHom,
    CapExceeded,
};

constexpr std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::Parse: return "parse";
        case ErrorKind::ArityMismatch: return "arity-mismatch";
        case ErrorKind::EmptyArgument: return "empty-argument";
        case ErrorKind::OutOfCarrier: return "out-of-carrier";
        case ErrorKind::InvalidStructure: return "invalid-structure";
        case ErrorKind::RingInvalid: return "ring-invalid";
        case ErrorKind::EmptySubset: return "empty-subset";
        case ErrorKind::GeneratedNotIdeal: return "generated-not-ideal";
        case ErrorKind::ZeroElement: return "zero-element";
        case ErrorKind::NotProper: return "not-proper";
        case ErrorKind::NotSub: return "not-sub";
        case ErrorKind::PhiNotSub: return "phi-not-sub";
        case ErrorKind::PremiseFails: return "premise-fails";
        case ErrorKind::NotMultiplication: return "not-multiplication";
        case ErrorKind::QuotientAxiomFailure: return "quotient-axiom-failure";
        case ErrorKind::RingMismatch: return "ring-mismatch";
        case ErrorKind::NotHom: return "not-hom";
        case ErrorKind::CapExceeded: return "cap-exceeded";
    }
    return "unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace hyperprime

#pragma once

#include <stdexcept>
#include <string>

namespace charzeta {

enum class Errc {
    CompositeP,
    ReducibleModulus,
    DegreeMismatch,
    FieldMismatch,
    NotIrreducible,
    NotCoprime,
    InsufficientDigits,
    ClassNotOpen,
    BudgetExceeded,
    NotPrimeField,
    NonUnitLeading,
    UndeterminedRange,
    CapExceeded,
    SlopeGapTooSmall,
    AllZero,
    SchemaError,
    UsageError,
};

inline const char* errc_name(Errc c) {
    switch (c) {
        case Errc::CompositeP: return "CompositeP";
        case Errc::ReducibleModulus: return "ReducibleModulus";
        case Errc::DegreeMismatch: return "DegreeMismatch";
        case Errc::FieldMismatch: return "FieldMismatch";
        case Errc::NotIrreducible: return "NotIrreducible";
        case Errc::NotCoprime: return "NotCoprime";
        case Errc::InsufficientDigits: return "InsufficientDigits";
        case Errc::ClassNotOpen: return "ClassNotOpen";
        case Errc::BudgetExceeded: return "BudgetExceeded";
        case Errc::NotPrimeField: return "NotPrimeField";
        case Errc::NonUnitLeading: return "NonUnitLeading";
        case Errc::UndeterminedRange: return "UndeterminedRange";
        case Errc::CapExceeded: return "CapExceeded";
        case Errc::SlopeGapTooSmall: return "SlopeGapTooSmall";
        case Errc::AllZero: return "AllZero";
        case Errc::SchemaError: return "SchemaError";
        case Errc::UsageError: return "UsageError";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

} // namespace charzeta

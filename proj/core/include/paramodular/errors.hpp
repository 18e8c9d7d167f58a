#pragma once

#include <stdexcept>
#include <string>

namespace paramodular {

enum class ErrorCode {
    NegativePowerOfNonMonomial,
    NonInvertibleSubstitution,
    UnboundVariable,
    NotSquarefree,
    NotRealQuadratic,
    InconsistentPlaces,
    SplitPrime,
    DeterminantMismatch,
    NonInvertibleEta,
    UndecidableWithSymbolicData,
    NoRowMatched,
    NonTemperedInput,
    MissingLocalData,
    GaloisInvariantInput,
    NumericalInstability,
    BadInput,
};

/// Library-wide exception carrying a machine-checkable code.
class CalcError : public std::runtime_error {
public:
    CalcError(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& what) {
    throw CalcError(code, what);
}

} // namespace paramodular

#pragma once

#include <stdexcept>
#include <string>

namespace sttt {

enum class ErrorKind {
    Syntax,
    DuplicateEdge,
    OutOfRange,
    NegativeWeight,
    InvalidEsd,
    NotRigid,
    PreconditionViolated,
    StepBudgetExceeded,
    PropertyViolated,
    NotPeripheral,
    BadCertificate,
    InvalidTreeShape,
    ArmTooShort,
    TooShort,
    AssertionFailed,
    ContractViolation,
    CertificationFailed,
    Inconclusive,
    Internal,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace sttt

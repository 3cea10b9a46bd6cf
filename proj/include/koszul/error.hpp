#ifndef KOSZUL_ERROR_HPP
#define KOSZUL_ERROR_HPP

#include <stdexcept>
#include <string>

namespace koszul {

enum class ErrorKind {
    InvalidArgument,
    FormatError,
    InvalidSeries,
    EmptyPoly,
    BudgetExceeded,
    StepBudgetExceeded,
    FieldMismatch,
    NoDistinguishedElement,
    InvalidDemushkinParams,
    InternalInconsistency,
    NotInFrattini,
    TruncationTooLow,
    NotAPGroup,
};

const char* error_kind_name(ErrorKind k);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& msg)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + msg), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg) {
    throw Error(kind, msg);
}

}  // namespace koszul

#endif

#include "frobenius/error.hpp"
#include "frobenius/bigint.hpp"

#include <stdexcept>

namespace frob {

std::string_view error_kind_name(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::EmptyList: return "EmptyList";
    case ErrorKind::NonPositive: return "NonPositive";
    case ErrorKind::NotCoprime: return "NotCoprime";
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::WrongArity: return "WrongArity";
    case ErrorKind::UnsupportedK: return "UnsupportedK";
    case ErrorKind::InfiniteSet: return "InfiniteSet";
    case ErrorKind::IncompleteSet: return "IncompleteSet";
    case ErrorKind::BoundTooLarge: return "BoundTooLarge";
    case ErrorKind::Indeterminate: return "Indeterminate";
    case ErrorKind::NotDivisible: return "NotDivisible";
    case ErrorKind::Mismatch: return "Mismatch";
    }
    return "Unknown";
}

int exit_code_for(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::EmptyList:
    case ErrorKind::NonPositive:
    case ErrorKind::NotCoprime:
    case ErrorKind::NotPrime:
    case ErrorKind::WrongArity:
        return 2;
    case ErrorKind::UnsupportedK:
    case ErrorKind::InfiniteSet:
    case ErrorKind::IncompleteSet:
        return 3;
    case ErrorKind::BoundTooLarge:
    case ErrorKind::Indeterminate:
        return 4;
    case ErrorKind::NotDivisible:
    case ErrorKind::Mismatch:
        return 1;
    }
    return 1;
}

Error::Error(ErrorKind kind, const std::string& detail)
    : std::runtime_error(std::string(error_kind_name(kind)) + "(" + detail + ")"),
      kind_(kind),
      detail_(detail) {}

Int parse_int(const std::string& text) {
    Int r;
    if (text.empty() || r.set_str(text, 10) != 0)
        throw std::invalid_argument("not a decimal integer: '" + text + "'");
    return r;
}

} // namespace frob

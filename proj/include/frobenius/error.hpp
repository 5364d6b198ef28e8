#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace frob {

enum class ErrorKind {
    // input validation
    EmptyList,
    NonPositive,
    NotCoprime,
    NotPrime,
    WrongArity,
    // unsupported request
    UnsupportedK,
    InfiniteSet,
    IncompleteSet,
    // resource guard
    BoundTooLarge,
    Indeterminate,
    // identity violated somewhere in the arithmetic
    NotDivisible,
    Mismatch,
};

std::string_view error_kind_name(ErrorKind kind) noexcept;

/// Process exit status for a failure of the given kind:
/// 1 mathematical mismatch, 2 input validation, 3 unsupported request, 4 resource guard.
int exit_code_for(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& detail);

    ErrorKind kind() const noexcept { return kind_; }
    const std::string& detail() const noexcept { return detail_; }

private:
    ErrorKind kind_;
    std::string detail_;
};

} // namespace frob

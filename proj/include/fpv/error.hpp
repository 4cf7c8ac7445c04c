#pragma once

#include <stdexcept>
#include <string>

namespace fpv {

enum class ErrorCode {
    invalid_argument,
    parse,
    modulus_mismatch,
    dimension_mismatch,
    division_by_zero,
    budget_exceeded,
    not_self_dual,
    no_such_code,
    internal,
};

/// Every failure raised by the library carries one of the codes above so the
/// C layer can map it onto a status value without string matching.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace fpv

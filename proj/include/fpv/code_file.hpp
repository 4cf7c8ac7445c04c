#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>

#include "fpv/matrix.hpp"

namespace fpv {

enum class RingKind { fp, fpv };

/// Line-oriented matrix file:
///
///     ring <fp|fpv> p <prime> n <length>
///     <row tokens>...
///
/// '#' starts a comment, blank lines are ignored.
struct CodeFile {
    RingKind ring;
    std::variant<FpMatrix, RMatrix> matrix;

    PrimeModulus modulus() const;
    std::size_t length() const;
};

/// Throws Error(parse) with a "line L, column C:" prefix.
CodeFile parse_code_file(std::string_view text);

std::string render_code_file(const FpMatrix& m);
std::string render_code_file(const RMatrix& m);
std::string render_code_file(const CodeFile& file);

}  // namespace fpv

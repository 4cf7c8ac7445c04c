#include "fpv/ring.hpp"

#include <charconv>

namespace fpv {

RScalar::RScalar(std::uint32_t a, std::uint32_t b, PrimeModulus mod) : a_(a), b_(b), mod_(mod) {
    if (a >= mod.value() || b >= mod.value())
        throw Error(ErrorCode::invalid_argument, "ring element components out of range for p = " +
                                                     std::to_string(mod.value()));
}

RScalar::RScalar(Fp a, Fp b) : RScalar(a.value(), b.value(), a.modulus()) {
    require_same_modulus(a.modulus(), b.modulus());
}

RScalar RScalar::inv() const {
    if (!is_unit()) throw Error(ErrorCode::division_by_zero, "ring element " + to_token(*this) + " is not a unit");
    // Invert each Gray component and reassemble.
    return crt_assemble(bar().inv(), hat().inv());
}

RScalar RScalar::operator+(const RScalar& rhs) const {
    require_same_modulus(mod_, rhs.mod_);
    return {mod_.add(a_, rhs.a_), mod_.add(b_, rhs.b_), mod_};
}

RScalar RScalar::operator-(const RScalar& rhs) const {
    require_same_modulus(mod_, rhs.mod_);
    return {mod_.sub(a_, rhs.a_), mod_.sub(b_, rhs.b_), mod_};
}

RScalar RScalar::operator*(const RScalar& rhs) const {
    require_same_modulus(mod_, rhs.mod_);
    // (a1 + v b1)(a2 + v b2) = a1 a2 + v (a1 b2 + a2 b1 + b1 b2)
    const std::uint32_t a = mod_.mul(a_, rhs.a_);
    const std::uint32_t b = mod_.add(mod_.add(mod_.mul(a_, rhs.b_), mod_.mul(rhs.a_, b_)), mod_.mul(b_, rhs.b_));
    return {a, b, mod_};
}

RScalar crt_assemble(Fp x_bar, Fp x_hat) {
    require_same_modulus(x_bar.modulus(), x_hat.modulus());
    return crt_assemble(x_bar.value(), x_hat.value(), x_bar.modulus());
}

std::string to_token(const RScalar& x) { return std::to_string(x.a()) + ":" + std::to_string(x.b()); }

namespace {

[[noreturn]] void bad_token(std::string_view token, const std::string& why) {
    throw Error(ErrorCode::parse, "bad token '" + std::string(token) + "': " + why);
}

std::uint32_t parse_integer(std::string_view whole, std::string_view digits, PrimeModulus mod) {
    bool negative = false;
    if (!digits.empty() && digits.front() == '-') {
        negative = true;
        digits.remove_prefix(1);
    }
    if (digits.empty()) bad_token(whole, "expected an integer");
    std::uint64_t value = 0;
    const auto* end = digits.data() + digits.size();
    auto [ptr, ec] = std::from_chars(digits.data(), end, value);
    if (ec != std::errc{} || ptr != end) bad_token(whole, "expected an integer");
    if (negative) return mod.reduce(-static_cast<std::int64_t>(value % mod.value()));
    if (value >= mod.value())
        bad_token(whole, "residue " + std::to_string(value) + " out of range [0, " +
                             std::to_string(mod.value() - 1) + "]");
    return static_cast<std::uint32_t>(value);
}

}  // namespace

std::uint32_t parse_residue(std::string_view token, PrimeModulus mod) { return parse_integer(token, token, mod); }

RScalar parse_rscalar(std::string_view token, PrimeModulus mod) {
    if (token.empty()) bad_token(token, "empty");
    if (const auto colon = token.find(':'); colon != std::string_view::npos) {
        const auto a = parse_integer(token, token.substr(0, colon), mod);
        const auto b = parse_integer(token, token.substr(colon + 1), mod);
        return {a, b, mod};
    }
    // Pretty forms: a, v, bv, a+v, a+bv.
    std::string_view a_part, v_part;
    if (token.back() != 'v') {
        a_part = token;
    } else if (const auto plus = token.find('+'); plus != std::string_view::npos) {
        a_part = token.substr(0, plus);
        v_part = token.substr(plus + 1);
    } else {
        v_part = token;
    }
    std::uint32_t a = 0, b = 0;
    if (!a_part.empty() || token.back() != 'v') a = parse_integer(token, a_part, mod);
    if (!v_part.empty()) {
        const auto coeff = v_part.substr(0, v_part.size() - 1);
        b = coeff.empty() ? 1 % mod.value() : parse_integer(token, coeff, mod);
    }
    return {a, b, mod};
}

}  // namespace fpv

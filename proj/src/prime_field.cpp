#include "fpv/prime_field.hpp"

namespace fpv {

bool is_prime(std::uint32_t n) noexcept {
    if (n < 2) return false;
    for (std::uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

PrimeModulus::PrimeModulus(std::uint32_t p) : p_(p) {
    if (p >= max_value) throw Error(ErrorCode::invalid_argument, "modulus " + std::to_string(p) + " exceeds 2^16");
    if (!is_prime(p)) throw Error(ErrorCode::invalid_argument, "modulus " + std::to_string(p) + " is not prime");
}

std::uint32_t PrimeModulus::pow(std::uint32_t x, std::uint64_t e) const noexcept {
    std::uint32_t result = 1 % p_;
    while (e > 0) {
        if (e & 1) result = mul(result, x);
        x = mul(x, x);
        e >>= 1;
    }
    return result;
}

std::uint32_t PrimeModulus::inv(std::uint32_t x) const {
    if (x == 0) throw Error(ErrorCode::division_by_zero, "inverse of zero in F_" + std::to_string(p_));
    // Extended Euclid on (x, p).
    std::int64_t r0 = p_, r1 = x, t0 = 0, t1 = 1;
    while (r1 != 0) {
        const std::int64_t q = r0 / r1;
        std::int64_t tmp = r0 - q * r1;
        r0 = r1;
        r1 = tmp;
        tmp = t0 - q * t1;
        t0 = t1;
        t1 = tmp;
    }
    return reduce(t0);
}

void require_same_modulus(PrimeModulus a, PrimeModulus b) {
    if (a != b)
        throw Error(ErrorCode::modulus_mismatch,
                    "operands over F_" + std::to_string(a.value()) + " and F_" + std::to_string(b.value()));
}

Fp::Fp(std::uint32_t value, PrimeModulus mod) : value_(value), mod_(mod) {
    if (value >= mod.value())
        throw Error(ErrorCode::invalid_argument,
                    "residue " + std::to_string(value) + " out of range for F_" + std::to_string(mod.value()));
}

Fp Fp::operator+(Fp rhs) const {
    require_same_modulus(mod_, rhs.mod_);
    return Fp(mod_.add(value_, rhs.value_), mod_);
}

Fp Fp::operator-(Fp rhs) const {
    require_same_modulus(mod_, rhs.mod_);
    return Fp(mod_.sub(value_, rhs.value_), mod_);
}

Fp Fp::operator*(Fp rhs) const {
    require_same_modulus(mod_, rhs.mod_);
    return Fp(mod_.mul(value_, rhs.value_), mod_);
}

Fp Fp::inv() const { return Fp(mod_.inv(value_), mod_); }

std::optional<Fp> sqrt_of_minus_one(PrimeModulus mod) {
    const std::uint32_t target = mod.neg(1);
    for (std::uint32_t c = 1; c < mod.value(); ++c)
        if (mod.mul(c, c) == target) return Fp(c, mod);
    return std::nullopt;
}

std::string to_string(Fp x) { return std::to_string(x.value()); }

}  // namespace fpv

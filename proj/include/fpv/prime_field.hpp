#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "fpv/error.hpp"

namespace fpv {

bool is_prime(std::uint32_t n) noexcept;

/// A prime p < 2^16. Residues are plain std::uint32_t values in [0, p); the
/// helpers below assume their arguments are already reduced.
class PrimeModulus {
public:
    static constexpr std::uint32_t max_value = 1u << 16;

    explicit PrimeModulus(std::uint32_t p);

    std::uint32_t value() const noexcept { return p_; }

    std::uint32_t reduce(std::int64_t x) const noexcept {
        const auto p = static_cast<std::int64_t>(p_);
        auto r = x % p;
        return static_cast<std::uint32_t>(r < 0 ? r + p : r);
    }
    std::uint32_t add(std::uint32_t x, std::uint32_t y) const noexcept {
        const std::uint32_t s = x + y;
        return s >= p_ ? s - p_ : s;
    }
    std::uint32_t sub(std::uint32_t x, std::uint32_t y) const noexcept { return x >= y ? x - y : x + p_ - y; }
    std::uint32_t neg(std::uint32_t x) const noexcept { return x == 0 ? 0 : p_ - x; }
    std::uint32_t mul(std::uint32_t x, std::uint32_t y) const noexcept { return (x * y) % p_; }
    std::uint32_t pow(std::uint32_t x, std::uint64_t e) const noexcept;
    /// Throws Error(division_by_zero) for x == 0.
    std::uint32_t inv(std::uint32_t x) const;

    friend bool operator==(PrimeModulus, PrimeModulus) = default;

private:
    std::uint32_t p_;
};

/// An element of F_p. The modulus travels with the value and every binary
/// operation rejects operands from different fields.
class Fp {
public:
    /// value must already lie in [0, p).
    Fp(std::uint32_t value, PrimeModulus mod);
    static Fp from_integer(std::int64_t x, PrimeModulus mod) { return Fp(mod.reduce(x), mod); }

    std::uint32_t value() const noexcept { return value_; }
    PrimeModulus modulus() const noexcept { return mod_; }
    bool is_zero() const noexcept { return value_ == 0; }

    Fp operator+(Fp rhs) const;
    Fp operator-(Fp rhs) const;
    Fp operator*(Fp rhs) const;
    Fp operator-() const { return Fp(mod_.neg(value_), mod_); }
    Fp inv() const;

    friend bool operator==(Fp, Fp) = default;

private:
    std::uint32_t value_;
    PrimeModulus mod_;
};

void require_same_modulus(PrimeModulus a, PrimeModulus b);

/// Smallest c in [1, p) with c^2 = -1, or nothing when p = 3 (mod 4).
std::optional<Fp> sqrt_of_minus_one(PrimeModulus mod);

std::string to_string(Fp x);

}  // namespace fpv

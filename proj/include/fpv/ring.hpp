#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>

#include "fpv/prime_field.hpp"

namespace fpv {

/// An element a + v*b of R = F_p + vF_p with v^2 = v, stored as the pair (a, b).
class RScalar {
public:
    RScalar(std::uint32_t a, std::uint32_t b, PrimeModulus mod);
    RScalar(Fp a, Fp b);

    static RScalar zero(PrimeModulus mod) { return {0, 0, mod}; }
    static RScalar one(PrimeModulus mod) { return {1, 0, mod}; }
    static RScalar v(PrimeModulus mod) { return {0, 1, mod}; }
    static RScalar one_minus_v(PrimeModulus mod) { return {1, mod.neg(1), mod}; }
    static RScalar from_fp(Fp x) { return {x.value(), 0, x.modulus()}; }

    std::uint32_t a() const noexcept { return a_; }
    std::uint32_t b() const noexcept { return b_; }
    PrimeModulus modulus() const noexcept { return mod_; }
    bool is_zero() const noexcept { return a_ == 0 && b_ == 0; }

    /// Reduction modulo <v>: a + vb -> a.
    Fp bar() const { return Fp(a_, mod_); }
    /// Reduction modulo <1-v>: a + vb -> a + b.
    Fp hat() const { return Fp(mod_.add(a_, b_), mod_); }
    /// The ring isomorphism R -> F_p x F_p, c -> (a, a + b).
    std::pair<Fp, Fp> gray() const { return {bar(), hat()}; }

    bool is_unit() const noexcept { return a_ != 0 && mod_.add(a_, b_) != 0; }
    /// Throws Error(division_by_zero) for zero divisors.
    RScalar inv() const;

    RScalar operator+(const RScalar& rhs) const;
    RScalar operator-(const RScalar& rhs) const;
    RScalar operator*(const RScalar& rhs) const;
    RScalar operator-() const { return {mod_.neg(a_), mod_.neg(b_), mod_}; }

    friend bool operator==(const RScalar&, const RScalar&) = default;

private:
    std::uint32_t a_;
    std::uint32_t b_;
    PrimeModulus mod_;
};

/// The unique r with bar(r) = x_bar and hat(r) = x_hat, i.e. v*x_hat + (1-v)*x_bar.
RScalar crt_assemble(Fp x_bar, Fp x_hat);

/// Raw-residue version of crt_assemble used by the matrix code.
inline RScalar crt_assemble(std::uint32_t x_bar, std::uint32_t x_hat, PrimeModulus mod) {
    return {x_bar, mod.sub(x_hat, x_bar), mod};
}

/// Canonical `a:b` token.
std::string to_token(const RScalar& x);

/// Accepts `a:b` and the aliases `a`, `v`, `bv`, `a+v`, `a+bv`. Integers may
/// carry a leading '-' and are then reduced; non-negative integers must lie
/// in [0, p). Throws Error(parse) on anything else.
RScalar parse_rscalar(std::string_view token, PrimeModulus mod);

/// Decimal residue token for F_p entries, with the same sign rule as above.
std::uint32_t parse_residue(std::string_view token, PrimeModulus mod);

}  // namespace fpv

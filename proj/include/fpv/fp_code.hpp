#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "fpv/matrix.hpp"

namespace fpv {

inline constexpr std::uint64_t default_codeword_budget = 10'000'000;
inline constexpr std::uint64_t default_subspace_budget = 1'000'000;

/// A linear code over F_p stored as its canonical RREF basis, so two codes
/// are equal exactly when their bases are identical.
class FpLinearCode {
public:
    static FpLinearCode from_generator(const FpMatrix& generator);
    static FpLinearCode zero(PrimeModulus mod, std::size_t n);
    static FpLinearCode full(PrimeModulus mod, std::size_t n);

    std::size_t length() const noexcept { return basis_.cols(); }
    std::size_t dimension() const noexcept { return basis_.rows(); }
    PrimeModulus modulus() const noexcept { return basis_.modulus(); }
    const FpMatrix& basis() const noexcept { return basis_; }
    const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

    bool contains(std::span<const std::uint32_t> word) const;

    friend bool operator==(const FpLinearCode& x, const FpLinearCode& y) { return x.basis_ == y.basis_; }

private:
    FpLinearCode(FpMatrix basis, std::vector<std::size_t> pivots)
        : basis_(std::move(basis)), pivots_(std::move(pivots)) {}

    FpMatrix basis_;
    std::vector<std::size_t> pivots_;
};

FpLinearCode dual(const FpLinearCode& code);
bool is_self_orthogonal(const FpLinearCode& code);
bool is_self_dual(const FpLinearCode& code);

/// p^e, saturating at UINT64_MAX.
std::uint64_t saturating_pow(std::uint64_t p, std::uint64_t e) noexcept;

using WordVisitor = std::function<void(std::span<const std::uint32_t>)>;

/// Visits all p^dim codewords, ordered lexicographically by coefficient
/// vector (first basis row most significant). Refuses with
/// Error(budget_exceeded) when p^dim > budget.
void for_each_codeword(const FpLinearCode& code, const WordVisitor& visit,
                       std::uint64_t budget = default_codeword_budget);
std::vector<std::vector<std::uint32_t>> codewords(const FpLinearCode& code,
                                                  std::uint64_t budget = default_codeword_budget);

/// A concrete self-dual code of length n built from 2- or 4-coordinate
/// blocks. Throws Error(no_such_code) when none exists.
FpLinearCode seed_self_dual(PrimeModulus mod, std::size_t n);

/// Number of k-dimensional subspaces of F_p^n, saturating.
std::uint64_t gaussian_binomial(std::uint32_t p, std::size_t n, std::size_t k) noexcept;

/// Visits every k-dimensional subspace of F_p^n exactly once, as an RREF
/// basis, walking pivot profiles in lexicographic order.
void for_each_subspace(PrimeModulus mod, std::size_t n, std::size_t k,
                       const std::function<void(const FpMatrix&)>& visit,
                       std::uint64_t budget = default_subspace_budget);

/// All subspaces of F_p^n of every dimension, ordered by dimension.
std::vector<FpLinearCode> all_subspaces(PrimeModulus mod, std::size_t n,
                                        std::uint64_t budget = default_subspace_budget);

/// Every self-dual code of length n over F_p, in enumeration order.
std::vector<FpLinearCode> census_self_dual(PrimeModulus mod, std::size_t n,
                                           std::uint64_t budget = default_subspace_budget);

}  // namespace fpv

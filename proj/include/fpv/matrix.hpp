#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "fpv/prime_field.hpp"
#include "fpv/ring.hpp"

namespace fpv {

/// A bijection on {0, ..., n-1}. Applying it to a matrix moves column
/// images[j] of the input to column j of the output.
class Permutation {
public:
    explicit Permutation(std::vector<std::size_t> images);
    static Permutation identity(std::size_t n);

    std::size_t size() const noexcept { return images_.size(); }
    std::size_t operator[](std::size_t j) const { return images_.at(j); }
    const std::vector<std::size_t>& images() const noexcept { return images_; }
    Permutation inverse() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    std::vector<std::size_t> images_;
};

/// Dense row-major matrix over F_p holding reduced residues.
class FpMatrix {
public:
    FpMatrix(PrimeModulus mod, std::size_t rows, std::size_t cols);
    /// Signed entries are reduced mod p; ragged input is rejected.
    static FpMatrix from_rows(PrimeModulus mod, std::size_t cols,
                              const std::vector<std::vector<std::int64_t>>& rows);
    static FpMatrix from_rows(PrimeModulus mod, std::initializer_list<std::initializer_list<std::int64_t>> rows);
    static FpMatrix identity(PrimeModulus mod, std::size_t k);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    PrimeModulus modulus() const noexcept { return mod_; }
    bool is_zero() const noexcept;

    std::uint32_t operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    Fp at(std::size_t i, std::size_t j) const { return Fp(data_.at(i * cols_ + j), mod_); }
    void set(std::size_t i, std::size_t j, std::uint32_t value);
    void set(std::size_t i, std::size_t j, Fp value);

    std::span<const std::uint32_t> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
    /// Mutable row view; callers keep entries reduced.
    std::span<std::uint32_t> row_mut(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
    void append_row(std::span<const std::uint32_t> row);

    FpMatrix select_rows(std::size_t first, std::size_t count) const;
    FpMatrix select_cols(std::span<const std::size_t> cols) const;

    friend bool operator==(const FpMatrix&, const FpMatrix&) = default;

private:
    PrimeModulus mod_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<std::uint32_t> data_;
};

/// Dense row-major matrix over R = F_p + vF_p.
class RMatrix {
public:
    RMatrix(PrimeModulus mod, std::size_t rows, std::size_t cols);
    /// Entry (i, j) is crt_assemble(bar(i, j), hat(i, j)).
    static RMatrix from_components(const FpMatrix& bar, const FpMatrix& hat);
    /// Entry (i, j) is a(i, j) + v*b(i, j).
    static RMatrix from_ab(const FpMatrix& a, const FpMatrix& b);
    static RMatrix identity(PrimeModulus mod, std::size_t k);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    PrimeModulus modulus() const noexcept { return mod_; }
    bool is_zero() const noexcept;

    const RScalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    const RScalar& at(std::size_t i, std::size_t j) const { return data_.at(i * cols_ + j); }
    void set(std::size_t i, std::size_t j, const RScalar& value);

    std::span<const RScalar> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
    void append_row(std::span<const RScalar> row);

    friend bool operator==(const RMatrix&, const RMatrix&) = default;

private:
    PrimeModulus mod_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<RScalar> data_;
};

struct RrefResult {
    FpMatrix basis;  ///< nonzero rows only
    std::size_t rank;
    std::vector<std::size_t> pivots;
};

/// Reduced row echelon form: leftmost pivot column, topmost nonzero entry,
/// normalised to 1 and cleared above and below. Zero rows are dropped.
RrefResult rref(const FpMatrix& m);

/// Rows spanning {x : m x^T = 0}, in RREF, cols - rank of them.
FpMatrix kernel_basis(const FpMatrix& m);

FpMatrix matmul(const FpMatrix& a, const FpMatrix& b);
RMatrix matmul(const RMatrix& a, const RMatrix& b);
FpMatrix transpose(const FpMatrix& m);
RMatrix transpose(const RMatrix& m);

FpMatrix vstack(const FpMatrix& top, const FpMatrix& bottom);
FpMatrix hstack(const FpMatrix& left, const FpMatrix& right);

FpMatrix apply_permutation(const FpMatrix& m, const Permutation& perm);
RMatrix apply_permutation(const RMatrix& m, const Permutation& perm);

enum class Projection { bar, hat };

FpMatrix project_matrix(const RMatrix& m, Projection which);

/// Euclidean inner product over F_p.
std::uint32_t dot(PrimeModulus mod, std::span<const std::uint32_t> x, std::span<const std::uint32_t> y);
RScalar dot(PrimeModulus mod, std::span<const RScalar> x, std::span<const RScalar> y);

}  // namespace fpv

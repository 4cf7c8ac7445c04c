#include "fpv/matrix.hpp"

#include <algorithm>
#include <string>

namespace fpv {

namespace {

[[noreturn]] void dimension_error(const std::string& what) { throw Error(ErrorCode::dimension_mismatch, what); }

}  // namespace

// ---------------------------------------------------------------- Permutation

Permutation::Permutation(std::vector<std::size_t> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (auto j : images_) {
        if (j >= images_.size() || seen[j]) throw Error(ErrorCode::invalid_argument, "not a permutation");
        seen[j] = true;
    }
}

Permutation Permutation::identity(std::size_t n) {
    std::vector<std::size_t> images(n);
    for (std::size_t j = 0; j < n; ++j) images[j] = j;
    return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
    std::vector<std::size_t> inv(images_.size());
    for (std::size_t j = 0; j < images_.size(); ++j) inv[images_[j]] = j;
    return Permutation(std::move(inv));
}

// ------------------------------------------------------------------- FpMatrix

FpMatrix::FpMatrix(PrimeModulus mod, std::size_t rows, std::size_t cols)
    : mod_(mod), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

FpMatrix FpMatrix::from_rows(PrimeModulus mod, std::size_t cols, const std::vector<std::vector<std::int64_t>>& rows) {
    FpMatrix m(mod, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols)
            dimension_error("row " + std::to_string(i) + " has " + std::to_string(rows[i].size()) +
                            " entries, expected " + std::to_string(cols));
        for (std::size_t j = 0; j < cols; ++j) m.data_[i * cols + j] = mod.reduce(rows[i][j]);
    }
    return m;
}

FpMatrix FpMatrix::from_rows(PrimeModulus mod, std::initializer_list<std::initializer_list<std::int64_t>> rows) {
    std::vector<std::vector<std::int64_t>> copy;
    for (const auto& r : rows) copy.emplace_back(r);
    const std::size_t cols = copy.empty() ? 0 : copy.front().size();
    return from_rows(mod, cols, copy);
}

FpMatrix FpMatrix::identity(PrimeModulus mod, std::size_t k) {
    FpMatrix m(mod, k, k);
    for (std::size_t i = 0; i < k; ++i) m.data_[i * k + i] = 1 % mod.value();
    return m;
}

bool FpMatrix::is_zero() const noexcept {
    return std::all_of(data_.begin(), data_.end(), [](auto x) { return x == 0; });
}

void FpMatrix::set(std::size_t i, std::size_t j, std::uint32_t value) {
    if (value >= mod_.value()) throw Error(ErrorCode::invalid_argument, "residue out of range");
    data_.at(i * cols_ + j) = value;
}

void FpMatrix::set(std::size_t i, std::size_t j, Fp value) {
    require_same_modulus(mod_, value.modulus());
    data_.at(i * cols_ + j) = value.value();
}

void FpMatrix::append_row(std::span<const std::uint32_t> row) {
    if (row.size() != cols_) dimension_error("appended row has wrong length");
    data_.insert(data_.end(), row.begin(), row.end());
    ++rows_;
}

FpMatrix FpMatrix::select_rows(std::size_t first, std::size_t count) const {
    if (first + count > rows_) dimension_error("row range out of bounds");
    FpMatrix out(mod_, count, cols_);
    std::copy(data_.begin() + static_cast<std::ptrdiff_t>(first * cols_),
              data_.begin() + static_cast<std::ptrdiff_t>((first + count) * cols_), out.data_.begin());
    return out;
}

FpMatrix FpMatrix::select_cols(std::span<const std::size_t> cols) const {
    FpMatrix out(mod_, rows_, cols.size());
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) out.data_[i * cols.size() + j] = data_[i * cols_ + cols[j]];
    return out;
}

// -------------------------------------------------------------------- RMatrix

RMatrix::RMatrix(PrimeModulus mod, std::size_t rows, std::size_t cols)
    : mod_(mod), rows_(rows), cols_(cols), data_(rows * cols, RScalar::zero(mod)) {}

RMatrix RMatrix::from_components(const FpMatrix& bar, const FpMatrix& hat) {
    require_same_modulus(bar.modulus(), hat.modulus());
    if (bar.rows() != hat.rows() || bar.cols() != hat.cols()) dimension_error("component shapes differ");
    RMatrix m(bar.modulus(), bar.rows(), bar.cols());
    for (std::size_t i = 0; i < m.rows_; ++i)
        for (std::size_t j = 0; j < m.cols_; ++j) m.data_[i * m.cols_ + j] = crt_assemble(bar(i, j), hat(i, j), m.mod_);
    return m;
}

RMatrix RMatrix::from_ab(const FpMatrix& a, const FpMatrix& b) {
    require_same_modulus(a.modulus(), b.modulus());
    if (a.rows() != b.rows() || a.cols() != b.cols()) dimension_error("component shapes differ");
    RMatrix m(a.modulus(), a.rows(), a.cols());
    for (std::size_t i = 0; i < m.rows_; ++i)
        for (std::size_t j = 0; j < m.cols_; ++j) m.data_[i * m.cols_ + j] = RScalar(a(i, j), b(i, j), m.mod_);
    return m;
}

RMatrix RMatrix::identity(PrimeModulus mod, std::size_t k) {
    RMatrix m(mod, k, k);
    for (std::size_t i = 0; i < k; ++i) m.data_[i * k + i] = RScalar::one(mod);
    return m;
}

bool RMatrix::is_zero() const noexcept {
    return std::all_of(data_.begin(), data_.end(), [](const RScalar& x) { return x.is_zero(); });
}

void RMatrix::set(std::size_t i, std::size_t j, const RScalar& value) {
    require_same_modulus(mod_, value.modulus());
    data_.at(i * cols_ + j) = value;
}

void RMatrix::append_row(std::span<const RScalar> row) {
    if (row.size() != cols_) dimension_error("appended row has wrong length");
    for (const auto& x : row) require_same_modulus(mod_, x.modulus());
    data_.insert(data_.end(), row.begin(), row.end());
    ++rows_;
}

// ------------------------------------------------------------- linear algebra

RrefResult rref(const FpMatrix& m) {
    const auto mod = m.modulus();
    FpMatrix work = m;
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < work.cols() && r < work.rows(); ++c) {
        std::size_t pivot_row = r;
        while (pivot_row < work.rows() && work(pivot_row, c) == 0) ++pivot_row;
        if (pivot_row == work.rows()) continue;
        if (pivot_row != r) {
            auto a = work.row_mut(pivot_row);
            auto b = work.row_mut(r);
            std::swap_ranges(a.begin(), a.end(), b.begin());
        }
        auto prow = work.row_mut(r);
        const auto scale = mod.inv(prow[c]);
        for (auto& x : prow) x = mod.mul(x, scale);
        for (std::size_t i = 0; i < work.rows(); ++i) {
            if (i == r || work(i, c) == 0) continue;
            auto row = work.row_mut(i);
            const auto f = row[c];
            for (std::size_t j = c; j < work.cols(); ++j) row[j] = mod.sub(row[j], mod.mul(f, prow[j]));
        }
        pivots.push_back(c);
        ++r;
    }
    return {work.select_rows(0, r), r, std::move(pivots)};
}

FpMatrix kernel_basis(const FpMatrix& m) {
    const auto mod = m.modulus();
    const auto reduced = rref(m);
    const std::size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (auto c : reduced.pivots) is_pivot[c] = true;

    // One basis vector per free column f: x_f = 1, x_pivot(i) = -R(i, f).
    FpMatrix basis(mod, 0, n);
    std::vector<std::uint32_t> x(n);
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        std::fill(x.begin(), x.end(), 0);
        x[f] = 1 % mod.value();
        for (std::size_t i = 0; i < reduced.rank; ++i) x[reduced.pivots[i]] = mod.neg(reduced.basis(i, f));
        basis.append_row(x);
    }
    return rref(basis).basis;
}

FpMatrix matmul(const FpMatrix& a, const FpMatrix& b) {
    require_same_modulus(a.modulus(), b.modulus());
    if (a.cols() != b.rows())
        dimension_error("cannot multiply " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " by " +
                        std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
    const auto mod = a.modulus();
    FpMatrix out(mod, a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) {
            std::uint64_t acc = 0;
            for (std::size_t k = 0; k < a.cols(); ++k) acc += static_cast<std::uint64_t>(a(i, k)) * b(k, j);
            out.set(i, j, static_cast<std::uint32_t>(acc % mod.value()));
        }
    return out;
}

RMatrix matmul(const RMatrix& a, const RMatrix& b) {
    require_same_modulus(a.modulus(), b.modulus());
    if (a.cols() != b.rows())
        dimension_error("cannot multiply " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " by " +
                        std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
    RMatrix out(a.modulus(), a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) {
            auto acc = RScalar::zero(a.modulus());
            for (std::size_t k = 0; k < a.cols(); ++k) acc = acc + a(i, k) * b(k, j);
            out.set(i, j, acc);
        }
    return out;
}

FpMatrix transpose(const FpMatrix& m) {
    FpMatrix out(m.modulus(), m.cols(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out.set(j, i, m(i, j));
    return out;
}

RMatrix transpose(const RMatrix& m) {
    RMatrix out(m.modulus(), m.cols(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out.set(j, i, m(i, j));
    return out;
}

FpMatrix vstack(const FpMatrix& top, const FpMatrix& bottom) {
    require_same_modulus(top.modulus(), bottom.modulus());
    if (top.cols() != bottom.cols()) dimension_error("vstack of matrices with different widths");
    FpMatrix out = top;
    for (std::size_t i = 0; i < bottom.rows(); ++i) out.append_row(bottom.row(i));
    return out;
}

FpMatrix hstack(const FpMatrix& left, const FpMatrix& right) {
    require_same_modulus(left.modulus(), right.modulus());
    if (left.rows() != right.rows()) dimension_error("hstack of matrices with different heights");
    FpMatrix out(left.modulus(), left.rows(), left.cols() + right.cols());
    for (std::size_t i = 0; i < left.rows(); ++i) {
        for (std::size_t j = 0; j < left.cols(); ++j) out.set(i, j, left(i, j));
        for (std::size_t j = 0; j < right.cols(); ++j) out.set(i, left.cols() + j, right(i, j));
    }
    return out;
}

FpMatrix apply_permutation(const FpMatrix& m, const Permutation& perm) {
    if (perm.size() != m.cols()) dimension_error("permutation length does not match column count");
    return m.select_cols(perm.images());
}

RMatrix apply_permutation(const RMatrix& m, const Permutation& perm) {
    if (perm.size() != m.cols()) dimension_error("permutation length does not match column count");
    RMatrix out(m.modulus(), m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out.set(i, j, m(i, perm[j]));
    return out;
}

FpMatrix project_matrix(const RMatrix& m, Projection which) {
    FpMatrix out(m.modulus(), m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out.set(i, j, which == Projection::bar ? m(i, j).bar() : m(i, j).hat());
    return out;
}

std::uint32_t dot(PrimeModulus mod, std::span<const std::uint32_t> x, std::span<const std::uint32_t> y) {
    if (x.size() != y.size()) dimension_error("inner product of vectors with different lengths");
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < x.size(); ++i) acc += static_cast<std::uint64_t>(x[i]) * y[i];
    return static_cast<std::uint32_t>(acc % mod.value());
}

RScalar dot(PrimeModulus mod, std::span<const RScalar> x, std::span<const RScalar> y) {
    if (x.size() != y.size()) dimension_error("inner product of vectors with different lengths");
    auto acc = RScalar::zero(mod);
    for (std::size_t i = 0; i < x.size(); ++i) acc = acc + x[i] * y[i];
    return acc;
}

}  // namespace fpv

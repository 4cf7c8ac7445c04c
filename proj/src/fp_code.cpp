#include "fpv/fp_code.hpp"

#include <limits>
#include <string>

namespace fpv {

FpLinearCode FpLinearCode::from_generator(const FpMatrix& generator) {
    auto reduced = rref(generator);
    return FpLinearCode(std::move(reduced.basis), std::move(reduced.pivots));
}

FpLinearCode FpLinearCode::zero(PrimeModulus mod, std::size_t n) { return FpLinearCode(FpMatrix(mod, 0, n), {}); }

FpLinearCode FpLinearCode::full(PrimeModulus mod, std::size_t n) {
    return from_generator(FpMatrix::identity(mod, n));
}

bool FpLinearCode::contains(std::span<const std::uint32_t> word) const {
    if (word.size() != length()) return false;
    const auto mod = modulus();
    std::vector<std::uint32_t> w(word.begin(), word.end());
    for (std::size_t i = 0; i < dimension(); ++i) {
        const auto f = w[pivots_[i]];
        if (f == 0) continue;
        const auto row = basis_.row(i);
        for (std::size_t j = 0; j < w.size(); ++j) w[j] = mod.sub(w[j], mod.mul(f, row[j]));
    }
    for (auto x : w)
        if (x != 0) return false;
    return true;
}

FpLinearCode dual(const FpLinearCode& code) { return FpLinearCode::from_generator(kernel_basis(code.basis())); }

bool is_self_orthogonal(const FpLinearCode& code) {
    const auto& g = code.basis();
    for (std::size_t i = 0; i < g.rows(); ++i)
        for (std::size_t j = i; j < g.rows(); ++j)
            if (dot(code.modulus(), g.row(i), g.row(j)) != 0) return false;
    return true;
}

bool is_self_dual(const FpLinearCode& code) {
    return 2 * code.dimension() == code.length() && is_self_orthogonal(code);
}

std::uint64_t saturating_pow(std::uint64_t p, std::uint64_t e) noexcept {
    constexpr auto max = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t result = 1;
    for (std::uint64_t i = 0; i < e; ++i) {
        if (p != 0 && result > max / p) return max;
        result *= p;
    }
    return result;
}

namespace {

void check_budget(std::uint64_t needed, std::uint64_t budget, const char* what) {
    if (needed > budget)
        throw Error(ErrorCode::budget_exceeded, std::string(what) + " needs " +
                                                    (needed == std::numeric_limits<std::uint64_t>::max()
                                                         ? std::string("more than 2^64")
                                                         : std::to_string(needed)) +
                                                    " steps, budget is " + std::to_string(budget));
}

}  // namespace

void for_each_codeword(const FpLinearCode& code, const WordVisitor& visit, std::uint64_t budget) {
    const auto mod = code.modulus();
    const auto p = mod.value();
    const std::size_t k = code.dimension();
    const std::size_t n = code.length();
    check_budget(saturating_pow(p, k), budget, "codeword enumeration");

    std::vector<std::uint32_t> coeff(k, 0);
    std::vector<std::uint32_t> word(n, 0);
    while (true) {
        visit(word);
        // Odometer on the coefficient vector, least significant digit last.
        std::size_t pos = k;
        while (pos > 0) {
            --pos;
            const auto row = code.basis().row(pos);
            for (std::size_t j = 0; j < n; ++j) word[j] = mod.add(word[j], row[j]);
            if (++coeff[pos] < p) break;
            coeff[pos] = 0;  // adding the row p times wrapped the word back
            if (pos == 0) return;
        }
        if (k == 0) return;
    }
}

std::vector<std::vector<std::uint32_t>> codewords(const FpLinearCode& code, std::uint64_t budget) {
    std::vector<std::vector<std::uint32_t>> out;
    for_each_codeword(
        code, [&](std::span<const std::uint32_t> w) { out.emplace_back(w.begin(), w.end()); }, budget);
    return out;
}

FpLinearCode seed_self_dual(PrimeModulus mod, std::size_t n) {
    const auto p = mod.value();
    if (p == 2 || p % 4 == 1) {
        if (n % 2 != 0)
            throw Error(ErrorCode::no_such_code, "no self-dual code of odd length " + std::to_string(n) +
                                                     " exists over F_" + std::to_string(p));
        const auto c = sqrt_of_minus_one(mod);
        if (!c) throw Error(ErrorCode::internal, "no square root of -1 found");
        FpMatrix g(mod, n / 2, n);
        for (std::size_t i = 0; i < n / 2; ++i) {
            g.set(i, 2 * i, 1);
            g.set(i, 2 * i + 1, c->value());
        }
        auto code = FpLinearCode::from_generator(g);
        if (!is_self_dual(code)) throw Error(ErrorCode::internal, "seed code failed the self-duality check");
        return code;
    }

    if (n % 4 != 0)
        throw Error(ErrorCode::no_such_code, "no self-dual code of length " + std::to_string(n) + " exists over F_" +
                                                 std::to_string(p) + ": p = 3 (mod 4) requires n = 0 (mod 4)");
    // a^2 + b^2 = -1 always has a solution over F_p.
    const auto target = mod.neg(1);
    std::uint32_t a = 0, b = 0;
    bool found = false;
    for (std::uint32_t x = 0; x < p && !found; ++x)
        for (std::uint32_t y = 0; y < p && !found; ++y)
            if (mod.add(mod.mul(x, x), mod.mul(y, y)) == target) {
                a = x;
                b = y;
                found = true;
            }
    if (!found) throw Error(ErrorCode::internal, "no solution of a^2 + b^2 = -1");

    FpMatrix g(mod, n / 2, n);
    for (std::size_t blk = 0; blk < n / 4; ++blk) {
        const std::size_t r = 2 * blk, c = 4 * blk;
        // [[1, 0, a, b], [0, 1, -b, a]]
        g.set(r, c, 1);
        g.set(r, c + 2, a);
        g.set(r, c + 3, b);
        g.set(r + 1, c + 1, 1);
        g.set(r + 1, c + 2, mod.neg(b));
        g.set(r + 1, c + 3, a);
    }
    auto code = FpLinearCode::from_generator(g);
    if (!is_self_dual(code)) throw Error(ErrorCode::internal, "seed code failed the self-duality check");
    return code;
}

std::uint64_t gaussian_binomial(std::uint32_t p, std::size_t n, std::size_t k) noexcept {
    if (k > n) return 0;
    // Sum over pivot profiles of p^(free entries); exact and overflow-aware.
    // Recurrence: [n, k] = [n-1, k-1] + p^k [n-1, k].
    constexpr auto max = std::numeric_limits<std::uint64_t>::max();
    std::vector<std::uint64_t> row(k + 1, 0);
    row[0] = 1;
    for (std::size_t m = 1; m <= n; ++m) {
        for (std::size_t j = std::min(m, k); j >= 1; --j) {
            const auto pk = saturating_pow(p, j);
            std::uint64_t term = (row[j] != 0 && pk > max / row[j]) ? max : pk * row[j];
            const std::uint64_t sum = row[j - 1] > max - term ? max : row[j - 1] + term;
            row[j] = sum;
        }
    }
    return row[k];
}

void for_each_subspace(PrimeModulus mod, std::size_t n, std::size_t k,
                       const std::function<void(const FpMatrix&)>& visit, std::uint64_t budget) {
    if (k > n) return;
    const auto p = mod.value();
    check_budget(gaussian_binomial(p, n, k), budget, "subspace enumeration");

    std::vector<std::size_t> piv(k);
    for (std::size_t i = 0; i < k; ++i) piv[i] = i;
    while (true) {
        // Free entries: row i, columns right of piv[i] that are not pivots.
        FpMatrix basis(mod, k, n);
        std::vector<bool> is_pivot(n, false);
        for (std::size_t i = 0; i < k; ++i) {
            is_pivot[piv[i]] = true;
            basis.set(i, piv[i], 1);
        }
        std::vector<std::pair<std::size_t, std::size_t>> free;
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = piv[i] + 1; j < n; ++j)
                if (!is_pivot[j]) free.emplace_back(i, j);

        while (true) {
            visit(basis);
            std::size_t pos = free.size();
            bool advanced = false;
            while (pos > 0) {
                --pos;
                auto [i, j] = free[pos];
                auto next = basis(i, j) + 1;
                if (next < p) {
                    basis.set(i, j, next);
                    advanced = true;
                    break;
                }
                basis.set(i, j, 0);
            }
            if (!advanced) break;
        }

        // Next pivot combination in lexicographic order.
        std::size_t i = k;
        while (i > 0 && piv[i - 1] == n - k + (i - 1)) --i;
        if (i == 0) return;
        ++piv[i - 1];
        for (std::size_t j = i; j < k; ++j) piv[j] = piv[j - 1] + 1;
    }
}

std::vector<FpLinearCode> all_subspaces(PrimeModulus mod, std::size_t n, std::uint64_t budget) {
    std::uint64_t total = 0;
    for (std::size_t k = 0; k <= n; ++k) {
        const auto g = gaussian_binomial(mod.value(), n, k);
        total = g > std::numeric_limits<std::uint64_t>::max() - total ? std::numeric_limits<std::uint64_t>::max()
                                                                      : total + g;
    }
    check_budget(total, budget, "subspace enumeration");
    std::vector<FpLinearCode> out;
    for (std::size_t k = 0; k <= n; ++k)
        for_each_subspace(
            mod, n, k, [&](const FpMatrix& basis) { out.push_back(FpLinearCode::from_generator(basis)); }, budget);
    return out;
}

std::vector<FpLinearCode> census_self_dual(PrimeModulus mod, std::size_t n, std::uint64_t budget) {
    std::vector<FpLinearCode> out;
    if (n % 2 != 0) return out;
    const std::size_t k = n / 2;
    for_each_subspace(
        mod, n, k,
        [&](const FpMatrix& basis) {
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = i; j < k; ++j)
                    if (dot(mod, basis.row(i), basis.row(j)) != 0) return;
            auto code = FpLinearCode::from_generator(basis);
            if (!is_self_dual(code)) throw Error(ErrorCode::internal, "census candidate failed the self-duality check");
            out.push_back(std::move(code));
        },
        budget);
    return out;
}

}  // namespace fpv

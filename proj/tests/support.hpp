#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <fstream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fpv/code_file.hpp"
#include "fpv/construct.hpp"
#include "fpv/fp_code.hpp"
#include "fpv/r_code.hpp"

namespace fpvtest {

inline std::string data_path(const std::string& name) { return std::string(FPV_DATA_DIR) + "/" + name; }

inline std::string read_text(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline fpv::FpMatrix load_fp(const std::string& name) {
    return std::get<fpv::FpMatrix>(fpv::parse_code_file(read_text(data_path(name))).matrix);
}

inline fpv::RMatrix load_r(const std::string& name) {
    return std::get<fpv::RMatrix>(fpv::parse_code_file(read_text(data_path(name))).matrix);
}

/// Matrix of "a+bv" pairs written as {a, b}.
inline fpv::RMatrix r_matrix(fpv::PrimeModulus mod, const std::vector<std::vector<std::array<std::int64_t, 2>>>& rows) {
    fpv::RMatrix m(mod, rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j)
            m.set(i, j, fpv::RScalar(mod.reduce(rows[i][j][0]), mod.reduce(rows[i][j][1]), mod));
    return m;
}

using Rng = std::mt19937_64;

inline fpv::FpMatrix random_fp_matrix(fpv::PrimeModulus mod, std::size_t rows, std::size_t cols, Rng& rng) {
    std::uniform_int_distribution<std::uint32_t> d(0, mod.value() - 1);
    fpv::FpMatrix m(mod, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.set(i, j, d(rng));
    return m;
}

/// Random generator mixing free rows, v-multiples and (1-v)-multiples so that
/// all three parts of the type show up.
inline fpv::RMatrix random_r_matrix(fpv::PrimeModulus mod, std::size_t n, Rng& rng) {
    std::uniform_int_distribution<std::uint32_t> d(0, mod.value() - 1);
    std::uniform_int_distribution<std::size_t> rows_d(0, n + 1);
    std::uniform_int_distribution<int> kind(0, 2);
    const std::size_t rows = rows_d(rng);
    fpv::RMatrix m(mod, rows, n);
    for (std::size_t i = 0; i < rows; ++i) {
        const int k = kind(rng);
        const auto scale = k == 1 ? fpv::RScalar::v(mod) : k == 2 ? fpv::RScalar::one_minus_v(mod) : fpv::RScalar::one(mod);
        for (std::size_t j = 0; j < n; ++j) m.set(i, j, scale * fpv::RScalar(d(rng), d(rng), mod));
    }
    return m;
}

inline fpv::RLinearCode random_r_code(fpv::PrimeModulus mod, std::size_t n, Rng& rng) {
    return fpv::RLinearCode::from_generator(random_r_matrix(mod, n, rng));
}

inline fpv::FpLinearCode random_fp_code(fpv::PrimeModulus mod, std::size_t n, std::size_t k, Rng& rng) {
    // Rejection sampling until the rank is exactly k.
    for (;;) {
        auto c = fpv::FpLinearCode::from_generator(random_fp_matrix(mod, k, n, rng));
        if (c.dimension() == k) return c;
    }
}

/// Brute-force search over all n! coordinate permutations.
inline bool permutation_equivalent(const fpv::RLinearCode& a, const fpv::RLinearCode& b) {
    if (a.length() != b.length()) return false;
    std::vector<std::size_t> images(a.length());
    std::iota(images.begin(), images.end(), 0);
    do {
        if (fpv::permute(a, fpv::Permutation(images)) == b) return true;
    } while (std::next_permutation(images.begin(), images.end()));
    return false;
}

inline std::vector<fpv::Permutation> all_permutations(std::size_t n) {
    std::vector<fpv::Permutation> out;
    std::vector<std::size_t> images(n);
    std::iota(images.begin(), images.end(), 0);
    do out.emplace_back(images);
    while (std::next_permutation(images.begin(), images.end()));
    return out;
}

/// Submodules of R^n for R = F_2 + vF_2, found by breadth-first search from
/// {0}, each stored as a bitset over the 4^n words. Ring arithmetic here is
/// written out on pairs (a, b) and does not use the library.
class BinarySubmodules {
public:
    using Set = std::vector<bool>;

    explicit BinarySubmodules(std::size_t n) : n_(n), size_(std::size_t{1} << (2 * n)) {
        std::set<Set> seen;
        Set zero(size_, false);
        zero[0] = true;
        std::vector<Set> frontier{zero};
        seen.insert(zero);
        while (!frontier.empty()) {
            std::vector<Set> next;
            for (const auto& m : frontier)
                for (std::size_t w = 0; w < size_; ++w) {
                    if (m[w]) continue;
                    auto bigger = extend(m, w);
                    if (seen.insert(bigger).second) next.push_back(std::move(bigger));
                }
            frontier = std::move(next);
        }
        modules_.assign(seen.begin(), seen.end());
    }

    const std::vector<Set>& modules() const { return modules_; }

    /// Euclidean dual computed from the word lists.
    Set dual(const Set& m) const {
        Set out(size_, false);
        for (std::size_t u = 0; u < size_; ++u) {
            bool ok = true;
            for (std::size_t w = 0; w < size_ && ok; ++w)
                if (m[w] && dot(u, w) != 0) ok = false;
            out[u] = ok;
        }
        return out;
    }

    /// Word index of a library word: coordinate i holds a + 2b at bits 2i, 2i+1.
    static std::size_t index_of(std::span<const fpv::RScalar> word) {
        std::size_t x = 0;
        for (std::size_t i = 0; i < word.size(); ++i) x |= std::size_t(word[i].a() + 2 * word[i].b()) << (2 * i);
        return x;
    }

private:
    // Elements of F_2 + vF_2 as 2-bit codes a + 2b.
    static unsigned add1(unsigned x, unsigned y) { return x ^ y; }
    static unsigned mul1(unsigned x, unsigned y) {
        const unsigned a1 = x & 1, b1 = x >> 1, a2 = y & 1, b2 = y >> 1;
        const unsigned a = a1 & a2;
        const unsigned b = (a1 & b2) ^ (a2 & b1) ^ (b1 & b2);
        return a | (b << 1);
    }
    std::size_t scale(unsigned r, std::size_t w) const {
        std::size_t out = 0;
        for (std::size_t i = 0; i < n_; ++i) out |= std::size_t(mul1(r, (w >> (2 * i)) & 3)) << (2 * i);
        return out;
    }
    unsigned dot(std::size_t u, std::size_t w) const {
        unsigned s = 0;
        for (std::size_t i = 0; i < n_; ++i) s = add1(s, mul1((u >> (2 * i)) & 3, (w >> (2 * i)) & 3));
        return s;
    }
    // M + Rw; words add by xor since the additive group is elementary abelian.
    Set extend(const Set& m, std::size_t w) const {
        std::vector<std::size_t> words;
        for (std::size_t x = 0; x < size_; ++x)
            if (m[x]) words.push_back(x);
        Set out(size_, false);
        for (unsigned r = 0; r < 4; ++r) {
            const auto rw = scale(r, w);
            for (auto x : words) out[x ^ rw] = true;
        }
        return out;
    }

    std::size_t n_;
    std::size_t size_;
    std::vector<Set> modules_;
};

}  // namespace fpvtest

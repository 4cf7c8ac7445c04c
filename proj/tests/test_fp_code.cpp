#include <doctest.h>

#include <set>

#include "support.hpp"

using namespace fpv;
using namespace fpvtest;

namespace {

using Word = std::vector<std::uint32_t>;

// Every vector of F_p^n orthogonal to all words, by scanning F_p^n.
std::set<Word> brute_dual(PrimeModulus mod, std::size_t n, const std::vector<Word>& words) {
    std::set<Word> out;
    Word u(n, 0);
    for (;;) {
        bool ok = true;
        for (const auto& w : words) ok = ok && dot(mod, u, w) == 0;
        if (ok) out.insert(u);
        std::size_t i = 0;
        while (i < n && ++u[i] == mod.value()) u[i++] = 0;
        if (i == n) return out;
    }
}

}  // namespace

TEST_CASE("codeword enumeration") {
    const auto g = FpMatrix::from_rows(PrimeModulus(5), {{1, 0, 3, 0}, {2, 1, 1, 2}});
    const auto words = codewords(FpLinearCode::from_generator(g));
    CHECK(words.size() == 25);
    CHECK(std::set<Word>(words.begin(), words.end()).size() == 25);
    CHECK_THROWS_AS(codewords(FpLinearCode::full(PrimeModulus(3), 10), 1000), Error);
}

TEST_CASE("dual matches the brute-force oracle") {
    Rng rng(21);
    for (std::uint32_t p : {2u, 3u, 5u})
        for (int t = 0; t < 30; ++t) {
            const PrimeModulus mod(p);
            const std::size_t n = 1 + t % (p == 5 ? 5 : 6);
            const auto code = FpLinearCode::from_generator(random_fp_matrix(mod, t % (n + 1), n, rng));
            const auto expected = brute_dual(mod, n, codewords(code));
            const auto got = codewords(dual(code));
            CHECK(std::set<Word>(got.begin(), got.end()) == expected);
            CHECK(code.dimension() + dual(code).dimension() == n);
            bool inside = true;
            for (const auto& w : codewords(code)) inside = inside && expected.count(w) > 0;
            CHECK(is_self_orthogonal(code) == inside);
        }
}

TEST_CASE("ternary Golay code words are pairwise orthogonal") {
    const auto golay = FpLinearCode::from_generator(load_fp("p3n12_c1.fp"));
    const auto words = codewords(golay);
    REQUIRE(words.size() == 729);
    bool all_zero = true;
    for (const auto& x : words)
        for (const auto& y : words) all_zero = all_zero && dot(golay.modulus(), x, y) == 0;
    CHECK(all_zero);
    CHECK(is_self_dual(golay));
}

TEST_CASE("seed codes") {
    CHECK(seed_self_dual(PrimeModulus(5), 2).basis() == FpMatrix::from_rows(PrimeModulus(5), {{1, 2}}));
    const auto two = codewords(seed_self_dual(PrimeModulus(2), 2));
    CHECK(std::set<Word>(two.begin(), two.end()) == std::set<Word>{{0, 0}, {1, 1}});
    CHECK(seed_self_dual(PrimeModulus(3), 4).basis() == FpMatrix::from_rows(PrimeModulus(3), {{1, 0, 1, 1}, {0, 1, 2, 1}}));
    for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u})
        for (std::size_t n = 1; n <= 8; ++n) {
            const PrimeModulus mod(p);
            const bool valid = n % 2 == 0 && (p == 2 || p % 4 == 1 || n % 4 == 0);
            if (valid) {
                CHECK(is_self_dual(seed_self_dual(mod, n)));
            } else {
                try {
                    seed_self_dual(mod, n);
                    FAIL("no throw for p = " << p << ", n = " << n);
                } catch (const Error& e) {
                    CHECK(e.code() == ErrorCode::no_such_code);
                }
            }
        }
}

TEST_CASE("gaussian binomials and subspace enumeration") {
    CHECK(gaussian_binomial(2, 4, 2) == 35);
    CHECK(gaussian_binomial(3, 6, 3) == 33880);
    CHECK(gaussian_binomial(5, 6, 3) == 2558556);
    CHECK(gaussian_binomial(2, 4, 0) == 1);
    CHECK(gaussian_binomial(2, 4, 5) == 0);
    CHECK(all_subspaces(PrimeModulus(2), 4).size() == 67);
    CHECK(all_subspaces(PrimeModulus(3), 3).size() == 1 + 13 + 13 + 1);
    std::set<std::vector<std::uint32_t>> seen;
    for_each_subspace(PrimeModulus(3), 4, 2, [&](const FpMatrix& b) {
        std::vector<std::uint32_t> key;
        for (std::size_t i = 0; i < b.rows(); ++i) key.insert(key.end(), b.row(i).begin(), b.row(i).end());
        CHECK(rref(b).basis == b);
        seen.insert(key);
    });
    CHECK(seen.size() == 130);
    CHECK_THROWS_AS(for_each_subspace(PrimeModulus(5), 6, 3, [](const FpMatrix&) {}, 1000), Error);
}

TEST_CASE("self-dual census goldens") {
    // Frozen from an independent enumeration of spans of vector tuples.
    const struct {
        std::uint32_t p;
        std::size_t n;
        std::size_t count;
    } goldens[] = {{2, 2, 1}, {2, 4, 3}, {2, 6, 15}, {3, 2, 0}, {3, 4, 8}, {3, 6, 0},
                   {5, 2, 2}, {5, 4, 12}, {5, 6, 312}, {2, 3, 0}, {5, 5, 0}};
    for (const auto& g : goldens) {
        INFO("p = " << g.p << ", n = " << g.n);
        const auto census = census_self_dual(PrimeModulus(g.p), g.n, 3'000'000);
        CHECK(census.size() == g.count);
        for (std::size_t i = 0; i < census.size(); ++i) {
            CHECK(is_self_dual(census[i]));
            for (std::size_t j = 0; j < i; ++j) CHECK_FALSE(census[i] == census[j]);
        }
    }
}

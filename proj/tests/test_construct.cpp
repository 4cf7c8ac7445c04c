#include <doctest.h>

#include <string>

#include "support.hpp"

using namespace fpv;
using namespace fpvtest;

TEST_CASE("generators of the examples") {
    const auto two = build_self_dual(load_fp("p2n6_c1.fp"), load_fp("p2n6_c2.fp"));
    CHECK(two.generator_used == load_r("p2n6.fpv"));
    CHECK(two.case_taken == ConstructionCase::l1_eq_l2);
    const auto three = build_self_dual(load_fp("p3n12_c1.fp"), load_fp("p3n12_c2.fp"));
    CHECK(three.generator_used == load_r("p3n12.fpv"));
    CHECK(is_self_dual(three.code));
    CHECK(three.code.log_size() == 12);
}

TEST_CASE("rejections name the failing component") {
    const PrimeModulus five(5);
    const auto good = FpMatrix::from_rows(five, {{1, 2}});
    const auto bad = FpMatrix::from_rows(five, {{1, 1}});
    for (auto [g1, g2, name] : {std::tuple{bad, good, "C1"}, std::tuple{good, bad, "C2"}}) {
        try {
            build_self_dual(g1, g2);
            FAIL("accepted");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::not_self_dual);
            CHECK(std::string(e.what()).find(name) != std::string::npos);
        }
    }
    CHECK_THROWS_AS(construct_from_pair(good, FpMatrix::from_rows(PrimeModulus(3), {{1, 2}})), Error);
    CHECK_THROWS_AS(construct_from_pair(good, FpMatrix::from_rows(five, {{1, 2, 0}})), Error);
}

TEST_CASE("raw generators") {
    const PrimeModulus three(3);
    // Full rank: used as given.
    const auto g1 = FpMatrix::from_rows(three, {{1, 1, 0}, {0, 0, 1}});
    const auto g2 = FpMatrix::from_rows(three, {{0, 1, 2}, {1, 0, 0}});
    const auto r = construct_from_pair(g1, g2);
    CHECK(r.generator_used == RMatrix::from_components(g1, g2));
    // Rank deficient: reduced first.
    const auto dup = FpMatrix::from_rows(three, {{1, 1, 0}, {2, 2, 0}});
    const auto r2 = construct_from_pair(dup, g2);
    CHECK(r2.case_taken == ConstructionCase::l1_lt_l2);
    CHECK(r2.code.c1().dimension() == 1);
    CHECK(r2.code.c2() == FpLinearCode::from_generator(g2));
}

TEST_CASE("seed lifted to R") {
    const auto seed = seed_self_dual(PrimeModulus(5), 2);
    const auto code = build_self_dual(seed, seed);
    CHECK(is_self_dual(code));
    CHECK(code.c1() == seed);
    CHECK(code.c2() == seed);
}

TEST_CASE("existence table") {
    const struct {
        std::uint32_t p;
        std::size_t n;
        bool exists;
    } table[] = {{5, 2, true},  {2, 6, true}, {3, 2, false}, {3, 12, true}, {3, 4, true},  {7, 4, true},
                 {7, 6, false}, {13, 2, true}, {2, 3, false}, {5, 5, false}, {11, 8, true}, {2, 0, true}};
    for (const auto& row : table) {
        INFO("p = " << row.p << ", n = " << row.n);
        CHECK(exists_self_dual(PrimeModulus(row.p), row.n) == row.exists);
    }
}

TEST_CASE("counts over R") {
    const struct {
        std::uint32_t p;
        std::size_t n;
        std::uint64_t fp, r;
    } goldens[] = {{2, 2, 1, 1}, {2, 4, 3, 9}, {3, 2, 0, 0}, {3, 4, 8, 64}, {5, 2, 2, 4}, {5, 4, 12, 144}};
    for (const auto& g : goldens) {
        INFO("p = " << g.p << ", n = " << g.n);
        const auto report = count_self_dual_r(PrimeModulus(g.p), g.n);
        CHECK(report.fp_count == g.fp);
        CHECK(report.r_count == g.r);
        CHECK(report.pair_check_ran);
        CHECK(report.pair_check_passed);
        if (report.exhaustive_ran) {
            CHECK(report.exhaustive_passed);
            CHECK(report.exhaustive_count == g.r);
        }
    }
    CHECK(count_self_dual_r(PrimeModulus(2), 2).exhaustive_ran);
    CHECK(exhaustive_self_dual_r(PrimeModulus(3), 2).empty());
    CHECK_THROWS_AS(exhaustive_self_dual_r(PrimeModulus(5), 4, 1000), Error);
}

TEST_CASE("reference standard form of the Golay code") {
    const auto form = RLinearCode::from_generator(load_r("p3n12_form.fpv"));
    const auto code = RLinearCode::from_generator(load_r("p3n12.fpv"));
    CHECK(is_self_dual(form));
    CHECK(standard_form(form).type == TypeTriple{6, 0, 0});
    // Weight distributions of the components are permutation invariants.
    const auto weights = [](const FpLinearCode& c) {
        std::vector<std::size_t> out(c.length() + 1, 0);
        for_each_codeword(c, [&](std::span<const std::uint32_t> w) {
            ++out[std::count_if(w.begin(), w.end(), [](std::uint32_t x) { return x != 0; })];
        });
        return out;
    };
    CHECK(weights(form.c1()) == weights(code.c1()));
    CHECK(weights(form.c2()) == weights(code.c2()));
    CHECK(weights(code.c1())[6] == 264);
}

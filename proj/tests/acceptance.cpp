// Acceptance suite: one PASS/FAIL line per criterion.
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>

#include "fpv/brute_force.hpp"
#include "support.hpp"

using namespace fpv;
using namespace fpvtest;

namespace {

struct Check {
    std::string failure;
    void expect(bool ok, const std::string& what) {
        if (!ok && failure.empty()) failure = what;
    }
};

bool all_rows_orthogonal(const RMatrix& g) {
    for (std::size_t i = 0; i < g.rows(); ++i)
        for (std::size_t j = i; j < g.rows(); ++j)
            if (!dot(g.modulus(), g.row(i), g.row(j)).is_zero()) return false;
    return true;
}

bool brute_dual_is_code(const RMatrix& generator) {
    const auto words = brute::span_closure(generator);
    return brute::dual_words(words, generator.cols(), generator.modulus()) == words;
}

// Standard forms over every scan order that reproduce target exactly; each
// hit must also satisfy code * perm = <target>.
std::size_t scan_hits(const RLinearCode& code, const RMatrix& target, const TypeTriple& type, Check& c) {
    std::size_t hits = 0;
    const auto target_code = RLinearCode::from_generator(target);
    for (const auto& scan : all_permutations(code.length())) {
        const auto sf = standard_form(code, scan);
        c.expect(sf.type == type, "type differs for some scan order");
        if (sf.matrix != target) continue;
        ++hits;
        c.expect(permute(code, sf.perm) == target_code, "emitted permutation does not carry the code to the target");
    }
    return hits;
}

void criterion1(Check& c) {
    const auto mod = PrimeModulus(5);
    const auto g1 = FpMatrix::from_rows(mod, {{1, 0, 3, 0}, {-3, 1, 1, 2}});
    const auto g2 = FpMatrix::from_rows(mod, {{0, 2, 0, 1}, {-2, 4, 1, 2}});
    const auto report = build_self_dual(g1, g2);
    const auto reference_g = r_matrix(mod, {{{1, -1}, {0, 2}, {3, -3}, {0, 1}}, {{-3, 1}, {1, 3}, {1, 0}, {2, 0}}});
    c.expect(report.generator_used == reference_g, "G differs from vG2 + (1-v)G1 in the reference file");
    c.expect(check_type_condition(report.code), "(a) type condition route says not self-dual");
    c.expect(brute::span_closure(report.generator_used).size() == 625, "(b) code does not have 625 words");
    c.expect(brute_dual_is_code(report.generator_used), "(b) brute-force dual differs from the code");
    const auto sf = standard_form(report.code);
    c.expect(sf.type == TypeTriple{2, 0, 0}, "(c) type is not (2,0,0)");
    c.expect(RLinearCode::from_generator(sf.matrix) == permute(report.code, sf.perm), "(c) default form is not code*perm");
    const auto target = r_matrix(mod, {{{1, 0}, {0, 0}, {2, 1}, {0, 0}}, {{0, 0}, {1, 0}, {0, 0}, {2, 1}}});
    c.expect(permutation_equivalent(report.code, RLinearCode::from_generator(target)),
             "(c) code is not permutation-equivalent to the reference form");
    c.expect(scan_hits(report.code, target, {2, 0, 0}, c) > 0, "(c) no scan order reproduces the reference rows");
}

void criterion2(Check& c) {
    const auto mod = PrimeModulus(2);
    const auto g1 = load_fp("p2n6_c1.fp");
    const auto g2 = load_fp("p2n6_c2.fp");
    const auto g = load_r("p2n6.fpv");
    const auto report = build_self_dual(g1, g2);
    c.expect(report.generator_used == g, "file G differs from G1 + v(G2 - G1)");
    const auto code = RLinearCode::from_generator(g);
    c.expect(is_self_dual(code) && check_type_condition(code), "G does not generate a self-dual code");
    c.expect(brute::span_closure(g).size() == 64, "code does not have 64 words");
    c.expect(brute_dual_is_code(g), "brute-force dual differs from the code");
    // (I_3 | D1 + vD2) with D1, D2 in the reference file.
    const auto d1 = FpMatrix::from_rows(mod, {{0, 0, 1}, {1, 0, 0}, {0, 1, 0}});
    const auto d2 = FpMatrix::from_rows(mod, {{1, 0, 1}, {1, 0, 1}, {0, 0, 0}});
    const auto target = RMatrix::from_ab(hstack(FpMatrix::identity(mod, 3), d1),
                                         hstack(FpMatrix(mod, 3, 3), d2));
    const auto reference = r_matrix(mod, {{{1, 0}, {0, 0}, {0, 0}, {0, 1}, {0, 0}, {1, 1}},
                                          {{0, 0}, {1, 0}, {0, 0}, {1, 1}, {0, 0}, {0, 1}},
                                          {{0, 0}, {0, 0}, {1, 0}, {0, 0}, {1, 0}, {0, 0}}});
    c.expect(target == reference, "(I_3 | D1 + vD2) differs from the reference matrix");
    c.expect(scan_hits(code, target, {3, 0, 0}, c) > 0, "no scan order reproduces (I_3 | D1 + vD2)");
    for (const auto& scan : all_permutations(6)) {
        const auto sf = standard_form(code, scan);
        if (sf.matrix != target) continue;
        const auto& b = std::get<BinaryBlocks>(sf.blocks);
        c.expect(b.d1 == d1 && b.d2 == d2, "extracted D1, D2 blocks differ");
        break;
    }
}

void criterion3(Check& c) {
    const auto g1 = load_fp("p3n12_c1.fp");
    const auto g2 = load_fp("p3n12_c2.fp");
    const auto report = build_self_dual(g1, g2);
    const auto& code = report.code;
    c.expect(report.generator_used == load_r("p3n12.fpv"), "G differs from the reference matrix");
    c.expect(all_rows_orthogonal(report.generator_used), "(a) some generator-row inner product is nonzero");
    c.expect(code.c1().dimension() == 6 && code.c2().dimension() == 6, "(b) component dimensions are not 6");
    const auto sf = standard_form(code);
    const auto h = parity_check(sf);
    c.expect(matmul(h, transpose(sf.matrix)).is_zero(), "(c) H G^T != 0");
    c.expect(matmul(h, transpose(apply_permutation(report.generator_used, sf.perm))).is_zero(),
             "(c) H annihilates the standard form but not the permuted G");
    c.expect(code.log_size() + dual(code).log_size() == 24, "(d) |C||C^perp| != 3^24");
    c.expect(is_self_dual(code) && dual(code) == code, "code is not self-dual");
}

void criterion4(Check& c) {
    Rng rng(4);
    std::map<std::string, int> seen;
    for (std::uint32_t p : {2u, 3u, 5u}) {
        const PrimeModulus mod(p);
        for (int t = 0; t < 200; ++t) {
            const std::size_t n = 1 + t % 8;
            const auto code = random_r_code(mod, n, rng);
            const auto sf = standard_form(code);
            const auto h = parity_check(sf);
            c.expect(matmul(h, transpose(sf.matrix)).is_zero(), "H G^T != 0 for p = " + std::to_string(p));
            const auto back = RLinearCode::from_generator(apply_permutation(h, sf.perm.inverse()));
            c.expect(back == dual(code), "H-generated code differs from dual for p = " + std::to_string(p));
            if (sf.type.k2 > 0 && sf.type.k3 > 0) ++seen["mixed p=" + std::to_string(p)];
        }
        c.expect(seen["mixed p=" + std::to_string(p)] > 0, "no code with k2, k3 > 0 was sampled");
    }
}

void criterion5(Check& c) {
    Rng rng(5);
    for (auto [p, max_n] : {std::pair{2u, std::size_t{4}}, std::pair{3u, std::size_t{3}}}) {
        const PrimeModulus mod(p);
        for (int t = 0; t < 50; ++t) {
            const std::size_t n = 1 + t % max_n;
            const auto g = random_r_matrix(mod, n, rng);
            const auto code = RLinearCode::from_generator(g);
            const auto [c2, c1] = brute::torsion_codes_oracle(g);
            c.expect(c1 == code.c1() && c2 == code.c2(), "torsion codes differ from the components");
            const auto words = brute::span_closure(g);
            c.expect(brute::decomposition_words(code) == words, "vC2 + (1-v)C1 differs from the code");
            c.expect(words.size() == saturating_pow(p, code.log_size()), "|C| != |C1||C2|");
        }
    }
}

void criterion6(Check& c) {
    Rng rng(6);
    std::size_t self_dual_seen = 0, checked = 0;
    const auto agree = [&](const RLinearCode& code) {
        const bool sd = is_self_dual(code);
        c.expect(sd == check_type_condition(code), "type condition disagrees with the component route");
        self_dual_seen += sd;
        ++checked;
    };
    const PrimeModulus mods[] = {PrimeModulus(2), PrimeModulus(3), PrimeModulus(5)};
    for (int t = 0; t < 600; ++t) {
        const auto mod = mods[t % 3];
        const std::size_t n = 1 + t % 6;
        if (t % 4 == 0 && exists_self_dual(mod, 2 * ((n + 1) / 2))) {
            // Near misses: a self-dual component paired with a random code.
            const auto sd = seed_self_dual(mod, 2 * ((n + 1) / 2));
            agree(RLinearCode::from_components(sd, sd));
            agree(RLinearCode::from_components(sd, FpLinearCode::from_generator(
                                                       random_fp_matrix(mod, sd.dimension(), sd.length(), rng))));
        }
        agree(random_r_code(mod, n, rng));
    }
    for (auto [p, n] : {std::pair{2u, 2}, {2u, 4}, {2u, 6}, {3u, 4}, {5u, 2}, {5u, 4}}) {
        const PrimeModulus mod(p);
        const auto census = census_self_dual(mod, n);
        for (const auto& x : census)
            for (const auto& y : census) agree(RLinearCode::from_components(x, y));
    }
    // Every component pair at (2, 4), self-dual or not.
    const auto subspaces = all_subspaces(PrimeModulus(2), 4);
    for (const auto& x : subspaces)
        for (const auto& y : subspaces) agree(RLinearCode::from_components(x, y));
    c.expect(checked >= 500 && self_dual_seen > 0, "too few codes or no self-dual code checked");
}

void criterion7(Check& c) {
    const PrimeModulus two(2);
    c.expect(census_self_dual(two, 2).size() == 1, "N(F_2, 2) != 1");
    const auto r22 = count_self_dual_r(two, 2);
    c.expect(r22.r_count == 1 && r22.exhaustive_ran && r22.exhaustive_passed, "N(R) at n = 2 is not 1");
    // The 9 pairs of one-dimensional subspaces of F_2^2.
    std::size_t pairs = 0, found = 0;
    for (const auto& x : all_subspaces(two, 2))
        for (const auto& y : all_subspaces(two, 2)) {
            if (x.dimension() != 1 || y.dimension() != 1) continue;
            ++pairs;
            found += brute_dual_is_code(RLinearCode::from_components(x, y).generator_matrix());
        }
    c.expect(pairs == 9 && found == 1, "exhaustive pair scan at n = 2 did not find exactly 1 of 9");

    constexpr std::uint64_t frozen_n_f2_4 = 3;
    c.expect(census_self_dual(two, 4).size() == frozen_n_f2_4, "N(F_2, 4) != 3");
    c.expect(all_subspaces(two, 4).size() == 67, "F_2^4 does not have 67 subspaces");
    const auto exhaustive = exhaustive_self_dual_r(two, 4);
    c.expect(exhaustive.size() == frozen_n_f2_4 * frozen_n_f2_4, "exhaustive R-census at (2, 4) != 9");

    // Submodule search that never forms components.
    for (std::size_t n : {2u, 4u}) {
        const BinarySubmodules bfs(n);
        std::size_t self_dual = 0;
        for (const auto& m : bfs.modules()) self_dual += bfs.dual(m) == m;
        const std::size_t subspaces = n == 2 ? 5 : 67;
        c.expect(bfs.modules().size() == subspaces * subspaces, "submodule count is not the square of the subspace count");
        c.expect(self_dual == (n == 2 ? 1 : frozen_n_f2_4 * frozen_n_f2_4), "submodule search found a different N(R)");
    }
}

void criterion8(Check& c) {
    for (std::uint32_t p : {2u, 3u, 5u})
        for (std::size_t n : {2u, 4u, 6u}) {
            const PrimeModulus mod(p);
            const auto budget = gaussian_binomial(p, n, n / 2);
            const auto census = census_self_dual(mod, n, budget);
            c.expect(exists_self_dual(mod, n) == !census.empty(),
                     "existence test disagrees with census at (" + std::to_string(p) + ", " + std::to_string(n) + ")");
        }
    c.expect(!exists_self_dual(PrimeModulus(3), 2), "(3, 2) reported as existing");
    const auto seed = seed_self_dual(PrimeModulus(3), 4);
    const auto census = census_self_dual(PrimeModulus(3), 4);
    c.expect(is_self_dual(seed) && std::find(census.begin(), census.end(), seed) != census.end(),
             "seed_self_dual(3, 4) is not a census code");
}

void criterion9(Check& c) {
    Rng rng(9);
    std::map<ConstructionCase, int> cases;
    std::size_t degenerate = 0;
    const PrimeModulus mods[] = {PrimeModulus(2), PrimeModulus(3), PrimeModulus(5)};
    for (int t = 0; t < 150; ++t) {
        const auto mod = mods[t % 3];
        const std::size_t n = 1 + t % 6;
        std::uniform_int_distribution<std::size_t> dim(0, n);
        const auto l1 = dim(rng), l2 = dim(rng);
        degenerate += l1 == 0 || l2 == 0;
        const auto x = random_fp_code(mod, n, l1, rng);
        const auto y = random_fp_code(mod, n, l2, rng);
        const auto report = construct_from_pair(x, y);
        ++cases[report.case_taken];
        const auto expected = l1 > l2 ? ConstructionCase::l1_gt_l2
                              : l1 < l2 ? ConstructionCase::l1_lt_l2
                                        : ConstructionCase::l1_eq_l2;
        c.expect(report.case_taken == expected, "wrong case reported");
        const auto [c1, c2] = components(report.code);
        c.expect(c1 == x && c2 == y, "components do not round-trip");
        c.expect(components(RLinearCode::from_generator(report.generator_used)) == std::pair{x, y},
                 "generator does not reproduce the pair");
    }
    c.expect(cases.size() == 3 && degenerate > 0, "not all cases or no degenerate input covered");
}

struct Criterion {
    int id;
    const char* title;
    double limit_s;
    std::function<void(Check&)> run;
};

}  // namespace

int main() {
    const Criterion criteria[] = {
        {1, "p=5 n=4 example: self-dual, brute-force dual, standard form (2,0,0)", 1, criterion1},
        {2, "p=2 n=6 example: 64 words, brute-force dual, (I_3 | D1+vD2)", 1, criterion2},
        {3, "p=3 n=12 Golay example: rows orthogonal, dims 6/6, HG^T = 0, 3^24", 5, criterion3},
        {4, "parity-check property suite, 200 codes per p in {2,3,5}", 30, criterion4},
        {5, "torsion and decomposition oracle, 50 codes per ring", 60, criterion5},
        {6, "type condition agrees with component self-duality", 60, criterion6},
        {7, "N(R) = N(F_p)^2 at (2,2) and (2,4)", 60, criterion7},
        {8, "existence agrees with census on {2,3,5} x {2,4,6}", 60, criterion8},
        {9, "pair construction round trip, all three cases", 60, criterion9},
    };
    int failed = 0;
    for (const auto& cr : criteria) {
        Check check;
        const auto start = std::chrono::steady_clock::now();
        try {
            cr.run(check);
        } catch (const std::exception& e) {
            check.expect(false, std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (check.failure.empty() && secs >= cr.limit_s)
            check.failure = "took " + std::to_string(secs) + " s, limit " + std::to_string(cr.limit_s) + " s";
        const bool ok = check.failure.empty();
        failed += !ok;
        std::printf("criterion %d: %s (%.3f s) %s%s%s\n", cr.id, ok ? "PASS" : "FAIL", secs, cr.title,
                    ok ? "" : ": ", check.failure.c_str());
    }
    std::printf("%d of %zu criteria passed\n", int(std::size(criteria)) - failed, std::size(criteria));
    return failed == 0 ? 0 : 1;
}

#include "fpv/construct.hpp"

#include <limits>
#include <set>
#include <string>

namespace fpv {

const char* to_string(ConstructionCase c) noexcept {
    switch (c) {
        case ConstructionCase::l1_gt_l2: return "l1_gt_l2";
        case ConstructionCase::l1_lt_l2: return "l1_lt_l2";
        case ConstructionCase::l1_eq_l2: return "l1_eq_l2";
    }
    return "unknown";
}

namespace {

FpMatrix full_rank(const FpMatrix& g) {
    auto reduced = rref(g);
    return reduced.rank == g.rows() ? g : reduced.basis;
}

std::vector<std::uint32_t> key_of(const RLinearCode& code) {
    std::vector<std::uint32_t> key{static_cast<std::uint32_t>(code.c1().dimension()),
                                   static_cast<std::uint32_t>(code.c2().dimension())};
    for (const auto* basis : {&code.c1().basis(), &code.c2().basis()})
        for (std::size_t i = 0; i < basis->rows(); ++i) key.insert(key.end(), basis->row(i).begin(), basis->row(i).end());
    return key;
}

std::uint64_t saturating_square(std::uint64_t x) {
    return x != 0 && x > std::numeric_limits<std::uint64_t>::max() / x ? std::numeric_limits<std::uint64_t>::max()
                                                                        : x * x;
}

}  // namespace

ConstructionReport construct_from_pair(const FpMatrix& g1_in, const FpMatrix& g2_in) {
    require_same_modulus(g1_in.modulus(), g2_in.modulus());
    if (g1_in.cols() != g2_in.cols())
        throw Error(ErrorCode::dimension_mismatch, "component generators have lengths " +
                                                       std::to_string(g1_in.cols()) + " and " +
                                                       std::to_string(g2_in.cols()));
    const auto mod = g1_in.modulus();
    const auto g1 = full_rank(g1_in);
    const auto g2 = full_rank(g2_in);
    const std::size_t l1 = g1.rows(), l2 = g2.rows(), n = g1.cols();

    RMatrix g(mod, std::max(l1, l2), n);
    for (std::size_t i = 0; i < g.rows(); ++i)
        for (std::size_t j = 0; j < n; ++j)
            g.set(i, j, crt_assemble(i < l1 ? g1(i, j) : 0, i < l2 ? g2(i, j) : 0, mod));

    const auto case_taken = l1 > l2   ? ConstructionCase::l1_gt_l2
                            : l1 < l2 ? ConstructionCase::l1_lt_l2
                                      : ConstructionCase::l1_eq_l2;
    auto code = RLinearCode::from_generator(g);
    if (code.c1() != FpLinearCode::from_generator(g1) || code.c2() != FpLinearCode::from_generator(g2))
        throw Error(ErrorCode::internal, "constructed code does not have the requested components");
    return {std::move(code), std::move(g), case_taken};
}

ConstructionReport construct_from_pair(const FpLinearCode& c1, const FpLinearCode& c2) {
    return construct_from_pair(c1.basis(), c2.basis());
}

namespace {

void require_self_dual_inputs(const FpLinearCode& c1, const FpLinearCode& c2) {
    const bool ok1 = is_self_dual(c1), ok2 = is_self_dual(c2);
    if (ok1 && ok2) return;
    std::string which = !ok1 && !ok2 ? "neither C1 nor C2 is" : !ok1 ? "C1 (first input) is not" : "C2 (second input) is not";
    throw Error(ErrorCode::not_self_dual, which + std::string(" self-dual"));
}

}  // namespace

ConstructionReport build_self_dual(const FpMatrix& g1, const FpMatrix& g2) {
    if (g1.cols() != g2.cols()) return construct_from_pair(g1, g2);  // raises the length error
    require_self_dual_inputs(FpLinearCode::from_generator(g1), FpLinearCode::from_generator(g2));
    auto report = construct_from_pair(g1, g2);
    if (!is_self_dual(report.code)) throw Error(ErrorCode::internal, "constructed code is not self-dual");
    return report;
}

RLinearCode build_self_dual(const FpLinearCode& c1, const FpLinearCode& c2) {
    return build_self_dual(c1.basis(), c2.basis()).code;
}

bool exists_self_dual(PrimeModulus mod, std::size_t n) noexcept {
    const auto p = mod.value();
    return (p == 2 || p % 4 == 1) ? n % 2 == 0 : n % 4 == 0;
}

std::vector<RLinearCode> exhaustive_self_dual_r(PrimeModulus mod, std::size_t n, std::uint64_t budget) {
    const auto subspaces = all_subspaces(mod, n, budget);
    if (saturating_square(subspaces.size()) > budget)
        throw Error(ErrorCode::budget_exceeded, std::to_string(subspaces.size()) +
                                                    "^2 component pairs exceed the budget of " +
                                                    std::to_string(budget));
    std::vector<RLinearCode> out;
    for (const auto& c1 : subspaces)
        for (const auto& c2 : subspaces) {
            auto code = RLinearCode::from_components(c1, c2);
            if (check_type_condition(code)) out.push_back(std::move(code));
        }
    return out;
}

CountReport count_self_dual_r(PrimeModulus mod, std::size_t n, std::uint64_t budget) {
    CountReport report;
    const auto census = census_self_dual(mod, n, budget);
    report.fp_count = census.size();
    report.r_count = saturating_square(report.fp_count);

    std::set<std::vector<std::uint32_t>> built;
    if (report.r_count <= budget) {
        report.pair_check_ran = true;
        bool ok = true;
        for (const auto& c1 : census)
            for (const auto& c2 : census) {
                auto code = build_self_dual(c1, c2);
                ok = ok && is_self_dual(code);
                built.insert(key_of(code));
            }
        report.pair_check_passed = ok && built.size() == report.r_count;
    }

    std::uint64_t subspace_total = 0;
    for (std::size_t k = 0; k <= n; ++k) {
        const auto g = gaussian_binomial(mod.value(), n, k);
        subspace_total = g > std::numeric_limits<std::uint64_t>::max() - subspace_total
                             ? std::numeric_limits<std::uint64_t>::max()
                             : subspace_total + g;
    }
    if (saturating_square(subspace_total) <= budget) {
        report.exhaustive_ran = true;
        const auto found = exhaustive_self_dual_r(mod, n, budget);
        report.exhaustive_count = found.size();
        bool ok = report.exhaustive_count == report.r_count;
        if (report.pair_check_ran)
            for (const auto& code : found) ok = ok && built.contains(key_of(code));
        report.exhaustive_passed = ok;
    }
    return report;
}

}  // namespace fpv

#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "fpv/fp_code.hpp"
#include "fpv/r_code.hpp"

namespace fpv {

enum class ConstructionCase { l1_gt_l2, l1_lt_l2, l1_eq_l2 };

const char* to_string(ConstructionCase c) noexcept;

struct ConstructionReport {
    RLinearCode code;
    RMatrix generator_used;
    ConstructionCase case_taken;
};

/// G = v*G2 + (1-v)*G1 row by row, the shorter matrix padded with zero rows.
/// Matrices with full row rank are used verbatim; rank-deficient ones are
/// replaced by their RREF basis first.
ConstructionReport construct_from_pair(const FpMatrix& g1, const FpMatrix& g2);
ConstructionReport construct_from_pair(const FpLinearCode& c1, const FpLinearCode& c2);

/// Rejects inputs that are not self-dual with Error(not_self_dual).
ConstructionReport build_self_dual(const FpMatrix& g1, const FpMatrix& g2);
RLinearCode build_self_dual(const FpLinearCode& c1, const FpLinearCode& c2);

/// n even for p = 2 or p = 1 (mod 4); n divisible by 4 for p = 3 (mod 4).
bool exists_self_dual(PrimeModulus mod, std::size_t n) noexcept;

/// Every self-dual R-code of length n found by testing all pairs of
/// subspaces of F_p^n with check_type_condition.
std::vector<RLinearCode> exhaustive_self_dual_r(PrimeModulus mod, std::size_t n,
                                                std::uint64_t budget = default_subspace_budget);

struct CountReport {
    std::uint64_t fp_count = 0;
    std::uint64_t r_count = 0;
    bool pair_check_ran = false;
    bool pair_check_passed = false;
    bool exhaustive_ran = false;
    bool exhaustive_passed = false;
    std::uint64_t exhaustive_count = 0;
};

/// r_count = fp_count^2. The pair check builds every census pair and checks
/// the results are self-dual and pairwise distinct; the exhaustive check
/// recounts from all subspace pairs. Each runs only when its pair count fits
/// in budget.
CountReport count_self_dual_r(PrimeModulus mod, std::size_t n, std::uint64_t budget = default_subspace_budget);

}  // namespace fpv

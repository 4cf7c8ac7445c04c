#pragma once

// Enumeration-based oracles. Everything here works on explicit sets of words
// and never consults the component decomposition of a code, so the results
// can be compared against the structured routes in r_code.hpp.

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "fpv/fp_code.hpp"
#include "fpv/r_code.hpp"

namespace fpv::brute {

/// Index of a word of R^n in base p^2 with digit a + p*b per coordinate.
std::uint64_t encode(std::span<const RScalar> word);
std::vector<RScalar> decode(std::uint64_t index, std::size_t n, PrimeModulus mod);

/// Sorted indices of all R-linear combinations of the rows of generator.
std::vector<std::uint64_t> span_closure(const RMatrix& generator,
                                        std::uint64_t budget = default_codeword_budget);

/// Sorted indices of {v*c2 + (1-v)*c1 : c1 in C1, c2 in C2}. Throws
/// Error(internal) if two pairs collide.
std::vector<std::uint64_t> decomposition_words(const RLinearCode& code,
                                               std::uint64_t budget = default_codeword_budget);

/// Sorted indices of {u in R^n : u.w = 0 for every w in words}.
std::vector<std::uint64_t> dual_words(std::span<const std::uint64_t> words, std::size_t n, PrimeModulus mod,
                                      std::uint64_t budget = default_codeword_budget);

/// (hat((C:v)), bar((C:(1-v)))) for the code spanned by generator, where
/// (C:a) = {x in R^n : a x in C} is found by scanning all of R^n.
std::pair<FpLinearCode, FpLinearCode> torsion_codes_oracle(const RMatrix& generator,
                                                           std::uint64_t budget = default_codeword_budget);
std::pair<FpLinearCode, FpLinearCode> torsion_codes_oracle(const RLinearCode& code,
                                                           std::uint64_t budget = default_codeword_budget);

}  // namespace fpv::brute

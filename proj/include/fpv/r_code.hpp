#pragma once

#include <cstddef>
#include <utility>
#include <variant>

#include "fpv/fp_code.hpp"
#include "fpv/matrix.hpp"

namespace fpv {

/// A linear code C over R held as the pair (C1, C2) of its bar and hat
/// projections. C = v*C2 + (1-v)*C1 and |C| = p^(dim C1 + dim C2).
class RLinearCode {
public:
    static RLinearCode from_generator(const RMatrix& generator);
    static RLinearCode from_components(FpLinearCode c1, FpLinearCode c2);
    static RLinearCode zero(PrimeModulus mod, std::size_t n);
    static RLinearCode full(PrimeModulus mod, std::size_t n);

    std::size_t length() const noexcept { return c1_.length(); }
    PrimeModulus modulus() const noexcept { return c1_.modulus(); }
    const FpLinearCode& c1() const noexcept { return c1_; }
    const FpLinearCode& c2() const noexcept { return c2_; }
    /// log_p |C|.
    std::size_t log_size() const noexcept { return c1_.dimension() + c2_.dimension(); }

    /// Rows v*y_i + (1-v)*z_i over the RREF bases, padded with the surplus
    /// rows of the larger component.
    RMatrix generator_matrix() const;

    bool contains(std::span<const RScalar> word) const;

    friend bool operator==(const RLinearCode&, const RLinearCode&) = default;

private:
    RLinearCode(FpLinearCode c1, FpLinearCode c2) : c1_(std::move(c1)), c2_(std::move(c2)) {}

    FpLinearCode c1_;
    FpLinearCode c2_;
};

/// (C1, C2).
std::pair<FpLinearCode, FpLinearCode> components(const RLinearCode& code);

RLinearCode permute(const RLinearCode& code, const Permutation& perm);

struct TypeTriple {
    std::size_t k1 = 0;
    std::size_t k2 = 0;
    std::size_t k3 = 0;

    std::size_t total() const noexcept { return k1 + k2 + k3; }
    friend bool operator==(const TypeTriple&, const TypeTriple&) = default;
};

/// p-ary blocks of the odd-characteristic layout
///
///   [ I  (1-v)B1  vA1      v(A2|A3) + (1-v)(B2|B3) ]
///   [ 0  vI       0        v(A4|0)                 ]
///   [ 0  0        (1-v)I   (1-v)(0|B4)             ]
struct OddBlocks {
    FpMatrix b1, a1, a2, a3, b2, b3, a4, b4;

    FpMatrix d1() const { return hstack(a2, a3); }
    FpMatrix d2() const { return hstack(b2, b3); }
    FpMatrix c1() const;
    FpMatrix c2() const;
};

/// p-ary blocks of the characteristic-2 layout
///
///   [ I  A   B        D1 + vD2 ]
///   [ 0  vI  0        vC1      ]
///   [ 0  0   (1+v)I   (1+v)E   ]
struct BinaryBlocks {
    FpMatrix a, b, d1, d2, c1, e;
};

struct StandardForm {
    RMatrix matrix;
    TypeTriple type;
    /// code * perm is generated by matrix.
    Permutation perm;
    /// Width of the tail group carrying A4; the remaining tail columns carry B4.
    std::size_t tail_v_width = 0;
    std::variant<OddBlocks, BinaryBlocks> blocks;
};

/// Column permutation plus row reduction to the layouts above. Unit pivots
/// are taken greedily, left to right, from columns where both components
/// still have support; this makes the leftover v- and (1-v)-rows disjointly
/// supported, which is what the block layout needs.
StandardForm standard_form(const RLinearCode& code);
/// Same, scanning columns in the order scan.images() instead of left to
/// right. The emitted perm is expressed in the original coordinates.
StandardForm standard_form(const RLinearCode& code, const Permutation& scan);

/// Parity-check matrix of the code generated by form.matrix (permuted
/// coordinates). Uses the odd or characteristic-2 block formula as appropriate.
RMatrix parity_check(const StandardForm& form);

/// v*C2^perp + (1-v)*C1^perp.
RLinearCode dual(const RLinearCode& code);
/// Dual from the parity-check matrix, mapped back through perm^-1.
RLinearCode dual_via_parity_check(const RLinearCode& code);

bool is_self_orthogonal(const RLinearCode& code);
/// C1 and C2 both self-dual.
bool is_self_dual(const RLinearCode& code);
/// Self-orthogonal, n = 2(k1 + k2) and k2 = k3.
bool check_type_condition(const RLinearCode& code);

/// Length-2n code {(bar(x) | hat(x)) : x in C} over F_p.
FpLinearCode gray_image(const RLinearCode& code);

}  // namespace fpv

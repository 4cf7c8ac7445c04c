#include "fpv/r_code.hpp"

#include <algorithm>
#include <string>

namespace fpv {

// ---------------------------------------------------------------- RLinearCode

RLinearCode RLinearCode::from_generator(const RMatrix& generator) {
    return RLinearCode(FpLinearCode::from_generator(project_matrix(generator, Projection::bar)),
                       FpLinearCode::from_generator(project_matrix(generator, Projection::hat)));
}

RLinearCode RLinearCode::from_components(FpLinearCode c1, FpLinearCode c2) {
    require_same_modulus(c1.modulus(), c2.modulus());
    if (c1.length() != c2.length())
        throw Error(ErrorCode::dimension_mismatch, "component codes have lengths " + std::to_string(c1.length()) +
                                                       " and " + std::to_string(c2.length()));
    return RLinearCode(std::move(c1), std::move(c2));
}

RLinearCode RLinearCode::zero(PrimeModulus mod, std::size_t n) {
    return RLinearCode(FpLinearCode::zero(mod, n), FpLinearCode::zero(mod, n));
}

RLinearCode RLinearCode::full(PrimeModulus mod, std::size_t n) {
    return RLinearCode(FpLinearCode::full(mod, n), FpLinearCode::full(mod, n));
}

RMatrix RLinearCode::generator_matrix() const {
    const auto mod = modulus();
    const std::size_t n = length();
    const std::size_t l1 = c1_.dimension(), l2 = c2_.dimension();
    RMatrix g(mod, std::max(l1, l2), n);
    for (std::size_t i = 0; i < g.rows(); ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const std::uint32_t z = i < l1 ? c1_.basis()(i, j) : 0;
            const std::uint32_t y = i < l2 ? c2_.basis()(i, j) : 0;
            g.set(i, j, crt_assemble(z, y, mod));
        }
    return g;
}

bool RLinearCode::contains(std::span<const RScalar> word) const {
    if (word.size() != length()) return false;
    std::vector<std::uint32_t> bar(word.size()), hat(word.size());
    for (std::size_t j = 0; j < word.size(); ++j) {
        require_same_modulus(modulus(), word[j].modulus());
        bar[j] = word[j].bar().value();
        hat[j] = word[j].hat().value();
    }
    return c1_.contains(bar) && c2_.contains(hat);
}

std::pair<FpLinearCode, FpLinearCode> components(const RLinearCode& code) { return {code.c1(), code.c2()}; }

RLinearCode permute(const RLinearCode& code, const Permutation& perm) {
    return RLinearCode::from_components(FpLinearCode::from_generator(apply_permutation(code.c1().basis(), perm)),
                                        FpLinearCode::from_generator(apply_permutation(code.c2().basis(), perm)));
}

FpMatrix OddBlocks::c1() const { return hstack(a4, FpMatrix(a4.modulus(), a4.rows(), b4.cols())); }
FpMatrix OddBlocks::c2() const { return hstack(FpMatrix(b4.modulus(), b4.rows(), a4.cols()), b4); }

// -------------------------------------------------------------- standard form

namespace {

using Row = std::vector<std::uint32_t>;

[[noreturn]] void internal_error(const std::string& what) {
    throw Error(ErrorCode::internal, "standard form: " + what);
}

std::vector<Row> rows_of(const FpMatrix& m) {
    std::vector<Row> out;
    for (std::size_t i = 0; i < m.rows(); ++i) out.emplace_back(m.row(i).begin(), m.row(i).end());
    return out;
}

FpMatrix matrix_of(PrimeModulus mod, std::size_t n, const std::vector<Row>& rows) {
    FpMatrix m(mod, 0, n);
    for (const auto& r : rows) m.append_row(r);
    return m;
}

void scale(PrimeModulus mod, Row& r, std::uint32_t f) {
    for (auto& x : r) x = mod.mul(x, f);
}

/// r -= f * s
void axpy(PrimeModulus mod, Row& r, std::uint32_t f, const Row& s) {
    if (f == 0) return;
    for (std::size_t j = 0; j < r.size(); ++j) r[j] = mod.sub(r[j], mod.mul(f, s[j]));
}

/// Basis of the row space of m whose restriction to the columns in `pivots`
/// (in that order) is the identity. The restriction must be invertible.
FpMatrix systematic(const FpMatrix& m, const std::vector<std::size_t>& pivots) {
    const auto mod = m.modulus();
    auto rows = rows_of(m);
    if (rows.size() != pivots.size()) internal_error("pivot count does not match dimension");
    for (std::size_t t = 0; t < pivots.size(); ++t) {
        const auto c = pivots[t];
        std::size_t r = t;
        while (r < rows.size() && rows[r][c] == 0) ++r;
        if (r == rows.size()) internal_error("pivot columns are not an information set");
        std::swap(rows[t], rows[r]);
        scale(mod, rows[t], mod.inv(rows[t][c]));
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (i != t) axpy(mod, rows[i], rows[i][c], rows[t]);
    }
    return matrix_of(mod, m.cols(), rows);
}

FpMatrix block(const FpMatrix& m, std::size_t r0, std::size_t nr, std::size_t c0, std::size_t nc) {
    FpMatrix out(m.modulus(), nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j) out.set(i, j, m(r0 + i, c0 + j));
    return out;
}

FpMatrix add_mul(const FpMatrix& x, const FpMatrix& a, const FpMatrix& b) {
    const auto prod = matmul(a, b);
    FpMatrix out = x;
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t j = 0; j < x.cols(); ++j) out.set(i, j, x.modulus().add(x(i, j), prod(i, j)));
    return out;
}

FpMatrix sub(const FpMatrix& x, const FpMatrix& y) {
    FpMatrix out = x;
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t j = 0; j < x.cols(); ++j) out.set(i, j, x.modulus().sub(x(i, j), y(i, j)));
    return out;
}

struct Layout {
    std::size_t k1, k2, k3, wa, wb;
    std::size_t n() const { return k1 + k2 + k3 + wa + wb; }
    std::size_t col2() const { return k1; }
    std::size_t col3() const { return k1 + k2; }
    std::size_t tail() const { return k1 + k2 + k3; }
};

RMatrix assemble_odd(PrimeModulus mod, const Layout& L, const OddBlocks& b) {
    const auto one = 1 % mod.value();
    RMatrix g(mod, L.k1 + L.k2 + L.k3, L.n());
    for (std::size_t i = 0; i < L.k1; ++i) {
        g.set(i, i, RScalar::one(mod));
        for (std::size_t j = 0; j < L.k2; ++j) g.set(i, L.col2() + j, crt_assemble(b.b1(i, j), 0, mod));
        for (std::size_t j = 0; j < L.k3; ++j) g.set(i, L.col3() + j, crt_assemble(0, b.a1(i, j), mod));
        for (std::size_t j = 0; j < L.wa; ++j) g.set(i, L.tail() + j, crt_assemble(b.b2(i, j), b.a2(i, j), mod));
        for (std::size_t j = 0; j < L.wb; ++j)
            g.set(i, L.tail() + L.wa + j, crt_assemble(b.b3(i, j), b.a3(i, j), mod));
    }
    for (std::size_t s = 0; s < L.k2; ++s) {
        const auto r = L.k1 + s;
        g.set(r, L.col2() + s, crt_assemble(0, one, mod));
        for (std::size_t j = 0; j < L.wa; ++j) g.set(r, L.tail() + j, crt_assemble(0, b.a4(s, j), mod));
    }
    for (std::size_t s = 0; s < L.k3; ++s) {
        const auto r = L.k1 + L.k2 + s;
        g.set(r, L.col3() + s, crt_assemble(one, 0, mod));
        for (std::size_t j = 0; j < L.wb; ++j) g.set(r, L.tail() + L.wa + j, crt_assemble(b.b4(s, j), 0, mod));
    }
    return g;
}

RMatrix assemble_binary(PrimeModulus mod, const Layout& L, const BinaryBlocks& b) {
    const std::size_t w = L.wa + L.wb;
    const RScalar one_plus_v(1, 1, mod);
    RMatrix g(mod, L.k1 + L.k2 + L.k3, L.n());
    for (std::size_t i = 0; i < L.k1; ++i) {
        g.set(i, i, RScalar::one(mod));
        for (std::size_t j = 0; j < L.k2; ++j) g.set(i, L.col2() + j, RScalar(b.a(i, j), 0, mod));
        for (std::size_t j = 0; j < L.k3; ++j) g.set(i, L.col3() + j, RScalar(b.b(i, j), 0, mod));
        for (std::size_t j = 0; j < w; ++j) g.set(i, L.tail() + j, RScalar(b.d1(i, j), b.d2(i, j), mod));
    }
    for (std::size_t s = 0; s < L.k2; ++s) {
        const auto r = L.k1 + s;
        g.set(r, L.col2() + s, RScalar::v(mod));
        for (std::size_t j = 0; j < w; ++j) g.set(r, L.tail() + j, RScalar(0, b.c1(s, j), mod));
    }
    for (std::size_t s = 0; s < L.k3; ++s) {
        const auto r = L.k1 + L.k2 + s;
        g.set(r, L.col3() + s, one_plus_v);
        for (std::size_t j = 0; j < w; ++j) g.set(r, L.tail() + j, RScalar(b.e(s, j), b.e(s, j), mod));
    }
    return g;
}

Layout layout_of(const StandardForm& form) {
    const auto n = form.matrix.cols();
    const auto& t = form.type;
    return {t.k1, t.k2, t.k3, form.tail_v_width, n - t.total() - form.tail_v_width};
}

}  // namespace

StandardForm standard_form(const RLinearCode& code) {
    const auto mod = code.modulus();
    const std::size_t n = code.length();

    // Pass 1: unit pivots. A column qualifies when both residual components
    // have support there; the pivot rows leave the residuals.
    auto u1 = rows_of(code.c1().basis());
    auto u2 = rows_of(code.c2().basis());
    std::vector<std::size_t> j1;
    for (std::size_t c = 0; c < n; ++c) {
        auto hit = [c](const Row& r) { return r[c] != 0; };
        auto r1 = std::find_if(u1.begin(), u1.end(), hit);
        auto r2 = std::find_if(u2.begin(), u2.end(), hit);
        if (r1 == u1.end() || r2 == u2.end()) continue;
        Row z = *r1, y = *r2;
        u1.erase(r1);
        u2.erase(r2);
        scale(mod, z, mod.inv(z[c]));
        scale(mod, y, mod.inv(y[c]));
        for (auto& r : u1) axpy(mod, r, r[c], z);
        for (auto& r : u2) axpy(mod, r, r[c], y);
        j1.push_back(c);
    }

    // Passes 2 and 3: v-pivots from the residual of C2, (1-v)-pivots from
    // the residual of C1.
    const auto res2 = rref(matrix_of(mod, n, u2));
    const auto res1 = rref(matrix_of(mod, n, u1));
    const auto& j2 = res2.pivots;
    const auto& j3 = res1.pivots;

    std::vector<bool> supp1(n, false), supp2(n, false), used(n, false);
    for (const auto& r : u1)
        for (std::size_t c = 0; c < n; ++c) supp1[c] = supp1[c] || r[c] != 0;
    for (const auto& r : u2)
        for (std::size_t c = 0; c < n; ++c) supp2[c] = supp2[c] || r[c] != 0;
    for (std::size_t c = 0; c < n; ++c)
        if (supp1[c] && supp2[c]) internal_error("residual components overlap in column " + std::to_string(c));

    std::vector<std::size_t> order;
    for (const auto* list : std::initializer_list<const std::vector<std::size_t>*>{&j1, &j2, &j3})
        for (auto c : *list) {
            order.push_back(c);
            used[c] = true;
        }
    std::vector<std::size_t> tail_a, tail_b;
    for (std::size_t c = 0; c < n; ++c)
        if (!used[c]) (supp1[c] ? tail_b : tail_a).push_back(c);
    order.insert(order.end(), tail_a.begin(), tail_a.end());
    order.insert(order.end(), tail_b.begin(), tail_b.end());
    Permutation perm(order);

    const Layout L{j1.size(), j2.size(), j3.size(), tail_a.size(), tail_b.size()};
    if (L.k1 + L.k3 != code.c1().dimension() || L.k1 + L.k2 != code.c2().dimension())
        internal_error("type does not match component dimensions");

    std::vector<std::size_t> p2(j1), p1(j1);
    p2.insert(p2.end(), j2.begin(), j2.end());
    p1.insert(p1.end(), j3.begin(), j3.end());
    const auto s2 = apply_permutation(systematic(code.c2().basis(), p2), perm);
    const auto s1 = apply_permutation(systematic(code.c1().basis(), p1), perm);

    OddBlocks odd{
        .b1 = block(s1, 0, L.k1, L.col2(), L.k2),
        .a1 = block(s2, 0, L.k1, L.col3(), L.k3),
        .a2 = block(s2, 0, L.k1, L.tail(), L.wa),
        .a3 = block(s2, 0, L.k1, L.tail() + L.wa, L.wb),
        .b2 = block(s1, 0, L.k1, L.tail(), L.wa),
        .b3 = block(s1, 0, L.k1, L.tail() + L.wa, L.wb),
        .a4 = block(s2, L.k1, L.k2, L.tail(), L.wa),
        .b4 = block(s1, L.k1, L.k3, L.tail() + L.wa, L.wb),
    };

    StandardForm form{RMatrix(mod, 0, n), TypeTriple{L.k1, L.k2, L.k3}, perm, L.wa, odd};
    if (mod.value() == 2) {
        // Fold the (1+v)B1 and vA1 entries into F_2 by adding the matching
        // v- and (1+v)-rows.
        const auto bar_tail = hstack(odd.b2, add_mul(odd.b3, odd.a1, odd.b4));
        const auto hat_tail = hstack(add_mul(odd.a2, odd.b1, odd.a4), odd.a3);
        BinaryBlocks bin{
            .a = odd.b1,
            .b = odd.a1,
            .d1 = bar_tail,
            .d2 = sub(hat_tail, bar_tail),
            .c1 = odd.c1(),
            .e = odd.c2(),
        };
        form.matrix = assemble_binary(mod, L, bin);
        form.blocks = std::move(bin);
    } else {
        form.matrix = assemble_odd(mod, L, odd);
    }

    if (RLinearCode::from_generator(form.matrix) != permute(code, perm))
        internal_error("reduced matrix does not generate the permuted code");
    return form;
}

StandardForm standard_form(const RLinearCode& code, const Permutation& scan) {
    if (scan.size() != code.length()) throw Error(ErrorCode::dimension_mismatch, "scan order has the wrong length");
    auto form = standard_form(permute(code, scan));
    std::vector<std::size_t> images(scan.size());
    for (std::size_t j = 0; j < images.size(); ++j) images[j] = scan[form.perm[j]];
    form.perm = Permutation(std::move(images));
    return form;
}

// --------------------------------------------------------------- parity check

RMatrix parity_check(const StandardForm& form) {
    const auto mod = form.matrix.modulus();
    const auto L = layout_of(form);
    const std::size_t n = L.n(), k = L.tail(), w = n - k;
    RMatrix h(mod, w + L.k3 + L.k2, n);
    const auto one = 1 % mod.value();

    if (const auto* b = std::get_if<OddBlocks>(&form.blocks)) {
        // E1 = (-A2 | A1 B4 - A3)^T, E2 = (B1 A4 - B2 | -B3)^T,
        // P = (-A4 | 0)^T, Q = (0 | -B4)^T.
        const auto a1b4 = matmul(b->a1, b->b4);
        const auto b1a4 = matmul(b->b1, b->a4);
        for (std::size_t t = 0; t < w; ++t) {
            const bool in_a = t < L.wa;
            const std::size_t u = in_a ? t : t - L.wa;
            for (std::size_t i = 0; i < L.k1; ++i) {
                const auto e1 = in_a ? mod.neg(b->a2(i, u)) : mod.sub(a1b4(i, u), b->a3(i, u));
                const auto e2 = in_a ? mod.sub(b1a4(i, u), b->b2(i, u)) : mod.neg(b->b3(i, u));
                h.set(t, i, crt_assemble(e2, e1, mod));
            }
            if (in_a)
                for (std::size_t s = 0; s < L.k2; ++s) h.set(t, L.col2() + s, RScalar(mod.neg(b->a4(s, u)), 0, mod));
            else
                for (std::size_t s = 0; s < L.k3; ++s) h.set(t, L.col3() + s, RScalar(mod.neg(b->b4(s, u)), 0, mod));
            h.set(t, k + t, RScalar::one(mod));
        }
        for (std::size_t s = 0; s < L.k3; ++s) {
            const auto r = w + s;
            for (std::size_t i = 0; i < L.k1; ++i) h.set(r, i, crt_assemble(0, mod.neg(b->a1(i, s)), mod));
            h.set(r, L.col3() + s, crt_assemble(0, one, mod));
        }
        for (std::size_t s = 0; s < L.k2; ++s) {
            const auto r = w + L.k3 + s;
            for (std::size_t i = 0; i < L.k1; ++i) h.set(r, i, crt_assemble(mod.neg(b->b1(i, s)), 0, mod));
            h.set(r, L.col2() + s, crt_assemble(one, 0, mod));
        }
        return h;
    }

    // Characteristic 2:
    //   [ E^T B^T + C1^T A^T + (D1 + vD2)^T   C1^T      E^T   I ]
    //   [ vB^T                                0         vI    0 ]
    //   [ (1+v)A^T                            (1+v)I    0     0 ]
    const auto& b = std::get<BinaryBlocks>(form.blocks);
    const auto first = transpose(add_mul(add_mul(b.d1, b.b, b.e), b.a, b.c1));
    for (std::size_t t = 0; t < w; ++t) {
        for (std::size_t i = 0; i < L.k1; ++i) h.set(t, i, RScalar(first(t, i), b.d2(i, t), mod));
        for (std::size_t s = 0; s < L.k2; ++s) h.set(t, L.col2() + s, RScalar(b.c1(s, t), 0, mod));
        for (std::size_t s = 0; s < L.k3; ++s) h.set(t, L.col3() + s, RScalar(b.e(s, t), 0, mod));
        h.set(t, k + t, RScalar::one(mod));
    }
    for (std::size_t s = 0; s < L.k3; ++s) {
        const auto r = w + s;
        for (std::size_t i = 0; i < L.k1; ++i) h.set(r, i, RScalar(0, b.b(i, s), mod));
        h.set(r, L.col3() + s, RScalar::v(mod));
    }
    for (std::size_t s = 0; s < L.k2; ++s) {
        const auto r = w + L.k3 + s;
        for (std::size_t i = 0; i < L.k1; ++i) h.set(r, i, RScalar(b.a(i, s), b.a(i, s), mod));
        h.set(r, L.col2() + s, RScalar(1, 1, mod));
    }
    return h;
}

// ---------------------------------------------------------- duals and checks

RLinearCode dual(const RLinearCode& code) {
    return RLinearCode::from_components(dual(code.c1()), dual(code.c2()));
}

RLinearCode dual_via_parity_check(const RLinearCode& code) {
    const auto form = standard_form(code);
    return RLinearCode::from_generator(apply_permutation(parity_check(form), form.perm.inverse()));
}

bool is_self_orthogonal(const RLinearCode& code) {
    const auto mod = code.modulus();
    const auto n = code.length();
    std::vector<std::vector<RScalar>> gens;
    auto add = [&](const FpMatrix& basis, bool is_c2) {
        for (std::size_t i = 0; i < basis.rows(); ++i) {
            std::vector<RScalar> row;
            row.reserve(n);
            for (std::size_t j = 0; j < n; ++j)
                row.push_back(is_c2 ? crt_assemble(0, basis(i, j), mod) : crt_assemble(basis(i, j), 0, mod));
            gens.push_back(std::move(row));
        }
    };
    add(code.c2().basis(), true);
    add(code.c1().basis(), false);
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = i; j < gens.size(); ++j)
            if (!dot(mod, gens[i], gens[j]).is_zero()) return false;
    return true;
}

bool is_self_dual(const RLinearCode& code) { return is_self_dual(code.c1()) && is_self_dual(code.c2()); }

bool check_type_condition(const RLinearCode& code) {
    if (!is_self_orthogonal(code)) return false;
    const auto t = standard_form(code).type;
    return code.length() == 2 * (t.k1 + t.k2) && t.k2 == t.k3;
}

FpLinearCode gray_image(const RLinearCode& code) {
    const auto mod = code.modulus();
    const auto n = code.length();
    FpMatrix g(mod, 0, 2 * n);
    std::vector<std::uint32_t> row(2 * n);
    for (std::size_t i = 0; i < code.c1().dimension(); ++i) {
        std::fill(row.begin(), row.end(), 0);
        std::copy_n(code.c1().basis().row(i).begin(), n, row.begin());
        g.append_row(row);
    }
    for (std::size_t i = 0; i < code.c2().dimension(); ++i) {
        std::fill(row.begin(), row.end(), 0);
        std::copy_n(code.c2().basis().row(i).begin(), n, row.begin() + static_cast<std::ptrdiff_t>(n));
        g.append_row(row);
    }
    return FpLinearCode::from_generator(g);
}

}  // namespace fpv

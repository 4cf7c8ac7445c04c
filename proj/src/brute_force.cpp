#include "fpv/brute_force.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace fpv::brute {

namespace {

void check_budget(std::uint64_t needed, std::uint64_t budget, const char* what) {
    if (needed > budget)
        throw Error(ErrorCode::budget_exceeded,
                    std::string(what) + " exceeds the enumeration budget of " + std::to_string(budget));
}

std::uint64_t space_size(PrimeModulus mod, std::size_t n) {
    return saturating_pow(static_cast<std::uint64_t>(mod.value()) * mod.value(), n);
}

std::vector<RScalar> add_scaled(const std::vector<RScalar>& x, const RScalar& r, std::span<const RScalar> y) {
    std::vector<RScalar> out = x;
    for (std::size_t j = 0; j < out.size(); ++j) out[j] = out[j] + r * y[j];
    return out;
}

}  // namespace

std::uint64_t encode(std::span<const RScalar> word) {
    std::uint64_t index = 0;
    for (std::size_t j = word.size(); j > 0; --j) {
        const auto& x = word[j - 1];
        const std::uint64_t p = x.modulus().value();
        index = index * p * p + x.a() + p * x.b();
    }
    return index;
}

std::vector<RScalar> decode(std::uint64_t index, std::size_t n, PrimeModulus mod) {
    const std::uint64_t p = mod.value();
    std::vector<RScalar> word;
    word.reserve(n);
    for (std::size_t j = 0; j < n; ++j) {
        const auto digit = index % (p * p);
        index /= p * p;
        word.emplace_back(static_cast<std::uint32_t>(digit % p), static_cast<std::uint32_t>(digit / p), mod);
    }
    return word;
}

std::vector<std::uint64_t> span_closure(const RMatrix& generator, std::uint64_t budget) {
    const auto mod = generator.modulus();
    const std::uint64_t p = mod.value();
    const std::size_t n = generator.cols();
    check_budget(space_size(mod, n), std::max<std::uint64_t>(budget, 1), "span closure");

    std::vector<RScalar> scalars;
    for (std::uint32_t a = 0; a < p; ++a)
        for (std::uint32_t b = 0; b < p; ++b) scalars.emplace_back(a, b, mod);

    std::set<std::uint64_t> seen{encode(std::vector<RScalar>(n, RScalar::zero(mod)))};
    std::vector<std::vector<RScalar>> words{std::vector<RScalar>(n, RScalar::zero(mod))};
    for (std::size_t i = 0; i < generator.rows(); ++i) {
        const auto g = generator.row(i);
        std::vector<std::vector<RScalar>> next;
        for (const auto& w : words)
            for (const auto& r : scalars) {
                auto x = add_scaled(w, r, g);
                if (seen.insert(encode(x)).second) next.push_back(std::move(x));
            }
        words.insert(words.end(), std::make_move_iterator(next.begin()), std::make_move_iterator(next.end()));
    }
    return {seen.begin(), seen.end()};
}

std::vector<std::uint64_t> decomposition_words(const RLinearCode& code, std::uint64_t budget) {
    const auto mod = code.modulus();
    const auto n = code.length();
    check_budget(saturating_pow(mod.value(), code.log_size()), budget, "decomposition enumeration");
    const auto w1 = codewords(code.c1(), budget);
    const auto w2 = codewords(code.c2(), budget);
    std::vector<std::uint64_t> out;
    out.reserve(w1.size() * w2.size());
    std::vector<RScalar> x(n, RScalar::zero(mod));
    for (const auto& c1 : w1)
        for (const auto& c2 : w2) {
            for (std::size_t j = 0; j < n; ++j) x[j] = crt_assemble(c1[j], c2[j], mod);
            out.push_back(encode(x));
        }
    std::sort(out.begin(), out.end());
    if (std::adjacent_find(out.begin(), out.end()) != out.end())
        throw Error(ErrorCode::internal, "v*c2 + (1-v)*c1 is not unique");
    return out;
}

std::vector<std::uint64_t> dual_words(std::span<const std::uint64_t> words, std::size_t n, PrimeModulus mod,
                                      std::uint64_t budget) {
    const auto total = space_size(mod, n);
    check_budget(total, budget, "dual enumeration");
    std::vector<std::vector<RScalar>> decoded;
    decoded.reserve(words.size());
    for (auto w : words) decoded.push_back(decode(w, n, mod));

    std::vector<std::uint64_t> out;
    for (std::uint64_t u = 0; u < total; ++u) {
        const auto x = decode(u, n, mod);
        const bool orthogonal =
            std::all_of(decoded.begin(), decoded.end(), [&](const auto& w) { return dot(mod, x, w).is_zero(); });
        if (orthogonal) out.push_back(u);
    }
    return out;
}

std::pair<FpLinearCode, FpLinearCode> torsion_codes_oracle(const RMatrix& generator, std::uint64_t budget) {
    const auto mod = generator.modulus();
    const auto n = generator.cols();
    const auto words = span_closure(generator, budget);
    const auto total = space_size(mod, n);
    check_budget(total, budget, "torsion enumeration");

    const auto v = RScalar::v(mod);
    const auto w = RScalar::one_minus_v(mod);
    auto in_code = [&](const std::vector<RScalar>& x) { return std::binary_search(words.begin(), words.end(), encode(x)); };

    std::set<std::vector<std::uint32_t>> hats, bars;
    std::vector<RScalar> scaled(n, RScalar::zero(mod));
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        const auto x = decode(idx, n, mod);
        for (std::size_t j = 0; j < n; ++j) scaled[j] = v * x[j];
        if (in_code(scaled)) {
            std::vector<std::uint32_t> h(n);
            for (std::size_t j = 0; j < n; ++j) h[j] = x[j].hat().value();
            hats.insert(std::move(h));
        }
        for (std::size_t j = 0; j < n; ++j) scaled[j] = w * x[j];
        if (in_code(scaled)) {
            std::vector<std::uint32_t> b(n);
            for (std::size_t j = 0; j < n; ++j) b[j] = x[j].bar().value();
            bars.insert(std::move(b));
        }
    }
    FpMatrix hat_rows(mod, 0, n), bar_rows(mod, 0, n);
    for (const auto& h : hats) hat_rows.append_row(h);
    for (const auto& b : bars) bar_rows.append_row(b);
    return {FpLinearCode::from_generator(hat_rows), FpLinearCode::from_generator(bar_rows)};
}

std::pair<FpLinearCode, FpLinearCode> torsion_codes_oracle(const RLinearCode& code, std::uint64_t budget) {
    return torsion_codes_oracle(code.generator_matrix(), budget);
}

}  // namespace fpv::brute

#include "fpv/code_file.hpp"

#include <charconv>
#include <vector>

namespace fpv {

PrimeModulus CodeFile::modulus() const {
    return std::visit([](const auto& m) { return m.modulus(); }, matrix);
}

std::size_t CodeFile::length() const {
    return std::visit([](const auto& m) { return m.cols(); }, matrix);
}

namespace {

struct Token {
    std::string_view text;
    std::size_t column;  // 1-based
};

[[noreturn]] void parse_error(std::size_t line, std::size_t column, const std::string& what) {
    throw Error(ErrorCode::parse, "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what);
}

std::vector<Token> tokenize(std::string_view line) {
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::vector<Token> out;
    std::size_t i = 0;
    auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; };
    while (i < line.size()) {
        while (i < line.size() && is_space(line[i])) ++i;
        const auto start = i;
        while (i < line.size() && !is_space(line[i])) ++i;
        if (i > start) out.push_back({line.substr(start, i - start), start + 1});
    }
    return out;
}

std::uint64_t parse_header_number(const Token& t, std::size_t line) {
    std::uint64_t value = 0;
    const auto* end = t.text.data() + t.text.size();
    auto [ptr, ec] = std::from_chars(t.text.data(), end, value);
    if (ec != std::errc{} || ptr != end) parse_error(line, t.column, "expected a non-negative integer, got '" + std::string(t.text) + "'");
    return value;
}

}  // namespace

CodeFile parse_code_file(std::string_view text) {
    std::size_t line_no = 0;
    std::size_t pos = 0;
    bool have_header = false;
    RingKind ring = RingKind::fp;
    std::uint32_t p = 2;
    std::size_t n = 0;
    std::vector<std::pair<std::size_t, std::vector<Token>>> rows;

    while (pos <= text.size()) {
        const auto nl = text.find('\n', pos);
        const auto line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;
        auto tokens = tokenize(line);
        if (tokens.empty()) continue;
        if (!have_header) {
            if (tokens.size() != 6 || tokens[0].text != "ring" || tokens[2].text != "p" || tokens[4].text != "n")
                parse_error(line_no, tokens[0].column, "expected header 'ring <fp|fpv> p <prime> n <length>'");
            if (tokens[1].text == "fp")
                ring = RingKind::fp;
            else if (tokens[1].text == "fpv")
                ring = RingKind::fpv;
            else
                parse_error(line_no, tokens[1].column, "unknown ring '" + std::string(tokens[1].text) + "'");
            const auto pv = parse_header_number(tokens[3], line_no);
            if (pv >= PrimeModulus::max_value || !is_prime(static_cast<std::uint32_t>(pv)))
                parse_error(line_no, tokens[3].column, std::to_string(pv) + " is not a prime below 2^16");
            p = static_cast<std::uint32_t>(pv);
            n = parse_header_number(tokens[5], line_no);
            have_header = true;
            continue;
        }
        if (tokens.size() != n)
            parse_error(line_no, tokens.back().column,
                        "row has " + std::to_string(tokens.size()) + " entries, expected " + std::to_string(n));
        rows.emplace_back(line_no, std::move(tokens));
    }
    if (!have_header) parse_error(line_no == 0 ? 1 : line_no, 1, "missing header line");

    const PrimeModulus mod(p);
    auto at = [&](std::size_t line, const Token& t, auto&& fn) {
        try {
            return fn(t.text, mod);
        } catch (const Error& e) {
            parse_error(line, t.column, e.what());
        }
    };
    if (ring == RingKind::fp) {
        FpMatrix m(mod, rows.size(), n);
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = 0; j < n; ++j)
                m.set(i, j, at(rows[i].first, rows[i].second[j], [](auto s, auto md) { return parse_residue(s, md); }));
        return {ring, std::move(m)};
    }
    RMatrix m(mod, rows.size(), n);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < n; ++j)
            m.set(i, j, at(rows[i].first, rows[i].second[j], [](auto s, auto md) { return parse_rscalar(s, md); }));
    return {ring, std::move(m)};
}

namespace {

std::string header(const char* ring, PrimeModulus mod, std::size_t n) {
    return std::string("ring ") + ring + " p " + std::to_string(mod.value()) + " n " + std::to_string(n) + "\n";
}

}  // namespace

std::string render_code_file(const FpMatrix& m) {
    std::string out = header("fp", m.modulus(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) out += ' ';
            out += std::to_string(m(i, j));
        }
        out += '\n';
    }
    return out;
}

std::string render_code_file(const RMatrix& m) {
    std::string out = header("fpv", m.modulus(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) out += ' ';
            out += to_token(m(i, j));
        }
        out += '\n';
    }
    return out;
}

std::string render_code_file(const CodeFile& file) {
    return std::visit([](const auto& m) { return render_code_file(m); }, file.matrix);
}

}  // namespace fpv

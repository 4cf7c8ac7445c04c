#include "fpv/fpv.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>
#include <variant>

#include "fpv/code_file.hpp"
#include "fpv/construct.hpp"
#include "fpv/fp_code.hpp"
#include "fpv/r_code.hpp"

struct fpv_matrix {
    std::variant<fpv::FpMatrix, fpv::RMatrix> value;
};

struct fpv_code {
    std::variant<fpv::FpLinearCode, fpv::RLinearCode> value;
};

namespace {

thread_local std::string last_error;

fpv_status status_of(fpv::ErrorCode code) {
    using fpv::ErrorCode;
    switch (code) {
        case ErrorCode::invalid_argument: return FPV_E_INVALID_ARGUMENT;
        case ErrorCode::parse: return FPV_E_PARSE;
        case ErrorCode::modulus_mismatch: return FPV_E_MODULUS_MISMATCH;
        case ErrorCode::dimension_mismatch: return FPV_E_DIMENSION_MISMATCH;
        case ErrorCode::division_by_zero: return FPV_E_DIVISION_BY_ZERO;
        case ErrorCode::budget_exceeded: return FPV_E_BUDGET_EXCEEDED;
        case ErrorCode::not_self_dual: return FPV_E_NOT_SELF_DUAL;
        case ErrorCode::no_such_code: return FPV_E_NO_SUCH_CODE;
        case ErrorCode::internal: return FPV_E_INTERNAL;
    }
    return FPV_E_INTERNAL;
}

fpv_status fail(fpv_status status, std::string message) {
    last_error = std::move(message);
    return status;
}

/// Runs fn, translating exceptions into status codes.
template <class F>
fpv_status guarded(F&& fn) {
    try {
        last_error.clear();
        fn();
        return FPV_OK;
    } catch (const fpv::Error& e) {
        return fail(status_of(e.code()), e.what());
    } catch (const std::bad_alloc&) {
        return fail(FPV_E_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(FPV_E_INTERNAL, e.what());
    }
}

void require(bool ok, const char* what) {
    if (!ok) throw fpv::Error(fpv::ErrorCode::invalid_argument, what);
}

const fpv::RLinearCode& r_code(const fpv_code* code) {
    require(code != nullptr, "null code handle");
    const auto* r = std::get_if<fpv::RLinearCode>(&code->value);
    require(r != nullptr, "operation needs a code over F_p + vF_p");
    return *r;
}

const fpv::FpMatrix& fp_matrix(const fpv_matrix* m, const char* which) {
    require(m != nullptr, "null matrix handle");
    const auto* f = std::get_if<fpv::FpMatrix>(&m->value);
    if (f == nullptr) throw fpv::Error(fpv::ErrorCode::invalid_argument, std::string(which) + " must be an fp matrix");
    return *f;
}

fpv::StandardForm form_of(const fpv::RLinearCode& code, const size_t* scan) {
    if (scan == nullptr) return fpv::standard_form(code);
    return fpv::standard_form(code, fpv::Permutation(std::vector<std::size_t>(scan, scan + code.length())));
}

char* copy_string(const std::string& s) {
    auto* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out == nullptr) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

fpv_construct_case case_of(fpv::ConstructionCase c) {
    switch (c) {
        case fpv::ConstructionCase::l1_gt_l2: return FPV_CASE_L1_GT_L2;
        case fpv::ConstructionCase::l1_lt_l2: return FPV_CASE_L1_LT_L2;
        case fpv::ConstructionCase::l1_eq_l2: return FPV_CASE_L1_EQ_L2;
    }
    return FPV_CASE_L1_EQ_L2;
}

}  // namespace

extern "C" {

const char* fpv_last_error(void) { return last_error.c_str(); }

const char* fpv_status_string(fpv_status status) {
    switch (status) {
        case FPV_OK: return "ok";
        case FPV_E_INVALID_ARGUMENT: return "invalid argument";
        case FPV_E_PARSE: return "parse error";
        case FPV_E_MODULUS_MISMATCH: return "modulus mismatch";
        case FPV_E_DIMENSION_MISMATCH: return "dimension mismatch";
        case FPV_E_DIVISION_BY_ZERO: return "division by zero";
        case FPV_E_BUDGET_EXCEEDED: return "enumeration budget exceeded";
        case FPV_E_NOT_SELF_DUAL: return "not self-dual";
        case FPV_E_NO_SUCH_CODE: return "no such code";
        case FPV_E_INTERNAL: return "internal error";
    }
    return "unknown status";
}

void fpv_string_free(char* s) { std::free(s); }

fpv_status fpv_matrix_parse(const char* text, fpv_matrix** out) {
    return guarded([&] {
        require(text != nullptr && out != nullptr, "null argument");
        auto file = fpv::parse_code_file(text);
        *out = new fpv_matrix{std::move(file.matrix)};
    });
}

fpv_status fpv_matrix_render(const fpv_matrix* m, char** out) {
    return guarded([&] {
        require(m != nullptr && out != nullptr, "null argument");
        *out = copy_string(std::visit([](const auto& x) { return fpv::render_code_file(x); }, m->value));
    });
}

fpv_status fpv_matrix_shape(const fpv_matrix* m, fpv_ring* ring, uint32_t* p, size_t* rows, size_t* cols) {
    return guarded([&] {
        require(m != nullptr, "null matrix handle");
        if (ring) *ring = std::holds_alternative<fpv::FpMatrix>(m->value) ? FPV_RING_FP : FPV_RING_FPV;
        std::visit(
            [&](const auto& x) {
                if (p) *p = x.modulus().value();
                if (rows) *rows = x.rows();
                if (cols) *cols = x.cols();
            },
            m->value);
    });
}

void fpv_matrix_free(fpv_matrix* m) { delete m; }

fpv_status fpv_code_from_matrix(const fpv_matrix* generator, fpv_code** out) {
    return guarded([&] {
        require(generator != nullptr && out != nullptr, "null argument");
        if (const auto* f = std::get_if<fpv::FpMatrix>(&generator->value))
            *out = new fpv_code{fpv::FpLinearCode::from_generator(*f)};
        else
            *out = new fpv_code{fpv::RLinearCode::from_generator(std::get<fpv::RMatrix>(generator->value))};
    });
}

void fpv_code_free(fpv_code* code) { delete code; }

fpv_status fpv_code_generator(const fpv_code* code, fpv_matrix** out) {
    return guarded([&] {
        require(code != nullptr && out != nullptr, "null argument");
        if (const auto* f = std::get_if<fpv::FpLinearCode>(&code->value))
            *out = new fpv_matrix{f->basis()};
        else
            *out = new fpv_matrix{std::get<fpv::RLinearCode>(code->value).generator_matrix()};
    });
}

fpv_status fpv_code_info_get(const fpv_code* code, fpv_code_info* info) {
    return guarded([&] {
        require(code != nullptr && info != nullptr, "null argument");
        fpv_code_info out{};
        if (const auto* f = std::get_if<fpv::FpLinearCode>(&code->value)) {
            out.ring = FPV_RING_FP;
            out.p = f->modulus().value();
            out.n = f->length();
            out.dim_c1 = out.dim_c2 = out.log_p_size = out.k1 = f->dimension();
            out.self_orthogonal = fpv::is_self_orthogonal(*f);
            out.self_dual = out.self_dual_type_condition = fpv::is_self_dual(*f);
        } else {
            const auto& r = std::get<fpv::RLinearCode>(code->value);
            const auto type = fpv::standard_form(r).type;
            out.ring = FPV_RING_FPV;
            out.p = r.modulus().value();
            out.n = r.length();
            out.dim_c1 = r.c1().dimension();
            out.dim_c2 = r.c2().dimension();
            out.log_p_size = r.log_size();
            out.k1 = type.k1;
            out.k2 = type.k2;
            out.k3 = type.k3;
            out.self_orthogonal = fpv::is_self_orthogonal(r);
            out.self_dual = fpv::is_self_dual(r);
            out.self_dual_type_condition = fpv::check_type_condition(r);
        }
        *info = out;
    });
}

fpv_status fpv_code_equal(const fpv_code* a, const fpv_code* b, int* equal) {
    return guarded([&] {
        require(a != nullptr && b != nullptr && equal != nullptr, "null argument");
        *equal = a->value == b->value;
    });
}

fpv_status fpv_code_dual(const fpv_code* code, fpv_code** out) {
    return guarded([&] {
        require(code != nullptr && out != nullptr, "null argument");
        *out = new fpv_code{std::visit([](const auto& c) -> decltype(fpv_code::value) { return fpv::dual(c); },
                                       code->value)};
    });
}

fpv_status fpv_code_dual_via_parity_check(const fpv_code* code, fpv_code** out) {
    return guarded([&] {
        require(out != nullptr, "null argument");
        *out = new fpv_code{fpv::dual_via_parity_check(r_code(code))};
    });
}

fpv_status fpv_code_components(const fpv_code* code, fpv_code** c1, fpv_code** c2) {
    return guarded([&] {
        require(c1 != nullptr && c2 != nullptr, "null argument");
        auto [x1, x2] = fpv::components(r_code(code));
        auto* h1 = new fpv_code{std::move(x1)};
        try {
            *c2 = new fpv_code{std::move(x2)};
        } catch (...) {
            delete h1;
            throw;
        }
        *c1 = h1;
    });
}

fpv_status fpv_code_standard_form(const fpv_code* code, const size_t* scan, fpv_matrix** form, size_t* perm,
                                  size_t type[3]) {
    return guarded([&] {
        require(form != nullptr, "null argument");
        auto sf = form_of(r_code(code), scan);
        if (perm)
            for (std::size_t j = 0; j < sf.perm.size(); ++j) perm[j] = sf.perm[j];
        if (type) {
            type[0] = sf.type.k1;
            type[1] = sf.type.k2;
            type[2] = sf.type.k3;
        }
        *form = new fpv_matrix{std::move(sf.matrix)};
    });
}

fpv_status fpv_code_parity_check(const fpv_code* code, const size_t* scan, fpv_matrix** h, size_t* perm) {
    return guarded([&] {
        require(h != nullptr, "null argument");
        const auto sf = form_of(r_code(code), scan);
        if (perm)
            for (std::size_t j = 0; j < sf.perm.size(); ++j) perm[j] = sf.perm[j];
        *h = new fpv_matrix{fpv::parity_check(sf)};
    });
}

fpv_status fpv_code_gray_image(const fpv_code* code, fpv_code** out) {
    return guarded([&] {
        require(out != nullptr, "null argument");
        *out = new fpv_code{fpv::gray_image(r_code(code))};
    });
}

fpv_status fpv_construct_from_pair(const fpv_matrix* g1, const fpv_matrix* g2, fpv_matrix** generator,
                                   fpv_code** code, fpv_construct_case* which) {
    return guarded([&] {
        require(code != nullptr, "null argument");
        auto report = fpv::construct_from_pair(fp_matrix(g1, "G1"), fp_matrix(g2, "G2"));
        if (which) *which = case_of(report.case_taken);
        auto* c = new fpv_code{std::move(report.code)};
        if (generator) {
            try {
                *generator = new fpv_matrix{std::move(report.generator_used)};
            } catch (...) {
                delete c;
                throw;
            }
        }
        *code = c;
    });
}

fpv_status fpv_build_self_dual(const fpv_matrix* g1, const fpv_matrix* g2, fpv_matrix** generator, fpv_code** code) {
    return guarded([&] {
        require(code != nullptr, "null argument");
        auto report = fpv::build_self_dual(fp_matrix(g1, "G1"), fp_matrix(g2, "G2"));
        auto* c = new fpv_code{std::move(report.code)};
        if (generator) {
            try {
                *generator = new fpv_matrix{std::move(report.generator_used)};
            } catch (...) {
                delete c;
                throw;
            }
        }
        *code = c;
    });
}

fpv_status fpv_seed_self_dual(uint32_t p, size_t n, fpv_code** out) {
    return guarded([&] {
        require(out != nullptr, "null argument");
        *out = new fpv_code{fpv::seed_self_dual(fpv::PrimeModulus(p), n)};
    });
}

fpv_status fpv_exists_self_dual(uint32_t p, size_t n, int* exists) {
    return guarded([&] {
        require(exists != nullptr, "null argument");
        *exists = fpv::exists_self_dual(fpv::PrimeModulus(p), n);
    });
}

fpv_status fpv_count_self_dual(uint32_t p, size_t n, fpv_ring over, uint64_t budget, fpv_count_report* report) {
    return guarded([&] {
        require(report != nullptr, "null argument");
        const fpv::PrimeModulus mod(p);
        fpv_count_report out{};
        if (over == FPV_RING_FP) {
            out.fp_count = fpv::census_self_dual(mod, n, budget).size();
        } else {
            const auto r = fpv::count_self_dual_r(mod, n, budget);
            out.fp_count = r.fp_count;
            out.r_count = r.r_count;
            out.pair_check_ran = r.pair_check_ran;
            out.pair_check_passed = r.pair_check_passed;
            out.exhaustive_ran = r.exhaustive_ran;
            out.exhaustive_passed = r.exhaustive_passed;
            out.exhaustive_count = r.exhaustive_count;
        }
        *report = out;
    });
}

}  // extern "C"

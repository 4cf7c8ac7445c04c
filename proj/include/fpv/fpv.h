/*
 * fpv.h - C interface to the F_p + vF_p code library.
 *
 * All objects are opaque handles owned by the caller and released with the
 * matching *_free function. Every fallible call returns an fpv_status; on
 * failure fpv_last_error() describes the problem (thread-local, valid until
 * the next call on the same thread).
 */
#ifndef FPV_FPV_H
#define FPV_FPV_H

#include <stddef.h>
#include <stdint.h>

#if defined(FPV_BUILDING_LIBRARY)
#define FPV_API __attribute__((visibility("default")))
#else
#define FPV_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fpv_status {
    FPV_OK = 0,
    FPV_E_INVALID_ARGUMENT = 1,
    FPV_E_PARSE = 2,
    FPV_E_MODULUS_MISMATCH = 3,
    FPV_E_DIMENSION_MISMATCH = 4,
    FPV_E_DIVISION_BY_ZERO = 5,
    FPV_E_BUDGET_EXCEEDED = 6,
    FPV_E_NOT_SELF_DUAL = 7,
    FPV_E_NO_SUCH_CODE = 8,
    FPV_E_INTERNAL = 9
} fpv_status;

typedef enum fpv_ring {
    FPV_RING_FP = 0,  /* F_p */
    FPV_RING_FPV = 1  /* F_p + vF_p */
} fpv_ring;

typedef enum fpv_construct_case {
    FPV_CASE_L1_GT_L2 = 0,
    FPV_CASE_L1_LT_L2 = 1,
    FPV_CASE_L1_EQ_L2 = 2
} fpv_construct_case;

typedef struct fpv_matrix fpv_matrix;
typedef struct fpv_code fpv_code;

typedef struct fpv_code_info {
    fpv_ring ring;
    uint32_t p;
    size_t n;
    /* For F_p codes dim_c1 = dim_c2 = dimension and k1 = dimension. */
    size_t dim_c1;
    size_t dim_c2;
    size_t log_p_size; /* |C| = p^log_p_size */
    size_t k1, k2, k3;
    int self_orthogonal;
    int self_dual;                /* both components self-dual */
    int self_dual_type_condition; /* self-orthogonal, n = 2(k1+k2), k2 = k3 */
} fpv_code_info;

typedef struct fpv_count_report {
    uint64_t fp_count;
    uint64_t r_count;
    int pair_check_ran;
    int pair_check_passed;
    int exhaustive_ran;
    int exhaustive_passed;
    uint64_t exhaustive_count;
} fpv_count_report;

FPV_API const char* fpv_last_error(void);
FPV_API const char* fpv_status_string(fpv_status status);
FPV_API void fpv_string_free(char* s);

/* Matrices and the text file format. */
FPV_API fpv_status fpv_matrix_parse(const char* text, fpv_matrix** out);
FPV_API fpv_status fpv_matrix_render(const fpv_matrix* m, char** out);
FPV_API fpv_status fpv_matrix_shape(const fpv_matrix* m, fpv_ring* ring, uint32_t* p, size_t* rows, size_t* cols);
FPV_API void fpv_matrix_free(fpv_matrix* m);

/* Codes. An fp matrix yields an F_p code, an fpv matrix an R code. */
FPV_API fpv_status fpv_code_from_matrix(const fpv_matrix* generator, fpv_code** out);
FPV_API void fpv_code_free(fpv_code* code);
FPV_API fpv_status fpv_code_generator(const fpv_code* code, fpv_matrix** out);
FPV_API fpv_status fpv_code_info_get(const fpv_code* code, fpv_code_info* info);
FPV_API fpv_status fpv_code_equal(const fpv_code* a, const fpv_code* b, int* equal);
FPV_API fpv_status fpv_code_dual(const fpv_code* code, fpv_code** out);
/* R codes only: dual from the parity-check matrix of the standard form. */
FPV_API fpv_status fpv_code_dual_via_parity_check(const fpv_code* code, fpv_code** out);
/* R codes only: (C1, C2). */
FPV_API fpv_status fpv_code_components(const fpv_code* code, fpv_code** c1, fpv_code** c2);
/* R codes only. scan is NULL (left to right) or a column order of n entries.
   perm must hold n entries; type receives (k1, k2, k3). */
FPV_API fpv_status fpv_code_standard_form(const fpv_code* code, const size_t* scan, fpv_matrix** form, size_t* perm,
                                          size_t type[3]);
/* R codes only: parity-check matrix in the standard form's coordinates. */
FPV_API fpv_status fpv_code_parity_check(const fpv_code* code, const size_t* scan, fpv_matrix** h, size_t* perm);
/* R codes only: the length-2n F_p code (bar | hat). */
FPV_API fpv_status fpv_code_gray_image(const fpv_code* code, fpv_code** out);

/* Constructions from two fp generator matrices. generator may be NULL. */
FPV_API fpv_status fpv_construct_from_pair(const fpv_matrix* g1, const fpv_matrix* g2, fpv_matrix** generator,
                                           fpv_code** code, fpv_construct_case* which);
FPV_API fpv_status fpv_build_self_dual(const fpv_matrix* g1, const fpv_matrix* g2, fpv_matrix** generator,
                                       fpv_code** code);
FPV_API fpv_status fpv_seed_self_dual(uint32_t p, size_t n, fpv_code** out);
FPV_API fpv_status fpv_exists_self_dual(uint32_t p, size_t n, int* exists);
/* over = FPV_RING_FP counts self-dual F_p codes only (r_count = 0). */
FPV_API fpv_status fpv_count_self_dual(uint32_t p, size_t n, fpv_ring over, uint64_t budget,
                                       fpv_count_report* report);

#ifdef __cplusplus
}
#endif

#endif /* FPV_FPV_H */

/*
 * C interface to libhcext: Harish-Chandra vertices of the unipotent
 * irreducibles D(1,mu) of GL_n(q) in non-defining characteristic r, and
 * bounds on dim Ext^1 between them.
 *
 * Conventions:
 *   - Every fallible call returns an hcext_status; HCEXT_OK is 0.
 *   - On failure, hcext_last_error() describes the problem. The message is
 *     per thread and stays valid until the next failing call on that thread.
 *   - Partitions cross the boundary as text: comma separated parts with
 *     optional exponents, e.g. "2,1^2"; "0" is the empty partition.
 *   - Structured results come back as UTF-8 JSON in an hcext_string, which
 *     the caller releases with hcext_string_destroy.
 *   - Handles are immutable after creation and may be shared between threads.
 */
#ifndef HCEXT_H
#define HCEXT_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(HCEXT_BUILDING)
#    define HCEXT_API __declspec(dllexport)
#  else
#    define HCEXT_API __declspec(dllimport)
#  endif
#else
#  define HCEXT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hcext_status {
    HCEXT_OK = 0,
    HCEXT_ERR_USAGE = 1,       /* null handle or output pointer */
    HCEXT_ERR_VALIDATION = 2,  /* malformed input, violated precondition */
    HCEXT_ERR_UNSUPPORTED = 3, /* no bound is available for the pair */
    HCEXT_ERR_ORACLE = 4,      /* an oracle suite reported failures */
    HCEXT_ERR_OVERFLOW = 5,    /* exact result exceeds 64 bits */
    HCEXT_ERR_INTERNAL = 6
} hcext_status;

typedef struct hcext_context hcext_context;
typedef struct hcext_matrix hcext_matrix;
typedef struct hcext_string hcext_string;

typedef struct hcext_context_info {
    int n;
    uint64_t q;        /* 0 when unknown */
    int r;
    int l;
    int l_overridden;  /* nonzero if l was supplied directly */
    int e;             /* torus r-rank; -1 when unknown */
    uint64_t weyl_order;
    int case_one;      /* 1: r does not divide |B|; 0: it does; -1: unknown */
} hcext_context_info;

HCEXT_API const char* hcext_version(void);
HCEXT_API const char* hcext_last_error(void);
HCEXT_API const char* hcext_status_name(hcext_status status);

/* ---- strings ---- */
HCEXT_API const char* hcext_string_data(const hcext_string* s);
HCEXT_API size_t hcext_string_size(const hcext_string* s);
HCEXT_API void hcext_string_destroy(hcext_string* s);

/* ---- partitions ---- */
/* Canonical form of a partition, e.g. "2,1,1" -> "2,1^2". */
HCEXT_API hcext_status hcext_partition_canonical(const char* partition, hcext_string** out);
HCEXT_API hcext_status hcext_partition_conjugate(const char* partition, hcext_string** out);
HCEXT_API hcext_status hcext_partition_is_l_regular(const char* partition, int l, int* out);
HCEXT_API hcext_status hcext_partition_is_l_restricted(const char* partition, int l, int* out);
/* JSON: {"l","r","text","minus1","n_minus1","higher":[{"a","weight","partition","size"}]} */
HCEXT_API hcext_status hcext_lr_decomposition(const char* partition, int l, int r, hcext_string** out);

/* ---- group context ---- */
HCEXT_API hcext_status hcext_context_create(int n, uint64_t q, int r, hcext_context** out);
/* l supplied directly; q may be 0 for "unknown". */
HCEXT_API hcext_status hcext_context_create_with_l(int n, uint64_t q, int r, int l, hcext_context** out);
HCEXT_API void hcext_context_destroy(hcext_context* ctx);
HCEXT_API hcext_status hcext_context_get_info(const hcext_context* ctx, hcext_context_info* out);
HCEXT_API hcext_status hcext_context_json(const hcext_context* ctx, hcext_string** out);

/* ---- Harish-Chandra vertices ---- */
/* JSON: {"mu","mu_conjugate","decomposition":{...},"vertex":{"text","blocks",...},
 *        "label","levi_weyl_order","index"} */
HCEXT_API hcext_status hcext_vertex_json(const hcext_context* ctx, const char* mu, hcext_string** out);
/* label: 0 principal series, 1 cuspidal, 2 proper Levi */
HCEXT_API hcext_status hcext_classify(const hcext_context* ctx, const char* mu, int* label);

/* ---- bounds ---- */
HCEXT_API hcext_status hcext_index_bound(const hcext_context* ctx, const char* mu, uint64_t* out);
HCEXT_API hcext_status hcext_cohomology_dim(uint64_t n, uint64_t e, uint64_t* out);
HCEXT_API hcext_status hcext_sylow_ext_bound(uint64_t dim_v, uint64_t e, uint64_t* out);

typedef struct hcext_bound_request {
    const char* sigma;
    const char* mu;
    const hcext_matrix* matrix; /* optional */
    uint64_t dim_sigma;         /* 0 when unknown; set both dims or neither */
    uint64_t dim_mu;
    uint64_t inertia_index;     /* 0 means 1 */
} hcext_bound_request;

/* JSON: {"sigma","mu","entries":[{"tag","numeric","value"|"base","coefficient","text"}],
 *        "best":{...,"tag"},"warnings":[...]} */
HCEXT_API hcext_status hcext_bound_json(const hcext_context* ctx, const hcext_bound_request* request,
                                        hcext_string** out);

/* ---- decomposition matrices ---- */
HCEXT_API hcext_status hcext_matrix_parse(const char* text, int relaxed_dominance, hcext_matrix** out);
HCEXT_API hcext_status hcext_matrix_load_file(const char* path, int relaxed_dominance, hcext_matrix** out);
/* Bundled matrices: "delta3_l2", "delta3_l3", "delta4_l2", "delta4_l3". */
HCEXT_API hcext_status hcext_matrix_fixture(const char* name, hcext_matrix** out);
HCEXT_API hcext_status hcext_matrix_identity(int n, int l, hcext_matrix** out);
HCEXT_API void hcext_matrix_destroy(hcext_matrix* m);
HCEXT_API hcext_status hcext_matrix_dims(const hcext_matrix* m, int* n, int* l);
HCEXT_API hcext_status hcext_matrix_entry(const hcext_matrix* m, const char* row, const char* column, uint64_t* out);
HCEXT_API hcext_status hcext_matrix_serialize(const hcext_matrix* m, hcext_string** out);
HCEXT_API hcext_status hcext_matrix_json(const hcext_matrix* m, hcext_string** out);
HCEXT_API hcext_status hcext_young_multiplicity(const hcext_matrix* m, const char* lambda, const char* nu,
                                                uint64_t* out);
HCEXT_API hcext_status hcext_matrix_bound(const hcext_matrix* m, const char* mu, uint64_t* out);

/* ---- oracles and reports ---- */
/* JSON: {"max_n","suites":[{"name","checked","failed","failures":[...]}],"failed"}.
 * Returns HCEXT_ERR_ORACLE (and still sets *out) when any suite fails. */
HCEXT_API hcext_status hcext_verify_json(int max_n, hcext_string** out);
/* Newline separated list of example names. */
HCEXT_API hcext_status hcext_report_names(hcext_string** out);
/* format: 0 text, 1 JSON */
HCEXT_API hcext_status hcext_report(const char* example, int format, hcext_string** out);

#ifdef __cplusplus
}
#endif

#endif /* HCEXT_H */

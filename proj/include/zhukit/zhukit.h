/* SPDX-License-Identifier: Apache-2.0 */
#ifndef ZHUKIT_ZHUKIT_H
#define ZHUKIT_ZHUKIT_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define ZK_API __declspec(dllexport)
#else
#define ZK_API __attribute__((visibility("default")))
#endif

typedef enum zk_status {
    ZK_OK = 0,
    ZK_E_ARGUMENT = 1,      /* null pointer or malformed argument */
    ZK_E_PRECONDITION = 2,  /* input outside an operation's domain, unknown names, bad config */
    ZK_E_PARSE = 3,         /* expression or JSON syntax; see zk_last_error_position */
    ZK_E_SCHEMA = 4,        /* well-formed input that violates lca/1 or zhumod/1 */
    ZK_E_TRUNCATION = 5,    /* a cutoff was exceeded */
    ZK_E_POLE = 6,
    ZK_E_INTERNAL = 7
} zk_status;

typedef struct zk_algebra zk_algebra;
typedef struct zk_module zk_module;
typedef struct zk_report zk_report;

ZK_API const char* zk_version(void);
ZK_API const char* zk_status_name(zk_status s);
/* Message and byte position (or -1) of the last error on the calling thread. */
ZK_API const char* zk_last_error(void);
ZK_API long zk_last_error_position(void);
/* Strings returned through char** out-parameters are owned by the caller. */
ZK_API void zk_string_free(char* s);

/* Algebras: a preset name ("vir", "sl2", ...) or lca/1 JSON text. */
ZK_API zk_status zk_algebra_preset(const char* name, zk_algebra** out);
ZK_API zk_status zk_algebra_from_json(const char* text, zk_algebra** out);
ZK_API void zk_algebra_free(zk_algebra* a);
ZK_API zk_status zk_algebra_name(const zk_algebra* a, char** out);
ZK_API zk_status zk_algebra_generator_count(const zk_algebra* a, int* out);
/* 1 when the lambda-bracket table satisfies the Lie conformal axioms on its default grid, else 0. */
ZK_API zk_status zk_algebra_check_axioms(const zk_algebra* a, int* ok);

/* Normal form of an expression in the level-p quotient, e.g. "L[-1] L[1] L[-1] L[1]". */
ZK_API zk_status zk_reduce(const zk_algebra* a, long p, const char* expression, char** out);

/* Modules: zhumod/1 text, or the built-in one-dimensional module for the algebra. */
ZK_API zk_status zk_module_from_json(const zk_algebra* a, const char* text, zk_module** out);
ZK_API zk_status zk_module_default(const zk_algebra* a, zk_module** out);
ZK_API void zk_module_free(zk_module* m);
ZK_API zk_status zk_module_dimension(const zk_module* m, int* out);
/* Weight-space dimensions of the induced module at degrees 0..depth; dims must hold depth + 1 entries. */
ZK_API zk_status zk_module_weight_dims(const zk_module* m, long depth, long* dims);

/* Runs a command ("present", "verify", "identities", "reduce") from a JSON config object. */
ZK_API zk_status zk_run(const char* command, const char* config_json, zk_report** out);
ZK_API void zk_report_free(zk_report* r);
/* 0 when no case failed or errored, 1 otherwise. */
ZK_API int zk_report_exit_code(const zk_report* r);
ZK_API zk_status zk_report_json(const zk_report* r, int include_timing, char** out);
ZK_API zk_status zk_report_text(const zk_report* r, int include_timing, char** out);

#ifdef __cplusplus
}
#endif

#endif

#ifndef SEMCHECK_H
#define SEMCHECK_H

#include <stddef.h>
#include <stdint.h>

#if defined(__GNUC__)
#pragma GCC visibility push(default)
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct sc_system sc_system;
typedef struct sc_bench sc_bench;

typedef enum sc_status {
    SC_OK = 0,
    SC_ERR_PARSE = 1,
    SC_ERR_ARGUMENT = 2,
    SC_ERR_SEMANTICS = 3,
    SC_ERR_CAP = 4,
    SC_ERR_INTERNAL = 5
} sc_status;

/* Pass 0 as cap to use the library default. */
#define SC_DEFAULT_CAP 0

const char* sc_version(void);

/* Message for the last failing call on this thread; never NULL. */
const char* sc_last_error(void);

/* Strings returned through char** out-parameters are owned by the caller. */
void sc_string_free(char* s);

/* Parses LTS or GPS text format v1, chosen by the header line. */
sc_status sc_system_parse(const char* text, size_t len, sc_system** out);
void sc_system_free(sc_system* sys);
int sc_system_is_gps(const sc_system* sys);
size_t sc_system_states(const sc_system* sys);

/* Report JSON is written to *report; *holds is 1 when the relation holds. */
sc_status sc_equiv(const sc_system* sys, const char* semantics, const char* algorithm, const char* s1,
                   const char* s2, uint64_t cap, int* holds, char** report);

/* semantics must be "must" or "may"; checks s1 below s2. */
sc_status sc_preorder(const sc_system* sys, const char* semantics, const char* s1, const char* s2, uint64_t cap,
                      int* holds, char** report);

/* inits is a comma-separated list of state names or indices. */
sc_status sc_minimize(const sc_system* sys, const char* semantics, const char* inits, uint64_t cap, char** report);

/* with_trace additionally requires g_trace equality. */
sc_status sc_gps_equiv(const sc_system* sys, const char* semantics, int with_trace, const char* s1, const char* s2,
                       int* holds, char** report);

/* family: interleave, chain or cycles. Writes LTS text format v1. */
sc_status sc_generate(const char* family, unsigned n, char** text);

sc_bench* sc_bench_new(void);
void sc_bench_free(sc_bench* b);
sc_status sc_bench_add_fixture(sc_bench* b, const char* name, const char* text);
sc_status sc_bench_add_builtin_fixtures(sc_bench* b);
sc_status sc_bench_add_family(sc_bench* b, const char* family, unsigned n);
/* semantics and algorithms are comma-separated lists; empty semantics runs
   each fixture's own checks. format is "json" or "csv". *agree is 1 when no
   cell disagrees. */
sc_status sc_bench_run(sc_bench* b, const char* semantics, const char* algorithms, const char* format, uint64_t cap,
                       int* agree, char** report);

#ifdef __cplusplus
}
#endif

#if defined(__GNUC__)
#pragma GCC visibility pop
#endif

#endif

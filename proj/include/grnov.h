/* C interface to the graded-ring / Novikov-homology workbench.
 *
 * All functions return one of the status codes below unless documented
 * otherwise. Results and diagnostics are exchanged as UTF-8 JSON text; any
 * char* produced by the library must be released with grnov_string_free.
 * Handles are opaque and freed with the matching *_free function. The last
 * failure message for the calling thread is available via grnov_last_error.
 */
#ifndef GRNOV_H
#define GRNOV_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define GRNOV_API __declspec(dllexport)
#else
#define GRNOV_API __attribute__((visibility("default")))
#endif

/* status codes; also the CLI exit codes */
enum {
    GRNOV_OK = 0,           /* verified / pass / acyclic */
    GRNOV_FAIL = 1,         /* refuted / check failed */
    GRNOV_INCONCLUSIVE = 2, /* search gave up at its window */
    GRNOV_INPUT_ERROR = 3   /* malformed input or capability gating */
};

enum { GRNOV_DIR_PLUS = 0, GRNOV_DIR_MINUS = 1 };

typedef struct grnov_ring grnov_ring;
typedef struct grnov_complex grnov_complex;

GRNOV_API const char* grnov_version(void);
GRNOV_API const char* grnov_last_error(void);
GRNOV_API void grnov_string_free(char* s);

/* ring documents; loading runs the partition and homogeneity checks */
GRNOV_API int grnov_ring_load(const char* json_text, grnov_ring** out);
GRNOV_API int grnov_ring_load_file(const char* path, grnov_ring** out);
GRNOV_API void grnov_ring_free(grnov_ring* ring);
GRNOV_API int grnov_ring_verify(const grnov_ring* ring);

/* complex documents (ring inline); loading validates d.d = 0 */
GRNOV_API int grnov_complex_load(const char* json_text, grnov_complex** out);
GRNOV_API int grnov_complex_load_file(const char* path, grnov_complex** out);
GRNOV_API void grnov_complex_free(grnov_complex* cx);
GRNOV_API int grnov_complex_validate(const grnov_complex* cx);

/* certificate verification at the given truncation (0 > truncation means: use
 * the certificate's own); cert_json is a grnov.cert/1 document */
GRNOV_API int grnov_novikov_verify(const grnov_complex* cx, const char* cert_json, long truncation);

/* order-by-order search; window_lo == 0 picks a default; on success writes the
 * certificate document. Component-infinite rings are gated (GRNOV_INPUT_ERROR). */
GRNOV_API int grnov_novikov_search(const grnov_complex* cx, int direction, long truncation,
                                   int window_lo, char** cert_json_out);

/* exact decision over the untwisted Laurent ring (GRNOV_OK = acyclic) */
GRNOV_API int grnov_novikov_decide(const grnov_complex* cx, int direction);

/* window extension + witness extraction; writes a grnov.witness/1 document
 * with a Betti table when the ring is component-finite */
GRNOV_API int grnov_dominate(const grnov_complex* cx, char** witness_json_out);

/* seeded identity suites; suite is one of all|resolution|windows|series|adjoints */
GRNOV_API int grnov_identities(const grnov_ring* ring, const char* suite, uint64_t seed, int samples,
                               char** report_json_out);

/* end-to-end run of the bundled two-step example over K[A,B,C,D]/(AB+CD-1) */
GRNOV_API int grnov_paper_example(long truncation, char** report_json_out);

#ifdef __cplusplus
}
#endif

#endif /* GRNOV_H */

#ifndef TWROOTS_H
#define TWROOTS_H

#ifdef __cplusplus
extern "C" {
#endif

#if defined(__GNUC__)
#define TWR_API __attribute__((visibility("default")))
#else
#define TWR_API
#endif

/* return codes; check results (pass/fail/skip) are reported separately */
enum {
    TWR_OK = 0,
    TWR_ERR_INVALID = 1,
    TWR_ERR_SHAPE = 2,
    TWR_ERR_BOUND = 3,
    TWR_ERR_CHECK = 4,
    TWR_ERR_PARSE = 5,
    TWR_ERR_INTERNAL = 6,
    TWR_ERR_NULL = 7
};

enum { TWR_PASS = 0, TWR_FAIL = 1, TWR_SKIP = 2 };

typedef struct twr_instance twr_instance;
typedef struct twr_report twr_report;

/* message of the last error on this thread, "" when none */
TWR_API const char* twr_last_error(void);
TWR_API void twr_string_free(char* s);

/* resource bounds; 0 leaves a value unchanged. Defaults come from TWR_MAX_GROUP / TWR_MAX_DIM */
TWR_API int twr_set_limits(unsigned long long max_group, int max_dim);

TWR_API int twr_instance_new(const char* descriptor, twr_instance** out);
TWR_API void twr_instance_free(twr_instance* inst);
/* canonical descriptor, owned by the handle */
TWR_API const char* twr_instance_descriptor(const twr_instance* inst);

TWR_API int twr_compute(const twr_instance* inst, twr_report** out);
TWR_API void twr_report_free(twr_report* rep);
/* TWR_PASS or TWR_FAIL */
TWR_API int twr_report_status(const twr_report* rep);
TWR_API int twr_report_json(const twr_report* rep, char** out);
TWR_API int twr_report_text(const twr_report* rep, char** out);
/* wall time of twr_compute */
TWR_API long long twr_report_millis(const twr_report* rep);

/* status receives TWR_PASS, TWR_FAIL or TWR_SKIP; out receives the result as JSON */
TWR_API int twr_verify(const twr_instance* inst, const char* theorem, int* status, char** out);
/* space separated theorem ids */
TWR_API const char* twr_theorems(void);

/* one table row: (n, m, unused) for pu, (k, s0, s1) otherwise; match receives 1 or 0 */
TWR_API int twr_table1_row(const char* family, int a, int b, int c, int* match, char** out);

/* JSON array of registry descriptors, sorted */
TWR_API int twr_list(char** out);

#ifdef __cplusplus
}
#endif

#endif

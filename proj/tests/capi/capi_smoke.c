/* exercises the C API from plain C */
#include <stdio.h>
#include <string.h>

#include "twroots.h"

static int failures = 0;

#define EXPECT(c)                                              \
    do {                                                       \
        if (!(c)) {                                            \
            fprintf(stderr, "line %d: %s\n", __LINE__, #c);    \
            ++failures;                                        \
        }                                                      \
    } while (0)

int main(void) {
    twr_instance* h = NULL;
    twr_report* r = NULL;
    char* s = NULL;
    int st = -1, match = -1;

    EXPECT(twr_instance_new("pu:n=6,m=3", &h) == TWR_OK);
    EXPECT(strcmp(twr_instance_descriptor(h), "pu:n=6,m=3,parts=2") == 0);
    EXPECT(twr_compute(h, &r) == TWR_OK);
    EXPECT(twr_report_status(r) == TWR_PASS);
    EXPECT(twr_report_json(r, &s) == TWR_OK);
    EXPECT(s && strstr(s, "\"schema\": 1"));
    twr_string_free(s);
    twr_report_free(r);

    EXPECT(twr_verify(h, "T7", &st, &s) == TWR_OK);
    EXPECT(st == TWR_PASS);
    twr_string_free(s);
    EXPECT(twr_verify(h, "T2", &st, &s) == TWR_OK);
    EXPECT(st == TWR_SKIP);
    twr_string_free(s);
    EXPECT(twr_verify(h, "nope", &st, &s) == TWR_ERR_PARSE);
    EXPECT(strlen(twr_last_error()) > 0);

    EXPECT(twr_set_limits(10, 0) == TWR_OK);
    EXPECT(twr_compute(h, &r) == TWR_ERR_BOUND);
    EXPECT(r == NULL);
    EXPECT(twr_set_limits(1000000, 0) == TWR_OK);
    twr_instance_free(h);

    EXPECT(twr_instance_new("pu:n=6,m=4", &h) == TWR_ERR_INVALID);
    EXPECT(h == NULL);
    EXPECT(twr_instance_new("bogus", &h) == TWR_ERR_PARSE);
    EXPECT(twr_instance_new(NULL, &h) == TWR_ERR_NULL);

    EXPECT(twr_table1_row("po", 1, 0, 2, &match, &s) == TWR_OK);
    EXPECT(match == 1);
    twr_string_free(s);
    EXPECT(twr_list(&s) == TWR_OK);
    EXPECT(s && strstr(s, "pu:n=6,m=3,parts=2"));
    twr_string_free(s);

    if (failures) return 1;
    printf("capi: ok\n");
    return 0;
}

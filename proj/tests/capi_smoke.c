/* Exercises the public header from C: lifetimes, status codes, error positions. */
#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "zhukit/zhukit.h"

static int failures = 0;

#define EXPECT(cond)                                                   \
    do {                                                               \
        if (!(cond)) {                                                 \
            fprintf(stderr, "%s:%d: expected %s\n", __FILE__, __LINE__, #cond); \
            ++failures;                                                \
        }                                                              \
    } while (0)

static void expect_reduce(const zk_algebra* a, long p, const char* expr, const char* want) {
    char* out = NULL;
    zk_status s = zk_reduce(a, p, expr, &out);
    EXPECT(s == ZK_OK);
    if (s == ZK_OK) {
        if (strcmp(out, want) != 0) fprintf(stderr, "reduce '%s': got '%s', want '%s'\n", expr, out, want);
        EXPECT(strcmp(out, want) == 0);
        zk_string_free(out);
    }
}

int main(void) {
    zk_algebra* vir = NULL;
    zk_algebra* sl2 = NULL;
    EXPECT(zk_algebra_preset("vir", &vir) == ZK_OK);
    EXPECT(zk_algebra_preset("sl2", &sl2) == ZK_OK);
    if (!vir || !sl2) return 1;

    int n = 0, ok = 0;
    EXPECT(zk_algebra_generator_count(vir, &n) == ZK_OK && n == 1);
    EXPECT(zk_algebra_generator_count(sl2, &n) == ZK_OK && n == 3);
    EXPECT(zk_algebra_check_axioms(vir, &ok) == ZK_OK && ok == 1);
    char* name = NULL;
    EXPECT(zk_algebra_name(vir, &name) == ZK_OK && strcmp(name, "virasoro") == 0);
    zk_string_free(name);

    expect_reduce(vir, 1, "L[-1] L[1] L[-1] L[1]", "2 L[-1] L[0] L[1]");
    expect_reduce(sl2, 0, "e[-1] f[1]", "0");
    expect_reduce(sl2, 0, "f[1] e[-1]", "-h[0] + k");

    char* out = NULL;
    EXPECT(zk_reduce(sl2, 0, "f[1] x[-1]", &out) == ZK_E_PARSE);
    EXPECT(out == NULL);
    EXPECT(zk_last_error_position() == 5);
    EXPECT(strstr(zk_last_error(), "x") != NULL);
    EXPECT(zk_reduce(sl2, 0, "f[1]", &out) == ZK_E_PRECONDITION);
    EXPECT(zk_reduce(NULL, 0, "f[1]", &out) == ZK_E_ARGUMENT);
    EXPECT(zk_algebra_preset("nosuch", &vir) == ZK_E_PRECONDITION);
    EXPECT(zk_algebra_from_json("{", NULL) == ZK_E_ARGUMENT);

    zk_algebra* bad = NULL;
    EXPECT(zk_algebra_from_json("{", &bad) == ZK_E_PARSE);
    EXPECT(zk_algebra_from_json("{\"format\": \"lca/2\"}", &bad) == ZK_E_SCHEMA);
    EXPECT(bad == NULL);

    zk_module* m = NULL;
    EXPECT(zk_module_default(vir, &m) == ZK_OK);
    long dims[7] = {0};
    const long want[7] = {1, 1, 2, 3, 5, 7, 11};
    EXPECT(zk_module_dimension(m, &n) == ZK_OK && n == 1);
    EXPECT(zk_module_weight_dims(m, 6, dims) == ZK_OK);
    for (int i = 0; i < 7; ++i) EXPECT(dims[i] == want[i]);
    zk_module_free(m);

    zk_report* r = NULL;
    EXPECT(zk_run("identities", "{\"lemma\": \"star-delta\", \"p\": \"0..2\"}", &r) == ZK_OK);
    EXPECT(zk_report_exit_code(r) == 0);
    char* json = NULL;
    EXPECT(zk_report_json(r, 0, &json) == ZK_OK);
    EXPECT(strstr(json, "\"schema\": \"report/1\"") != NULL);
    EXPECT(strstr(json, "\"timing\"") == NULL);
    zk_string_free(json);
    zk_report_free(r);

    r = NULL;
    EXPECT(zk_run("verify", "{\"no_such_key\": 1}", &r) == ZK_E_PRECONDITION);
    EXPECT(r == NULL);
    EXPECT(zk_run("frobnicate", "{}", &r) != ZK_OK);
    EXPECT(zk_run("present", "not json", &r) == ZK_E_PARSE);
    EXPECT(strcmp(zk_status_name(ZK_E_SCHEMA), "schema") == 0);

    zk_algebra_free(vir);
    zk_algebra_free(sl2);
    if (failures == 0) printf("capi smoke: ok\n");
    return failures == 0 ? 0 : 1;
}

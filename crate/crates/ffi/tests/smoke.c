#include <stdio.h>
#include <string.h>
#include "serpentine.h"

#define CHECK(cond)                                                   \
    do {                                                              \
        if (!(cond)) {                                                \
            fprintf(stderr, "%s:%d: %s\n", __FILE__, __LINE__, #cond); \
            return 1;                                                 \
        }                                                             \
    } while (0)

int main(void) {
    SerpTableau *t = NULL;
    CHECK(serp_tableau_parse("[1 3 4 / 2 5 6]", &t) == SERP_STATUS_OK);
    int64_t r = -1;
    CHECK(serp_tableau_stable_major_index(t, &r) == SERP_STATUS_OK);
    CHECK(r == 4);
    serp_tableau_free(t);

    t = NULL;
    CHECK(serp_tableau_parse("[3 1]", &t) == SERP_STATUS_INVALID_ARGUMENT);
    CHECK(t == NULL);
    char msg[128];
    CHECK(serp_last_error(msg, sizeof msg) > 0);
    CHECK(strstr(msg, "invalid argument") != NULL);

    uint32_t parts[] = {1, 1};
    SerpSymFun *f = NULL;
    char *text = NULL;
    CHECK(serp_schur(parts, 2, &f) == SERP_STATUS_OK);
    CHECK(serp_symfun_to_string(f, &text) == SERP_STATUS_OK);
    CHECK(strcmp(text, "1/2 p(1,1) - 1/2 p(2)") == 0);
    serp_string_free(text);
    serp_symfun_free(f);

    SerpConfig cfg = serp_config_default();
    cfg.n = 6;
    SerpReport *rep = NULL;
    CHECK(serp_run("fusion-check", &cfg, &rep) == SERP_STATUS_OK);
    bool passed = false;
    CHECK(serp_report_passed(rep, &passed) == SERP_STATUS_OK && passed);
    size_t count = 0;
    CHECK(serp_report_check_count(rep, &count) == SERP_STATUS_OK && count == 10);
    serp_report_free(rep);

    CHECK(serp_run("frobnicate", NULL, &rep) == SERP_STATUS_INVALID_ARGUMENT);
    CHECK(serp_report_passed(NULL, &passed) == SERP_STATUS_NULL_POINTER);
    printf("c smoke test ok\n");
    return 0;
}

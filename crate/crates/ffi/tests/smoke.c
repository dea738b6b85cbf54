#include <stdio.h>
#include <string.h>
#include "lierep.h"

#define CHECK(cond) do { if (!(cond)) { fprintf(stderr, "failed: %s\n", #cond); return 1; } } while (0)

int main(void) {
    LierepAlgebra *g = NULL;
    CHECK(lierep_algebra_parse("A1 + C3 + C^6", &g) == LIEREP_STATUS_OK);
    uint64_t mu = 0;
    CHECK(lierep_algebra_mu(g, &mu) == LIEREP_STATUS_OK && mu == 12);

    LierepRep *r = NULL;
    CHECK(lierep_rep_construct(g, &r) == LIEREP_STATUS_OK);
    size_t degree = 0;
    CHECK(lierep_rep_degree(r, &degree) == LIEREP_STATUS_OK && degree == 12);
    bool hom = false;
    size_t kernel = 99;
    CHECK(lierep_rep_verify(r, &hom, &kernel) == LIEREP_STATUS_OK && hom && kernel == 0);

    LierepAlgebra *bad = NULL;
    CHECK(lierep_algebra_parse("D3", &bad) == LIEREP_STATUS_PARSE && bad == NULL);
    CHECK(strstr(lierep_last_error(), "position 0") != NULL);

    lierep_rep_free(r);
    lierep_algebra_free(g);
    printf("ok\n");
    return 0;
}

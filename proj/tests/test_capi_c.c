/* The public header must compile as C and link against the shared library. */
#include <stdio.h>

#include "numsg/numsg.h"

int main(void) {
  const int64_t gens[] = {14, 15, 20, 21};
  const int64_t ideal_gens[] = {0, 1};
  numsg_semigroup* s = NULL;
  numsg_ideal* i = NULL;
  numsg_brick_info info;
  if (numsg_semigroup_new(gens, 4, &s) != NUMSG_OK) return 1;
  if (numsg_ideal_new(s, ideal_gens, 2, &i) != NUMSG_OK) return 1;
  if (numsg_brick_check(s, i, &info) != NUMSG_OK) return 1;
  numsg_ideal_free(i);
  numsg_semigroup_free(s);
  if (!info.is_perfect || info.mu_sum != 4) {
    fprintf(stderr, "unexpected brick check\n");
    return 1;
  }
  return 0;
}

/* Exercises the C API from C. */
#include <stdio.h>
#include <string.h>

#include "u21/u21.h"

static int failures = 0;

#define EXPECT(cond)                                            \
  do {                                                          \
    if (!(cond)) {                                              \
      fprintf(stderr, "%s:%d: %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                               \
    }                                                           \
  } while (0)

int main(void) {
  char* json = NULL;
  u21_group* g = NULL;
  u21_module* m = NULL;
  u21_verify* v = NULL;

  EXPECT(u21_group_create(3, 3, &g) == U21_OK);
  EXPECT(u21_group_report(g, 1, &json) == U21_OK);
  EXPECT(strstr(json, "\"order_bfs\":24192") != NULL);
  u21_string_free(json);

  EXPECT(u21_module_induce(g, 7, 0, 0, &m) == U21_OK);
  EXPECT(u21_module_chop(m, 42, &json) == U21_OK);
  EXPECT(strstr(json, "\"dim\":26") != NULL);
  u21_string_free(json);
  u21_module_free(m);
  m = NULL;

  EXPECT(u21_module_induce(g, 3, 0, 0, &m) == U21_BAD_PRIME);
  EXPECT(strlen(u21_last_error()) > 0);
  EXPECT(strcmp(u21_status_name(U21_BAD_PRIME), "BadPrime") == 0);
  EXPECT(m == NULL);
  u21_group_free(g);

  EXPECT(u21_group_create(4, 3, &g) == U21_BAD_PARAMETERS);
  EXPECT(u21_module_load("/nonexistent/file.fmod", &m) == U21_IO_ERROR);

  EXPECT(u21_hecke(3, 3, 2, &json) == U21_OK);
  EXPECT(strstr(json, "\"count\":1") != NULL);
  u21_string_free(json);

  EXPECT(u21_classify_finite(3, 7, 0, 0, 3, &json) == U21_OK);
  EXPECT(strstr(json, "\"length\":3") != NULL);
  u21_string_free(json);
  EXPECT(u21_classify_finite(5, 3, 0, 0, 3, &json) == U21_UNSUPPORTED_CASE);
  EXPECT(u21_classify_padic("zero", "no_such_class", 1, 3, 7, &json) == U21_INVALID_ARGUMENT);
  EXPECT(u21_group_report(NULL, 0, &json) == U21_INVALID_ARGUMENT);

  EXPECT(u21_verify_run("desk", 42, 1, "A9,A2", &v) == U21_OK);
  EXPECT(u21_verify_passed(v) == 1);
  EXPECT(u21_verify_json(v, &json) == U21_OK);
  EXPECT(strstr(json, "\"seed\":42") != NULL);
  u21_string_free(json);
  u21_verify_free(v);
  EXPECT(u21_verify_run("desk", 42, 1, "A99", &v) == U21_INVALID_ARGUMENT);

  if (failures) fprintf(stderr, "%d failures\n", failures);
  return failures ? 1 : 0;
}

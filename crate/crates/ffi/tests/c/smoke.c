#include <math.h>
#include <stdio.h>
#include <string.h>

#include "simson.h"

#define EXPECT(cond)                                                   \
  do {                                                                 \
    if (!(cond)) {                                                     \
      const char *msg = simson_last_error_message();                   \
      fprintf(stderr, "%s:%d: %s (%s)\n", __FILE__, __LINE__, #cond,   \
              msg ? msg : "no message");                               \
      return 1;                                                        \
    }                                                                  \
  } while (0)

int main(void) {
  SimsonTolerance tol = simson_tolerance_default();
  SimsonPolygonHandle *h = NULL;
  EXPECT(simson_polygon_equidistant(1.0, -4.0, 1.0, 8, &h) == SIMSON_STATUS_OK);

  size_t n = 0;
  EXPECT(simson_polygon_len(h, &n) == SIMSON_STATUS_OK && n == 8);
  SimsonPoint v;
  EXPECT(simson_polygon_vertex(h, 2, &v) == SIMSON_STATUS_OK);
  EXPECT(v.x == -3.0 && v.y == 2.0);

  bool pass = false;
  char *json = NULL;
  EXPECT(simson_polygon_verify(h, SIMSON_CHECK_ALL, tol, &pass, &json) == SIMSON_STATUS_OK);
  EXPECT(pass && json != NULL && strstr(json, "\"overall\":true") != NULL);
  simson_string_free(json);
  simson_polygon_free(h);

  double knots[4];
  double l1 = 0.0;
  EXPECT(simson_approx_optimal(2.0, 0.0, -1.0, 2.0, 3, knots, 4, &l1, NULL) == SIMSON_STATUS_OK);
  EXPECT(knots[0] == -1.0 && knots[3] == 2.0);
  EXPECT(fabs(l1 - 3.0 / 48.0) < 1e-15);

  EXPECT(simson_polygon_equidistant(0.0, 0.0, 1.0, 5, &h) == SIMSON_STATUS_DEGENERATE);
  EXPECT(simson_last_error_message() != NULL);

  puts("ok");
  return 0;
}

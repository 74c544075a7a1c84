#ifndef TILER_TILER_H
#define TILER_TILER_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define TILER_API __declspec(dllexport)
#else
#define TILER_API __attribute__((visibility("default")))
#endif

typedef enum tiler_status {
  TILER_OK = 0,
  TILER_ERR_PARSE,
  TILER_ERR_NOT_CLOSED,
  TILER_ERR_SELF_INTERSECTING,
  TILER_ERR_EMPTY_INTERIOR,
  TILER_ERR_NOT_ADJACENT,
  TILER_ERR_NOT_TILEABLE,
  TILER_ERR_OUTSIDE_REGION,
  TILER_ERR_CAP_EXCEEDED,
  TILER_ERR_RADIUS_EXCEEDED,
  TILER_ERR_INVALID_ARGUMENT,
  TILER_ERR_INTERNAL,
  TILER_ERR_IO,
  TILER_ERR_NULL_ARGUMENT
} tiler_status;

typedef enum tiler_lattice { TILER_LATTICE_SQUARE = 0, TILER_LATTICE_TRI = 1 } tiler_lattice;

typedef struct tiler_region tiler_region;
typedef struct tiler_oracle tiler_oracle;

/* Strings returned through char** are owned by the caller; release with
   tiler_string_free. The last error message is per thread. */
TILER_API void tiler_string_free(char* s);
TILER_API const char* tiler_last_error(void);
TILER_API const char* tiler_status_name(tiler_status s);

TILER_API tiler_status tiler_region_parse(const char* text, tiler_lattice lattice, tiler_region** out);
TILER_API void tiler_region_free(tiler_region* r);
TILER_API tiler_status tiler_region_info(const tiler_region* r, int64_t* perimeter, int64_t* area);

/* Fast decision. verdict_json may be NULL. */
TILER_API tiler_status tiler_check(const tiler_region* r, int* tileable, char** verdict_json);
/* Perfect-matching reference decision (cell caps apply). */
TILER_API tiler_status tiler_check_matching(const tiler_region* r, int* tileable);

/* Maximum tiling as a JSON array of placements sorted by cell, each with the
   lower-left cell first. via_full selects the full height field instead of
   per-cell oracle queries. Square lattice only. */
TILER_API tiler_status tiler_tile(const tiler_region* r, int via_full, char** json);

TILER_API tiler_status tiler_oracle_create(const tiler_region* r, tiler_oracle** out);
TILER_API void tiler_oracle_free(tiler_oracle* o);
/* {"cell":[x,y],"partner":[x,y],"orientation":"H|V"} */
TILER_API tiler_status tiler_oracle_query(tiler_oracle* o, int64_t cx, int64_t cy, char** json);
TILER_API tiler_status tiler_oracle_height(tiler_oracle* o, int64_t x, int64_t y, int64_t* h);

/* Families: rect w h, aztec k, spiral n, snake n [w], random area. */
TILER_API tiler_status tiler_generate(const char* family, const int64_t* params, size_t n_params, uint64_t seed,
                                      char** word);
TILER_API tiler_status tiler_dilate(const char* word, int64_t k, char** out);

/* Comma-separated families and algorithms; p = 2^min_exp .. 2^max_exp. */
TILER_API tiler_status tiler_bench(const char* families, const char* algos, int min_exp, int max_exp, int reps,
                                   char** records_csv, char** fits_csv, int* verdicts_agree);

TILER_API tiler_status tiler_render(const tiler_region* r, const char* layers, double scale, char** svg);

#ifdef __cplusplus
}
#endif

#endif

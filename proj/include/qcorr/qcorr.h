/*
 * Copyright 2026 The qcorr Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface to libqcorr: FRQI encoding of grayscale images, subsystem
 * entropies, tripartite correlation measures and their classical
 * joint-histogram counterparts.
 *
 * Every fallible call returns a qcorr_status. On failure the message for the
 * calling thread is available from qcorr_last_error() until the next failing
 * call on that thread. Output handles are only written on QCORR_OK.
 */

#ifndef QCORR_QCORR_H_
#define QCORR_QCORR_H_

#include <stddef.h>

#if defined(_WIN32)
#  if defined(QCORR_BUILDING_LIBRARY)
#    define QCORR_API __declspec(dllexport)
#  else
#    define QCORR_API __declspec(dllimport)
#  endif
#else
#  define QCORR_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Status values double as the CLI exit codes. */
typedef enum qcorr_status {
  QCORR_OK = 0,
  QCORR_ERR_INTERNAL = 1,
  QCORR_ERR_INPUT = 2,
  QCORR_ERR_NUMERIC = 3
} qcorr_status;

typedef struct qcorr_image qcorr_image;
typedef struct qcorr_table qcorr_table;

typedef struct qcorr_report {
  double s_a, s_b, s_12, s_ab, s_a12, s_b12, s_total;
  double i0, it, id, i_ab;
  double h_a, h_b, h_ab, i_classical, nmi;
} qcorr_report;

QCORR_API const char* qcorr_version(void);
QCORR_API const char* qcorr_last_error(void);

/* Images. */
/* spec: "pattern:<bits>", "graylist:<v,...>" or a PGM path. */
QCORR_API qcorr_status qcorr_image_parse(const char* spec, qcorr_image** out);
QCORR_API qcorr_status qcorr_image_from_pixels(int side, const int* pixels, size_t count, qcorr_image** out);
QCORR_API qcorr_status qcorr_image_read_pgm(const unsigned char* bytes, size_t size, qcorr_image** out);
QCORR_API qcorr_status qcorr_image_write_pgm_file(const qcorr_image* image, const char* path);
QCORR_API qcorr_status qcorr_image_default_patron(qcorr_image** out);
QCORR_API int qcorr_image_side(const qcorr_image* image);
/* Copies side*side pixels into out; count must be at least side*side. */
QCORR_API qcorr_status qcorr_image_pixels(const qcorr_image* image, int* out, size_t count);
QCORR_API void qcorr_image_free(qcorr_image* image);

/* Measures for one image pair. */
QCORR_API qcorr_status qcorr_correlation_report(const qcorr_image* a, const qcorr_image* b, qcorr_report* out);

/* Experiments; each produces a table. */
QCORR_API qcorr_status qcorr_run_entropy(const qcorr_image* image, qcorr_table** out);
QCORR_API qcorr_status qcorr_run_table1(qcorr_table** out);
QCORR_API qcorr_status qcorr_run_table2(const qcorr_image* patron, qcorr_table** out);
QCORR_API qcorr_status qcorr_run_sweep(const qcorr_image* base_a, const qcorr_image* base_b, long pixel_index,
                                       qcorr_table** out);
QCORR_API qcorr_status qcorr_run_translate(const qcorr_image* patron, int low_gray, int high_gray,
                                           qcorr_table** out);

/* Amplitude listing of the FRQI state; free with qcorr_string_free. */
QCORR_API qcorr_status qcorr_encode_dump(const qcorr_image* image, char** out_text);

/* Tables. */
QCORR_API size_t qcorr_table_rows(const qcorr_table* table);
QCORR_API size_t qcorr_table_cols(const qcorr_table* table);
/* Returned pointer is owned by the table. NULL when col is out of range. */
QCORR_API const char* qcorr_table_column(const qcorr_table* table, size_t col);
/* QCORR_ERR_INPUT for out-of-range cells and for text cells. */
QCORR_API qcorr_status qcorr_table_number(const qcorr_table* table, size_t row, size_t col, double* out);
/* Cell rendered as it appears in CSV; free with qcorr_string_free. */
QCORR_API qcorr_status qcorr_table_cell_text(const qcorr_table* table, size_t row, size_t col, char** out_text);
QCORR_API qcorr_status qcorr_table_csv(const qcorr_table* table, char** out_text);
QCORR_API void qcorr_table_free(qcorr_table* table);

QCORR_API void qcorr_string_free(char* text);

#ifdef __cplusplus
}
#endif

#endif /* QCORR_QCORR_H_ */

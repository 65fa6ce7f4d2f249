/*
 * C interface to libtvp: exact Radon and Tverberg partitions with
 * self-checking certificates.
 *
 * Every object is an opaque handle owned by the caller and released with the
 * matching *_free function. Functions return a tvp_status; on failure the
 * out-parameter is left untouched and tvp_last_error() describes the problem
 * (per thread, valid until the next failing call on that thread).
 * Strings returned through char** are released with tvp_string_free.
 */
#ifndef TVP_TVP_H
#define TVP_TVP_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(TVP_BUILDING_LIBRARY)
#    define TVP_API __declspec(dllexport)
#  else
#    define TVP_API __declspec(dllimport)
#  endif
#else
#  define TVP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tvp_status {
  TVP_OK = 0,
  TVP_ERR_INVALID_ARGUMENT = 1, /* null handle, r < 2, unknown format name */
  TVP_ERR_PARSE = 2,            /* malformed rational, point file or certificate */
  TVP_ERR_SIZE = 3,             /* point count does not fit d+2 or (d+1)(r-1)+1 */
  TVP_ERR_DIMENSION = 4,        /* mixed dimensions, or SVG requested for d != 2 */
  TVP_ERR_CAP = 5,              /* oracle enumeration larger than the cap */
  TVP_ERR_IO = 6,               /* file could not be read or written */
  TVP_ERR_HYPOTHESIS = 7,       /* a color class does not surround the origin */
  TVP_ERR_INTERNAL = 8          /* violated internal invariant; a library bug */
} tvp_status;

typedef enum tvp_format {
  TVP_FORMAT_AUTO = 0, /* by file extension, else by content */
  TVP_FORMAT_CSV = 1,
  TVP_FORMAT_JSON = 2
} tvp_format;

typedef enum tvp_certificate_kind {
  TVP_CERT_RADON = 0,
  TVP_CERT_TVERBERG = 1
} tvp_certificate_kind;

typedef struct tvp_pointset tvp_pointset;
typedef struct tvp_certificate tvp_certificate;
typedef struct tvp_report tvp_report;

TVP_API const char* tvp_version(void);
TVP_API const char* tvp_last_error(void);
TVP_API const char* tvp_status_name(tvp_status status);
TVP_API void tvp_string_free(char* s);

/* Point sets. */
TVP_API tvp_status tvp_pointset_load(const char* path, tvp_format format, tvp_pointset** out);
TVP_API tvp_status tvp_pointset_parse(const char* text, size_t length, tvp_format format, tvp_pointset** out);
TVP_API size_t tvp_pointset_size(const tvp_pointset* points);
TVP_API size_t tvp_pointset_dimension(const tvp_pointset* points);
/* Coordinate as canonical "p/q" text. */
TVP_API tvp_status tvp_pointset_coordinate(const tvp_pointset* points, size_t index, size_t axis, char** out);
TVP_API void tvp_pointset_free(tvp_pointset* points);

/* Solvers. */
TVP_API tvp_status tvp_radon(const tvp_pointset* points, tvp_certificate** out);
TVP_API tvp_status tvp_tverberg(const tvp_pointset* points, size_t r, tvp_certificate** out);

/* Certificates. */
TVP_API tvp_status tvp_certificate_load(const char* path, tvp_certificate** out);
TVP_API tvp_status tvp_certificate_parse(const char* text, size_t length, tvp_certificate** out);
TVP_API tvp_status tvp_certificate_render(const tvp_certificate* cert, char** out);
TVP_API tvp_status tvp_certificate_save(const tvp_certificate* cert, const char* path);
TVP_API tvp_certificate_kind tvp_certificate_get_kind(const tvp_certificate* cert);
TVP_API size_t tvp_certificate_groups(const tvp_certificate* cert);
TVP_API size_t tvp_certificate_iterations(const tvp_certificate* cert);
/* Drawing of a d = 2 partition; TVP_ERR_DIMENSION otherwise. */
TVP_API tvp_status tvp_certificate_save_svg(const tvp_pointset* points, const tvp_certificate* cert,
                                            const char* path);
TVP_API void tvp_certificate_free(tvp_certificate* cert);

/* Verification. A report is produced even for invalid certificates. */
TVP_API tvp_status tvp_verify(const tvp_pointset* points, const tvp_certificate* cert, tvp_report** out);
TVP_API int tvp_report_valid(const tvp_report* report);
TVP_API size_t tvp_report_check_count(const tvp_report* report);
TVP_API tvp_status tvp_report_render(const tvp_report* report, char** out);
TVP_API void tvp_report_free(tvp_report* report);

/* Brute-force oracle: every partition into r nonempty groups with a common
 * hull point, one "{{0,4},{1,3},{2}}" line each (zero-based indices).
 * cap = 0 selects the default of 1000000 assignments. */
TVP_API tvp_status tvp_oracle(const tvp_pointset* points, size_t r, uint64_t cap, char** out, size_t* count);

#ifdef __cplusplus
}
#endif

#endif /* TVP_TVP_H */

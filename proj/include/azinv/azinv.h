#ifndef AZINV_AZINV_H
#define AZINV_AZINV_H

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define AZINV_API __declspec(dllexport)
#else
#define AZINV_API __attribute__((visibility("default")))
#endif

/* Status codes. Values 1..16 match the library's error kinds. */
typedef enum azinv_status {
  AZINV_OK = 0,
  AZINV_PARSE_ERROR = 1,
  AZINV_RING_MISMATCH = 2,
  AZINV_NOT_INVERTIBLE = 3,
  AZINV_UNSUPPORTED = 4,
  AZINV_CHARACTERISTIC_TWO = 5,
  AZINV_NOT_NORM_ONE = 6,
  AZINV_HYPOTHESIS_VIOLATED = 7,
  AZINV_ODD_DIMENSION_ALTERNATING = 8,
  AZINV_INVALID_GRAM = 9,
  AZINV_NOT_INNER = 10,
  AZINV_NOT_RAMIFICATION_POINT = 11,
  AZINV_DIMENSION_ANOMALY = 12,
  AZINV_FIXED_RING_NOT_FIELD = 13,
  AZINV_INVALID_ARGUMENT = 14,
  AZINV_VERIFICATION_FAILED = 15,
  AZINV_NOT_HERMITIAN = 16,
  AZINV_INTERNAL = 99
} azinv_status;

typedef struct azinv_family azinv_family;
typedef struct azinv_element azinv_element;

AZINV_API const char* azinv_version(void);
AZINV_API const char* azinv_status_name(azinv_status status);
/* Message of the last failed call on this thread; "" if none. */
AZINV_API const char* azinv_last_error_message(void);
/* Frees strings returned through char** out-parameters. */
AZINV_API void azinv_string_free(char* s);

/* descriptor: a JSON family descriptor, e.g. {"family":"laurent","base":"Q"}. */
AZINV_API azinv_status azinv_family_create(const char* descriptor, azinv_family** out);
AZINV_API void azinv_family_destroy(azinv_family* family);
AZINV_API azinv_status azinv_family_describe(const azinv_family* family, char** out);

AZINV_API azinv_status azinv_element_parse(const azinv_family* family, const char* text, azinv_element** out);
AZINV_API void azinv_element_destroy(azinv_element* e);
AZINV_API azinv_status azinv_element_to_string(const azinv_element* e, char** out);
AZINV_API azinv_status azinv_element_add(const azinv_element* a, const azinv_element* b, azinv_element** out);
AZINV_API azinv_status azinv_element_mul(const azinv_element* a, const azinv_element* b, azinv_element** out);
AZINV_API azinv_status azinv_element_neg(const azinv_element* a, azinv_element** out);
AZINV_API azinv_status azinv_element_invert(const azinv_element* a, azinv_element** out);
AZINV_API azinv_status azinv_element_involution(const azinv_element* a, azinv_element** out);
/* norm = lambda(a)*a, trace = a + lambda(a). */
AZINV_API azinv_status azinv_element_norm_trace(const azinv_element* a, azinv_element** norm, azinv_element** trace);
AZINV_API azinv_status azinv_element_equal(const azinv_element* a, const azinv_element* b, int* out);

/* Runs one JobSpec (JSON object). *report always receives a JSON report when report is non-null.
   Returns AZINV_OK only when the report says "verified": true. */
AZINV_API azinv_status azinv_run_job(const char* spec, char** report);
/* specs: JSON array of JobSpecs, run concurrently; *reports is a JSON array in input order.
   Returns the first non-OK job status, or AZINV_OK. */
AZINV_API azinv_status azinv_run_batch(const char* specs, char** reports);
/* JSON array of the example names accepted by the reproduce command. */
AZINV_API azinv_status azinv_reproduce_names(char** out);

#ifdef __cplusplus
}
#endif

#endif

#ifndef PARTITIONS_PARTITIONS_H
#define PARTITIONS_PARTITIONS_H

/*
 * C interface to the partitions library.  All objects are opaque handles
 * created by the library and released with the matching *_free function.
 * Strings returned through `char **` are heap allocated and must be
 * released with pt_string_free.  Every fallible call returns a pt_status;
 * on error, pt_last_error() describes the failure for the calling thread.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  define PT_API __declspec(dllexport)
#elif defined(__GNUC__)
#  define PT_API __attribute__((visibility("default")))
#else
#  define PT_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pt_status {
    PT_OK = 0,
    PT_END = 1,                  /* enumerator exhausted */
    PT_ERR_INVALID_ARGUMENT = 2,
    PT_ERR_PARSE = 3,            /* malformed partition text or JSON */
    PT_ERR_DOMAIN = 4,           /* input outside the map's domain */
    PT_ERR_OVERFLOW = 5,         /* 128-bit count overflow */
    PT_ERR_BUDGET = 6,           /* n beyond a configured limit */
    PT_ERR_INTERNAL = 7
} pt_status;

typedef enum pt_class {
    PT_CLASS_DISTINCT = 0,
    PT_CLASS_ODD = 1,
    PT_CLASS_BO = 2,
    PT_CLASS_BE = 3,
    PT_CLASS_CO = 4,
    PT_CLASS_CE = 5,
    PT_CLASS_BO_PRIME = 6,
    PT_CLASS_BE_PRIME = 7
} pt_class;

typedef enum pt_map {
    PT_MAP_GLAISHER_TO_ODD = 0,
    PT_MAP_GLAISHER_TO_DISTINCT = 1,
    PT_MAP_THETA1 = 2,
    PT_MAP_THETA1_INV = 3,
    PT_MAP_THETA1_EVEN = 4,
    PT_MAP_THETA1_EVEN_INV = 5,
    PT_MAP_THETA2 = 6,
    PT_MAP_THETA2_INV = 7
} pt_map;

typedef struct pt_partition pt_partition;
typedef struct pt_image pt_image;
typedef struct pt_enumerator pt_enumerator;
typedef struct pt_counter pt_counter;

PT_API const char * pt_last_error(void);
PT_API const char * pt_status_name(pt_status status);
PT_API void pt_string_free(char * s);

/* partitions */
PT_API pt_status pt_partition_parse(const char * text, pt_partition ** out);
PT_API pt_status pt_partition_parse_json(const char * json, pt_partition ** out);
PT_API pt_status pt_partition_from_parts(const int64_t * parts, size_t count, pt_partition ** out);
PT_API void pt_partition_free(pt_partition * p);
PT_API uint64_t pt_partition_sum(const pt_partition * p);
PT_API size_t pt_partition_run_count(const pt_partition * p);
PT_API pt_status pt_partition_run(const pt_partition * p, size_t index, uint32_t * value, uint32_t * multiplicity);
PT_API pt_status pt_partition_to_text(const pt_partition * p, char ** out);
PT_API pt_status pt_partition_to_json(const pt_partition * p, char ** out);
/* Bit i set iff the partition is in pt_class i. */
PT_API unsigned pt_partition_classes(const pt_partition * p);

PT_API pt_status pt_class_parse(const char * name, pt_class * out);

/* map inputs/outputs: a partition or a (partition, even part) witness pair */
PT_API pt_status pt_image_parse(const char * text, pt_image ** out);
PT_API pt_status pt_image_from_partition(const pt_partition * p, pt_image ** out);
PT_API void pt_image_free(pt_image * img);
PT_API int pt_image_is_witness(const pt_image * img);
PT_API pt_status pt_image_to_text(const pt_image * img, char ** out);
PT_API pt_status pt_image_to_json(const pt_image * img, char ** out);

PT_API pt_status pt_map_parse(const char * name, pt_map * out);
PT_API pt_status pt_map_apply(pt_map map, const pt_image * input, pt_image ** out);

/*
 * Stream of partitions of n in descending lexicographic order.
 * class_filter < 0 means no filter.  avoid > 0 restricts to distinct
 * partitions with no part equal to avoid (class_filter must then be
 * negative or PT_CLASS_DISTINCT).  max_part == 0 means unbounded.
 */
PT_API pt_status pt_enumerator_new(uint32_t n, int class_filter, uint32_t avoid, uint32_t max_part,
                                   pt_enumerator ** out);
/* PT_OK with *out set, or PT_END. */
PT_API pt_status pt_enumerator_next(pt_enumerator * e, pt_partition ** out);
PT_API void pt_enumerator_free(pt_enumerator * e);

/* counting; rows follow the column order of pt_count_csv_header() */
PT_API const char * pt_count_csv_header(void);
PT_API pt_status pt_counter_new(uint32_t n_max, pt_counter ** out);
PT_API void pt_counter_free(pt_counter * c);
PT_API pt_status pt_counter_row_csv(const pt_counter * c, uint32_t n, char ** out);
PT_API pt_status pt_counter_row_json(const pt_counter * c, uint32_t n, char ** out);
PT_API pt_status pt_enumerated_row_csv(uint32_t n, uint32_t budget, char ** out);

/* verification */
typedef struct pt_verify_options {
    uint32_t formula_max;
    uint32_t enumeration_budget;
    unsigned threads; /* 0: hardware concurrency */
} pt_verify_options;

/* Runs every check; *json_out receives the report array, *all_passed 1 or 0. */
PT_API pt_status pt_verify_all(const pt_verify_options * options, char ** json_out, int * all_passed);

#ifdef __cplusplus
}
#endif

#endif /* PARTITIONS_PARTITIONS_H */

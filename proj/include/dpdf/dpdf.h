#ifndef DPDF_H
#define DPDF_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define DPDF_API __declspec(dllexport)
#else
#define DPDF_API __attribute__((visibility("default")))
#endif

typedef enum dpdf_status {
  DPDF_OK = 0,
  DPDF_E_NOT_PRIME,
  DPDF_E_DEGREE_ZERO,
  DPDF_E_BOUND_EXCEEDED,
  DPDF_E_DIVISION_BY_ZERO,
  DPDF_E_LOG_OF_ZERO,
  DPDF_E_EMPTY_ORDERS,
  DPDF_E_BAD_ORDER,
  DPDF_E_NOT_DISJOINT,
  DPDF_E_ZERO_IN_SET,
  DPDF_E_UNEQUAL_SIZES,
  DPDF_E_ZERO_IN_T,
  DPDF_E_BAD_DIVISOR,
  DPDF_E_INDEX_OUT_OF_RANGE,
  DPDF_E_BAD_EPSILON,
  DPDF_E_NO_REPRESENTATION,
  DPDF_E_UNSUPPORTED_E,
  DPDF_E_NOT_UNIFORM,
  DPDF_E_BAD_INDEX_SET,
  DPDF_E_OVERLAPPING_INDEX_SETS,
  DPDF_E_NOT_APPLICABLE,
  DPDF_E_PARAMETER_MISMATCH,
  DPDF_E_NOT_PDS,
  DPDF_E_NOT_A_SUBFIELD_INDEX,
  DPDF_E_PARSE_ERROR,
  DPDF_E_IO_FAILURE,
  DPDF_E_VERIFICATION_MISMATCH,
  DPDF_E_INVALID_ARGUMENT,
  DPDF_E_INTERNAL
} dpdf_status;

typedef enum dpdf_kind {
  DPDF_KIND_NONE = 0,
  DPDF_KIND_DS,
  DPDF_KIND_PDS,
  DPDF_KIND_DDF,
  DPDF_KIND_EDF,
  DPDF_KIND_DPDF,
  DPDF_KIND_EPDF,
  DPDF_KIND_SEDF,
  DPDF_KIND_PEDF
} dpdf_kind;

typedef enum dpdf_mode { DPDF_INTERNAL = 0, DPDF_EXTERNAL = 1 } dpdf_mode;

typedef enum dpdf_field_op {
  DPDF_OP_ADD = 0,
  DPDF_OP_SUB,
  DPDF_OP_NEG,
  DPDF_OP_MUL,
  DPDF_OP_INV,
  DPDF_OP_POW
} dpdf_field_op;

typedef enum dpdf_theorem {
  DPDF_THEOREM_PDS_COLLECTION = 0,
  DPDF_THEOREM_UNIFORM,
  DPDF_THEOREM_UNIFORM_UNIONS,
  DPDF_THEOREM_PARTITION,
  DPDF_THEOREM_SQUARES,
  DPDF_THEOREM_SUBFIELD
} dpdf_theorem;

typedef enum dpdf_format { DPDF_FORMAT_CSV = 0, DPDF_FORMAT_JSON = 1 } dpdf_format;

typedef struct dpdf_field dpdf_field;
typedef struct dpdf_family dpdf_family;
typedef struct dpdf_report dpdf_report;

typedef struct dpdf_classification {
  dpdf_kind kind;
  uint32_t n;
  uint32_t m;
  uint32_t k;
  int64_t lambda;
  int64_t mu;
  int proper;
  uint32_t labels; /* bit (1 << kind) for every label that applies */
  int sedf;
  int pedf;
} dpdf_classification;

/* Arguments of dpdf_construct; unused fields are ignored. index_sets holds
   set_count consecutive runs whose lengths are given by set_sizes. */
typedef struct dpdf_construct_args {
  dpdf_theorem theorem;
  uint64_t q;
  uint32_t e;
  uint32_t epsilon;
  uint32_t r;
  uint32_t u;
  const uint32_t* index_sets;
  const size_t* set_sizes;
  size_t set_count;
  const dpdf_family* family; /* pds-collection only */
} dpdf_construct_args;

typedef struct dpdf_catalog_args {
  uint64_t q_max;
  const uint32_t* epsilons;
  size_t epsilon_count;
  dpdf_format format;
  int include_negative;
  int reverify;
} dpdf_catalog_args;

/* Message of the last failure on the calling thread; "" after success. */
DPDF_API const char* dpdf_last_error(void);
DPDF_API const char* dpdf_status_name(dpdf_status status);
DPDF_API const char* dpdf_kind_name(dpdf_kind kind);

DPDF_API dpdf_status dpdf_field_new(uint64_t p, uint32_t n, dpdf_field** out);
DPDF_API dpdf_status dpdf_field_of_order(uint64_t q, dpdf_field** out);
DPDF_API void dpdf_field_free(dpdf_field* field);
DPDF_API uint32_t dpdf_field_order(const dpdf_field* field);
DPDF_API uint32_t dpdf_field_characteristic(const dpdf_field* field);
DPDF_API uint32_t dpdf_field_degree(const dpdf_field* field);
DPDF_API uint32_t dpdf_field_primitive(const dpdf_field* field);
/* y is the second operand for ADD/SUB/MUL and the exponent for POW. */
DPDF_API dpdf_status dpdf_field_arith(const dpdf_field* field, dpdf_field_op op, uint32_t x,
                                      int64_t y, uint32_t* out);
DPDF_API dpdf_status dpdf_field_dlog(const dpdf_field* field, uint32_t x, uint32_t* out);

/* Mixed-radix code of a component tuple, first component least significant. */
DPDF_API dpdf_status dpdf_group_encode(const uint32_t* orders, size_t order_count,
                                       const uint32_t* components, uint32_t* out);

/* elements holds set_count consecutive runs of codes with lengths set_sizes. */
DPDF_API dpdf_status dpdf_family_in_group(const uint32_t* orders, size_t order_count,
                                          const uint32_t* elements, const size_t* set_sizes,
                                          size_t set_count, dpdf_family** out);
DPDF_API dpdf_status dpdf_family_in_field(const dpdf_field* field, const uint32_t* elements,
                                          const size_t* set_sizes, size_t set_count,
                                          dpdf_family** out);
DPDF_API void dpdf_family_free(dpdf_family* family);
DPDF_API dpdf_status dpdf_classify(const dpdf_family* family, dpdf_mode mode,
                                   dpdf_classification* out);
DPDF_API dpdf_status dpdf_classify_set(const dpdf_family* family, size_t index,
                                       dpdf_classification* out);
/* Writes the "(n,m,k,lambda,mu)-KIND" form; returns the length needed. */
DPDF_API size_t dpdf_classification_format(const dpdf_classification* c, char* buffer,
                                           size_t capacity);

DPDF_API dpdf_status dpdf_cyclotomic_number(const dpdf_field* field, uint32_t e, uint32_t i,
                                            uint32_t j, uint64_t* out);
DPDF_API dpdf_status dpdf_partition(const dpdf_field* field, uint32_t e, uint32_t epsilon,
                                    dpdf_classification* internal,
                                    dpdf_classification* external, int* verified);

/* Text reports. The report owns its text until dpdf_report_free. */
DPDF_API dpdf_status dpdf_report_field_info(uint64_t p, uint32_t n, dpdf_report** out);
DPDF_API dpdf_status dpdf_report_classify(const dpdf_family* family, dpdf_report** out);
DPDF_API dpdf_status dpdf_report_cyclo(uint64_t q, uint32_t e, int closed_form,
                                       dpdf_report** out);
DPDF_API dpdf_status dpdf_construct(const dpdf_construct_args* args, dpdf_report** out);
DPDF_API dpdf_status dpdf_catalog(const dpdf_catalog_args* args, dpdf_report** out);
DPDF_API dpdf_status dpdf_verify_suite(dpdf_report** out);

DPDF_API const char* dpdf_report_text(const dpdf_report* report);
/* Rows for catalog reports, checks for the suite. */
DPDF_API size_t dpdf_report_items(const dpdf_report* report);
/* Failed checks or mismatched predictions. */
DPDF_API size_t dpdf_report_failures(const dpdf_report* report);
DPDF_API void dpdf_report_free(dpdf_report* report);

#ifdef __cplusplus
}
#endif

#endif

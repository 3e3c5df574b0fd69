/* C interface to the addlin shared library.
 *
 * Every function returns 0 on success or a negative status code; the
 * message for the last failure on the calling thread is available through
 * addlin_last_error(). Objects are opaque handles released with their
 * matching _free function. Strings returned through char** are heap
 * allocated and released with addlin_string_free.
 */
#ifndef ADDLIN_H
#define ADDLIN_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

enum {
  ADDLIN_OK = 0,
  ADDLIN_E_INVALID_ARGUMENT = -1,
  ADDLIN_E_NOT_PRIME_POWER = -2,
  ADDLIN_E_REDUCIBLE_POLYNOMIAL = -3,
  ADDLIN_E_ZERO_CONSTANT_TERM = -4,
  ADDLIN_E_FIELD_MISMATCH = -5,
  ADDLIN_E_DIMENSION_MISMATCH = -6,
  ADDLIN_E_SINGULAR = -7,
  ADDLIN_E_RANK_DEFICIENT_BLOCK = -8,
  ADDLIN_E_BUDGET_EXCEEDED = -9,
  ADDLIN_E_ZERO_GENERATOR = -10,
  ADDLIN_E_POSITION_OUT_OF_RANGE = -11,
  ADDLIN_E_INSTANCE_TOO_LARGE = -12,
  ADDLIN_E_MODULUS_MISMATCH = -13,
  ADDLIN_E_ALL_COORDINATES_ZERO = -14,
  ADDLIN_E_PARSE = -15,
  ADDLIN_E_IO = -16,
  ADDLIN_E_INTERNAL = -17
};

enum {
  ADDLIN_VERDICT_STRICTLY_ADDITIVE = 0,
  ADDLIN_VERDICT_EQUIVALENT_TO_LINEAR = 1,
  ADDLIN_VERDICT_UNDECIDED = 2
};

typedef struct addlin_code addlin_code;
typedef struct addlin_verdict addlin_verdict;
typedef struct addlin_linear addlin_linear;

const char* addlin_version(void);
const char* addlin_status_name(int status);
const char* addlin_last_error(void);
void addlin_string_free(char* s);

/* additive code files */
int addlin_code_read(const char* path, int allow_rank_deficient,
                     addlin_code** out);
int addlin_code_write(const addlin_code* c, const char* path);
/* builds from a quasi-cyclic spec file; the transforms run in the order
 * augment-ones then extend when both are requested */
int addlin_qc_build(const char* spec_path, int augment_ones, int do_extend,
                    addlin_code** out);
void addlin_code_free(addlin_code* c);

int addlin_code_length(const addlin_code* c, size_t* out);
int addlin_code_dim(const addlin_code* c, size_t* out);
int addlin_code_digest(const addlin_code* c, uint64_t* out);
/* "[n,k/2]_q^2" or "[n,k/2,d]_q^2" when with_d is nonzero */
int addlin_code_params_string(const addlin_code* c, int with_d, unsigned d,
                              char** out);
/* budget 0 means the built-in default */
int addlin_code_distance(const addlin_code* c, uint64_t budget,
                         unsigned* out);
int addlin_code_hull_dim(const addlin_code* c, size_t* out);
int addlin_code_is_acd(const addlin_code* c, int* out);

/* linearity pipeline; budget 0 means the built-in default */
int addlin_test(const addlin_code* c, uint64_t budget, addlin_verdict** out);
void addlin_verdict_free(addlin_verdict* v);
int addlin_verdict_tag(const addlin_verdict* v, int* out);
int addlin_verdict_has_witness(const addlin_verdict* v, int* out);
int addlin_verdict_write_witness(const addlin_verdict* v, const char* path);
/* the full pipeline report; single json line when as_json is nonzero */
int addlin_verdict_report(const addlin_verdict* v, const addlin_code* c,
                          const char* witness_path, int as_json, char** out);
int addlin_verdict_linear_is_hermitian_lcd(const addlin_verdict* v, int* out);

/* linear code files over the extension */
int addlin_linear_read(const char* path, addlin_linear** out);
void addlin_linear_free(addlin_linear* l);
int addlin_linear_length(const addlin_linear* l, size_t* out);
int addlin_linear_dim(const addlin_linear* l, size_t* out);
int addlin_linear_is_hermitian_lcd(const addlin_linear* l, int* out);

/* re-verifies a witness file against a code; ok is 1 only when every
 * identity holds, and the report lists each identity separately */
int addlin_verify_witness(const addlin_code* c, const char* witness_path,
                          int as_json, int* ok, char** report);

/* runs a verification manifest; any_fail is 1 when some row mismatches.
 * budgets of 0 mean the built-in defaults */
int addlin_verify_table(const char* manifest_path, uint64_t distance_budget,
                        uint64_t search_budget, int as_json, int* any_fail,
                        char** report);

#ifdef __cplusplus
}
#endif

#endif

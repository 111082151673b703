/* C interface to the monomap library.
 *
 * Objects are opaque handles created by the library and released with the
 * matching *_free function. Every call returns an mm_status; on anything
 * other than MM_OK or MM_NEGATIVE, mm_last_error() describes the failure
 * (per thread, valid until the next call on that thread). Strings returned
 * through char** out-parameters are owned by the caller and released with
 * mm_string_free.
 */
#ifndef MONOMAP_MONOMAP_H_
#define MONOMAP_MONOMAP_H_

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define MONOMAP_API __declspec(dllexport)
#else
#define MONOMAP_API __attribute__((visibility("default")))
#endif

/* Values double as CLI exit codes. */
typedef enum mm_status {
  MM_OK = 0,
  MM_NEGATIVE = 1, /* infeasible, unsat, no sequence, plan violation */
  MM_INPUT_ERROR = 2,
  MM_CAPACITY_ERROR = 3,
  MM_INTERNAL_ERROR = 4
} mm_status;

typedef enum mm_render_format { MM_RENDER_ASCII = 0, MM_RENDER_SVG = 1 } mm_render_format;

typedef struct mm_instance mm_instance;
typedef struct mm_plan mm_plan;

MONOMAP_API const char* mm_version(void);
MONOMAP_API const char* mm_last_error(void);
MONOMAP_API void mm_string_free(char* str);

/* Instances. An instance built by reduction carries its layout. */
MONOMAP_API mm_status mm_instance_from_dimacs(const char* dimacs, mm_instance** out);
MONOMAP_API mm_status mm_instance_from_json(const char* json, mm_instance** out);
MONOMAP_API mm_status mm_instance_to_json(const mm_instance* instance, char** out);
MONOMAP_API int mm_instance_robot_count(const mm_instance* instance);
MONOMAP_API int mm_instance_has_layout(const mm_instance* instance);
MONOMAP_API void mm_instance_free(mm_instance* instance);

/* Plans are tied to the instance they were written for. */
MONOMAP_API mm_status mm_plan_from_json(const mm_instance* instance, const char* json,
                                        mm_plan** out);
MONOMAP_API mm_status mm_plan_to_json(const mm_instance* instance, const mm_plan* plan,
                                      char** out);
MONOMAP_API int mm_plan_move_count(const mm_plan* plan);
MONOMAP_API void mm_plan_free(mm_plan* plan);

/* Monotone feasibility. max_robots <= 0 selects the default cap.
 * MM_NEGATIVE when infeasible (*out left NULL). states_visited may be NULL. */
MONOMAP_API mm_status mm_solve(const mm_instance* instance, int max_robots, mm_plan** out,
                               uint64_t* states_visited);

/* MM_OK for a valid plan; MM_NEGATIVE with a one-line violation report. */
MONOMAP_API mm_status mm_validate(const mm_instance* instance, const mm_plan* plan,
                                  char** report);

/* Needs a reduction instance. assignment: "a=T,b=F,c=T". */
MONOMAP_API mm_status mm_synthesize(const mm_instance* instance, const char* assignment,
                                    mm_plan** out);
MONOMAP_API mm_status mm_extract(const mm_instance* instance, const mm_plan* plan,
                                 char** assignment);

/* Brute-force satisfiability of a DIMACS formula; MM_NEGATIVE when unsat. */
MONOMAP_API mm_status mm_sat_dimacs(const char* dimacs, char** assignment);

/* Solution sequence of dimension <= max_dim as a sequence document;
 * MM_NEGATIVE when none exists. */
MONOMAP_API mm_status mm_decouple(const mm_instance* instance, int max_dim, int max_robots,
                                  char** sequence_json);

/* Disc document; with a plan, adds the converted slides and their report.
 * MM_NEGATIVE if the slides fail validation. plan may be NULL. */
MONOMAP_API mm_status mm_to_discs(const mm_instance* instance, const mm_plan* plan,
                                  char** discs_json);

/* plan may be NULL. */
MONOMAP_API mm_status mm_render(const mm_instance* instance, const mm_plan* plan,
                                mm_render_format format, char** out);

#ifdef __cplusplus
}
#endif

#endif /* MONOMAP_MONOMAP_H_ */

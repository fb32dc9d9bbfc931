/*
 * qbsim C API: two-cell quantum battery simulation behind a stable ABI.
 *
 * Usage pattern:
 *   qbsim_scenario* s = qbsim_scenario_new();
 *   qbsim_scenario_set_model(s, "ising");
 *   qbsim_scenario_set_param(s, "D", 3.0);
 *   qbsim_result* r = NULL;
 *   if (qbsim_run(s, &r) != QBSIM_OK) { fputs(qbsim_last_error(), stderr); }
 *   qbsim_result_emit_file(r, "csv", "out.csv");
 *   qbsim_result_free(r);
 *   qbsim_scenario_free(s);
 *
 * Every function that can fail returns a qbsim_status; on failure
 * qbsim_last_error() describes the problem (thread-local storage).
 */

#ifndef QBSIM_H
#define QBSIM_H

#include <stddef.h>

#if defined(_WIN32)
#define QBSIM_API __declspec(dllexport)
#else
#define QBSIM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qbsim_status {
    QBSIM_OK = 0,
    QBSIM_ERR_INVALID = 1,  /* invalid argument or configuration */
    QBSIM_ERR_IO = 2,       /* file-system failure */
    QBSIM_ERR_INTERNAL = 3  /* unexpected numerical/internal failure */
} qbsim_status;

/* A scenario under construction (model, parameters, grid, observables,
 * optional sweep) and a finished run (record series plus peak reports). */
typedef struct qbsim_scenario qbsim_scenario;
typedef struct qbsim_result qbsim_result;

/* Library semantic version, e.g. "1.0.0". */
QBSIM_API const char* qbsim_version(void);

/* Description of the most recent failure on this thread ("" if none). The
 * pointer stays valid until the next failing call on the same thread. */
QBSIM_API const char* qbsim_last_error(void);

/* Minimal full-charge time pi / (2 omega); NaN on omega <= 0. */
QBSIM_API double qbsim_t_min(double omega);

/* ---- scenario lifecycle ------------------------------------------------ */

/* Fresh scenario: custom model, default couplings (J = omega = omega0 = 1,
 * gamma = delta = D = 0), default grid, all observables. Free with
 * qbsim_scenario_free (NULL-safe). Returns NULL only on allocation failure. */
QBSIM_API qbsim_scenario* qbsim_scenario_new(void);
QBSIM_API void qbsim_scenario_free(qbsim_scenario* s);

/* Model preset: "custom" | "ising" | "xxz" | "xyz". */
QBSIM_API qbsim_status qbsim_scenario_set_model(qbsim_scenario* s,
                                                const char* name);

/* Coupling override: name in {"J","gamma","delta","D","omega","omega0"}. */
QBSIM_API qbsim_status qbsim_scenario_set_param(qbsim_scenario* s,
                                                const char* name,
                                                double value);

/* Time window [t_start, t_end]; the default window (t_min-based, preset
 * dependent) applies until this is called. */
QBSIM_API qbsim_status qbsim_scenario_set_window(qbsim_scenario* s,
                                                 double t_start, double t_end);

/* Number of grid points including both endpoints (default 2001). */
QBSIM_API qbsim_status qbsim_scenario_set_steps(qbsim_scenario* s, int steps);

/* Comma-separated subset of "ergotropy,power,coherence,steering,energy". */
QBSIM_API qbsim_status qbsim_scenario_set_observables(qbsim_scenario* s,
                                                      const char* names);

/* Sweep one parameter ("D" | "delta" | "gamma") over count values. */
QBSIM_API qbsim_status qbsim_scenario_set_sweep(qbsim_scenario* s,
                                                const char* parameter,
                                                const double* values,
                                                size_t count);

QBSIM_API qbsim_status qbsim_scenario_set_label(qbsim_scenario* s,
                                                const char* label);

/* Replace the scenario from a JSON config document / file (documented
 * schema; unknown keys are rejected). Settings made before this call are
 * overwritten; setters may refine the result afterwards. */
QBSIM_API qbsim_status qbsim_scenario_from_json(qbsim_scenario* s,
                                                const char* json_text);
QBSIM_API qbsim_status qbsim_scenario_load(qbsim_scenario* s,
                                           const char* path);

/* Serialize the resolved scenario to JSON. Two-call protocol: *needed is set
 * to the required size including the terminating NUL; call with buf = NULL to
 * query the size (returns QBSIM_OK), then again with a buffer of that size.
 * A non-NULL buffer that is too small reports QBSIM_ERR_INVALID without
 * being written. */
QBSIM_API qbsim_status qbsim_scenario_to_json(const qbsim_scenario* s,
                                              char* buf, size_t buflen,
                                              size_t* needed);

/* ---- execution --------------------------------------------------------- */

/* Resolve and run the scenario (every sweep value, or the single base
 * point). On success *out owns the result; free with qbsim_result_free. */
QBSIM_API qbsim_status qbsim_run(const qbsim_scenario* s, qbsim_result** out);

/* Collective-vs-parallel comparison on the scenario's parameters and grid
 * (any sweep is ignored). Series are tagged sweep_param "mode" with values
 * 0 = collective, 1 = parallel, 2 = parallel-analytic. */
QBSIM_API qbsim_status qbsim_run_compare(const qbsim_scenario* s,
                                         qbsim_result** out);

/* Built-in parameter studies (one per reproduced figure panel). */
QBSIM_API size_t qbsim_figure_count(void);
QBSIM_API const char* qbsim_figure_name(size_t index); /* NULL past the end */
QBSIM_API qbsim_status qbsim_run_figure(size_t index, qbsim_result** out);

QBSIM_API void qbsim_result_free(qbsim_result* r);

/* ---- result access ----------------------------------------------------- */

QBSIM_API size_t qbsim_result_series_count(const qbsim_result* r);
QBSIM_API size_t qbsim_result_record_count(const qbsim_result* r,
                                           size_t series);
QBSIM_API const char* qbsim_result_series_label(const qbsim_result* r,
                                                size_t series);

/* One record as { t, ergotropy, power, coherence, steering, energy }. */
QBSIM_API qbsim_status qbsim_result_record(const qbsim_result* r,
                                           size_t series, size_t index,
                                           double out_values[6]);

/* Peak of "ergotropy" or "power" for one series. */
QBSIM_API qbsim_status qbsim_result_peak(const qbsim_result* r, size_t series,
                                         const char* kind, double* t_peak,
                                         double* value_peak);

/* ---- emission ----------------------------------------------------------- */

/* format: "csv" | "json". The string variant follows the same two-call
 * protocol as qbsim_scenario_to_json. */
QBSIM_API qbsim_status qbsim_result_emit_file(const qbsim_result* r,
                                              const char* format,
                                              const char* path);
QBSIM_API qbsim_status qbsim_result_emit_string(const qbsim_result* r,
                                                const char* format, char* buf,
                                                size_t buflen, size_t* needed);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* QBSIM_H */

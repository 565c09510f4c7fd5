// Copyright 2026 The kgsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/* C interface to the kgsim library.
 *
 * Objects are opaque handles created by *_load / *_parse / *_run functions
 * and released with the matching *_free. Every fallible call returns a
 * kgsim_status; on failure kgsim_last_error() describes the problem for the
 * calling thread. Strings returned through `char **` are heap-allocated and
 * must be released with kgsim_string_free.
 */
#ifndef KGSIM_KGSIM_H
#define KGSIM_KGSIM_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(KGSIM_BUILDING_LIBRARY)
#    define KGSIM_API __declspec(dllexport)
#  else
#    define KGSIM_API __declspec(dllimport)
#  endif
#else
#  define KGSIM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum kgsim_status {
    KGSIM_OK = 0,
    KGSIM_ERR_INVALID_ARGUMENT = 1,
    KGSIM_ERR_CONFIG = 2,
    KGSIM_ERR_IO = 3,
    KGSIM_ERR_NUMERIC = 4,
    KGSIM_ERR_SCHEMA = 5,
    KGSIM_ERR_INTERNAL = 6
} kgsim_status;

typedef enum kgsim_component {
    KGSIM_PARTICLE = 0,
    KGSIM_ANTIPARTICLE = 1
} kgsim_component;

typedef struct kgsim_config kgsim_config;
typedef struct kgsim_trace kgsim_trace;

KGSIM_API const char *kgsim_version(void);

/* Message for the last failed call on this thread; "" if none. */
KGSIM_API const char *kgsim_last_error(void);

KGSIM_API void kgsim_string_free(char *text);

/* ---- configuration ---------------------------------------------------- */

KGSIM_API kgsim_status kgsim_config_load(const char *path, kgsim_config **out);
KGSIM_API kgsim_status kgsim_config_parse(const char *json_text, kgsim_config **out);
KGSIM_API void kgsim_config_free(kgsim_config *config);

/* Resolved configuration (all defaults explicit) as pretty-printed JSON. */
KGSIM_API kgsim_status kgsim_config_to_json(const kgsim_config *config, char **out);

KGSIM_API kgsim_status kgsim_config_num_qubits(const kgsim_config *config, int *out);
KGSIM_API kgsim_status kgsim_config_final_time(const kgsim_config *config, double *out);
KGSIM_API kgsim_status kgsim_config_component(const kgsim_config *config, kgsim_component *out);

/* Overrides: "paper-order" | "strang". */
KGSIM_API kgsim_status kgsim_config_set_splitting(kgsim_config *config, const char *splitting);
KGSIM_API kgsim_status kgsim_config_set_component(kgsim_config *config, kgsim_component component);

/* ---- sweeps and traces ------------------------------------------------ */

KGSIM_API kgsim_status kgsim_run_sweep(const kgsim_config *config, kgsim_trace **out);
KGSIM_API kgsim_status kgsim_trace_load(const char *path, kgsim_trace **out);
KGSIM_API void kgsim_trace_free(kgsim_trace *trace);

KGSIM_API size_t kgsim_trace_num_times(const kgsim_trace *trace);
KGSIM_API size_t kgsim_trace_num_sites(const kgsim_trace *trace);
KGSIM_API kgsim_status kgsim_trace_time(const kgsim_trace *trace, size_t row, double *out);
KGSIM_API kgsim_status kgsim_trace_probability(const kgsim_trace *trace, size_t row, size_t site,
                                               double *out);

KGSIM_API kgsim_status kgsim_trace_expected_position(const kgsim_trace *trace, size_t row,
                                                     double *out);
KGSIM_API kgsim_status kgsim_trace_transmission(const kgsim_trace *trace, size_t row,
                                                size_t barrier_site, double *out);

KGSIM_API kgsim_status kgsim_trace_to_csv(const kgsim_trace *trace, char **out);
KGSIM_API kgsim_status kgsim_trace_write_csv(const kgsim_trace *trace, const char *path);
KGSIM_API kgsim_status kgsim_trace_render_svg(const kgsim_trace *trace, char **out);

/* ---- circuits --------------------------------------------------------- */

/* OpenQASM 2.0 for the fully synthesized r-step propagator over time t. */
KGSIM_API kgsim_status kgsim_qasm_evolution(const kgsim_config *config, kgsim_component component,
                                            double t, int trotter_steps, char **out);

/* OpenQASM 2.0 for the QFT (inverse != 0 for its adjoint) on n qubits. */
KGSIM_API kgsim_status kgsim_qasm_qft(int num_qubits, int inverse, char **out);

/* ---- oracle comparison ------------------------------------------------ */

/* CSV "r,error" with error = ||psi_trotter - psi_exact||_2 at time t, from
 * the configured initial state, one row per entry of r_values. */
KGSIM_API kgsim_status kgsim_oracle_compare(const kgsim_config *config, double t,
                                            const int *r_values, size_t count, char **out);

#ifdef __cplusplus
}
#endif

#endif /* KGSIM_KGSIM_H */

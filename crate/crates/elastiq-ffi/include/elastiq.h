#ifndef ELASTIQ_H
#define ELASTIQ_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum ElastiqStatus {
  ElastiqStatus_Ok = 0,
  ElastiqStatus_NullPointer = 1,
  ElastiqStatus_InvalidArgument = 2,
  ElastiqStatus_ConfigError = 3,
  ElastiqStatus_NumericalError = 4,
  ElastiqStatus_Panic = 5,
} ElastiqStatus;

/**
 * A running simulation.
 */
typedef struct ElastiqSim ElastiqSim;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Interface-wave simulation with upper shear modulus `mu`, started from the
 * exact solution at `t = 0`.
 *
 * # Safety
 * `out` must be a valid pointer to writable storage.
 */
enum ElastiqStatus elastiq_sim_new_stoneley(uint32_t order,
                                            uint32_t n,
                                            double mu,
                                            double cfl,
                                            struct ElastiqSim **out);

/**
 * Manufactured-solution simulation on the curved two-block domain.
 *
 * # Safety
 * `out` must be a valid pointer to writable storage.
 */
enum ElastiqStatus elastiq_sim_new_manufactured(uint32_t order,
                                                uint32_t n,
                                                double cfl,
                                                struct ElastiqSim **out);

/**
 * Random initial data with homogeneous Dirichlet boundaries and zero
 * initial velocity; conserves the discrete energy.
 *
 * # Safety
 * `out` must be a valid pointer to writable storage.
 */
enum ElastiqStatus elastiq_sim_new_energy(uint32_t order,
                                          uint32_t n,
                                          uint64_t seed,
                                          double cfl,
                                          struct ElastiqSim **out);

/**
 * Advances `steps` time steps.
 *
 * # Safety
 * `sim` must be a handle returned by an `elastiq_sim_new_*` function.
 */
enum ElastiqStatus elastiq_sim_step(struct ElastiqSim *sim, uint64_t steps);

/**
 * # Safety
 * `sim` must be a valid handle and `out` writable.
 */
enum ElastiqStatus elastiq_sim_time(struct ElastiqSim *sim, double *out);

/**
 * # Safety
 * `sim` must be a valid handle and `out` writable.
 */
enum ElastiqStatus elastiq_sim_dt(struct ElastiqSim *sim, double *out);

/**
 * Discrete energy of the two stored levels. Conserved only for the
 * energy scenario.
 *
 * # Safety
 * `sim` must be a valid handle and `out` writable.
 */
enum ElastiqStatus elastiq_sim_energy(struct ElastiqSim *sim, double *out);

/**
 * Weighted l2 error against the exact solution at the current time.
 * Fails with `InvalidArgument` for scenarios without one.
 *
 * # Safety
 * `sim` must be a valid handle and `out` writable.
 */
enum ElastiqStatus elastiq_sim_l2_error(struct ElastiqSim *sim, double *out);

/**
 * Releases a simulation. Null is accepted.
 *
 * # Safety
 * `sim` must be null or a handle not yet freed.
 */
void elastiq_sim_free(struct ElastiqSim *sim);

/**
 * Interface-wave phase velocity for the tabulated materials with upper
 * shear modulus `mu`.
 *
 * # Safety
 * `out` must be writable.
 */
enum ElastiqStatus elastiq_stoneley_phase_velocity(double mu, double *out);

/**
 * Copies the calling thread's last error message, NUL-terminated and
 * truncated to `cap` bytes, into `buf`. Returns the full message length
 * in bytes (without the terminator), so a null `buf` queries the size.
 *
 * # Safety
 * `buf` must be null or point to `cap` writable bytes.
 */
uintptr_t elastiq_last_error_message(char *buf, uintptr_t cap);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* ELASTIQ_H */

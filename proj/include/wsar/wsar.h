/*
 * wsar — FMCW synthetic-aperture imaging toolkit, C API.
 *
 * All objects are opaque handles created and released by the library.
 * Functions return WSAR_OK on success; on failure they return a status code
 * and leave a human-readable message in wsar_last_error() (thread local).
 * Out-parameters are written only on success.
 */

#ifndef WSAR_H
#define WSAR_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum wsar_status {
    WSAR_OK = 0,
    WSAR_ERROR_INVALID = 1,  /* violated precondition or bad argument */
    WSAR_ERROR_CONFIG = 2,   /* malformed configuration file */
    WSAR_ERROR_IO = 3,       /* file cannot be read or written */
    WSAR_ERROR_INTERNAL = 4
} wsar_status;

typedef enum wsar_window {
    WSAR_WINDOW_RECT = 0,
    WSAR_WINDOW_HAMMING = 1
} wsar_window;

typedef struct wsar_scenario wsar_scenario; /* config: radar, track, scene, grid */
typedef struct wsar_cube wsar_cube;         /* raw beat samples (slow x fast time) */
typedef struct wsar_profiles wsar_profiles; /* range-compressed profiles */
typedef struct wsar_image wsar_image;       /* complex image on a grid */
typedef struct wsar_field wsar_field;       /* real dB field on a grid */

typedef struct wsar_grid {
    double x0, y0; /* first pixel centre, m */
    double dx, dy; /* pixel pitch, m */
    uint64_t nx, ny;
} wsar_grid;

typedef struct wsar_region {
    double x0, x1, y0, y1; /* rectangle in scene coordinates, m */
} wsar_region;

typedef struct wsar_subarray_spec {
    int64_t m;             /* elements per sub-array */
    int64_t overlap;       /* shared elements between consecutive sub-arrays */
    double steer_deg;      /* steering angle from boresight */
    double focus_range_m;  /* steering focal range */
} wsar_subarray_spec;

typedef struct wsar_profile_stats {
    int64_t peak_bin;
    double peak_db;
    double width_3db_bins;
    double peak_sidelobe_db;
    double peak_freq_hz;  /* beat frequency of the peak bin */
    double peak_range_m;  /* slant range of the peak bin */
} wsar_profile_stats;

typedef struct wsar_psf_stats {
    double peak_x_m, peak_y_m;
    double peak_db;
    double range_width_m;   /* -3 dB width through the peak, range axis */
    double xrange_width_m;  /* -3 dB width through the peak, cross-range axis */
    double psl_db;          /* peak side-lobe level relative to the peak */
    double islr_db;         /* integrated side-lobe ratio */
} wsar_psf_stats;

const char* wsar_version(void);
const char* wsar_last_error(void);

/* Worker count for parallel kernels; 0 = hardware default. Outputs never
 * depend on the value. */
void wsar_set_threads(int n);
int wsar_threads(void);

/* ---- scenario ---------------------------------------------------------- */

wsar_status wsar_scenario_load(const char* path, wsar_scenario** out);
wsar_status wsar_scenario_grid(const wsar_scenario* sc, wsar_grid* out);
wsar_status wsar_scenario_info(const wsar_scenario* sc, double* f_c, double* b,
                               double* noise_sigma, uint64_t* seed, uint64_t* n_targets);
wsar_status wsar_scenario_track(const wsar_scenario* sc, double* start, double* spacing,
                                uint64_t* count);
int wsar_scenario_has_region(const wsar_scenario* sc);
wsar_status wsar_scenario_region(const wsar_scenario* sc, wsar_region* out);
void wsar_scenario_free(wsar_scenario* sc);

/* ---- simulation -------------------------------------------------------- */

wsar_status wsar_simulate(const wsar_scenario* sc, wsar_cube** out);
wsar_status wsar_cube_add_noise(const wsar_cube* cube, double sigma, uint64_t seed,
                                wsar_cube** out);
wsar_status wsar_cube_dims(const wsar_cube* cube, uint64_t* n_slow, uint64_t* n_fast);
wsar_status wsar_cube_write(const wsar_cube* cube, const char* path);
wsar_status wsar_cube_read(const char* path, wsar_cube** out);
void wsar_cube_free(wsar_cube* cube);

/* ---- range compression ------------------------------------------------- */

/* pad_factor must be 1, 2, 4 or 8. */
wsar_status wsar_range_compress(const wsar_cube* cube, wsar_window window, int pad_factor,
                                wsar_profiles** out);
wsar_status wsar_profiles_dims(const wsar_profiles* profiles, uint64_t* n_slow,
                               uint64_t* n_bins);
wsar_status wsar_profiles_stats(const wsar_profiles* profiles, uint64_t row,
                                wsar_profile_stats* out);
wsar_status wsar_profiles_write(const wsar_profiles* profiles, const char* path);
wsar_status wsar_profiles_read(const char* path, wsar_profiles** out);
void wsar_profiles_free(wsar_profiles* profiles);

/* ---- imaging ----------------------------------------------------------- */

wsar_status wsar_backproject(const wsar_profiles* profiles, const wsar_grid* grid,
                             wsar_window azimuth_window, wsar_image** out);
wsar_status wsar_image_grid(const wsar_image* img, wsar_grid* out);
wsar_status wsar_image_psf_stats(const wsar_image* img, wsar_psf_stats* out);
wsar_status wsar_image_write(const wsar_image* img, const char* path);
wsar_status wsar_image_read(const char* path, wsar_image** out);
/* 16-bit grayscale PGM of the dB magnitude clipped at -dynamic_range_db. */
wsar_status wsar_image_write_pgm(const wsar_image* img, double dynamic_range_db,
                                 const char* path);
void wsar_image_free(wsar_image* img);

/* ---- apodization ------------------------------------------------------- */

/* Both take the rectangular look and the Hamming look of the same scene. */
wsar_status wsar_dual_apodization(const wsar_image* rect_look, const wsar_image* ham_look,
                                  wsar_image** out);
wsar_status wsar_complex_dual_apodization(const wsar_image* rect_look,
                                          const wsar_image* ham_look, wsar_image** out);

/* ---- de-noising -------------------------------------------------------- */

wsar_status wsar_image_to_db(const wsar_image* img, double dynamic_range_db,
                             wsar_field** out);
wsar_status wsar_field_dims(const wsar_field* field, uint64_t* nx, uint64_t* ny);
/* Edge-preserving nonlinear diffusion; dt <= 0.25, n_steps >= 1. */
wsar_status wsar_denoise(const wsar_field* field, double k, double sigma_g, double dt,
                         int n_steps, wsar_field** out);
wsar_status wsar_field_write_pgm(const wsar_field* field, double dynamic_range_db,
                                 const char* path);
wsar_status wsar_field_read_pgm(const char* path, double dynamic_range_db,
                                wsar_field** out);
void wsar_field_free(wsar_field* field);

/* ---- multispectral ----------------------------------------------------- */

/* Splits the beat cube into three equal fast-time sub-bands. */
wsar_status wsar_split_subbands(const wsar_cube* cube, wsar_cube** low, wsar_cube** mid,
                                wsar_cube** high);
/* False-colour composite (low->R, mid->G, high->B) written as binary PPM. */
wsar_status wsar_composite_ppm(const wsar_image* low, const wsar_image* mid,
                               const wsar_image* high, int enhance, const char* path);

/* ---- sub-array processing ---------------------------------------------- */

wsar_status wsar_subarray_image(const wsar_profiles* profiles, const wsar_grid* grid,
                                const wsar_subarray_spec* spec, wsar_image** out);
/* Monte Carlo SNR gain of sub-array processing over plain back-projection.
 * The scenario must define noise_sigma > 0; region == NULL uses the
 * scenario's snr_region. Deterministic for a fixed scenario seed. */
wsar_status wsar_snr_gain(const wsar_scenario* sc, const wsar_subarray_spec* spec,
                          const wsar_region* region, int n_trials, double* gain_db);

/* ---- point cloud ------------------------------------------------------- */

/* Local-maxima detections above (peak - threshold_db), written as CSV. */
wsar_status wsar_point_cloud_csv(const wsar_image* img, double threshold_db,
                                 int keep_intensity, const char* path, uint64_t* n_points);

#ifdef __cplusplus
}
#endif

#endif /* WSAR_H */

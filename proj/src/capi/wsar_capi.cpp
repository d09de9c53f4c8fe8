#include "wsar/wsar.h"

#include <cstring>
#include <string>

#include "analysis/metrics.hpp"
#include "analysis/pointcloud.hpp"
#include "apod/apodize.hpp"
#include "bp/backproject.hpp"
#include "core/threading.hpp"
#include "denoise/perona_malik.hpp"
#include "io/config.hpp"
#include "io/container.hpp"
#include "io/image_export.hpp"
#include "rc/range_compress.hpp"
#include "sim/simulate.hpp"
#include "spectral/multispectral.hpp"
#include "subarray/subarray.hpp"

struct wsar_scenario {
    wsar::Scenario sc;
};
struct wsar_cube {
    wsar::SignalCube cube;
};
struct wsar_profiles {
    wsar::RangeProfileCube profiles;
};
struct wsar_image {
    wsar::ComplexImage img;
};
struct wsar_field {
    wsar::Field2D field;
};

namespace {

thread_local std::string g_last_error;

template <typename Fn>
wsar_status guarded(Fn&& fn) {
    try {
        fn();
        g_last_error.clear();
        return WSAR_OK;
    } catch (const wsar::ConfigError& e) {
        g_last_error = e.what();
        return WSAR_ERROR_CONFIG;
    } catch (const wsar::ContractError& e) {
        g_last_error = e.what();
        return WSAR_ERROR_INVALID;
    } catch (const wsar::IoError& e) {
        g_last_error = e.what();
        return WSAR_ERROR_IO;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return WSAR_ERROR_INTERNAL;
    }
}

wsar_status fail_invalid(const char* msg) {
    g_last_error = msg;
    return WSAR_ERROR_INVALID;
}

bool null_check(const void* p) { return p == nullptr; }

wsar::ImageGrid to_grid(const wsar_grid& g) {
    wsar::ImageGrid grid;
    grid.x0 = g.x0;
    grid.y0 = g.y0;
    grid.dx = g.dx;
    grid.dy = g.dy;
    grid.nx = static_cast<std::int64_t>(g.nx);
    grid.ny = static_cast<std::int64_t>(g.ny);
    return grid;
}

wsar_grid from_grid(const wsar::ImageGrid& grid) {
    return {grid.x0, grid.y0, grid.dx, grid.dy, static_cast<uint64_t>(grid.nx),
            static_cast<uint64_t>(grid.ny)};
}

wsar::Window to_window(wsar_window w) {
    if (w != WSAR_WINDOW_RECT && w != WSAR_WINDOW_HAMMING) {
        throw wsar::ContractError("unknown window id");
    }
    return static_cast<wsar::Window>(w);
}

}  // namespace

extern "C" {

const char* wsar_version(void) { return "1.0.0"; }

const char* wsar_last_error(void) { return g_last_error.c_str(); }

void wsar_set_threads(int n) { wsar::set_threads(n); }

int wsar_threads(void) { return wsar::thread_count(); }

/* ---- scenario ---------------------------------------------------------- */

wsar_status wsar_scenario_load(const char* path, wsar_scenario** out) {
    if (null_check(path) || null_check(out)) {
        return fail_invalid("null argument");
    }
    return guarded([&] { *out = new wsar_scenario{wsar::load_scenario(path)}; });
}

wsar_status wsar_scenario_grid(const wsar_scenario* sc, wsar_grid* out) {
    if (null_check(sc) || null_check(out)) {
        return fail_invalid("null argument");
    }
    return guarded([&] { *out = from_grid(sc->sc.grid); });
}

wsar_status wsar_scenario_info(const wsar_scenario* sc, double* f_c, double* b,
                               double* noise_sigma, uint64_t* seed, uint64_t* n_targets) {
    if (null_check(sc)) {
        return fail_invalid("null argument");
    }
    return guarded([&] {
        if (f_c != nullptr) *f_c = sc->sc.sim.params.f_c;
        if (b != nullptr) *b = sc->sc.sim.params.b;
        if (noise_sigma != nullptr) *noise_sigma = sc->sc.sim.noise_sigma;
        if (seed != nullptr) *seed = sc->sc.sim.rng_seed;
        if (n_targets != nullptr) *n_targets = sc->sc.sim.scene.size();
    });
}

wsar_status wsar_scenario_track(const wsar_scenario* sc, double* start, double* spacing,
                                uint64_t* count) {
    if (null_check(sc)) {
        return fail_invalid("null argument");
    }
    return guarded([&] {
        if (start != nullptr) *start = sc->sc.sim.track.start();
        if (spacing != nullptr) *spacing = sc->sc.sim.track.spacing();
        if (count != nullptr) *count = static_cast<uint64_t>(sc->sc.sim.track.size());
    });
}

int wsar_scenario_has_region(const wsar_scenario* sc) {
    return sc != nullptr && sc->sc.has_snr_region ? 1 : 0;
}

wsar_status wsar_scenario_region(const wsar_scenario* sc, wsar_region* out) {
    if (null_check(sc) || null_check(out)) {
        return fail_invalid("null argument");
    }
    if (!sc->sc.has_snr_region) {
        return fail_invalid("scenario defines no snr_region");
    }
    const wsar::NoiseRegion& r = sc->sc.snr_region;
    *out = {r.x0, r.x1, r.y0, r.y1};
    return WSAR_OK;
}

void wsar_scenario_free(wsar_scenario* sc) { delete sc; }

/* ---- simulation -------------------------------------------------------- */

wsar_status wsar_simulate(const wsar_scenario* sc, wsar_cube** out) {
    if (null_check(sc) || null_check(out)) {
        return fail_invalid("null argument");
    }
    return guarded([&] { *out = new wsar_cube{wsar::simulate(sc->sc.sim)}; });
}

wsar_status wsar_cube_add_noise(const wsar_cube* cube, double sigma, uint64_t seed,
                                wsar_cube** out) {
    if (null_check(cube) || null_check(out)) {
        return fail_invalid("null argument");
    }
    return guarded([&] { *out = new wsar_cube{wsar::add_noise(cube->cube, sigma, seed)}; });
}

wsar_status wsar_cube_dims(const wsar_cube* cube, uint64_t* n_slow, uint64_t* n_fast) {
    if (null_check(cube)) {
        return fail_invalid("null argument");
    }
    if (n_slow != nullptr) *n_slow = static_cast<uint64_t>(cube->cube.n_slow());
    if (n_fast != nullptr) *n_fast = static_cast<uint64_t>(cube->cube.n_fast());
    return WSAR_OK;
}

wsar_status wsar_cube_write(const wsar_cube* cube, const char* path) {
    if (null_check(cube) || null_check(path)) {
        return fail_invalid("null argument");
    }
    return guarded([&] { wsar::write_cube(cube->cube, path); });
}

wsar_status wsar_cube_read(const char* path, wsar_cube** out) {
    if (null_check(path) || null_check(out)) {
        return fail_invalid("null argument");
    }
    return guarded([&] { *out = new wsar_cube{wsar::read_cube(path)}; });
}

void wsar_cube_free(wsar_cube* cube) { delete cube; }

/* ---- range compression ------------------------------------------------- */

wsar_status wsar_range_compress(const wsar_cube* cube, wsar_window window, int pad_factor,
                                wsar_profiles** out) {
    if (null_check(cube) || null_check(out)) {
        return fail_invalid("null argument");
    }
    return guarded([&] {
        *out = new wsar_profiles{
            wsar::range_compress(cube->cube, to_window(window), pad_factor)};
    });
}

wsar_status wsar_profiles_dims(const wsar_profiles* profiles, uint64_t* n_slow,
                               uint64_t* n_bins) {
    if (null_check(profiles)) {
        return fail_invalid("null argument");
    }
    if (n_slow != nullptr) *n_slow = static_cast<uint64_t>(profiles->profiles.n_slow());
    if (n_bins != nullptr) *n_bins = static_cast<uint64_t>(profiles->profiles.n_bins());
    return WSAR_OK;
}

wsar_status wsar_profiles_stats(const wsar_profiles* profiles, uint64_t row,
                                wsar_profile_stats* out) {
    if (null_check(profiles) || null_check(out)) {
        return fail_invalid("null argument");
    }
    return guarded([&] {
        const wsar::RangeProfileCube& p = profiles->profiles;
        if (row >= static_cast<uint64_t>(p.n_slow())) {
            throw wsar::ContractError("profile row out of bounds");
        }
        const wsar::ProfileMetrics m = wsar::profile_metrics(
            std::span<const wsar::cdouble>(p.row(static_cast<std::int64_t>(row)),
                                           static_cast<std::size_t>(p.n_bins())));
        out->peak_bin = m.peak_bin;
        out->peak_db = m.peak_db;
        out->width_3db_bins = m.width_3db_bins;
        out->peak_sidelobe_db = m.peak_sidelobe_db;
        out->peak_freq_hz = p.bin_to_freq(static_cast<double>(m.peak_bin));
        out->peak_range_m = p.bin_to_range(static_cast<double>(m.peak_bin));
    });
}

wsar_status wsar_profiles_write(const wsar_profiles* profiles, const char* path) {
    if (null_check(profiles) || null_check(path)) {
        return fail_invalid("null argument");
    }
    return guarded([&] { wsar::write_profiles(profiles->profiles, path); });
}

wsar_status wsar_profiles_read(const char* path, wsar_profiles** out) {
    if (null_check(path) || null_check(out)) {
        return fail_invalid("null argument");
    }
    return guarded([&] { *out = new wsar_profiles{wsar::read_profiles(path)}; });
}

void wsar_profiles_free(wsar_profiles* profiles) { delete profiles; }

/* ---- imaging ----------------------------------------------------------- */

wsar_status wsar_backproject(const wsar_profiles* profiles, const wsar_grid* grid,
                             wsar_window azimuth_window, wsar_image** out) {
    if (null_check(profiles) || null_check(grid) || null_check(out)) {
        return fail_invalid("null argument");
    }
    return guarded([&] {
        *out = new wsar_image{
            wsar::backproject(profiles->profiles, to_grid(*grid), to_window(azimuth_window))};
    });
}

wsar_status wsar_image_grid(const wsar_image* img, wsar_grid* out) {
    if (null_check(img) || null_check(out)) {
        return fail_invalid("null argument");
    }
    *out = from_grid(img->img.grid());
    return WSAR_OK;
}

wsar_status wsar_image_psf_stats(const wsar_image* img, wsar_psf_stats* out) {
    if (null_check(img) || null_check(out)) {
        return fail_invalid("null argument");
    }
    return guarded([&] {
        const wsar::ImagePsfMetrics m = wsar::image_psf_metrics(img->img);
        out->peak_x_m = m.peak_x;
        out->peak_y_m = m.peak_y;
        out->peak_db = m.peak_db;
        out->range_width_m = m.range_width_m;
        out->xrange_width_m = m.xrange_width_m;
        out->psl_db = m.psl_db;
        out->islr_db = m.islr_db;
    });
}

wsar_status wsar_image_write(const wsar_image* img, const char* path) {
    if (null_check(img) || null_check(path)) {
        return fail_invalid("null argument");
    }
    return guarded([&] { wsar::write_image(img->img, path); });
}

wsar_status wsar_image_read(const char* path, wsar_image** out) {
    if (null_check(path) || null_check(out)) {
        return fail_invalid("null argument");
    }
    return guarded([&] { *out = new wsar_image{wsar::read_image(path)}; });
}

wsar_status wsar_image_write_pgm(const wsar_image* img, double dynamic_range_db,
                                 const char* path) {
    if (null_check(img) || null_check(path)) {
        return fail_invalid("null argument");
    }
    return guarded([&] {
        wsar::write_pgm(wsar::to_db_magnitude(img->img, dynamic_range_db), dynamic_range_db,
                        path);
    });
}

void wsar_image_free(wsar_image* img) { delete img; }

/* ---- apodization ------------------------------------------------------- */

wsar_status wsar_dual_apodization(const wsar_image* rect_look, const wsar_image* ham_look,
                                  wsar_image** out) {
    if (null_check(rect_look) || null_check(ham_look) || null_check(out)) {
        return fail_invalid("null argument");
    }
    return guarded(
        [&] { *out = new wsar_image{wsar::dual_apodization(rect_look->img, ham_look->img)}; });
}

wsar_status wsar_complex_dual_apodization(const wsar_image* rect_look,
                                          const wsar_image* ham_look, wsar_image** out) {
    if (null_check(rect_look) || null_check(ham_look) || null_check(out)) {
        return fail_invalid("null argument");
    }
    return guarded([&] {
        *out = new wsar_image{wsar::complex_dual_apodization(rect_look->img, ham_look->img)};
    });
}

/* ---- de-noising -------------------------------------------------------- */

wsar_status wsar_image_to_db(const wsar_image* img, double dynamic_range_db,
                             wsar_field** out) {
    if (null_check(img) || null_check(out)) {
        return fail_invalid("null argument");
    }
    return guarded(
        [&] { *out = new wsar_field{wsar::to_db_magnitude(img->img, dynamic_range_db)}; });
}

wsar_status wsar_field_dims(const wsar_field* field, uint64_t* nx, uint64_t* ny) {
    if (null_check(field)) {
        return fail_invalid("null argument");
    }
    if (nx != nullptr) *nx = static_cast<uint64_t>(field->field.nx());
    if (ny != nullptr) *ny = static_cast<uint64_t>(field->field.ny());
    return WSAR_OK;
}

wsar_status wsar_denoise(const wsar_field* field, double k, double sigma_g, double dt,
                         int n_steps, wsar_field** out) {
    if (null_check(field) || null_check(out)) {
        return fail_invalid("null argument");
    }
    return guarded([&] {
        wsar::DenoiseParams params;
        params.k = k;
        params.sigma_g = sigma_g;
        params.dt = dt;
        params.n_steps = n_steps;
        *out = new wsar_field{wsar::perona_malik(field->field, params)};
    });
}

wsar_status wsar_field_write_pgm(const wsar_field* field, double dynamic_range_db,
                                 const char* path) {
    if (null_check(field) || null_check(path)) {
        return fail_invalid("null argument");
    }
    return guarded([&] { wsar::write_pgm(field->field, dynamic_range_db, path); });
}

wsar_status wsar_field_read_pgm(const char* path, double dynamic_range_db,
                                wsar_field** out) {
    if (null_check(path) || null_check(out)) {
        return fail_invalid("null argument");
    }
    return guarded([&] { *out = new wsar_field{wsar::read_pgm(path, dynamic_range_db)}; });
}

void wsar_field_free(wsar_field* field) { delete field; }

/* ---- multispectral ----------------------------------------------------- */

wsar_status wsar_split_subbands(const wsar_cube* cube, wsar_cube** low, wsar_cube** mid,
                                wsar_cube** high) {
    if (null_check(cube) || null_check(low) || null_check(mid) || null_check(high)) {
        return fail_invalid("null argument");
    }
    return guarded([&] {
        wsar::SubbandSplit split = wsar::split_subbands(cube->cube);
        *low = new wsar_cube{std::move(split.cubes[0])};
        *mid = new wsar_cube{std::move(split.cubes[1])};
        *high = new wsar_cube{std::move(split.cubes[2])};
    });
}

wsar_status wsar_composite_ppm(const wsar_image* low, const wsar_image* mid,
                               const wsar_image* high, int enhance, const char* path) {
    if (null_check(low) || null_check(mid) || null_check(high) || null_check(path)) {
        return fail_invalid("null argument");
    }
    return guarded([&] {
        wsar::write_ppm(wsar::composite_rgb(low->img, mid->img, high->img, enhance != 0),
                        path);
    });
}

/* ---- sub-array processing ---------------------------------------------- */

wsar_status wsar_subarray_image(const wsar_profiles* profiles, const wsar_grid* grid,
                                const wsar_subarray_spec* spec, wsar_image** out) {
    if (null_check(profiles) || null_check(grid) || null_check(spec) || null_check(out)) {
        return fail_invalid("null argument");
    }
    return guarded([&] {
        wsar::SubarraySpec s;
        s.m = spec->m;
        s.overlap = spec->overlap;
        s.steer_deg = spec->steer_deg;
        s.focus_range_m = spec->focus_range_m;
        *out = new wsar_image{wsar::subarray_image(profiles->profiles, to_grid(*grid), s)};
    });
}

wsar_status wsar_snr_gain(const wsar_scenario* sc, const wsar_subarray_spec* spec,
                          const wsar_region* region, int n_trials, double* gain_db) {
    if (null_check(sc) || null_check(spec) || null_check(gain_db)) {
        return fail_invalid("null argument");
    }
    return guarded([&] {
        wsar::SubarraySpec s;
        s.m = spec->m;
        s.overlap = spec->overlap;
        s.steer_deg = spec->steer_deg;
        s.focus_range_m = spec->focus_range_m;
        wsar::NoiseRegion r;
        if (region != nullptr) {
            r = {region->x0, region->x1, region->y0, region->y1};
        } else if (sc->sc.has_snr_region) {
            r = sc->sc.snr_region;
        } else {
            throw wsar::ContractError("no noise region given and none in the scenario");
        }
        const wsar::SnrGainResult res = wsar::measure_snr_gain(
            sc->sc.sim, sc->sc.grid, s, r, n_trials, sc->sc.sim.rng_seed);
        *gain_db = res.gain_db;
    });
}

/* ---- point cloud ------------------------------------------------------- */

wsar_status wsar_point_cloud_csv(const wsar_image* img, double threshold_db,
                                 int keep_intensity, const char* path, uint64_t* n_points) {
    if (null_check(img) || null_check(path)) {
        return fail_invalid("null argument");
    }
    return guarded([&] {
        const std::vector<wsar::PointDetection> points =
            wsar::extract_point_cloud(img->img, threshold_db, keep_intensity != 0);
        wsar::write_pointcloud_csv(points, path);
        if (n_points != nullptr) {
            *n_points = points.size();
        }
    });
}

}  // extern "C"

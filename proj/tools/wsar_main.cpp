// Command-line front end for the wsar imaging library. Talks to the core
// exclusively through the public C API.

#include <cstdio>
#include <cstdlib>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "wsar/wsar.h"

namespace {

// Exit codes: 0 success, 1 I/O failure, 2 malformed config, 3 violated
// stage contract, 4 internal error.
int exit_code(wsar_status st) {
    switch (st) {
        case WSAR_OK:
            return 0;
        case WSAR_ERROR_IO:
            return 1;
        case WSAR_ERROR_CONFIG:
            return 2;
        case WSAR_ERROR_INVALID:
            return 3;
        default:
            return 4;
    }
}

[[noreturn]] void die(wsar_status st, const char* stage) {
    std::fprintf(stderr, "error: %s: %s\n", stage, wsar_last_error());
    std::exit(exit_code(st));
}

void check(wsar_status st, const char* stage) {
    if (st != WSAR_OK) {
        die(st, stage);
    }
}

struct ScenarioDeleter {
    void operator()(wsar_scenario* p) const { wsar_scenario_free(p); }
};
struct CubeDeleter {
    void operator()(wsar_cube* p) const { wsar_cube_free(p); }
};
struct ProfilesDeleter {
    void operator()(wsar_profiles* p) const { wsar_profiles_free(p); }
};
struct ImageDeleter {
    void operator()(wsar_image* p) const { wsar_image_free(p); }
};
struct FieldDeleter {
    void operator()(wsar_field* p) const { wsar_field_free(p); }
};

using ScenarioPtr = std::unique_ptr<wsar_scenario, ScenarioDeleter>;
using CubePtr = std::unique_ptr<wsar_cube, CubeDeleter>;
using ProfilesPtr = std::unique_ptr<wsar_profiles, ProfilesDeleter>;
using ImagePtr = std::unique_ptr<wsar_image, ImageDeleter>;
using FieldPtr = std::unique_ptr<wsar_field, FieldDeleter>;

ScenarioPtr load_scenario(const std::string& path) {
    wsar_scenario* sc = nullptr;
    const wsar_status st = wsar_scenario_load(path.c_str(), &sc);
    if (st != WSAR_OK) {
        // Any failure to obtain the config is a config failure for the CLI.
        std::fprintf(stderr, "error: config '%s': %s\n", path.c_str(), wsar_last_error());
        std::exit(2);
    }
    return ScenarioPtr(sc);
}

CubePtr simulate(const wsar_scenario* sc) {
    wsar_cube* cube = nullptr;
    check(wsar_simulate(sc, &cube), "simulate");
    return CubePtr(cube);
}

CubePtr read_cube(const std::string& path) {
    wsar_cube* cube = nullptr;
    check(wsar_cube_read(path.c_str(), &cube), "read cube");
    return CubePtr(cube);
}

wsar_window parse_window(const std::string& name) {
    if (name == "rect") {
        return WSAR_WINDOW_RECT;
    }
    if (name == "hamming") {
        return WSAR_WINDOW_HAMMING;
    }
    std::fprintf(stderr, "error: unknown window '%s' (rect|hamming)\n", name.c_str());
    std::exit(3);
}

bool ends_with(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

ProfilesPtr compress_cube(const wsar_cube* cube, const std::string& window, int pad) {
    wsar_profiles* prof = nullptr;
    check(wsar_range_compress(cube, parse_window(window), pad, &prof), "compress");
    return ProfilesPtr(prof);
}

// Accepts either a raw cube (compressed on the fly) or stored profiles.
ProfilesPtr load_profiles(const std::string& path, const std::string& window, int pad) {
    if (ends_with(path, ".wprf")) {
        wsar_profiles* prof = nullptr;
        check(wsar_profiles_read(path.c_str(), &prof), "read profiles");
        return ProfilesPtr(prof);
    }
    const CubePtr cube = read_cube(path);
    return compress_cube(cube.get(), window, pad);
}

ImagePtr backproject(const wsar_profiles* prof, const wsar_grid& grid,
                     const std::string& azimuth_window) {
    wsar_image* img = nullptr;
    check(wsar_backproject(prof, &grid, parse_window(azimuth_window), &img), "backproject");
    return ImagePtr(img);
}

void print_psf_stats(const wsar_image* img) {
    wsar_psf_stats s{};
    check(wsar_image_psf_stats(img, &s), "image metrics");
    std::printf("peak_x_m=%.9g\n", s.peak_x_m);
    std::printf("peak_y_m=%.9g\n", s.peak_y_m);
    std::printf("peak_db=%.4f\n", s.peak_db);
    std::printf("range_width_m=%.9g\n", s.range_width_m);
    std::printf("xrange_width_m=%.9g\n", s.xrange_width_m);
    std::printf("psl_db=%.4f\n", s.psl_db);
    std::printf("islr_db=%.4f\n", s.islr_db);
}

void print_profile_stats(const wsar_profiles* prof, uint64_t row) {
    wsar_profile_stats s{};
    check(wsar_profiles_stats(prof, row, &s), "profile metrics");
    std::printf("profile_row=%llu\n", static_cast<unsigned long long>(row));
    std::printf("peak_bin=%lld\n", static_cast<long long>(s.peak_bin));
    std::printf("peak_freq_hz=%.9g\n", s.peak_freq_hz);
    std::printf("peak_range_m=%.9g\n", s.peak_range_m);
    std::printf("width_3db_bins=%.6g\n", s.width_3db_bins);
    std::printf("peak_sidelobe_db=%.4f\n", s.peak_sidelobe_db);
}

double grid_center_range(const wsar_grid& grid) {
    return grid.y0 + 0.5 * static_cast<double>(grid.ny - 1) * grid.dy;
}

struct PipelineArgs {
    std::string config;
    std::string outdir;
    int pad = 4;
    double dynamic_range = 50.0;
    double threshold = 30.0;
    bool enhance = false;
};

int run_pipeline(const PipelineArgs& a) {
    const ScenarioPtr sc = load_scenario(a.config);
    wsar_grid grid{};
    check(wsar_scenario_grid(sc.get(), &grid), "grid");

    const std::string dir = a.outdir + "/";
    const CubePtr cube = simulate(sc.get());
    check(wsar_cube_write(cube.get(), (dir + "cube.wsar").c_str()), "write cube");

    const ProfilesPtr prof_rect = compress_cube(cube.get(), "rect", a.pad);
    print_profile_stats(prof_rect.get(), 0);
    const ImagePtr img_rect = backproject(prof_rect.get(), grid, "rect");
    check(wsar_image_write(img_rect.get(), (dir + "image_rect.wimg").c_str()), "write image");

    const ProfilesPtr prof_ham = compress_cube(cube.get(), "hamming", a.pad);
    const ImagePtr img_ham = backproject(prof_ham.get(), grid, "hamming");
    check(wsar_image_write(img_ham.get(), (dir + "image_hamming.wimg").c_str()), "write image");

    wsar_image* da_raw = nullptr;
    check(wsar_dual_apodization(img_rect.get(), img_ham.get(), &da_raw), "dual apodization");
    const ImagePtr img_da(da_raw);
    check(wsar_image_write(img_da.get(), (dir + "image_da.wimg").c_str()), "write image");

    wsar_image* cda_raw = nullptr;
    check(wsar_complex_dual_apodization(img_rect.get(), img_ham.get(), &cda_raw),
          "complex dual apodization");
    const ImagePtr img_cda(cda_raw);
    check(wsar_image_write(img_cda.get(), (dir + "image_cda.wimg").c_str()), "write image");
    check(wsar_image_write_pgm(img_cda.get(), a.dynamic_range, (dir + "image_cda.pgm").c_str()),
          "write pgm");

    // De-noised dB view of the apodized image.
    wsar_field* db_raw = nullptr;
    check(wsar_image_to_db(img_cda.get(), a.dynamic_range, &db_raw), "to dB");
    const FieldPtr db(db_raw);
    wsar_field* den_raw = nullptr;
    check(wsar_denoise(db.get(), 5.0, 1.0, 0.2, 50, &den_raw), "denoise");
    const FieldPtr denoised(den_raw);
    check(wsar_field_write_pgm(denoised.get(), a.dynamic_range,
                               (dir + "image_denoised.pgm").c_str()),
          "write pgm");

    // Three-band false-colour composite.
    wsar_cube* sub_raw[3] = {nullptr, nullptr, nullptr};
    check(wsar_split_subbands(cube.get(), &sub_raw[0], &sub_raw[1], &sub_raw[2]),
          "split subbands");
    const CubePtr sub0(sub_raw[0]);
    const CubePtr sub1(sub_raw[1]);
    const CubePtr sub2(sub_raw[2]);
    const ProfilesPtr p0 = compress_cube(sub0.get(), "rect", a.pad);
    const ProfilesPtr p1 = compress_cube(sub1.get(), "rect", a.pad);
    const ProfilesPtr p2 = compress_cube(sub2.get(), "rect", a.pad);
    const ImagePtr b0 = backproject(p0.get(), grid, "rect");
    const ImagePtr b1 = backproject(p1.get(), grid, "rect");
    const ImagePtr b2 = backproject(p2.get(), grid, "rect");
    check(wsar_composite_ppm(b0.get(), b1.get(), b2.get(), a.enhance ? 1 : 0,
                             (dir + "multispectral.ppm").c_str()),
          "composite");

    uint64_t n_points = 0;
    check(wsar_point_cloud_csv(img_ham.get(), a.threshold, 1,
                               (dir + "pointcloud.csv").c_str(), &n_points),
          "point cloud");

    // Scene metrics.
    double f_c = 0.0;
    double b = 0.0;
    check(wsar_scenario_info(sc.get(), &f_c, &b, nullptr, nullptr, nullptr), "info");
    double spacing = 0.0;
    uint64_t count = 0;
    check(wsar_scenario_track(sc.get(), nullptr, &spacing, &count), "track");
    const double c_light = 299792458.0;
    const double aperture = spacing * static_cast<double>(count - 1);
    const double range_res = c_light / (2.0 * b);
    const double xrange_res =
        (c_light / f_c) * grid_center_range(grid) / (2.0 * aperture);
    std::printf("range_resolution_m=%.9g\n", range_res);
    std::printf("xrange_resolution_m=%.9g\n", xrange_res);
    print_psf_stats(img_rect.get());
    std::printf("n_points=%llu\n", static_cast<unsigned long long>(n_points));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"FMCW synthetic-aperture imaging toolkit"};
    app.require_subcommand(1);

    int threads = 0;
    if (const char* env = std::getenv("WSAR_THREADS")) {
        threads = std::atoi(env);
    }
    app.add_option("--threads", threads, "worker threads (0 = auto)");

    // simulate
    auto* cmd_sim = app.add_subcommand("simulate", "synthesize a beat cube from a config");
    std::string sim_config;
    std::string sim_out;
    cmd_sim->add_option("-c,--config", sim_config, "scenario config")->required();
    cmd_sim->add_option("-o,--output", sim_out, "output .wsar path")->required();

    // compress
    auto* cmd_comp = app.add_subcommand("compress", "range-compress a beat cube");
    std::string comp_in;
    std::string comp_out;
    std::string comp_window = "rect";
    int comp_pad = 4;
    std::int64_t comp_row = -1;
    cmd_comp->add_option("-i,--input", comp_in, "input .wsar")->required();
    cmd_comp->add_option("-o,--output", comp_out, "output .wprf")->required();
    cmd_comp->add_option("--window", comp_window, "rect|hamming");
    cmd_comp->add_option("--pad", comp_pad, "pad factor 1|2|4|8");
    cmd_comp->add_option("--row", comp_row, "profile row to report (default middle)");

    // backproject
    auto* cmd_bp = app.add_subcommand("backproject", "form a complex image");
    std::string bp_in;
    std::string bp_config;
    std::string bp_out;
    std::string bp_pgm;
    std::string bp_window = "rect";
    std::string bp_azimuth;
    int bp_pad = 4;
    double bp_dr = 50.0;
    cmd_bp->add_option("-i,--input", bp_in, "input .wsar or .wprf")->required();
    cmd_bp->add_option("-c,--config", bp_config, "scenario config (grid source)")->required();
    cmd_bp->add_option("-o,--output", bp_out, "output .wimg")->required();
    cmd_bp->add_option("--window", bp_window, "fast-time window for .wsar input");
    cmd_bp->add_option("--azimuth-window", bp_azimuth, "aperture window (default = --window)");
    cmd_bp->add_option("--pad", bp_pad, "pad factor for .wsar input");
    cmd_bp->add_option("--pgm", bp_pgm, "also write a 16-bit PGM");
    cmd_bp->add_option("--dynamic-range", bp_dr, "PGM dynamic range, dB");

    // apodize
    auto* cmd_apod = app.add_subcommand("apodize", "combine rect and Hamming looks");
    std::string apod_mode = "dual";
    std::string apod_rect;
    std::string apod_ham;
    std::string apod_out;
    std::string apod_pgm;
    double apod_dr = 50.0;
    cmd_apod->add_option("--mode", apod_mode, "dual|cda")->required();
    cmd_apod->add_option("--rect", apod_rect, "rectangular look .wimg")->required();
    cmd_apod->add_option("--ham", apod_ham, "Hamming look .wimg")->required();
    cmd_apod->add_option("-o,--output", apod_out, "output .wimg")->required();
    cmd_apod->add_option("--pgm", apod_pgm, "also write a 16-bit PGM");
    cmd_apod->add_option("--dynamic-range", apod_dr, "PGM dynamic range, dB");

    // denoise
    auto* cmd_den = app.add_subcommand("denoise", "edge-preserving de-noising");
    std::string den_in;
    std::string den_out;
    double den_k = 5.0;
    double den_sigma = 1.0;
    double den_dt = 0.2;
    int den_steps = 50;
    double den_dr = 50.0;
    cmd_den->add_option("-i,--input", den_in, "input .wimg or .pgm")->required();
    cmd_den->add_option("-o,--output", den_out, "output .pgm")->required();
    cmd_den->add_option("--k", den_k, "edge threshold, dB");
    cmd_den->add_option("--sigma", den_sigma, "gradient pre-smoothing, px");
    cmd_den->add_option("--dt", den_dt, "time step (<= 0.25)");
    cmd_den->add_option("--steps", den_steps, "iterations");
    cmd_den->add_option("--dynamic-range", den_dr, "dB span of the dB image");

    // multispectral
    auto* cmd_ms = app.add_subcommand("multispectral", "three-band false-colour composite");
    std::string ms_config;
    std::string ms_in;
    std::string ms_out;
    int ms_pad = 4;
    bool ms_enhance = false;
    cmd_ms->add_option("-c,--config", ms_config, "scenario config")->required();
    cmd_ms->add_option("-i,--input", ms_in, "input .wsar (default: simulate)");
    cmd_ms->add_option("-o,--output", ms_out, "output .ppm")->required();
    cmd_ms->add_option("--pad", ms_pad, "pad factor");
    cmd_ms->add_flag("--enhance", ms_enhance, "percentile contrast stretch");

    // subarray
    auto* cmd_sub = app.add_subcommand("subarray", "two-stage sub-array beamformed image");
    std::string sub_config;
    std::string sub_in;
    std::string sub_out;
    std::string sub_pgm;
    std::int64_t sub_m = 10;
    std::int64_t sub_overlap = 9;
    double sub_steer = 0.0;
    double sub_focus = 0.0;
    int sub_pad = 4;
    double sub_dr = 50.0;
    cmd_sub->add_option("-c,--config", sub_config, "scenario config")->required();
    cmd_sub->add_option("-i,--input", sub_in, "input .wsar (default: simulate)");
    cmd_sub->add_option("-o,--output", sub_out, "output .wimg")->required();
    cmd_sub->add_option("--m", sub_m, "sub-array length")->required();
    cmd_sub->add_option("--overlap", sub_overlap, "shared elements")->required();
    cmd_sub->add_option("--steer", sub_steer, "steering angle, degrees");
    cmd_sub->add_option("--focus-range", sub_focus, "focal range, m (default: grid centre)");
    cmd_sub->add_option("--pad", sub_pad, "pad factor");
    cmd_sub->add_option("--pgm", sub_pgm, "also write a 16-bit PGM");
    cmd_sub->add_option("--dynamic-range", sub_dr, "PGM dynamic range, dB");

    // snr-gain
    auto* cmd_snr = app.add_subcommand("snr-gain", "Monte Carlo sub-array SNR gain");
    std::string snr_config;
    std::int64_t snr_m = 10;
    std::int64_t snr_overlap = 9;
    double snr_steer = 0.0;
    double snr_focus = 0.0;
    int snr_trials = 50;
    std::vector<double> snr_region;
    cmd_snr->add_option("-c,--config", snr_config, "scenario config")->required();
    cmd_snr->add_option("--m", snr_m, "sub-array length")->required();
    cmd_snr->add_option("--overlap", snr_overlap, "shared elements")->required();
    cmd_snr->add_option("--steer", snr_steer, "steering angle, degrees");
    cmd_snr->add_option("--focus-range", snr_focus, "focal range, m (default: grid centre)");
    cmd_snr->add_option("--trials", snr_trials, "Monte Carlo trials");
    cmd_snr->add_option("--region", snr_region, "noise region x0 x1 y0 y1")->expected(4);

    // pointcloud
    auto* cmd_pc = app.add_subcommand("pointcloud", "extract scatterer detections");
    std::string pc_in;
    std::string pc_out;
    double pc_threshold = 30.0;
    bool pc_keep = false;
    cmd_pc->add_option("-i,--input", pc_in, "input .wimg")->required();
    cmd_pc->add_option("-o,--output", pc_out, "output .csv")->required();
    cmd_pc->add_option("--threshold", pc_threshold, "dB below peak");
    cmd_pc->add_flag("--keep-intensity", pc_keep, "emit per-point intensity");

    // pipeline
    auto* cmd_pipe = app.add_subcommand("pipeline", "run the full processing chain");
    PipelineArgs pipe;
    cmd_pipe->add_option("-c,--config", pipe.config, "scenario config")->required();
    cmd_pipe->add_option("-o,--outdir", pipe.outdir, "output directory")->required();
    cmd_pipe->add_option("--pad", pipe.pad, "pad factor");
    cmd_pipe->add_option("--dynamic-range", pipe.dynamic_range, "display range, dB");
    cmd_pipe->add_option("--threshold", pipe.threshold, "point-cloud threshold, dB");
    cmd_pipe->add_flag("--enhance", pipe.enhance, "contrast stretch in the composite");

    CLI11_PARSE(app, argc, argv);
    wsar_set_threads(threads);

    if (cmd_sim->parsed()) {
        const ScenarioPtr sc = load_scenario(sim_config);
        const CubePtr cube = simulate(sc.get());
        check(wsar_cube_write(cube.get(), sim_out.c_str()), "write cube");
        uint64_t n_slow = 0;
        uint64_t n_fast = 0;
        check(wsar_cube_dims(cube.get(), &n_slow, &n_fast), "dims");
        std::printf("n_slow=%llu\n", static_cast<unsigned long long>(n_slow));
        std::printf("n_fast=%llu\n", static_cast<unsigned long long>(n_fast));
        return 0;
    }

    if (cmd_comp->parsed()) {
        const CubePtr cube = read_cube(comp_in);
        const ProfilesPtr prof = compress_cube(cube.get(), comp_window, comp_pad);
        check(wsar_profiles_write(prof.get(), comp_out.c_str()), "write profiles");
        uint64_t n_slow = 0;
        check(wsar_profiles_dims(prof.get(), &n_slow, nullptr), "dims");
        const uint64_t row =
            comp_row >= 0 ? static_cast<uint64_t>(comp_row) : n_slow / 2;
        print_profile_stats(prof.get(), row);
        return 0;
    }

    if (cmd_bp->parsed()) {
        const ScenarioPtr sc = load_scenario(bp_config);
        wsar_grid grid{};
        check(wsar_scenario_grid(sc.get(), &grid), "grid");
        const ProfilesPtr prof = load_profiles(bp_in, bp_window, bp_pad);
        const std::string az = bp_azimuth.empty() ? bp_window : bp_azimuth;
        const ImagePtr img = backproject(prof.get(), grid, az);
        check(wsar_image_write(img.get(), bp_out.c_str()), "write image");
        if (!bp_pgm.empty()) {
            check(wsar_image_write_pgm(img.get(), bp_dr, bp_pgm.c_str()), "write pgm");
        }
        print_psf_stats(img.get());
        return 0;
    }

    if (cmd_apod->parsed()) {
        wsar_image* rect_raw = nullptr;
        check(wsar_image_read(apod_rect.c_str(), &rect_raw), "read image");
        const ImagePtr rect(rect_raw);
        wsar_image* ham_raw = nullptr;
        check(wsar_image_read(apod_ham.c_str(), &ham_raw), "read image");
        const ImagePtr ham(ham_raw);
        wsar_image* out_raw = nullptr;
        if (apod_mode == "dual") {
            check(wsar_dual_apodization(rect.get(), ham.get(), &out_raw), "apodize");
        } else if (apod_mode == "cda") {
            check(wsar_complex_dual_apodization(rect.get(), ham.get(), &out_raw), "apodize");
        } else {
            std::fprintf(stderr, "error: unknown mode '%s' (dual|cda)\n", apod_mode.c_str());
            return 3;
        }
        const ImagePtr out(out_raw);
        check(wsar_image_write(out.get(), apod_out.c_str()), "write image");
        if (!apod_pgm.empty()) {
            check(wsar_image_write_pgm(out.get(), apod_dr, apod_pgm.c_str()), "write pgm");
        }
        print_psf_stats(out.get());
        return 0;
    }

    if (cmd_den->parsed()) {
        FieldPtr field;
        if (ends_with(den_in, ".pgm")) {
            wsar_field* f = nullptr;
            check(wsar_field_read_pgm(den_in.c_str(), den_dr, &f), "read pgm");
            field.reset(f);
        } else {
            wsar_image* img_raw = nullptr;
            check(wsar_image_read(den_in.c_str(), &img_raw), "read image");
            const ImagePtr img(img_raw);
            wsar_field* f = nullptr;
            check(wsar_image_to_db(img.get(), den_dr, &f), "to dB");
            field.reset(f);
        }
        wsar_field* out_raw = nullptr;
        check(wsar_denoise(field.get(), den_k, den_sigma, den_dt, den_steps, &out_raw),
              "denoise");
        const FieldPtr out(out_raw);
        check(wsar_field_write_pgm(out.get(), den_dr, den_out.c_str()), "write pgm");
        return 0;
    }

    if (cmd_ms->parsed()) {
        const ScenarioPtr sc = load_scenario(ms_config);
        wsar_grid grid{};
        check(wsar_scenario_grid(sc.get(), &grid), "grid");
        const CubePtr cube = ms_in.empty() ? simulate(sc.get()) : read_cube(ms_in);
        wsar_cube* sub_raw[3] = {nullptr, nullptr, nullptr};
        check(wsar_split_subbands(cube.get(), &sub_raw[0], &sub_raw[1], &sub_raw[2]), "split");
        const CubePtr low(sub_raw[0]);
        const CubePtr mid(sub_raw[1]);
        const CubePtr high(sub_raw[2]);
        ImagePtr bands[3];
        const wsar_cube* subs[3] = {low.get(), mid.get(), high.get()};
        for (int i = 0; i < 3; ++i) {
            const ProfilesPtr prof = compress_cube(subs[i], "rect", ms_pad);
            bands[i] = backproject(prof.get(), grid, "rect");
        }
        check(wsar_composite_ppm(bands[0].get(), bands[1].get(), bands[2].get(),
                                 ms_enhance ? 1 : 0, ms_out.c_str()),
              "composite");
        return 0;
    }

    if (cmd_sub->parsed()) {
        const ScenarioPtr sc = load_scenario(sub_config);
        wsar_grid grid{};
        check(wsar_scenario_grid(sc.get(), &grid), "grid");
        const CubePtr cube = sub_in.empty() ? simulate(sc.get()) : read_cube(sub_in);
        const ProfilesPtr prof = compress_cube(cube.get(), "rect", sub_pad);
        wsar_subarray_spec spec{};
        spec.m = sub_m;
        spec.overlap = sub_overlap;
        spec.steer_deg = sub_steer;
        spec.focus_range_m = sub_focus > 0.0 ? sub_focus : grid_center_range(grid);
        wsar_image* img_raw = nullptr;
        check(wsar_subarray_image(prof.get(), &grid, &spec, &img_raw), "subarray");
        const ImagePtr img(img_raw);
        check(wsar_image_write(img.get(), sub_out.c_str()), "write image");
        if (!sub_pgm.empty()) {
            check(wsar_image_write_pgm(img.get(), sub_dr, sub_pgm.c_str()), "write pgm");
        }
        print_psf_stats(img.get());
        return 0;
    }

    if (cmd_snr->parsed()) {
        const ScenarioPtr sc = load_scenario(snr_config);
        wsar_grid grid{};
        check(wsar_scenario_grid(sc.get(), &grid), "grid");
        wsar_subarray_spec spec{};
        spec.m = snr_m;
        spec.overlap = snr_overlap;
        spec.steer_deg = snr_steer;
        spec.focus_range_m = snr_focus > 0.0 ? snr_focus : grid_center_range(grid);
        double gain = 0.0;
        if (!snr_region.empty()) {
            const wsar_region region{snr_region[0], snr_region[1], snr_region[2],
                                     snr_region[3]};
            check(wsar_snr_gain(sc.get(), &spec, &region, snr_trials, &gain), "snr gain");
        } else {
            check(wsar_snr_gain(sc.get(), &spec, nullptr, snr_trials, &gain), "snr gain");
        }
        std::printf("snr_gain_db=%.4f\n", gain);
        return 0;
    }

    if (cmd_pc->parsed()) {
        wsar_image* img_raw = nullptr;
        check(wsar_image_read(pc_in.c_str(), &img_raw), "read image");
        const ImagePtr img(img_raw);
        uint64_t n_points = 0;
        check(wsar_point_cloud_csv(img.get(), pc_threshold, pc_keep ? 1 : 0, pc_out.c_str(),
                                   &n_points),
              "point cloud");
        std::printf("n_points=%llu\n", static_cast<unsigned long long>(n_points));
        return 0;
    }

    if (cmd_pipe->parsed()) {
        return run_pipeline(pipe);
    }

    return 0;
}

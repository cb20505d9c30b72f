// Acceptance suite: end-to-end checks of the toolkit's contracts, one
// printed PASS/FAIL line per criterion. Returns nonzero if any fail.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "json.hpp"
#include "lsr/commands.hpp"
#include "lsr/core.hpp"
#include "lsr/encode.hpp"
#include "lsr/eval.hpp"
#include "lsr/extract.hpp"
#include "lsr/formats.hpp"
#include "lsr/group.hpp"
#include "lsr/pipeline.hpp"
#include "lsr/segment.hpp"
#include "oracles.hpp"
#include "synthetic.hpp"

using namespace lsr;
namespace fs = std::filesystem;

namespace {

struct Criterion {
    bool pass = false;
    std::string detail;
};

double axial_diff(double a, double b) {
    const double d = std::abs(LevelLineAngle::normalize(a) - LevelLineAngle::normalize(b));
    return std::min(d, kPi - d);
}

// ---------------------------------------------------------------- 1
// GT round-trip fidelity: encode -> detect (field input) -> eval, aggregate
// F^H >= 99 over >= 50 random scenes.
Criterion criterion_gt_roundtrip(const fs::path& work) {
    const auto start = std::chrono::steady_clock::now();
    const fs::path pred_dir = work / "rt_pred";
    const fs::path ref_dir = work / "rt_ref";
    fs::create_directories(pred_dir);
    fs::create_directories(ref_dir);

    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> count(5, 30);
    std::ostringstream sink_out, sink_err;
    for (int i = 0; i < 50; ++i) {
        const auto scene = synthetic::random_scene(rng, count(rng), 288);
        if (scene.size() < 5)
            return {false, "scene generation failed"};
        const std::string name = "img" + std::to_string(i) + ".json";
        save_annotations(AnnotationSet(288, 288, scene), ref_dir / name);

        cli::EncodeOptions encode_opts;
        encode_opts.annotations = ref_dir / name;
        encode_opts.width = 288;
        encode_opts.height = 288;
        encode_opts.output = work / "rt_field.lsdf";
        if (cli::run_encode(encode_opts, sink_out, sink_err) != cli::kExitOk)
            return {false, "encode failed on scene " + std::to_string(i)};

        cli::DetectOptions detect_opts;
        detect_opts.input = work / "rt_field.lsdf";
        detect_opts.field_input = true;
        detect_opts.output = pred_dir / name;
        if (cli::run_detect(detect_opts, sink_out, sink_err) != cli::kExitOk)
            return {false, "detect failed on scene " + std::to_string(i)};
    }

    cli::EvalOptions eval_opts;
    eval_opts.pred_dir = pred_dir;
    eval_opts.ref_dir = ref_dir;
    eval_opts.report_path = work / "rt_report.json";
    std::ostringstream table;
    if (cli::run_eval(eval_opts, table, sink_err) != cli::kExitOk)
        return {false, "eval failed"};

    std::ifstream report_file(work / "rt_report.json");
    nlohmann::json report;
    report_file >> report;
    const double f_h = report["aggregate"]["f_h"].get<double>();

    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream detail;
    detail << "aggregate F^H = " << f_h << " over 50 scenes (target >= 99), " << seconds << " s";
    return {f_h >= 99.0 && seconds < 60.0, detail.str()};
}

// ---------------------------------------------------------------- 2
// Angle-metric axioms on an exhaustive 1-degree grid.
Criterion criterion_angle_axioms() {
    const double step = kPi / 180.0;
    double worst = 0.0;
    for (int i = 0; i < 180; ++i) {
        const LevelLineAngle a(i * step);
        for (int j = 0; j < 180; ++j) {
            const LevelLineAngle b(j * step);
            const double d = angle_distance(a, b);
            if (d < 0.0)
                return {false, "negative distance"};
            if (std::abs(d - angle_distance(b, a)) > 1e-12)
                return {false, "asymmetric distance"};
            const double periodic = angle_distance(LevelLineAngle(i * step + kPi), b);
            worst = std::max(worst, std::abs(d - periodic));
        }
    }
    const double d10 = angle_distance(LevelLineAngle(0.0), LevelLineAngle(10.0 * step));
    const double d170 = angle_distance(LevelLineAngle(0.0), LevelLineAngle(170.0 * step));
    const double pair_gap = std::abs(d10 - d170);
    std::ostringstream detail;
    detail << "periodicity gap " << worst << ", |rho(0,10)-rho(0,170)| = " << pair_gap
           << " (targets <= 1e-9)";
    return {worst <= 1e-9 && pair_gap <= 1e-9, detail.str()};
}

// ---------------------------------------------------------------- 3
// tau -> infinity, n = 1: grouping partitions equal 8-connected components.
Criterion criterion_grouping_cc() {
    GroupingParams params;
    params.distance_tau = 1e6;
    params.min_region_size = 1;

    std::mt19937 rng(555);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_real_distribution<double> angle(0.0, kPi);
    int mismatches = 0;
    for (int trial = 0; trial < 200; ++trial) {
        ImageGrid m(32, 32, 0.0);
        ImageGrid f(32, 32, 0.0);
        for (double& v : m.data())
            v = unit(rng);
        for (double& v : f.data())
            v = angle(rng);
        const HeatmapField field(std::move(m), std::move(f));
        const ForegroundMask fg = global_threshold(field.mask(), 0.5);

        const auto regions = grow_regions(field, fg, params);
        const auto components = oracle::connected_components_8(fg);

        std::set<std::vector<int>> got, expected;
        for (const auto& r : regions) {
            std::vector<int> idx;
            for (PixelCoord p : r.pixels)
                idx.push_back(p.y * 32 + p.x);
            std::sort(idx.begin(), idx.end());
            got.insert(std::move(idx));
        }
        for (const auto& c : components)
            expected.insert(c);
        if (got != expected)
            ++mismatches;
    }
    std::ostringstream detail;
    detail << mismatches << " of 200 random masks mismatched (target 0)";
    return {mismatches == 0, detail.str()};
}

// ---------------------------------------------------------------- 4
// minor_eigenvector vs characteristic-polynomial brute force.
Criterion criterion_eigenvector_oracle() {
    std::mt19937 rng(4242);
    std::uniform_real_distribution<double> lambda_lo(0.0, 10.0);
    std::uniform_real_distribution<double> gap(0.01, 10.0);
    std::uniform_real_distribution<double> rot(0.0, kPi);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const double l_min = lambda_lo(rng);
        const double l_max = l_min + gap(rng);
        const double t = rot(rng);
        const double c = std::cos(t), s = std::sin(t);
        const double a = l_max * c * c + l_min * s * s;
        const double b = (l_max - l_min) * c * s;
        const double d = l_max * s * s + l_min * c * c;

        const MinorAxis fast = minor_eigenvector({a, d, b});
        const oracle::Eig2 slow = oracle::eig2_characteristic(a, b, d);
        worst = std::max(worst,
                         axial_diff(std::atan2(fast.y, fast.x), std::atan2(slow.vy, slow.vx)));
    }
    std::ostringstream detail;
    detail << "worst angle disagreement " << worst << " rad over 1000 tensors (target <= 1e-9)";
    return {worst <= 1e-9, detail.str()};
}

// ---------------------------------------------------------------- 5
// Fast F^H scorer equals brute-force all-pairs matching; score(x,x) = 100.
Criterion criterion_scorer_oracle() {
    std::mt19937 rng(8080);
    std::uniform_real_distribution<double> coord(1.0, 62.0);
    const double tol = 0.01 * std::hypot(64.0, 64.0);

    auto random_segments = [&](int n) {
        std::vector<LineSegment> out;
        while (static_cast<int>(out.size()) < n) {
            const Point a{coord(rng), coord(rng)};
            const Point b{coord(rng), coord(rng)};
            if (std::hypot(b.x - a.x, b.y - a.y) < 3.0)
                continue;
            out.emplace_back(a, b, 1.0);
        }
        return out;
    };

    int mismatches = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const auto pred = random_segments(trial % 7);
        const auto ref = random_segments(1 + trial % 5);
        const EvalReport fast = score(pred, ref, 64, 64);
        const auto pred_raster = rasterize_segments(pred, 64, 64);
        const auto ref_raster = rasterize_segments(ref, 64, 64);
        const oracle::MatchCounts slow =
            oracle::brute_force_match(pred_raster, ref_raster, 64, 64, tol * tol);
        if (fast.matched_pred_pixels != slow.matched_pred ||
            fast.total_pred_pixels != slow.total_pred ||
            fast.matched_ref_pixels != slow.matched_ref ||
            fast.total_ref_pixels != slow.total_ref)
            ++mismatches;

        if (!pred.empty() && score(pred, pred, 64, 64).f_h != 100.0)
            ++mismatches;
    }
    std::ostringstream detail;
    detail << mismatches << " of 100 cases mismatched (target 0, exact counts)";
    return {mismatches == 0, detail.str()};
}

// ---------------------------------------------------------------- 6
// Binarization behavior: close strips stay separate, low-intensity noise
// yields an empty combined mask; both against brute-force thresholding.
Criterion criterion_binarization() {
    SegmentationParams params;
    params.global_tau = 0.2;
    params.local_theta = 0.05;
    params.window_radius = 3;
    params.gaussian_sigma = 1.5;

    // two bright strips, two gap rows at an intensity global alone keeps
    const int w = 20, h = 20;
    ImageGrid strips(w, h, 0.02);
    for (int x = 2; x < 18; ++x) {
        strips.at(x, 8) = 0.9;
        strips.at(x, 11) = 0.9;
        strips.at(x, 9) = 0.35;
        strips.at(x, 10) = 0.35;
    }

    const ForegroundMask global = global_threshold(strips, params.global_tau);
    bool global_joins = true;
    for (int x = 4; x < 16; ++x)
        global_joins = global_joins && global.at(x, 9) && global.at(x, 10);
    if (!global_joins)
        return {false, "construction failed: global mask did not join the strips"};

    const HeatmapField strip_field(strips, ImageGrid(w, h, 0.0));
    const ForegroundMask combined = combined_foreground(strip_field, params);
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) {
            const bool g = strips.at(x, y) > params.global_tau;
            const bool l = strips.at(x, y) >
                           oracle::gaussian_window_mean(strips, x, y, params.window_radius,
                                                        params.gaussian_sigma) -
                               params.local_theta;
            if (combined.at(x, y) != ((g && l) ? 1 : 0))
                return {false, "combined mask disagrees with brute-force thresholding"};
        }
    bool separated = true;
    for (int x = 4; x < 16; ++x)
        separated = separated && combined.at(x, 8) && combined.at(x, 11) &&
                    !combined.at(x, 9) && !combined.at(x, 10);
    if (!separated)
        return {false, "strips merged in the combined mask"};

    // near-zero-intensity noise patch: local fires, combined must not
    std::mt19937 rng(99);
    std::uniform_real_distribution<double> noise(0.0, 0.05);
    ImageGrid noisy(w, h, 0.0);
    for (double& v : noisy.data())
        v = noise(rng);
    const ForegroundMask local = local_threshold(noisy, params);
    if (local.count() == 0)
        return {false, "construction failed: local mask empty on the noise patch"};
    const HeatmapField noise_field(noisy, ImageGrid(w, h, 0.0));
    const ForegroundMask combined_noise = combined_foreground(noise_field, params);
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) {
            const bool g = noisy.at(x, y) > params.global_tau;
            const bool l = noisy.at(x, y) >
                           oracle::gaussian_window_mean(noisy, x, y, params.window_radius,
                                                        params.gaussian_sigma) -
                               params.local_theta;
            if (combined_noise.at(x, y) != ((g && l) ? 1 : 0))
                return {false, "combined noise mask disagrees with brute force"};
        }
    std::ostringstream detail;
    detail << "strips separated; noise-patch combined mask has " << combined_noise.count()
           << " pixels (target 0); local alone fired on " << local.count();
    return {combined_noise.count() == 0, detail.str()};
}

// ---------------------------------------------------------------- 7
// Postprocessing speed on a ~100-segment 288x288 field.
Criterion criterion_speed() {
    std::mt19937 rng(31415);
    const auto scene = synthetic::random_scene(rng, 100, 288, 20.0, 5.0, 10.0, 50.0);
    if (scene.size() < 80)
        return {false, "could not place enough segments (" + std::to_string(scene.size()) + ")"};
    const auto encoded = encode_ground_truth(AnnotationSet(288, 288, scene), 1.0);
    const HeatmapField& field = encoded.field;

    PipelineConfig config;
    auto run_once = [&]() {
        const ForegroundMask fg = combined_foreground(field, config.segmentation);
        const auto regions = grow_regions(field, fg, config.grouping);
        std::size_t n = 0;
        for (const auto& region : regions) {
            try {
                n += extract_segment(region, field).segment.length() > 0.0 ? 1 : 0;
            } catch (const DegenerateRegionError&) {
            }
        }
        return n;
    };

    std::size_t detected = run_once();  // warm-up, discarded
    std::vector<double> runs;
    for (int r = 0; r < 15; ++r) {
        const auto start = std::chrono::steady_clock::now();
        detected = run_once();
        const auto stop = std::chrono::steady_clock::now();
        runs.push_back(std::chrono::duration<double, std::milli>(stop - start).count());
    }
    std::sort(runs.begin(), runs.end());
    const double median = runs[runs.size() / 2];
    std::ostringstream detail;
    detail << "median " << median << " ms over 15 runs, " << scene.size() << " segments, "
           << detected << " detected (target <= 10 ms)";
    return {median <= 10.0, detail.str()};
}

// ---------------------------------------------------------------- 8
// Gradient front-end end to end on a rendered synthetic corpus.
Criterion criterion_gradient_end_to_end(const fs::path& work) {
    const fs::path pred_dir = work / "grad_pred";
    const fs::path ref_dir = work / "grad_ref";
    fs::create_directories(pred_dir);
    fs::create_directories(ref_dir);

    std::mt19937 scene_rng(2024);  // consumed exactly as in criterion 1
    std::mt19937 render_rng(777);
    std::uniform_int_distribution<int> count(5, 30);
    std::ostringstream sink_out, sink_err;
    for (int i = 0; i < 50; ++i) {
        const auto scene = synthetic::random_scene(scene_rng, count(scene_rng), 288);
        if (scene.size() < 5)
            return {false, "scene generation failed"};
        const std::string name = "img" + std::to_string(i) + ".json";
        save_annotations(AnnotationSet(288, 288, scene), ref_dir / name);

        const GrayImage img = synthetic::render_scene(scene, 288, 2.0, 0.02, render_rng);
        save_pgm(img, work / "grad_img.pgm");

        cli::DetectOptions detect_opts;
        detect_opts.input = work / "grad_img.pgm";
        detect_opts.output = pred_dir / name;
        if (cli::run_detect(detect_opts, sink_out, sink_err) != cli::kExitOk)
            return {false, "detect failed on image " + std::to_string(i)};
    }

    cli::EvalOptions eval_opts;
    eval_opts.pred_dir = pred_dir;
    eval_opts.ref_dir = ref_dir;
    eval_opts.report_path = work / "grad_report.json";
    std::ostringstream table;
    if (cli::run_eval(eval_opts, table, sink_err) != cli::kExitOk)
        return {false, "eval failed"};

    std::ifstream report_file(work / "grad_report.json");
    nlohmann::json report;
    report_file >> report;
    const double f_h = report["aggregate"]["f_h"].get<double>();
    std::ostringstream detail;
    detail << "gradient front-end aggregate F^H = " << f_h
           << " on the noisy rendered corpus (target >= 85)";
    return {f_h >= 85.0, detail.str()};
}

}  // namespace

int main() {
    const fs::path work = fs::temp_directory_path() / "lsr_acceptance";
    fs::remove_all(work);
    fs::create_directories(work);

    struct Entry {
        std::string name;
        Criterion result;
    };
    std::vector<Entry> entries;
    entries.push_back({"1 GT round-trip fidelity (F^H >= 99)", criterion_gt_roundtrip(work)});
    entries.push_back({"2 angle-metric axioms (1-degree grid)", criterion_angle_axioms()});
    entries.push_back({"3 grouping = connected components at tau -> inf", criterion_grouping_cc()});
    entries.push_back({"4 minor eigenvector vs brute force (<= 1e-9 rad)",
                       criterion_eigenvector_oracle()});
    entries.push_back({"5 F^H scorer vs all-pairs oracle (exact)", criterion_scorer_oracle()});
    entries.push_back({"6 combined binarization separates and denoises", criterion_binarization()});
    entries.push_back({"7 postprocessing speed (median <= 10 ms)", criterion_speed()});
    entries.push_back({"8 gradient front-end corpus (F^H >= 85)",
                       criterion_gradient_end_to_end(work)});

    bool all_pass = true;
    for (const Entry& e : entries) {
        all_pass = all_pass && e.result.pass;
        std::cout << (e.result.pass ? "PASS" : "FAIL") << " criterion " << e.name << " -- "
                  << e.result.detail << "\n";
    }
    fs::remove_all(work);
    std::cout << (all_pass ? "acceptance: all criteria passed" : "acceptance: FAILURES above")
              << "\n";
    return all_pass ? 0 : 1;
}

#include "lsr/commands.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <map>
#include <mutex>
#include <ostream>
#include <thread>
#include <vector>

#include "lsr/eval.hpp"
#include "lsr/extract.hpp"
#include "lsr/formats.hpp"
#include "lsr/frontend.hpp"
#include "lsr/group.hpp"
#include "lsr/pipeline.hpp"
#include "lsr/segment.hpp"

namespace lsr::cli {

namespace fs = std::filesystem;

int thread_budget() {
    if (const char* env = std::getenv("LSR_THREADS")) {
        const int n = std::atoi(env);
        if (n >= 1)
            return n;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

namespace {

PipelineConfig load_config_or_default(const fs::path& path) {
    if (path.empty()) {
        PipelineConfig config;
        config.validate();
        return config;
    }
    return load_config(path);
}

// run fn(i) for i in [0, count) on up to thread_budget() workers
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn) {
    const int workers = std::min<int>(thread_budget(), static_cast<int>(count));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int t = 0; t < workers; ++t) {
        pool.emplace_back([&]() {
            for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1))
                fn(i);
        });
    }
    for (std::thread& t : pool)
        t.join();
}

EvalReport micro_average(const std::vector<ImageEvalReport>& images) {
    EvalReport agg;
    for (const ImageEvalReport& r : images) {
        agg.matched_pred_pixels += r.report.matched_pred_pixels;
        agg.total_pred_pixels += r.report.total_pred_pixels;
        agg.matched_ref_pixels += r.report.matched_ref_pixels;
        agg.total_ref_pixels += r.report.total_ref_pixels;
    }
    if (agg.total_pred_pixels > 0)
        agg.precision = static_cast<double>(agg.matched_pred_pixels) / agg.total_pred_pixels;
    if (agg.total_ref_pixels > 0)
        agg.recall = static_cast<double>(agg.matched_ref_pixels) / agg.total_ref_pixels;
    if (agg.precision + agg.recall > 0.0)
        agg.f_h = 100.0 * 2.0 * agg.precision * agg.recall / (agg.precision + agg.recall);
    return agg;
}

double percentile(std::vector<double> values, double q) {
    std::sort(values.begin(), values.end());
    const double pos = q * (values.size() - 1);
    const std::size_t lo = static_cast<std::size_t>(std::floor(pos));
    const std::size_t hi = std::min(lo + 1, values.size() - 1);
    return values[lo] + (pos - lo) * (values[hi] - values[lo]);
}

}  // namespace

int run_detect(const DetectOptions& opts, std::ostream& out, std::ostream& err) {
    PipelineConfig config;
    try {
        config = load_config_or_default(opts.config_path);
    } catch (const std::exception& e) {
        err << "detect: " << e.what() << "\n";
        return kExitBadConfig;
    }

    std::vector<LineSegment> segments;
    try {
        if (opts.field_input) {
            segments = detect_from_field(load_field(opts.input), config);
        } else {
            segments = detect_from_image(load_pgm(opts.input), config);
        }
    } catch (const FieldIoError& e) {
        err << "detect: " << e.what() << "\n";
        return e.code == FieldIoCode::FileUnreadable ? kExitUnreadableInput : kExitMalformedInput;
    } catch (const std::exception& e) {
        err << "detect: " << e.what() << "\n";
        const std::string what = e.what();
        return what.find("cannot open") != std::string::npos ? kExitUnreadableInput
                                                             : kExitMalformedInput;
    }

    try {
        save_segments(segments, opts.output);
    } catch (const std::exception& e) {
        err << "detect: " << e.what() << "\n";
        return kExitFailure;
    }
    out << "detected " << segments.size() << " segments -> " << opts.output.string() << "\n";
    return kExitOk;
}

int run_encode(const EncodeOptions& opts, std::ostream& out, std::ostream& err) {
    if (opts.width < 1 || opts.height < 1) {
        err << "encode: width and height must be >= 1\n";
        return kExitBadConfig;
    }
    if (!(opts.thickness >= 1.0)) {
        err << "encode: thickness must be >= 1\n";
        return kExitBadConfig;
    }
    try {
        const AnnotationSet ann = load_annotations(opts.annotations, opts.width, opts.height);
        const EncodedGroundTruth encoded = encode_ground_truth(ann, opts.thickness);
        save_field(encoded.field, opts.output);
        out << "encoded " << ann.segments().size() << " segments ("
            << encoded.overlap_pixel_count << " overlap px) -> " << opts.output.string() << "\n";
    } catch (const FieldIoError& e) {
        err << "encode: " << e.what() << "\n";
        return kExitFailure;
    } catch (const std::exception& e) {
        err << "encode: " << e.what() << "\n";
        const std::string what = e.what();
        return what.find("cannot open") != std::string::npos ? kExitUnreadableInput
                                                             : kExitMalformedInput;
    }
    return kExitOk;
}

int run_eval(const EvalOptions& opts, std::ostream& out, std::ostream& err) {
    if (opts.width < 1 || opts.height < 1 || !(opts.tolerance_fraction > 0.0)) {
        err << "eval: invalid dimensions or tolerance\n";
        return kExitBadConfig;
    }

    std::map<std::string, fs::path> pred_files, ref_files;
    try {
        for (const fs::directory_entry& e : fs::directory_iterator(opts.pred_dir))
            if (e.is_regular_file() && e.path().extension() == ".json")
                pred_files[e.path().stem().string()] = e.path();
        for (const fs::directory_entry& e : fs::directory_iterator(opts.ref_dir))
            if (e.is_regular_file() && e.path().extension() == ".json")
                ref_files[e.path().stem().string()] = e.path();
    } catch (const fs::filesystem_error& e) {
        err << "eval: " << e.what() << "\n";
        return kExitUnreadableInput;
    }

    std::vector<std::pair<std::string, std::pair<fs::path, fs::path>>> pairs;
    bool missing = false;
    for (const auto& [stem, path] : pred_files) {
        const auto it = ref_files.find(stem);
        if (it == ref_files.end()) {
            err << "eval: no reference for " << path.string() << ", skipped\n";
            missing = true;
        } else {
            pairs.emplace_back(stem, std::make_pair(path, it->second));
        }
    }
    for (const auto& [stem, path] : ref_files) {
        if (!pred_files.count(stem)) {
            err << "eval: no prediction for " << path.string() << ", skipped\n";
            missing = true;
        }
    }
    if (pairs.empty()) {
        err << "eval: nothing to score\n";
        return kExitMissingCounterpart;
    }

    std::vector<ImageEvalReport> reports(pairs.size());
    std::atomic<bool> failed{false};
    std::string failure;
    std::mutex failure_mutex;
    parallel_for(pairs.size(), [&](std::size_t i) {
        if (failed.load())
            return;
        try {
            const std::vector<LineSegment> pred = load_segments(pairs[i].second.first);
            const AnnotationSet ref_ann =
                load_annotations(pairs[i].second.second, opts.width, opts.height);
            std::vector<LineSegment> ref = ref_ann.segments();
            reports[i] = ImageEvalReport{
                pairs[i].first, score(pred, ref, opts.width, opts.height, opts.tolerance_fraction,
                                      opts.raster_thickness)};
        } catch (const std::exception& e) {
            std::lock_guard<std::mutex> lock(failure_mutex);
            failure = e.what();
            failed.store(true);
        }
    });
    if (failed.load()) {
        err << "eval: " << failure << "\n";
        return kExitMalformedInput;
    }

    out << std::left << std::setw(24) << "image" << std::right << std::setw(10) << "precision"
        << std::setw(10) << "recall" << std::setw(10) << "F^H" << "\n";
    out << std::fixed << std::setprecision(4);
    for (const ImageEvalReport& r : reports)
        out << std::left << std::setw(24) << r.id << std::right << std::setw(10)
            << r.report.precision << std::setw(10) << r.report.recall << std::setw(10)
            << r.report.f_h << "\n";
    const EvalReport aggregate = micro_average(reports);
    out << std::left << std::setw(24) << "aggregate" << std::right << std::setw(10)
        << aggregate.precision << std::setw(10) << aggregate.recall << std::setw(10)
        << aggregate.f_h << "\n";
    out.unsetf(std::ios::fixed);

    if (!opts.report_path.empty()) {
        try {
            save_eval_report(reports, aggregate, opts.report_path);
        } catch (const std::exception& e) {
            err << "eval: " << e.what() << "\n";
            return kExitFailure;
        }
    }
    return missing ? kExitMissingCounterpart : kExitOk;
}

int run_bench(const BenchOptions& opts, std::ostream& out, std::ostream& err) {
    if (opts.repetitions < 3) {
        err << "bench: repetitions must be >= 3\n";
        return kExitBadConfig;
    }
    PipelineConfig config;
    try {
        config = load_config_or_default(opts.config_path);
    } catch (const std::exception& e) {
        err << "bench: " << e.what() << "\n";
        return kExitBadConfig;
    }

    std::vector<fs::path> files;
    try {
        for (const fs::directory_entry& e : fs::directory_iterator(opts.fields_dir))
            if (e.is_regular_file() && e.path().extension() == ".lsdf")
                files.push_back(e.path());
    } catch (const fs::filesystem_error& e) {
        err << "bench: " << e.what() << "\n";
        return kExitUnreadableInput;
    }
    std::sort(files.begin(), files.end());
    if (files.empty()) {
        err << "bench: no .lsdf files in " << opts.fields_dir.string() << "\n";
        return kExitUnreadableInput;
    }

    std::vector<HeatmapField> fields;
    fields.reserve(files.size());
    try {
        for (const fs::path& f : files)
            fields.push_back(load_field(f));
    } catch (const FieldIoError& e) {
        err << "bench: " << e.what() << "\n";
        return e.code == FieldIoCode::FileUnreadable ? kExitUnreadableInput : kExitMalformedInput;
    }

    using clock = std::chrono::steady_clock;
    std::size_t sink = 0;  // keeps the measured work observable
    auto run_once = [&](const HeatmapField& field) {
        const ForegroundMask fg = combined_foreground(field, config.segmentation);
        const std::vector<LineSupportRegion> regions = grow_regions(field, fg, config.grouping);
        for (const LineSupportRegion& region : regions) {
            try {
                sink += extract_segment(region, field).segment.length() > 0.0 ? 1 : 0;
            } catch (const DegenerateRegionError&) {
            }
        }
    };

    std::vector<double> per_image_mean;
    std::vector<double> all_runs;
    out << std::left << std::setw(24) << "field" << std::right << std::setw(10) << "mean ms"
        << std::setw(12) << "median ms" << std::setw(10) << "p95 ms" << "\n";
    out << std::fixed << std::setprecision(3);
    for (std::size_t i = 0; i < fields.size(); ++i) {
        run_once(fields[i]);  // warm-up, discarded
        std::vector<double> runs;
        runs.reserve(opts.repetitions);
        for (int r = 0; r < opts.repetitions; ++r) {
            const auto start = clock::now();
            run_once(fields[i]);
            const auto stop = clock::now();
            runs.push_back(std::chrono::duration<double, std::milli>(stop - start).count());
        }
        double mean = 0.0;
        for (double v : runs)
            mean += v;
        mean /= runs.size();
        per_image_mean.push_back(mean);
        all_runs.insert(all_runs.end(), runs.begin(), runs.end());
        out << std::left << std::setw(24) << files[i].stem().string() << std::right
            << std::setw(10) << mean << std::setw(12) << percentile(runs, 0.5) << std::setw(10)
            << percentile(runs, 0.95) << "\n";
    }

    double dataset_mean = 0.0;
    for (double v : per_image_mean)
        dataset_mean += v;
    dataset_mean /= per_image_mean.size();
    out << std::left << std::setw(24) << "dataset" << std::right << std::setw(10) << dataset_mean
        << std::setw(12) << percentile(all_runs, 0.5) << std::setw(10)
        << percentile(all_runs, 0.95) << "\n";
    out << std::setprecision(1) << "postprocessing FPS: " << 1000.0 / dataset_mean << "\n";
    out.unsetf(std::ios::fixed);
    if (sink == static_cast<std::size_t>(-1))
        out << "";  // never taken
    return kExitOk;
}

}  // namespace lsr::cli

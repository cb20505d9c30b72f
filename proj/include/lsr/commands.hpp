#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "lsr/config.hpp"

namespace lsr::cli {

// Shared process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;          // unexpected error
inline constexpr int kExitUnreadableInput = 2;  // missing or unopenable file
inline constexpr int kExitMalformedInput = 3;   // parse or validation failure in input data
inline constexpr int kExitBadConfig = 4;        // configuration violates an invariant
inline constexpr int kExitMissingCounterpart = 5;  // unpaired files in eval dirs

struct DetectOptions {
    std::filesystem::path input;
    bool field_input = false;  // input is an LSDF field instead of an image
    std::filesystem::path config_path;  // empty -> defaults
    std::filesystem::path output;
};

struct EncodeOptions {
    std::filesystem::path annotations;
    int width = 0;
    int height = 0;
    double thickness = 1.0;
    std::filesystem::path output;
};

struct EvalOptions {
    std::filesystem::path pred_dir;
    std::filesystem::path ref_dir;
    std::filesystem::path report_path;  // optional
    int width = 288;
    int height = 288;
    double tolerance_fraction = 0.01;
    double raster_thickness = 1.0;
};

struct BenchOptions {
    std::filesystem::path fields_dir;
    std::filesystem::path config_path;  // empty -> defaults
    int repetitions = 5;
};

int run_detect(const DetectOptions& opts, std::ostream& out, std::ostream& err);
int run_encode(const EncodeOptions& opts, std::ostream& out, std::ostream& err);
int run_eval(const EvalOptions& opts, std::ostream& out, std::ostream& err);
int run_bench(const BenchOptions& opts, std::ostream& out, std::ostream& err);

// Worker-pool width for batch commands: LSR_THREADS when set, otherwise the
// hardware concurrency.
int thread_budget();

}  // namespace lsr::cli

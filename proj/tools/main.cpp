#include <iostream>

#include "CLI11.hpp"
#include "lsr/commands.hpp"

int main(int argc, char** argv) {
    CLI::App app{"lsr - heatmap/tangent-field line segment reconstruction toolkit"};
    app.require_subcommand(1);

    lsr::cli::DetectOptions detect_opts;
    CLI::App* detect = app.add_subcommand("detect", "detect line segments in an image or field");
    detect->add_option("--input", detect_opts.input, "grayscale PGM image or LSDF field")
        ->required();
    detect->add_flag("--field", detect_opts.field_input, "treat the input as an LSDF field");
    detect->add_option("--config", detect_opts.config_path, "pipeline config file");
    detect->add_option("--output", detect_opts.output, "segments JSON to write")->required();

    lsr::cli::EncodeOptions encode_opts;
    CLI::App* encode = app.add_subcommand("encode", "rasterize annotations into an LSDF field");
    encode->add_option("--ann", encode_opts.annotations, "annotation JSON")->required();
    encode->add_option("--width", encode_opts.width, "image width in pixels")->required();
    encode->add_option("--height", encode_opts.height, "image height in pixels")->required();
    encode->add_option("--thickness", encode_opts.thickness, "rasterization thickness in pixels");
    encode->add_option("--output", encode_opts.output, "LSDF field to write")->required();

    lsr::cli::EvalOptions eval_opts;
    CLI::App* eval = app.add_subcommand("eval", "score predicted segments against references");
    eval->add_option("--pred", eval_opts.pred_dir, "directory of predicted segment JSON files")
        ->required();
    eval->add_option("--ref", eval_opts.ref_dir, "directory of reference annotation JSON files")
        ->required();
    eval->add_option("--report", eval_opts.report_path, "aggregate report JSON to write");
    eval->add_option("--width", eval_opts.width, "image width (default 288)");
    eval->add_option("--height", eval_opts.height, "image height (default 288)");
    eval->add_option("--tolerance", eval_opts.tolerance_fraction,
                     "match tolerance as a fraction of the diagonal (default 0.01)");
    eval->add_option("--thickness", eval_opts.raster_thickness,
                     "rasterization thickness in pixels (default 1)");

    lsr::cli::BenchOptions bench_opts;
    CLI::App* bench = app.add_subcommand("bench", "time the reconstruction on a field directory");
    bench->add_option("--fields", bench_opts.fields_dir, "directory of .lsdf files")->required();
    bench->add_option("--config", bench_opts.config_path, "pipeline config file");
    bench->add_option("--reps", bench_opts.repetitions, "timed repetitions per field (>= 3)");

    CLI11_PARSE(app, argc, argv);

    if (detect->parsed())
        return lsr::cli::run_detect(detect_opts, std::cout, std::cerr);
    if (encode->parsed())
        return lsr::cli::run_encode(encode_opts, std::cout, std::cerr);
    if (eval->parsed())
        return lsr::cli::run_eval(eval_opts, std::cout, std::cerr);
    if (bench->parsed())
        return lsr::cli::run_bench(bench_opts, std::cout, std::cerr);
    return lsr::cli::kExitFailure;
}

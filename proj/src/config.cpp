#include "lsr/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

namespace lsr {

void PipelineConfig::validate() const {
    if (input_side < 2)
        throw std::invalid_argument("PipelineConfig: input_side must be >= 2");
    segmentation.validate();
    grouping.validate();
    if (!(eval_tolerance_fraction > 0.0))
        throw std::invalid_argument("PipelineConfig: eval_tolerance_fraction must be > 0");
    if (!(raster_thickness >= 1.0))
        throw std::invalid_argument("PipelineConfig: raster_thickness must be >= 1");
}

namespace {

std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

double parse_double(const std::string& key, const std::string& text) {
    double v = 0.0;
    const char* end = text.data() + text.size();
    const auto res = std::from_chars(text.data(), end, v);
    if (res.ec != std::errc() || res.ptr != end)
        throw std::invalid_argument("config: bad numeric value for " + key);
    return v;
}

long long parse_int(const std::string& key, const std::string& text) {
    long long v = 0;
    const char* end = text.data() + text.size();
    const auto res = std::from_chars(text.data(), end, v);
    if (res.ec != std::errc() || res.ptr != end)
        throw std::invalid_argument("config: bad integer value for " + key);
    return v;
}

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos)
        return "";
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

}  // namespace

std::string serialize_config(const PipelineConfig& c) {
    std::ostringstream out;
    out << "[pipeline]\n";
    out << "input_side = " << c.input_side << "\n";
    out << "eval_tolerance_fraction = " << format_double(c.eval_tolerance_fraction) << "\n";
    out << "raster_thickness = " << format_double(c.raster_thickness) << "\n";
    out << "\n[segmentation]\n";
    out << "global_tau = " << format_double(c.segmentation.global_tau) << "\n";
    out << "local_theta = " << format_double(c.segmentation.local_theta) << "\n";
    out << "window_radius = " << c.segmentation.window_radius << "\n";
    out << "gaussian_sigma = " << format_double(c.segmentation.gaussian_sigma) << "\n";
    out << "\n[grouping]\n";
    out << "distance_tau = " << format_double(c.grouping.distance_tau) << "\n";
    out << "min_region_size = " << c.grouping.min_region_size << "\n";
    out << "alpha = " << format_double(c.grouping.alpha) << "\n";
    return out.str();
}

PipelineConfig parse_config(const std::string& text) {
    PipelineConfig config;
    std::istringstream in(text);
    std::string line, section;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#')
            continue;
        if (t.front() == '[' && t.back() == ']') {
            section = t.substr(1, t.size() - 2);
            if (section != "pipeline" && section != "segmentation" && section != "grouping")
                throw std::invalid_argument("config: unknown section [" + section + "]");
            continue;
        }
        const auto eq = t.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config: expected key = value at line " +
                                        std::to_string(lineno));
        const std::string key = trim(t.substr(0, eq));
        const std::string value = trim(t.substr(eq + 1));
        const std::string qualified = section + "." + key;

        if (qualified == "pipeline.input_side")
            config.input_side = static_cast<int>(parse_int(qualified, value));
        else if (qualified == "pipeline.eval_tolerance_fraction")
            config.eval_tolerance_fraction = parse_double(qualified, value);
        else if (qualified == "pipeline.raster_thickness")
            config.raster_thickness = parse_double(qualified, value);
        else if (qualified == "segmentation.global_tau")
            config.segmentation.global_tau = parse_double(qualified, value);
        else if (qualified == "segmentation.local_theta")
            config.segmentation.local_theta = parse_double(qualified, value);
        else if (qualified == "segmentation.window_radius")
            config.segmentation.window_radius = static_cast<int>(parse_int(qualified, value));
        else if (qualified == "segmentation.gaussian_sigma")
            config.segmentation.gaussian_sigma = parse_double(qualified, value);
        else if (qualified == "grouping.distance_tau")
            config.grouping.distance_tau = parse_double(qualified, value);
        else if (qualified == "grouping.min_region_size") {
            const long long n = parse_int(qualified, value);
            if (n < 0)
                throw std::invalid_argument("config: min_region_size must be >= 0");
            config.grouping.min_region_size = static_cast<std::size_t>(n);
        } else if (qualified == "grouping.alpha")
            config.grouping.alpha = parse_double(qualified, value);
        else
            throw std::invalid_argument("config: unknown key " + qualified);
    }
    config.validate();
    return config;
}

PipelineConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("config: cannot open " + path.string());
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

void save_config(const PipelineConfig& config, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::trunc);
    if (!out)
        throw std::invalid_argument("config: cannot write " + path.string());
    out << serialize_config(config);
}

}  // namespace lsr

#include "lsr/formats.hpp"

#include <cmath>
#include <fstream>

#include "json.hpp"

namespace lsr {

namespace {

using nlohmann::json;

json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open " + path.string());
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw std::invalid_argument("malformed JSON in " + path.string() + ": " + e.what());
    }
    return j;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::trunc | std::ios::binary);
    if (!out)
        throw std::invalid_argument("cannot write " + path.string());
    out << text;
    if (!out)
        throw std::invalid_argument("write failure on " + path.string());
}

json report_to_json(const EvalReport& r) {
    return json{{"precision", r.precision},
                {"recall", r.recall},
                {"f_h", r.f_h},
                {"matched_pred_pixels", r.matched_pred_pixels},
                {"total_pred_pixels", r.total_pred_pixels},
                {"matched_ref_pixels", r.matched_ref_pixels},
                {"total_ref_pixels", r.total_ref_pixels}};
}

}  // namespace

AnnotationSet load_annotations(const std::filesystem::path& path, int image_width,
                               int image_height) {
    const json j = read_json_file(path);
    if (!j.is_array())
        throw std::invalid_argument("annotation file must be a JSON array: " + path.string());
    std::vector<LineSegment> segments;
    segments.reserve(j.size());
    for (const json& e : j) {
        if (!e.is_array() || e.size() != 4 || !e[0].is_number())
            throw std::invalid_argument("annotation entries must be [x1, y1, x2, y2]: " +
                                        path.string());
        segments.emplace_back(Point{e[0].get<double>(), e[1].get<double>()},
                              Point{e[2].get<double>(), e[3].get<double>()}, 1.0);
    }
    return AnnotationSet(image_width, image_height, std::move(segments));
}

void save_annotations(const AnnotationSet& ann, const std::filesystem::path& path) {
    json j = json::array();
    for (const LineSegment& s : ann.segments())
        j.push_back({s.p1().x, s.p1().y, s.p2().x, s.p2().y});
    write_file(path, j.dump());
}

std::vector<LineSegment> load_segments(const std::filesystem::path& path) {
    const json j = read_json_file(path);
    if (!j.is_array())
        throw std::invalid_argument("segment file must be a JSON array: " + path.string());
    std::vector<LineSegment> segments;
    segments.reserve(j.size());
    for (const json& e : j) {
        if (!e.is_array() || e.size() != 5 || !e[0].is_number())
            throw std::invalid_argument(
                "segment entries must be [x1, y1, x2, y2, confidence]: " + path.string());
        segments.emplace_back(Point{e[0].get<double>(), e[1].get<double>()},
                              Point{e[2].get<double>(), e[3].get<double>()}, e[4].get<double>());
    }
    return segments;
}

void save_segments(const std::vector<LineSegment>& segments, const std::filesystem::path& path) {
    json j = json::array();
    for (const LineSegment& s : segments)
        j.push_back({s.p1().x, s.p1().y, s.p2().x, s.p2().y, s.confidence()});
    write_file(path, j.dump());
}

GrayImage load_pgm(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::invalid_argument("cannot open " + path.string());

    auto next_token = [&in, &path]() -> std::string {
        std::string tok;
        while (in) {
            int c = in.get();
            if (c == EOF)
                break;
            if (c == '#') {  // comment to end of line
                std::string skip;
                std::getline(in, skip);
                continue;
            }
            if (std::isspace(c)) {
                if (!tok.empty())
                    return tok;
                continue;
            }
            tok.push_back(static_cast<char>(c));
        }
        if (tok.empty())
            throw std::invalid_argument("malformed PGM (unexpected end): " + path.string());
        return tok;
    };

    const std::string magic = next_token();
    if (magic != "P5" && magic != "P2")
        throw std::invalid_argument("not an 8-bit grayscale PGM: " + path.string());
    const int width = std::stoi(next_token());
    const int height = std::stoi(next_token());
    const int maxval = std::stoi(next_token());
    if (width < 1 || height < 1 || maxval < 1 || maxval > 255)
        throw std::invalid_argument("unsupported PGM header in " + path.string());

    ImageGrid grid(width, height, 0.0);
    const double scale = 1.0 / maxval;
    if (magic == "P5") {
        std::vector<unsigned char> raw(grid.size());
        in.read(reinterpret_cast<char*>(raw.data()), static_cast<std::streamsize>(raw.size()));
        if (static_cast<std::size_t>(in.gcount()) != raw.size())
            throw std::invalid_argument("truncated PGM payload in " + path.string());
        for (std::size_t i = 0; i < raw.size(); ++i)
            grid.data()[i] = raw[i] * scale;
    } else {
        for (std::size_t i = 0; i < grid.size(); ++i) {
            const int v = std::stoi(next_token());
            if (v < 0 || v > maxval)
                throw std::invalid_argument("PGM sample out of range in " + path.string());
            grid.data()[i] = v * scale;
        }
    }
    return GrayImage(std::move(grid));
}

void save_pgm(const GrayImage& img, const std::filesystem::path& path) {
    std::string bytes;
    bytes += "P5\n" + std::to_string(img.width()) + " " + std::to_string(img.height()) + "\n255\n";
    bytes.reserve(bytes.size() + img.pixels().size());
    for (double v : img.pixels().data())
        bytes.push_back(static_cast<char>(static_cast<unsigned char>(std::lround(v * 255.0))));
    write_file(path, bytes);
}

void save_eval_report(const std::vector<ImageEvalReport>& images, const EvalReport& aggregate,
                      const std::filesystem::path& path) {
    json j;
    j["images"] = json::array();
    for (const ImageEvalReport& r : images) {
        json e = report_to_json(r.report);
        e["id"] = r.id;
        j["images"].push_back(e);
    }
    j["aggregate"] = report_to_json(aggregate);
    write_file(path, j.dump(2));
}

}  // namespace lsr

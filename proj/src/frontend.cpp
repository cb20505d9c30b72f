#include "lsr/frontend.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>

namespace lsr {

GrayImage::GrayImage(ImageGrid pixels) : pixels_(std::move(pixels)) {
    for (double v : pixels_.data())
        if (!(v >= 0.0 && v <= 1.0))
            throw std::invalid_argument("GrayImage: intensity outside [0, 1]");
}

HeatmapField gradient_field(const GrayImage& img) {
    const int w = img.width();
    const int h = img.height();
    if (w < 2 || h < 2)
        throw std::invalid_argument("gradient_field: image must be at least 2x2");

    const ImageGrid& i = img.pixels();
    ImageGrid mask(w, h, 0.0);
    ImageGrid field(w, h, 0.0);

    double max_mag = 0.0;
    for (int y = 0; y < h - 1; ++y) {
        for (int x = 0; x < w - 1; ++x) {
            const double gx =
                (i.at(x + 1, y) + i.at(x + 1, y + 1) - i.at(x, y) - i.at(x, y + 1)) / 2.0;
            const double gy =
                (i.at(x, y + 1) + i.at(x + 1, y + 1) - i.at(x, y) - i.at(x + 1, y)) / 2.0;
            const double mag = std::hypot(gx, gy);
            mask.at(x, y) = mag;
            field.at(x, y) =
                mag > 0.0 ? LevelLineAngle::normalize(std::atan2(gy, gx) + kPi / 2.0) : 0.0;
            max_mag = std::max(max_mag, mag);
        }
    }

    if (max_mag > 0.0) {
        for (int y = 0; y < h - 1; ++y)
            for (int x = 0; x < w - 1; ++x)
                mask.at(x, y) = std::min(1.0, mask.at(x, y) / max_mag);
    }

    // replicate into the last column and row
    for (int y = 0; y < h - 1; ++y) {
        mask.at(w - 1, y) = mask.at(w - 2, y);
        field.at(w - 1, y) = field.at(w - 2, y);
    }
    for (int x = 0; x < w; ++x) {
        mask.at(x, h - 1) = mask.at(x, h - 2);
        field.at(x, h - 1) = field.at(x, h - 2);
    }

    return HeatmapField(std::move(mask), std::move(field));
}

GrayImage resize_to_input(const GrayImage& img, int side) {
    if (side < 2)
        throw std::invalid_argument("resize_to_input: side must be >= 2");

    const ImageGrid& src = img.pixels();
    const int sw = src.width();
    const int sh = src.height();
    ImageGrid dst(side, side, 0.0);

    const double scale_x = static_cast<double>(sw) / side;
    const double scale_y = static_cast<double>(sh) / side;

    for (int oy = 0; oy < side; ++oy) {
        const double sy = (oy + 0.5) * scale_y - 0.5;
        const int y0 = std::clamp(static_cast<int>(std::floor(sy)), 0, sh - 1);
        const int y1 = std::min(y0 + 1, sh - 1);
        const double fy = std::clamp(sy - y0, 0.0, 1.0);
        for (int ox = 0; ox < side; ++ox) {
            const double sx = (ox + 0.5) * scale_x - 0.5;
            const int x0 = std::clamp(static_cast<int>(std::floor(sx)), 0, sw - 1);
            const int x1 = std::min(x0 + 1, sw - 1);
            const double fx = std::clamp(sx - x0, 0.0, 1.0);

            const double top = src.at(x0, y0) * (1.0 - fx) + src.at(x1, y0) * fx;
            const double bottom = src.at(x0, y1) * (1.0 - fx) + src.at(x1, y1) * fx;
            dst.at(ox, oy) = std::clamp(top * (1.0 - fy) + bottom * fy, 0.0, 1.0);
        }
    }
    return GrayImage(std::move(dst));
}

namespace {

constexpr char kMagic[6] = {'L', 'S', 'D', 'F', '1', '\n'};
constexpr std::uint64_t kMaxPixels = std::uint64_t(1) << 30;

void put_u32_le(std::string& out, std::uint32_t v) {
    out.push_back(static_cast<char>(v & 0xff));
    out.push_back(static_cast<char>((v >> 8) & 0xff));
    out.push_back(static_cast<char>((v >> 16) & 0xff));
    out.push_back(static_cast<char>((v >> 24) & 0xff));
}

std::uint32_t get_u32_le(const unsigned char* p) {
    return static_cast<std::uint32_t>(p[0]) | (static_cast<std::uint32_t>(p[1]) << 8) |
           (static_cast<std::uint32_t>(p[2]) << 16) | (static_cast<std::uint32_t>(p[3]) << 24);
}

void put_f32_le(std::string& out, float v) {
    put_u32_le(out, std::bit_cast<std::uint32_t>(v));
}

float get_f32_le(const unsigned char* p) {
    return std::bit_cast<float>(get_u32_le(p));
}

}  // namespace

HeatmapField load_field(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw FieldIoError(FieldIoCode::FileUnreadable, "load_field: cannot open " + path.string());

    std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (in.bad())
        throw FieldIoError(FieldIoCode::FileUnreadable, "load_field: read failure on " + path.string());

    if (bytes.size() < sizeof(kMagic) || std::memcmp(bytes.data(), kMagic, sizeof(kMagic)) != 0)
        throw FieldIoError(FieldIoCode::BadMagic, "load_field: bad magic in " + path.string());
    if (bytes.size() < sizeof(kMagic) + 8)
        throw FieldIoError(FieldIoCode::Truncated, "load_field: truncated header in " + path.string());

    const unsigned char* p = reinterpret_cast<const unsigned char*>(bytes.data()) + sizeof(kMagic);
    const std::uint32_t w = get_u32_le(p);
    const std::uint32_t h = get_u32_le(p + 4);
    if (w == 0 || h == 0)
        throw FieldIoError(FieldIoCode::BadDimensions, "load_field: zero dimension in " + path.string());

    const std::uint64_t pixels = static_cast<std::uint64_t>(w) * h;
    if (pixels > kMaxPixels)
        throw FieldIoError(FieldIoCode::DimensionOverflow,
                           "load_field: dimensions overflow in " + path.string());

    const std::uint64_t expected = sizeof(kMagic) + 8 + pixels * 8;
    if (bytes.size() < expected)
        throw FieldIoError(FieldIoCode::Truncated, "load_field: truncated payload in " + path.string());
    if (bytes.size() > expected)
        throw FieldIoError(FieldIoCode::TrailingBytes,
                           "load_field: trailing bytes in " + path.string());

    ImageGrid mask(static_cast<int>(w), static_cast<int>(h), 0.0);
    ImageGrid field(static_cast<int>(w), static_cast<int>(h), 0.0);
    const unsigned char* data = p + 8;
    for (std::uint64_t i = 0; i < pixels; ++i) {
        const double v = get_f32_le(data + i * 4);
        if (!(v >= 0.0 && v <= 1.0))
            throw FieldIoError(FieldIoCode::MaskOutOfRange,
                               "load_field: mask value outside [0, 1] in " + path.string());
        mask.data()[i] = v;
    }
    const unsigned char* angles = data + pixels * 4;
    for (std::uint64_t i = 0; i < pixels; ++i) {
        const double v = get_f32_le(angles + i * 4);
        if (!(v >= 0.0 && v < kPi))
            throw FieldIoError(FieldIoCode::AngleOutOfRange,
                               "load_field: angle outside [0, pi) in " + path.string());
        field.data()[i] = v;
    }
    return HeatmapField(std::move(mask), std::move(field));
}

void save_field(const HeatmapField& field, const std::filesystem::path& path) {
    const std::uint64_t pixels =
        static_cast<std::uint64_t>(field.width()) * static_cast<std::uint64_t>(field.height());

    std::string bytes;
    bytes.reserve(sizeof(kMagic) + 8 + pixels * 8);
    bytes.append(kMagic, sizeof(kMagic));
    put_u32_le(bytes, static_cast<std::uint32_t>(field.width()));
    put_u32_le(bytes, static_cast<std::uint32_t>(field.height()));
    for (double m : field.mask().data())
        put_f32_le(bytes, static_cast<float>(m));
    for (double f : field.field().data()) {
        float v = static_cast<float>(f);
        // float rounding can push angles just below pi up onto pi; fold mod pi
        if (static_cast<double>(v) >= kPi)
            v = 0.0f;
        put_f32_le(bytes, v);
    }

    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw FieldIoError(FieldIoCode::FileUnwritable, "save_field: cannot open " + path.string());
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out)
        throw FieldIoError(FieldIoCode::FileUnwritable, "save_field: write failure on " + path.string());
}

}  // namespace lsr

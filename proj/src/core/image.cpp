#include "cfkit/core/image.hpp"

#include <fstream>

#include "cfkit/core/errors.hpp"

namespace cfkit {

std::string to_string(ImageSource s) {
    switch (s) {
    case ImageSource::generated: return "generated";
    case ImageSource::original: return "original";
    case ImageSource::mock: return "mock";
    }
    return "mock";
}

ImageSource image_source_from_string(const std::string& s) {
    if (s == "generated") return ImageSource::generated;
    if (s == "original") return ImageSource::original;
    if (s == "mock") return ImageSource::mock;
    throw SchemaError("unknown image source: " + s);
}

double identical_pixel_fraction(const ImageBuffer& a, const ImageBuffer& b) {
    if (a.height != b.height || a.width != b.width) return 0.0;
    if (!a.valid() || !b.valid()) return 0.0;
    std::size_t same = 0;
    const std::size_t n = static_cast<std::size_t>(a.height) * a.width;
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t off = i * 3;
        if (a.rgb[off] == b.rgb[off] && a.rgb[off + 1] == b.rgb[off + 1] &&
            a.rgb[off + 2] == b.rgb[off + 2]) {
            ++same;
        }
    }
    return static_cast<double>(same) / static_cast<double>(n);
}

void write_ppm(const std::string& path, const ImageBuffer& image) {
    if (!image.valid()) throw IoError("write_ppm: invalid image buffer for " + path);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("write_ppm: cannot open " + path);
    out << "P6\n" << image.width << " " << image.height << "\n255\n";
    out.write(reinterpret_cast<const char*>(image.rgb.data()),
              static_cast<std::streamsize>(image.rgb.size()));
    if (!out) throw IoError("write_ppm: short write to " + path);
}

ImageBuffer read_ppm(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DecodeError("read_ppm: cannot open " + path);
    std::string magic;
    in >> magic;
    if (magic != "P6") throw DecodeError("read_ppm: not a P6 file: " + path);
    int width = 0, height = 0, maxval = 0;
    in >> width >> height >> maxval;
    if (!in || width <= 0 || height <= 0 || maxval != 255) {
        throw DecodeError("read_ppm: bad header in " + path);
    }
    in.get(); // single whitespace after maxval
    ImageBuffer img;
    img.width = width;
    img.height = height;
    img.rgb.resize(static_cast<std::size_t>(width) * height * 3);
    in.read(reinterpret_cast<char*>(img.rgb.data()), static_cast<std::streamsize>(img.rgb.size()));
    if (in.gcount() != static_cast<std::streamsize>(img.rgb.size())) {
        throw DecodeError("read_ppm: truncated pixel data in " + path);
    }
    return img;
}

} // namespace cfkit

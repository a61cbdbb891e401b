#pragma once

// In-memory RGB images, image references, and a minimal lossless PPM (P6)
// codec used for all generated image files.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace cfkit {

struct ImageBuffer {
    int height = 0;
    int width = 0;
    std::vector<std::uint8_t> rgb; // row-major, 3 bytes per pixel

    bool valid() const {
        return height > 0 && width > 0 &&
               rgb.size() == static_cast<std::size_t>(height) * width * 3;
    }

    std::uint8_t* pixel(int y, int x) { return rgb.data() + (static_cast<std::size_t>(y) * width + x) * 3; }
    const std::uint8_t* pixel(int y, int x) const {
        return rgb.data() + (static_cast<std::size_t>(y) * width + x) * 3;
    }
};

enum class ImageSource { generated, original, mock };

std::string to_string(ImageSource s);
ImageSource image_source_from_string(const std::string& s);

/// Handle to an image: either in-memory pixels or a filesystem path, plus an
/// opaque id. Mock-source refs may carry the id alone.
struct ImageRef {
    std::string id;
    std::optional<ImageBuffer> pixels;
    std::optional<std::string> path;
    ImageSource source = ImageSource::mock;

    /// Persistable refs carry exactly one of pixels/path.
    bool valid_at_rest() const { return pixels.has_value() != path.has_value(); }
};

/// Fraction of pixel positions that are byte-identical between two equally
/// sized images.
double identical_pixel_fraction(const ImageBuffer& a, const ImageBuffer& b);

void write_ppm(const std::string& path, const ImageBuffer& image); // IoError
ImageBuffer read_ppm(const std::string& path);                    // DecodeError

} // namespace cfkit

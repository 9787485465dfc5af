#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace reva {

// H x W x C image, planar layout (channel plane, then rows), values in [0,1].
struct ImageTensor {
    int height = 0;
    int width = 0;
    int channels = 0;
    std::vector<float> data; // data[(c*height + y)*width + x]

    ImageTensor() = default;
    ImageTensor(int h, int w, int c)
        : height(h), width(w), channels(c),
          data(static_cast<size_t>(h) * w * c, 0.0f) {}

    size_t size() const { return data.size(); }

    float& at(int c, int y, int x) {
        return data[(static_cast<size_t>(c) * height + y) * width + x];
    }
    float at(int c, int y, int x) const {
        return data[(static_cast<size_t>(c) * height + y) * width + x];
    }

    bool same_shape(const ImageTensor& o) const {
        return height == o.height && width == o.width && channels == o.channels;
    }
};

// Throws ConfigError unless shape is sane, length matches and values are in [0,1].
void validate_image(const ImageTensor& x);

void clip01(ImageTensor& x);

inline float clip01f(float v) { return v < 0.0f ? 0.0f : (v > 1.0f ? 1.0f : v); }
inline double clip01d(double v) { return v < 0.0 ? 0.0 : (v > 1.0 ? 1.0 : v); }

// Content hash over shape and raw pixel bytes.
uint64_t image_digest(const ImageTensor& x);

} // namespace reva

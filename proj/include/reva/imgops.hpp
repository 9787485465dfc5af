#pragma once

#include "reva/tensor.hpp"

namespace reva {

// Bilinear sample with edge clamping; y/x in pixel coordinates.
float sample_bilinear(const ImageTensor& img, int c, double y, double x);

// Bilinear sample where out-of-bounds taps read `fill` (augmentation-style
// black borders).
float sample_bilinear_fill(const ImageTensor& img, int c, double y, double x, float fill);

ImageTensor resize_bilinear(const ImageTensor& img, int out_h, int out_w);
ImageTensor resize_nearest(const ImageTensor& img, int out_h, int out_w);

// Separable Gaussian, kernel radius ceil(3*sigma), edges clamped.
ImageTensor gaussian_blur(const ImageTensor& img, double sigma);
void gaussian_blur_field(std::vector<double>& field, int h, int w, double sigma);

// Dense 2D kernel applied per channel, edges clamped. Kernel is kh x kw,
// centered.
ImageTensor convolve2d(const ImageTensor& img, const std::vector<double>& kernel, int kh, int kw);

} // namespace reva

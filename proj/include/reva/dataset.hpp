#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "reva/tensor.hpp"

namespace reva {

struct LabeledDataset {
    std::vector<ImageTensor> images;
    std::vector<int> labels;
    int class_count = 0;
    std::string split = "train"; // train | test

    size_t size() const { return images.size(); }
};

// Throws ConfigError if images/labels disagree or a label is out of range.
void validate_dataset(const LabeledDataset& ds);

// CIFAR binary: records of 3073 bytes (label byte, then 1024-byte R/G/B
// planes row-major), pixels mapped to [0,1] by /255.
LabeledDataset load_cifar_binary(const std::vector<std::string>& paths, int class_count = 10,
                                 const std::string& split = "train");

struct SyntheticSpec {
    int class_count = 3;
    int train_per_class = 500;
    int test_per_class = 100;
    int image_size = 24;
    int channels = 1;
    // ordered so the leading classes stay separable for a small conv: bulk,
    // hollow, cornered shapes first, thin-stripe shapes last
    std::vector<std::string> palette = {"disk", "ring", "tri", "bar", "diamond", "cross"};
    double noise_floor = 0.10;
    uint64_t seed = 1;
};

// Class k renders palette shape k at a randomized position/scale/contrast,
// plus per-pixel uniform noise bounded by noise_floor. Fully determined by
// the spec; train and test draw from disjoint per-sample seed streams.
std::pair<LabeledDataset, LabeledDataset> generate_synthetic(const SyntheticSpec& spec);

// All and only the indices labeled y, in original order.
std::vector<size_t> select_by_class(const LabeledDataset& ds, int y);

LabeledDataset subset(const LabeledDataset& ds, const std::vector<size_t>& indices);

// Native dataset file: "RVD1", u32 version, u32 count, u32 h/w/c, u32
// class_count, length-prefixed split tag, then {u32 label, f32 pixels}
// records and a trailing CRC32.
void save_dataset(const LabeledDataset& ds, const std::string& path);
LabeledDataset load_dataset(const std::string& path);

uint64_t dataset_digest(const LabeledDataset& ds);

// Companion manifest (text): split, count, class_count, source, digest.
void write_dataset_manifest(const LabeledDataset& ds, const std::string& source,
                            const std::string& path);

void write_ppm(const ImageTensor& img, const std::string& path);

} // namespace reva

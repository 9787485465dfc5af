#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "reva/dataset.hpp"
#include "reva/tensor.hpp"

namespace reva {

enum class CorruptionKind {
    brightness, frost, fog, snow,          // weather
    contrast, elastic, pixelate, jpeg,     // digital
    zoom_blur, motion_blur, glass_blur, defocus_blur, // blur
    impulse_noise, gaussian_noise, shot_noise          // noise
};

enum class CorruptionCategory { weather, digital, blur, noise };

struct CorruptionCatalogEntry {
    CorruptionKind kind;
    const char* name;
    CorruptionCategory category;
};

// The fixed 15-entry catalog; ordering here is the canonical tie-break and
// report order everywhere else.
const std::vector<CorruptionCatalogEntry>& corruption_catalog();

const char* to_string(CorruptionKind kind);
const char* to_string(CorruptionCategory cat);
CorruptionKind corruption_from_name(const std::string& name);
CorruptionCategory category_of(CorruptionKind kind);
std::vector<CorruptionKind> all_corruption_kinds();

struct CorruptionSpec {
    CorruptionKind kind;
    int severity = 3; // 1..5
    uint64_t seed = 0;
};

// Named parameters for one (kind, severity) cell.
struct SeverityParams {
    std::map<std::string, double> values;
    double get(const std::string& name) const;
};

// Per kind, 5 parameter tuples; the designated primary parameter moves
// strictly in the degradation direction as severity rises.
class SeverityTable {
public:
    static const SeverityTable& builtin();
    static SeverityTable load(const std::string& path);
    void save(const std::string& path) const;

    const SeverityParams& params(CorruptionKind kind, int severity) const;
    void validate() const;

    std::map<CorruptionKind, std::vector<SeverityParams>> rows; // 5 per kind
};

ImageTensor apply_corruption(const ImageTensor& x, const CorruptionSpec& spec);
ImageTensor apply_corruption(const ImageTensor& x, const CorruptionSpec& spec,
                             const SeverityTable& table);
// Direct-parameter entry point (used by tests to pin single parameters).
ImageTensor apply_corruption_params(const ImageTensor& x, CorruptionKind kind,
                                    const SeverityParams& params, uint64_t seed);

struct CorruptedCell {
    CorruptionKind kind;
    int severity;
    LabeledDataset data;
};

// |kinds| x |severities| corrupted copies of ds; labels pass through. The
// per-image stream is seeded by mix(seed, kind, severity, index) so results
// do not depend on scheduling.
std::vector<CorruptedCell> corrupt_suite(const LabeledDataset& ds,
                                         const std::vector<CorruptionKind>& kinds,
                                         const std::vector<int>& severities, uint64_t seed,
                                         const SeverityTable& table = SeverityTable::builtin());

} // namespace reva

#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "reva/corruptions.hpp"
#include "reva/tensor.hpp"

namespace reva {

// Geometric/photometric primitives, deliberately disjoint from the 15 test
// corruptions so the augmix and reva-minus baselines cannot leak them.
enum class AugOp {
    identity,
    rotate,
    translate_x,
    translate_y,
    shear_x,
    shear_y,
    posterize,
    solarize,
    autocontrast,
    equalize
};

const char* to_string(AugOp op);
AugOp aug_op_from_name(const std::string& name);
std::vector<AugOp> default_aug_ops(); // everything except identity

struct MixPolicy {
    std::vector<AugOp> ops = default_aug_ops();
    // targeted mode: corruption kinds appended to (or replacing) the default
    // set, each applied at its pinned severity
    std::vector<std::pair<CorruptionKind, int>> corruption_ops;
    bool replace_default_ops = false;
    int corruption_severity = 3; // used when a kind carries no explicit pin
    int width = 3; // chains
    int depth_min = 1, depth_max = 3;
    double concentration = 1.0; // Dirichlet over chains and Beta for the final mix
    bool force_original = false; // test hook: mixing weight pinned to the original

    void validate() const;
    size_t op_count() const;
};

// Convex combination of `width` randomly composed operation chains, then
// Beta-mixed with the original. Output stays a valid image.
ImageTensor augmix_sample(const ImageTensor& x, const MixPolicy& policy, uint64_t seed,
                          const SeverityTable& table = SeverityTable::builtin());

// Generalized Jensen-Shannon divergence, natural log, bounded by ln(n).
double js_divergence(const std::vector<std::vector<double>>& distributions);

} // namespace reva

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "reva/dataset.hpp"

namespace reva {

// One perturbed copy of the weak-sample set: an attack (severity 0) or a
// corruption at severity 1..5.
struct SuiteMember {
    std::string id;     // e.g. "adv_fgsm", "cc_gaussian_noise_s3"
    std::string kind;   // attack or corruption kind name
    int severity = 0;   // 0 for attacks
    bool adversarial = false;
    LabeledDataset data;
};

struct ValidationSuite {
    LabeledDataset clean; // the selected weak samples, unperturbed
    std::vector<SuiteMember> members;
};

uint64_t suite_digest(const ValidationSuite& suite);

// Directory layout: suite.manifest plus one .rvd dataset per member and
// clean.rvd for the source samples.
void save_suite(const ValidationSuite& suite, const std::string& dir);
ValidationSuite load_suite(const std::string& dir);

} // namespace reva

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "reva/dataset.hpp"
#include "reva/net.hpp"

namespace reva {

enum class AttackKind { bim, fgsm, pgd, rfgsm, uap, umifgsm };

const std::vector<AttackKind>& attack_kinds(); // canonical report order
const char* to_string(AttackKind kind);
AttackKind attack_from_name(const std::string& name);

// All attacks are untargeted and L-infinity bounded; epsilon/step sizes are
// in pixel units on the [0,1] scale.
struct AttackSpec {
    AttackKind kind = AttackKind::fgsm;
    double epsilon = 8.0 / 255.0;
    double step_size = 2.0 / 255.0; // iterative kinds
    int steps = 40;
    double momentum_decay = 1.0; // umifgsm
    bool random_start = true;    // pgd
    double alpha_noise = 4.0 / 255.0; // rfgsm; must stay below epsilon
    double uap_target_fooling_rate = 0.8;
    int uap_max_passes = 10;

    void validate() const;
};

// One spec per technique at the documented defaults, canonical order.
std::vector<AttackSpec> default_attack_specs(double epsilon = 8.0 / 255.0);

struct AttackResult {
    ImageTensor image;
    // true if some iteration saw an all-zero input gradient
    bool zero_gradient = false;
};

AttackResult fgsm(const Network& net, const ImageTensor& x, int y, double eps);
AttackResult bim(const Network& net, const ImageTensor& x, int y, double eps, double alpha,
                 int steps);
AttackResult pgd(const Network& net, const ImageTensor& x, int y, double eps, double alpha,
                 int steps, bool random_start, uint64_t seed);
AttackResult rfgsm(const Network& net, const ImageTensor& x, int y, double eps,
                   double alpha_noise, uint64_t seed);
AttackResult umifgsm(const Network& net, const ImageTensor& x, int y, double eps, double alpha,
                     int steps, double mu);

struct UniversalPerturbation {
    int height = 0, width = 0, channels = 0;
    std::vector<float> delta; // max |delta| <= epsilon
    double epsilon = 0.0;
    double fooling_rate = 0.0; // misclassification rate of x+delta over the fit set
    bool reached_target = false;
    int passes_used = 0;
};

// Accumulates a single dataset-wide perturbation: every still-correct sample
// contributes a bounded per-sample step toward its runner-up class, and the
// running delta is re-projected onto the epsilon ball after each one.
UniversalPerturbation uap(const Network& net, const LabeledDataset& ds, double eps,
                          double target_fooling_rate, int max_passes, uint64_t seed);

ImageTensor apply_uap(const ImageTensor& x, const UniversalPerturbation& up);

struct AttackedSet {
    AttackKind kind;
    AttackSpec spec;
    LabeledDataset data;
};

// One adversarial dataset per spec, labels preserved. UAP fits one delta on
// ds and applies it to every sample; the others run per sample with seeds
// derived from (seed, kind, index).
std::vector<AttackedSet> attack_suite(const Network& net, const LabeledDataset& ds,
                                      const std::vector<AttackSpec>& specs, uint64_t seed);

} // namespace reva

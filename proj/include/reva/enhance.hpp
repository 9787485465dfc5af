#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "reva/attacks.hpp"
#include "reva/augmix.hpp"
#include "reva/checkpoint.hpp"
#include "reva/dataset.hpp"
#include "reva/metrics.hpp"
#include "reva/net.hpp"
#include "reva/trainer.hpp"

namespace reva {

struct LossConfig {
    double alpha = 0.5;   // priority weight on the adversarial term
    double lambda = 12.0; // JS regularization weight
    bool three_way_js = false; // add a second augmented view to the JS term

    // always derived, never stored
    double beta() const { return (1.0 - alpha) * lambda; }
    void validate() const;
};

struct TrainPlan {
    std::string method = "standard"; // standard | augmix | reva | reva-minus
    ArchSpec arch;
    int epochs = 10;
    int batch_size = 16;
    SgdConfig sgd;
    LossConfig loss;
    std::optional<AttackSpec> adversarial; // required for reva / reva-minus
    MixPolicy mix;
    bool precompute_adversarial = false; // default: regenerate per batch (online)
    uint64_t seed = 1;

    void validate() const;
};

struct CompositeLoss {
    double total = 0.0;
    double ce = 0.0;     // cross-entropy on the original view
    double js = 0.0;     // raw JS divergence (unweighted)
    double adv_ce = 0.0; // cross-entropy on the adversarial view
    std::vector<std::vector<double>> param_grads;
};

// Full updated objective: CE(p_orig,y) + beta*JS(p_orig,p_augmix) +
// alpha*CE(p_adv,y) with beta = (1-alpha)*lambda. Gradients flow through all
// forward passes; adversarial-example construction is gradient-blocked.
CompositeLoss reva_loss(const Network& net, const ImageTensor& x, int y, const MixPolicy& policy,
                        const AttackSpec& adv_spec, const LossConfig& cfg, uint64_t seed);

struct EpochLog {
    int epoch = 0;
    double lr = 0.0;
    double loss_total = 0.0;
    double loss_ce = 0.0;
    double loss_js = 0.0;  // unweighted JS
    double loss_adv = 0.0; // unweighted adversarial CE
    double clean_acc = 0.0;
};

struct TrainResult {
    Network net;
    TrainMeta meta;
    std::vector<EpochLog> log;
};

// Method dispatch over one loop: standard = CE; augmix = CE + lambda*JS;
// reva-minus = full objective with the default op set; reva = full objective
// with the non-robust corruption kinds from `groups` appended at their
// pinned severity. Deterministic given plan.seed and thread-count agnostic.
TrainResult train(const TrainPlan& plan, const LabeledDataset& train_ds,
                  const LabeledDataset* eval_ds = nullptr, const Groups* groups = nullptr,
                  const Network* initial = nullptr);

void write_train_log(const std::vector<EpochLog>& log, const std::string& path);

} // namespace reva

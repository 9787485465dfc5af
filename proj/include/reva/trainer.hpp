#pragma once

#include <vector>

#include "reva/net.hpp"

namespace reva {

struct SgdConfig {
    double lr = 0.1;
    double momentum = 0.9;
    double weight_decay = 5e-4;
};

// Step decay: x0.1 once half the epochs are done, x0.01 after three quarters.
double scheduled_lr(double base_lr, int epoch, int total_epochs);

// Momentum SGD over a Network's parameter arrays. Velocity lives here, so one
// trainer instance must stay paired with one network for the whole run.
class SgdTrainer {
public:
    explicit SgdTrainer(SgdConfig cfg) : cfg_(cfg) {}

    const SgdConfig& config() const { return cfg_; }
    void set_lr(double lr) { cfg_.lr = lr; }

    // grads aligned with net.params(). Throws RuntimeError (naming the
    // parameter) on any non-finite gradient; the network is left untouched.
    void step(Network& net, const std::vector<std::vector<double>>& grads);

private:
    SgdConfig cfg_;
    std::vector<std::vector<double>> velocity_;
};

} // namespace reva

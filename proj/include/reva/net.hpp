#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "reva/tensor.hpp"

namespace reva {

// Two built-in architectures. "tiny-mlp": flatten -> dense(hidden) -> relu ->
// dense(classes). "tiny-conv": conv3x3 -> relu -> conv3x3/2 -> relu ->
// global-average-pool -> dense(classes).
struct ArchSpec {
    std::string kind = "tiny-conv";
    int in_h = 24, in_w = 24, in_c = 1;
    int classes = 3;
    int hidden = 64;  // tiny-mlp
    int conv1 = 12;   // tiny-conv channel widths
    int conv2 = 24;

    std::string descriptor() const;
    static ArchSpec parse(const std::string& descriptor);
    bool operator==(const ArchSpec&) const = default;
};

struct Shape3 {
    int h = 0, w = 0, c = 0;
    int count() const { return h * w * c; }
};

enum class LayerKind { Flatten, Dense, Relu, Conv2d, GlobalAvgPool };

struct LayerDesc {
    LayerKind kind;
    int w_idx = -1; // index into params(), -1 if none
    int b_idx = -1;
    int stride = 1, pad = 1, ksize = 3;
    Shape3 in, out;
};

struct ParamArray {
    std::string name;
    std::vector<uint32_t> dims;
    std::vector<float> v;
    size_t count() const { return v.size(); }
};

// Per-call activation storage; forward() is const and thread-safe as long as
// each caller owns its trace.
struct ForwardTrace {
    std::vector<std::vector<double>> layer_in;
};

class Network {
public:
    Network() = default;

    // Fan-in-scaled uniform init (bound sqrt(6/fan_in)), biases zero, seeded.
    static Network build(const ArchSpec& arch, uint64_t seed);

    const ArchSpec& arch() const { return arch_; }
    int class_count() const { return arch_.classes; }
    const std::vector<LayerDesc>& layers() const { return layers_; }
    std::vector<ParamArray>& params() { return params_; }
    const std::vector<ParamArray>& params() const { return params_; }
    size_t param_scalar_count() const;

    // Logits for one image. Throws ConfigError on shape mismatch.
    std::vector<double> forward(const ImageTensor& x, ForwardTrace* trace = nullptr) const;

    // Reverse-mode pass from dL/dlogits. Accumulates into param_grads (sized
    // to match params, zero-filled by caller or left empty to be allocated);
    // input_grad, when requested, is overwritten with dL/dx.
    void backward(const ForwardTrace& trace, const std::vector<double>& dlogits,
                  std::vector<std::vector<double>>* param_grads,
                  std::vector<double>* input_grad) const;

    // Throws RuntimeError naming the first non-finite parameter array.
    void check_finite(const std::string& context) const;

    uint64_t digest() const;

private:
    ArchSpec arch_;
    std::vector<LayerDesc> layers_;
    std::vector<ParamArray> params_;
};

std::vector<double> softmax(const std::vector<double>& logits);
// -log softmax(logits)[y], computed via log-sum-exp with max subtraction.
double cross_entropy(const std::vector<double>& logits, int y);
// dCE/dlogits = softmax(logits) - onehot(y)
std::vector<double> cross_entropy_grad(const std::vector<double>& logits, int y);

struct LossGrads {
    double loss = 0.0;
    std::vector<std::vector<double>> param_grads; // aligned with net.params()
    std::vector<double> input_grad;               // same length as x.data
};

LossGrads loss_and_gradients(const Network& net, const ImageTensor& x, int y,
                             bool want_param_grads = true, bool want_input_grad = true);

// Cheaper path for attacks: only dL/dx.
std::vector<double> input_gradient(const Network& net, const ImageTensor& x, int y,
                                   double* loss_out = nullptr);

int argmax(const std::vector<double>& v);

} // namespace reva

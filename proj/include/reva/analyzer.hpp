#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "reva/attacks.hpp"
#include "reva/corruptions.hpp"
#include "reva/dataset.hpp"
#include "reva/net.hpp"
#include "reva/suite.hpp"

namespace reva {

struct AnalyzerConfig {
    int kappa = 50;        // neighbors per sample
    double epsilon = 0.22; // neighbor perturbation degree, pixel units
    uint64_t seed = 1;
    int psi = 100; // weak samples selected per class
    // symmetric: x + eps*U(-1,1)^d (default); one_sided: x + eps*U(0,1)^d
    enum class Noise { symmetric, one_sided } noise = Noise::symmetric;

    void validate() const;
};

// Probability vector for an image; lets tests stub the classifier.
using PredictFn = std::function<std::vector<double>(const ImageTensor&)>;

// Mean misprediction score over kappa clipped neighbors: 0 for a correctly
// classified neighbor, otherwise the highest probability among wrong classes.
// Neighbor noise is keyed to (seed, sample content, q), so the score of a
// sample does not depend on dataset order or scheduling.
double misprediction_score(const PredictFn& predict, const ImageTensor& x, int y,
                           const AnalyzerConfig& cfg);
double misprediction_score(const Network& net, const ImageTensor& x, int y,
                           const AnalyzerConfig& cfg);

struct RankedSample {
    size_t index = 0; // position in the source dataset
    int label = 0;
    double gamma = 0.0; // in [0,1]
};

// Per class, descending by gamma; ties broken by ascending dataset index.
// The union over classes is a partition of the dataset.
struct RankedDictionary {
    std::map<int, std::vector<RankedSample>> per_class;
    size_t total() const;
};

RankedDictionary rank_dataset(const Network& net, const LabeledDataset& ds,
                              const AnalyzerConfig& cfg);

void save_ranking(const RankedDictionary& ranking, const std::string& path);
RankedDictionary load_ranking(const std::string& path);

struct WeakSampleSet {
    std::vector<size_t> indices; // psi per class, class-major
    int psi = 0;
    LabeledDataset samples; // clean images + labels of the selection
};

// First psi entries per class from the ranking. Throws ConfigError naming
// the class when it has fewer than psi samples.
WeakSampleSet select_weak_samples(const RankedDictionary& ranking, int psi,
                                  const LabeledDataset& ds);

struct EpsSweepPoint {
    double eps = 0.0;
    double neighbor_accuracy = 0.0;
};

struct EpsSweepResult {
    double chosen_eps = 0.0; // accuracy nearest 0.50, ties -> larger eps
    std::vector<EpsSweepPoint> curve;
};

// Shares one noise draw per (sample, q) across the whole grid, so the curve
// responds to eps alone.
EpsSweepResult sweep_epsilon(const Network& net, const LabeledDataset& ds_sub,
                             const std::vector<double>& eps_grid, int kappa, uint64_t seed);

void write_sweep_csv(const EpsSweepResult& sweep, const std::string& path);

// Assembles the full validation suite from the weak set: one adversarial
// member per attack spec plus |kinds| x |severities| corruption members.
ValidationSuite build_validation_suite(const WeakSampleSet& weak,
                                       const std::vector<AttackSpec>& attack_specs,
                                       const std::vector<CorruptionKind>& kinds,
                                       const std::vector<int>& severities, const Network& net,
                                       uint64_t seed,
                                       const SeverityTable& table = SeverityTable::builtin());

} // namespace reva

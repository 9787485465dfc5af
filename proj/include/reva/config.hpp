#pragma once

#include <optional>
#include <string>
#include <vector>

#include "reva/analyzer.hpp"
#include "reva/attacks.hpp"
#include "reva/corruptions.hpp"
#include "reva/dataset.hpp"
#include "reva/enhance.hpp"
#include "reva/metrics.hpp"

namespace reva {

// One config document drives every subcommand; flags override single keys.
struct RunConfig {
    uint64_t seed = 0; // mandatory in the file
    int threads = 1;
    std::string output_dir = "out";

    // dataset
    std::string dataset_source = "synthetic"; // synthetic | cifar-binary
    SyntheticSpec synthetic;
    std::vector<std::string> cifar_train;
    std::vector<std::string> cifar_test;
    int cifar_class_count = 10;

    // model
    ArchSpec model; // input dims/classes filled from the dataset

    // training
    TrainPlan train_plan;

    // analysis
    AnalyzerConfig analyzer;
    struct Sweep {
        double start = 0.02, stop = 0.40, step = 0.02;
        int kappa = 20;
        int subset = 150; // samples drawn from the train set
    } sweep;

    // validation suite
    double attack_epsilon = 8.0 / 255.0;
    std::vector<AttackSpec> attacks; // defaults to all six at attack_epsilon
    std::vector<CorruptionKind> corruption_kinds; // defaults to the full catalog
    std::vector<int> severities = {1, 2, 3, 4, 5};
    std::string severity_table_path; // empty = builtin table

    GroupingPolicy grouping;
    double gate_max_clean_err = 0.10;

    SeverityTable severity_table() const;
    // Re-derives every per-stage seed from a new root seed.
    void reseed(uint64_t new_seed);
};

RunConfig load_config(const std::string& path);
void save_config(const RunConfig& cfg, const std::string& path); // documented template

// Loads the dataset pair the config names. For cifar-binary every referenced
// file must exist.
std::pair<LabeledDataset, LabeledDataset> load_config_datasets(const RunConfig& cfg);

// Groups document (rho/nu lists).
void save_groups(const Groups& groups, const std::string& path);
Groups load_groups(const std::string& path);

} // namespace reva

#pragma once

#include <map>
#include <string>
#include <vector>

#include "reva/corruptions.hpp"
#include "reva/dataset.hpp"
#include "reva/net.hpp"
#include "reva/suite.hpp"

namespace reva {

// Top-1 misclassification fraction. Errors are fractions in [0,1] everywhere
// inside the library; rendering as percentages happens only at the edges.
double classification_error(const Network& net, const LabeledDataset& ds);

// Mean adversarial error over techniques (list must be nonempty).
double m_adv_err(const std::vector<double>& per_attack_errors);
// Mean error over severity levels for one corruption kind.
double uce(const std::vector<double>& per_severity_errors);
// Mean of per-kind uCE; every kind in `required` must be present.
double mce(const std::vector<std::pair<std::string, double>>& per_kind_uce,
           const std::vector<std::string>& required);

// Relative degradation vs. the clean top-1 error. clean_err must be > 0.
double radv_err(double adv_err_value, double clean_err);
double rc_err(double uce_value, double clean_err);

struct GroupingPolicy {
    enum class Mode { per_category_argmax, threshold };
    Mode mode = Mode::per_category_argmax;
    double tau = 3.0; // threshold mode: relative error above tau lands in nu
};

struct CorruptionEval {
    std::vector<std::pair<int, double>> severity_err; // ascending severity
    double uce = 0.0;
};

struct Groups {
    std::vector<std::string> rho;
    std::vector<std::string> nu;
};

struct RobustnessReport {
    std::string model_id;
    double clean_err = 0.0;
    bool clean_perfect = false; // clean_err == 0; relative metrics omitted
    std::vector<std::pair<std::string, double>> adv_err;       // per attack, canonical order
    double m_adv_err = 0.0;
    std::vector<std::pair<std::string, double>> radv_err;
    std::vector<std::pair<std::string, CorruptionEval>> corr;  // per kind, catalog order
    double mce = 0.0;
    std::vector<std::pair<std::string, double>> rc_err;
    Groups groups;
    double gate_max_clean_err = 0.10;
    bool gate_passed = false;
};

// Splits every perturbation type in the report into (rho, nu). Corruption
// kinds: per-category argmax of RC_Err (ties resolved by catalog order) or
// the tau threshold. Adversarial kinds: all in nu under argmax mode, RAdv_Err
// vs tau under threshold mode. Falls back to uCE/Adv_Err magnitudes when the
// report is flagged clean-perfect (same argmax, the denominator is shared).
Groups group_perturbations(const RobustnessReport& report, const GroupingPolicy& policy);

struct WilcoxonResult {
    double p = 1.0;
    double w_plus = 0.0;
    double w_minus = 0.0;
    int n = 0;            // pairs left after dropping zero differences
    bool exact = false;   // enumeration (n <= 25) vs normal approximation
    bool degenerate = false; // all differences zero
};

// Two-sided signed-rank test, zero differences dropped, ties mid-ranked.
// Exact null enumeration for n <= 25.
WilcoxonResult wilcoxon_signed_rank(const std::vector<double>& a, const std::vector<double>& b);

// Evaluates every suite member, fills all metric fields and the grouping.
RobustnessReport evaluate_suite(const Network& net, const ValidationSuite& suite,
                                const LabeledDataset& clean_test, const GroupingPolicy& policy,
                                const std::string& model_id, double gate_max_clean_err = 0.10);

// Report document IO (structured text with stable key order).
void save_report(const RobustnessReport& report, const std::string& path,
                 const std::string& timestamp = "");
RobustnessReport load_report(const std::string& path);

} // namespace reva

#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "reva/analyzer.hpp"
#include "reva/attacks.hpp"
#include "reva/augmix.hpp"
#include "reva/checkpoint.hpp"
#include "reva/corruptions.hpp"
#include "reva/dataset.hpp"
#include "reva/enhance.hpp"
#include "reva/errors.hpp"
#include "reva/metrics.hpp"
#include "reva/net.hpp"
#include "reva/parallel.hpp"
#include "reva/suite.hpp"

namespace py = pybind11;
using namespace reva;

namespace {

py::array_t<float> image_to_array(const ImageTensor& img) {
    py::array_t<float> arr({img.channels, img.height, img.width});
    std::copy(img.data.begin(), img.data.end(), arr.mutable_data());
    return arr;
}

ImageTensor array_to_image(const py::array_t<float, py::array::c_style | py::array::forcecast>& arr) {
    if (arr.ndim() != 3) throw ConfigError("image array must be (channels, height, width)");
    ImageTensor img(static_cast<int>(arr.shape(1)), static_cast<int>(arr.shape(2)),
                    static_cast<int>(arr.shape(0)));
    std::copy(arr.data(), arr.data() + img.data.size(), img.data.begin());
    return img;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Robustness validation and targeted enhancement toolkit (C++ core)";

    py::register_exception<ConfigError>(m, "ConfigError");
    py::register_exception<FormatError>(m, "FormatError");
    py::register_exception<CorruptError>(m, "CorruptError");
    py::register_exception<RuntimeError>(m, "RuntimeError");

    m.def("set_thread_count", &set_thread_count, py::arg("n"));

    // --- datasets -----------------------------------------------------------
    py::class_<LabeledDataset>(m, "Dataset")
        .def(py::init<>())
        .def_readwrite("class_count", &LabeledDataset::class_count)
        .def_readwrite("split", &LabeledDataset::split)
        .def_readonly("labels", &LabeledDataset::labels)
        .def("__len__", [](const LabeledDataset& ds) { return ds.size(); })
        .def("image", [](const LabeledDataset& ds, size_t i) {
            if (i >= ds.size()) throw ConfigError("dataset index out of range");
            return image_to_array(ds.images[i]);
        })
        .def("label", [](const LabeledDataset& ds, size_t i) {
            if (i >= ds.size()) throw ConfigError("dataset index out of range");
            return ds.labels[i];
        })
        .def("add", [](LabeledDataset& ds, const py::array_t<float, py::array::c_style | py::array::forcecast>& img, int label) {
            ds.images.push_back(array_to_image(img));
            ds.labels.push_back(label);
        })
        .def("digest", &dataset_digest);

    py::class_<SyntheticSpec>(m, "SyntheticSpec")
        .def(py::init<>())
        .def_readwrite("class_count", &SyntheticSpec::class_count)
        .def_readwrite("train_per_class", &SyntheticSpec::train_per_class)
        .def_readwrite("test_per_class", &SyntheticSpec::test_per_class)
        .def_readwrite("image_size", &SyntheticSpec::image_size)
        .def_readwrite("channels", &SyntheticSpec::channels)
        .def_readwrite("noise_floor", &SyntheticSpec::noise_floor)
        .def_readwrite("seed", &SyntheticSpec::seed);

    m.def("generate_synthetic", &generate_synthetic, py::arg("spec"));
    m.def("load_cifar_binary", &load_cifar_binary, py::arg("paths"), py::arg("class_count") = 10,
          py::arg("split") = "train");
    m.def("save_dataset", &save_dataset, py::arg("dataset"), py::arg("path"));
    m.def("load_dataset", &load_dataset, py::arg("path"));
    m.def("select_by_class", &select_by_class, py::arg("dataset"), py::arg("label"));

    // --- network ------------------------------------------------------------
    py::class_<ArchSpec>(m, "ArchSpec")
        .def(py::init<>())
        .def_readwrite("kind", &ArchSpec::kind)
        .def_readwrite("in_h", &ArchSpec::in_h)
        .def_readwrite("in_w", &ArchSpec::in_w)
        .def_readwrite("in_c", &ArchSpec::in_c)
        .def_readwrite("classes", &ArchSpec::classes)
        .def_readwrite("hidden", &ArchSpec::hidden)
        .def_readwrite("conv1", &ArchSpec::conv1)
        .def_readwrite("conv2", &ArchSpec::conv2)
        .def("descriptor", &ArchSpec::descriptor)
        .def_static("parse", &ArchSpec::parse);

    py::class_<Network>(m, "Network")
        .def_static("build", &Network::build, py::arg("arch"), py::arg("seed"))
        .def_property_readonly("arch", &Network::arch)
        .def("class_count", &Network::class_count)
        .def("digest", &Network::digest)
        .def("forward", [](const Network& net, const py::array_t<float, py::array::c_style | py::array::forcecast>& img) {
            return net.forward(array_to_image(img));
        })
        .def("predict", [](const Network& net, const py::array_t<float, py::array::c_style | py::array::forcecast>& img) {
            return argmax(net.forward(array_to_image(img)));
        });

    m.def("save_checkpoint",
          [](const Network& net, const std::string& path, uint64_t seed, int epochs,
             const std::string& method) {
              save_checkpoint(net, TrainMeta{seed, epochs, method}, path);
          },
          py::arg("net"), py::arg("path"), py::arg("seed") = 0, py::arg("epochs") = 0,
          py::arg("method") = "standard");
    m.def("load_checkpoint", [](const std::string& path) { return load_checkpoint(path); },
          py::arg("path"));

    m.def("classification_error", &classification_error, py::arg("net"), py::arg("dataset"));

    // --- corruptions ---------------------------------------------------------
    m.def("corruption_catalog", [] {
        std::vector<std::pair<std::string, std::string>> out;
        for (const auto& e : corruption_catalog())
            out.emplace_back(e.name, to_string(e.category));
        return out;
    });
    m.def("apply_corruption",
          [](const py::array_t<float, py::array::c_style | py::array::forcecast>& img,
             const std::string& kind, int severity, uint64_t seed) {
              return image_to_array(apply_corruption(
                  array_to_image(img), CorruptionSpec{corruption_from_name(kind), severity, seed}));
          },
          py::arg("image"), py::arg("kind"), py::arg("severity") = 3, py::arg("seed") = 0);
    m.def("corrupt_suite",
          [](const LabeledDataset& ds, const std::vector<std::string>& kinds,
             const std::vector<int>& severities, uint64_t seed) {
              std::vector<CorruptionKind> ks;
              for (const auto& k : kinds) ks.push_back(corruption_from_name(k));
              std::vector<std::tuple<std::string, int, LabeledDataset>> out;
              for (auto& cell : corrupt_suite(ds, ks, severities, seed))
                  out.emplace_back(to_string(cell.kind), cell.severity, std::move(cell.data));
              return out;
          },
          py::arg("dataset"), py::arg("kinds"), py::arg("severities"), py::arg("seed") = 0);

    // --- attacks --------------------------------------------------------------
    py::class_<AttackSpec>(m, "AttackSpec")
        .def(py::init<>())
        .def_property("kind",
                      [](const AttackSpec& s) { return std::string(to_string(s.kind)); },
                      [](AttackSpec& s, const std::string& name) { s.kind = attack_from_name(name); })
        .def_readwrite("epsilon", &AttackSpec::epsilon)
        .def_readwrite("step_size", &AttackSpec::step_size)
        .def_readwrite("steps", &AttackSpec::steps)
        .def_readwrite("momentum_decay", &AttackSpec::momentum_decay)
        .def_readwrite("random_start", &AttackSpec::random_start)
        .def_readwrite("alpha_noise", &AttackSpec::alpha_noise)
        .def_readwrite("uap_target_fooling_rate", &AttackSpec::uap_target_fooling_rate)
        .def_readwrite("uap_max_passes", &AttackSpec::uap_max_passes);

    m.def("default_attack_specs", &default_attack_specs, py::arg("epsilon") = 8.0 / 255.0);

    auto unwrap = [](AttackResult res) { return image_to_array(res.image); };
    m.def("fgsm",
          [unwrap](const Network& net, const py::array_t<float, py::array::c_style | py::array::forcecast>& x,
                   int y, double eps) { return unwrap(fgsm(net, array_to_image(x), y, eps)); },
          py::arg("net"), py::arg("x"), py::arg("y"), py::arg("eps"));
    m.def("bim",
          [unwrap](const Network& net, const py::array_t<float, py::array::c_style | py::array::forcecast>& x,
                   int y, double eps, double alpha, int steps) {
              return unwrap(bim(net, array_to_image(x), y, eps, alpha, steps));
          },
          py::arg("net"), py::arg("x"), py::arg("y"), py::arg("eps"), py::arg("alpha"),
          py::arg("steps"));
    m.def("pgd",
          [unwrap](const Network& net, const py::array_t<float, py::array::c_style | py::array::forcecast>& x,
                   int y, double eps, double alpha, int steps, bool random_start, uint64_t seed) {
              return unwrap(pgd(net, array_to_image(x), y, eps, alpha, steps, random_start, seed));
          },
          py::arg("net"), py::arg("x"), py::arg("y"), py::arg("eps") = 8.0 / 255.0,
          py::arg("alpha") = 2.0 / 255.0, py::arg("steps") = 40, py::arg("random_start") = true,
          py::arg("seed") = 0);
    m.def("attack_suite",
          [](const Network& net, const LabeledDataset& ds, const std::vector<AttackSpec>& specs,
             uint64_t seed) {
              std::vector<std::pair<std::string, LabeledDataset>> out;
              for (auto& set : attack_suite(net, ds, specs, seed))
                  out.emplace_back(to_string(set.kind), std::move(set.data));
              return out;
          },
          py::arg("net"), py::arg("dataset"), py::arg("specs"), py::arg("seed") = 0);

    // --- analyzer --------------------------------------------------------------
    py::class_<AnalyzerConfig>(m, "AnalyzerConfig")
        .def(py::init<>())
        .def_readwrite("kappa", &AnalyzerConfig::kappa)
        .def_readwrite("epsilon", &AnalyzerConfig::epsilon)
        .def_readwrite("seed", &AnalyzerConfig::seed)
        .def_readwrite("psi", &AnalyzerConfig::psi);

    m.def("misprediction_score",
          [](const Network& net, const py::array_t<float, py::array::c_style | py::array::forcecast>& x,
             int y, const AnalyzerConfig& cfg) {
              return misprediction_score(net, array_to_image(x), y, cfg);
          },
          py::arg("net"), py::arg("x"), py::arg("y"), py::arg("config"));
    m.def("rank_dataset",
          [](const Network& net, const LabeledDataset& ds, const AnalyzerConfig& cfg) {
              std::map<int, std::vector<std::pair<size_t, double>>> out;
              for (const auto& [y, list] : rank_dataset(net, ds, cfg).per_class)
                  for (const auto& s : list) out[y].emplace_back(s.index, s.gamma);
              return out;
          },
          py::arg("net"), py::arg("dataset"), py::arg("config"));
    m.def("sweep_epsilon",
          [](const Network& net, const LabeledDataset& ds, const std::vector<double>& grid,
             int kappa, uint64_t seed) {
              const auto sweep = sweep_epsilon(net, ds, grid, kappa, seed);
              std::vector<std::pair<double, double>> curve;
              for (const auto& pt : sweep.curve) curve.emplace_back(pt.eps, pt.neighbor_accuracy);
              return std::make_pair(sweep.chosen_eps, curve);
          },
          py::arg("net"), py::arg("dataset"), py::arg("grid"), py::arg("kappa") = 50,
          py::arg("seed") = 0);

    // --- metrics -----------------------------------------------------------------
    m.def("m_adv_err", &m_adv_err, py::arg("per_attack_errors"));
    m.def("uce", &uce, py::arg("per_severity_errors"));
    m.def("radv_err", &radv_err, py::arg("adv_err"), py::arg("clean_err"));
    m.def("rc_err", &rc_err, py::arg("uce"), py::arg("clean_err"));
    m.def("wilcoxon_signed_rank",
          [](const std::vector<double>& a, const std::vector<double>& b) {
              const auto res = wilcoxon_signed_rank(a, b);
              py::dict out;
              out["p"] = res.p;
              out["w_plus"] = res.w_plus;
              out["w_minus"] = res.w_minus;
              out["n"] = res.n;
              out["exact"] = res.exact;
              out["degenerate"] = res.degenerate;
              return out;
          },
          py::arg("a"), py::arg("b"));
    m.def("group_from_rc_err",
          [](const std::map<std::string, double>& rc, const std::string& mode, double tau) {
              RobustnessReport report;
              report.clean_err = 1.0; // ratios already relative
              for (const auto& e : corruption_catalog()) {
                  const auto it = rc.find(e.name);
                  if (it != rc.end()) report.rc_err.emplace_back(it->first, it->second);
              }
              GroupingPolicy policy;
              policy.mode = mode == "threshold" ? GroupingPolicy::Mode::threshold
                                                : GroupingPolicy::Mode::per_category_argmax;
              policy.tau = tau;
              const auto groups = group_perturbations(report, policy);
              return std::make_pair(groups.rho, groups.nu);
          },
          py::arg("rc_err"), py::arg("mode") = "per-category-argmax", py::arg("tau") = 3.0);
}
